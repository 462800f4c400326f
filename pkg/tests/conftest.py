import pytest
from hypothesis import strategies as st

from braidcover import BraidWord


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=32):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1)
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len))))


@st.composite
def braid_pairs(draw, max_strands=5, max_len=16):
    """Two words (plus a third) on the same number of strands."""
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    words = [BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len)))) for _ in range(3)]
    return tuple(words)


@st.composite
def periodic_braids(draw, max_strands=5):
    """Conjugates of (s1...s_{n-1})^a or (s1...s_{n-1} s1)^a, times a full twist power."""
    n = draw(st.integers(2, max_strands))
    base = tuple(range(1, n))
    if n > 2 and draw(st.booleans()):
        base = base + (1,)
    a = draw(st.integers(-3, 3))
    k = draw(st.integers(-2, 2))
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    g = BraidWord(n, tuple(draw(st.lists(gens, max_size=6))))
    core = BraidWord(n, base) ** a * BraidWord(n, tuple(range(1, n)) * n) ** k
    return g * core * ~g


@pytest.fixture
def s1():
    return BraidWord(2, (1,))


_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "tests": 0})
    if rep.when == "call":
        entry["tests"] += 1
    if rep.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {e['title']} ({e['tests']} tests)")
