import pytest
from hypothesis import strategies as st

from twinid.graph import build_graph

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_colorings(draw, max_n=7, max_colors=4):
    g = draw(graphs(max_n=max_n))
    colors = draw(st.lists(st.integers(1, max_colors), min_size=g.n, max_size=g.n))
    return g, tuple(colors)


@pytest.fixture
def record():
    """Store an acceptance criterion outcome for the end-of-run summary."""

    def _record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[name] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
