import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs, graphs_with_colorings
from twinid.coloring import (
    CAPACITY,
    IMPROPER,
    UNDOMINATED,
    UNIDENTIFIED,
    Coloring,
    ColoringError,
    SetColoring,
    is_identifying,
    is_identifying_code,
    is_lid,
    is_rlid,
    is_weighted_identifying,
    parse_code,
    parse_coloring,
    parse_set_coloring,
    parse_weights,
    signature,
    write_code,
    write_coloring,
    write_set_coloring,
)
from twinid.constructions import canonical_coloring, gen_Hp
from twinid.graph import complete_graph, path_graph
from twinid.twins import twin_partition

P3 = path_graph(3)


def test_signature_examples():
    assert signature(P3, Coloring((1, 2, 3)), 1) == {1, 2, 3}
    assert all(signature(P3, (1, 1, 1), v) == {1} for v in range(3))
    p = 4
    lg = gen_Hp(p)
    c = canonical_coloring(lg, "id")
    for i in range(1, p + 1):
        assert signature(lg.graph, c, lg.index(f"k_{i}")) == {i, p + 1, p + 2}


def test_coloring_rejects_nonpositive():
    with pytest.raises(ColoringError):
        Coloring((1, 0, 2))
    assert Coloring((3, 1, 3)).palette == {1, 3}


def test_identifying_examples():
    assert is_identifying(gen_Hp(3).graph, canonical_coloring(gen_Hp(3), "id"))
    assert is_identifying(complete_graph(5), (1,) * 5)
    res = is_identifying(P3, (1, 1, 1))
    assert not res
    assert res.violations[0].kind == UNIDENTIFIED
    assert (0, 2) in [v.vertices for v in res.violations]
    # exhaustive: all three pairs share {1}
    assert len(res.violations) == 3
    assert len(is_identifying(P3, (1, 1, 1), first_only=True).violations) == 1


def test_rlid_examples():
    assert is_rlid(complete_graph(4), (1, 1, 1, 1))
    res = is_rlid(P3, (1, 2, 2))
    assert not res and [v.vertices for v in res.violations] == [(0, 1)]
    assert is_rlid(P3, (1, 2, 3))
    assert oracles.valid(P3, (1, 2, 3), "rlid")


def test_lid_examples():
    assert is_lid(P3, (1, 2, 3)) and oracles.valid(P3, (1, 2, 3), "lid")
    res = is_lid(P3, (1, 2, 1))
    assert not res
    assert [(v.kind, v.vertices) for v in res.violations] == [(UNIDENTIFIED, (0, 1)), (UNIDENTIFIED, (1, 2))]
    res = is_lid(complete_graph(3), (1, 2, 2))
    assert [(v.kind, v.vertices) for v in res.violations] == [(IMPROPER, (1, 2))]


def test_identifying_code_examples():
    assert is_identifying_code(complete_graph(4), [])
    assert is_identifying_code(P3, {0, 2}) and oracles.is_code(P3, {0, 2})
    res = is_identifying_code(P3, {1})
    assert not res and len(res.violations) == 3


def test_identifying_code_domination_flag():
    k2 = complete_graph(2)
    assert is_identifying_code(k2, set())
    res = is_identifying_code(k2, set(), dominating=True)
    assert not res and {v.kind for v in res.violations} == {UNDOMINATED}
    # P_4 with C = {1, 2}: traces {1}, {1,2}, {1,2}, {2}
    assert not is_identifying_code(path_graph(4), {1, 2})


def test_weighted_examples():
    sc = SetColoring((frozenset({1}),) * 3, (1, 1, 1))
    assert not is_weighted_identifying(P3, sc)
    k = complete_graph(3)
    assert is_weighted_identifying(k, SetColoring((frozenset({1, 2}), frozenset({3}), frozenset({1})), (2, 1, 1)))


def test_weighted_capacity_reported_first():
    sc = SetColoring((frozenset({1, 2}), frozenset(), frozenset({1})), (1, 1, 1))
    res = is_weighted_identifying(P3, sc)
    assert [(v.kind, v.vertices) for v in res.violations] == [(CAPACITY, (0,)), (CAPACITY, (1,))]


@given(graphs_with_colorings())
def test_weighted_with_unit_capacity_reduces_to_identifying(gc):
    g, colors = gc
    sc = SetColoring(tuple(frozenset({c}) for c in colors), (1,) * g.n)
    assert bool(is_weighted_identifying(g, sc)) == bool(is_identifying(g, colors))


@given(graphs_with_colorings())
def test_checkers_agree_with_oracle(gc):
    g, colors = gc
    for variant, checker in (("id", is_identifying), ("lid", is_lid), ("rlid", is_rlid)):
        res = checker(g, colors)
        assert res.valid == oracles.valid(g, colors, variant)
        assert res.valid == (not res.violations)


@given(graphs_with_colorings())
def test_implications(gc):
    g, colors = gc
    if is_lid(g, colors):
        assert is_rlid(g, colors)
    if is_identifying(g, colors):
        assert is_rlid(g, colors)


@given(graphs())
def test_all_distinct_coloring_is_valid_everywhere(g):
    c = tuple(range(1, g.n + 1))
    assert is_identifying(g, c) and is_lid(g, c) and is_rlid(g, c)


@given(graphs_with_colorings(), st.data())
def test_twin_swap_leaves_signatures_unchanged(gc, data):
    g, colors = gc
    classes = [c for c in twin_partition(g).classes if len(c) >= 2]
    if not classes:
        return
    cls = data.draw(st.sampled_from(classes))
    u, v = data.draw(st.permutations(cls))[:2]
    swapped = list(colors)
    swapped[u], swapped[v] = swapped[v], swapped[u]
    for x in range(g.n):
        assert signature(g, colors, x) == signature(g, swapped, x)
    assert bool(is_identifying(g, colors)) == bool(is_identifying(g, swapped))


@settings(max_examples=50)
@given(graphs(max_n=7), st.data())
def test_code_checker_agrees_with_oracle(g, data):
    code = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert bool(is_identifying_code(g, code)) == oracles.is_code(g, code)
    assert bool(is_identifying_code(g, code, dominating=True)) == oracles.is_code(g, code, dominating=True)


def test_file_formats_round_trip():
    c = Coloring((3, 1, 2))
    assert write_coloring(c) == "0 3\n1 1\n2 2"
    assert parse_coloring(write_coloring(c), 3) == c
    assert parse_code(write_code({2, 0}), 3) == {0, 2}
    sc = SetColoring((frozenset({1, 2}), frozenset({3})), (2, 1))
    assert write_set_coloring(sc) == "0 1,2\n1 3"
    assert parse_set_coloring(write_set_coloring(sc), 2, (2, 1)) == sc
    assert parse_weights("0 2\n1 1", 2) == [2, 1]


@pytest.mark.parametrize(
    "text, message",
    [("0 1\n1 1", "no value for vertex 2"), ("0 1\n0 2\n1 1\n2 1", "assigned twice"),
     ("0 1\n1 1\n5 1", "out of range"), ("0 1\n1 x\n2 1", "bad value"), ("0 1 2", "expected")],
)
def test_coloring_parse_errors(text, message):
    with pytest.raises(ColoringError, match=message):
        parse_coloring(text, 3)


def test_coloring_must_cover_graph():
    with pytest.raises(ColoringError):
        is_identifying(P3, (1, 2))
