import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs
from twinid.bounds import (
    constructive_checks,
    extend_to_quotient,
    lift_identifying,
    lift_lid,
    quotient_weights,
    verify_bounds,
    verify_idcode_equality,
    verify_weighted_equivalence,
)
from twinid.coloring import Coloring, ColoringError, check, is_identifying, is_lid
from twinid.constructions import canonical_coloring, gen_Hext, gen_HTt, gen_Hp
from twinid.graph import complete_graph, path_graph
from twinid.search import InstanceTooLarge, chi
from twinid.twins import add_twins, quotient, twin_partition


def test_lift_identifying_twin_free_is_identity():
    lg = gen_Hp(3)
    c = canonical_coloring(lg, "id")
    assert lift_identifying(c, lg.graph) == c


def test_lift_identifying_onto_htt():
    g = gen_HTt(2, 2, 1).graph
    lifted = lift_identifying(canonical_coloring(gen_Hp(2), "id"), g, twin_partition(g))
    assert is_identifying(g, lifted)
    assert len(lifted.palette) == 4


def test_lift_identifying_complete_graph():
    lifted = lift_identifying(Coloring((1,)), complete_graph(4))
    assert lifted.colors == (1, 1, 1, 1) and is_identifying(complete_graph(4), lifted)


def test_lift_rejects_invalid_input():
    with pytest.raises(ColoringError):
        lift_identifying(Coloring((1, 1, 1, 1, 1)), gen_Hp(2).graph)
    with pytest.raises(ColoringError):
        lift_lid(Coloring((1, 1, 1, 1, 1)), gen_Hp(2).graph)
    with pytest.raises(ColoringError):
        extend_to_quotient(Coloring((1, 1, 1)), path_graph(3), variant="id")


def test_extend_examples():
    g = path_graph(3)
    c = Coloring((1, 2, 3))
    assert extend_to_quotient(c, g, variant="lid") == c
    ext = extend_to_quotient(Coloring((1, 1, 1)), complete_graph(3), variant="id")
    assert ext.colors == (2,)
    g = gen_HTt(2, 2, 2).graph
    opt = chi(g, "lid")
    ext = extend_to_quotient(opt.witness, g, twin_partition(g), "lid")
    q = quotient(g).quotient
    assert is_lid(q, ext)
    assert len(ext.palette) <= opt.optimum + 2


def test_lift_lid_examples():
    lg = gen_Hp(2)
    c = canonical_coloring(lg, "lid")
    assert lift_lid(c, lg.graph) == c
    g = gen_HTt(2, 2, 1).graph
    lifted = lift_lid(c, g)
    assert is_lid(g, lifted) and len(lifted.palette) <= 6
    k2 = lift_lid(Coloring((1,)), complete_graph(2))
    assert k2.colors == (1, 2)


def test_verify_bounds_hext2_id_is_lower_tight():
    r = verify_bounds(gen_Hext(2).graph, "id")
    assert (r.chi_G, r.chi_Q, r.t, r.lower) == (4, 5, 1, 4)
    assert r.lower_tight and r.satisfied


def test_verify_bounds_twin_free_collapses():
    r = verify_bounds(gen_Hp(3).graph, "id")
    assert r.lower == r.upper == r.chi_G
    assert r.lower_tight and r.upper_tight


def test_verify_bounds_htt_lid_upper_tight():
    r = verify_bounds(gen_HTt(2, 2, 1).graph, "lid")
    assert (r.chi_G, r.upper) == (6, 5 + 1)
    assert r.upper_tight
    js = r.to_json()
    assert js["upper_tight"] and js["satisfied"] and js["variant"] == "lid"


def test_verify_bounds_respects_guard():
    with pytest.raises(InstanceTooLarge):
        verify_bounds(gen_Hext(3).graph, "id")


def test_idcode_equality_examples():
    assert verify_idcode_equality(path_graph(4))[0]
    assert verify_idcode_equality(complete_graph(5)) == (True, 0, 0)


def test_weighted_equivalence_examples():
    assert verify_weighted_equivalence(path_graph(4), [1, 2, 1, 2])[0]
    assert verify_weighted_equivalence(complete_graph(3), [1, 1, 1]) == (True, 1, 1)
    assert quotient_weights(complete_graph(3), [1, 1, 1]) == [3]
    with pytest.raises(InstanceTooLarge):
        verify_weighted_equivalence(gen_Hp(3).graph, [1] * 7)


@st.composite
def graph_with_twins(draw):
    g = draw(graphs(max_n=5))
    v = draw(st.integers(0, g.n - 1))
    return add_twins(g, v, draw(st.integers(1, 2)))


@settings(max_examples=60, deadline=None)
@given(graph_with_twins(), st.data())
def test_lift_identifying_any_valid_quotient_coloring(g, data):
    q = quotient(g).quotient
    colors = data.draw(st.lists(st.integers(1, q.n), min_size=q.n, max_size=q.n))
    assume(is_identifying(q, colors))
    lifted = lift_identifying(Coloring(tuple(colors)), g)
    assert is_identifying(g, lifted)
    assert lifted.palette == frozenset(colors)


@settings(max_examples=60, deadline=None)
@given(graph_with_twins(), st.data())
def test_lift_lid_any_valid_quotient_coloring(g, data):
    part = twin_partition(g)
    q = quotient(g).quotient
    colors = data.draw(st.permutations(range(1, q.n + 1)))
    lifted = lift_lid(Coloring(tuple(colors)), g)
    assert is_lid(g, lifted)
    assert len(lifted.palette) <= q.n + (part.T_max - 1) * part.t


@settings(max_examples=60, deadline=None)
@given(graph_with_twins(), st.sampled_from(["id", "lid", "rlid"]), st.data())
def test_extend_any_valid_coloring(g, variant, data):
    colors = data.draw(st.lists(st.integers(1, g.n), min_size=g.n, max_size=g.n))
    assume(check(g, colors, variant))
    part = twin_partition(g)
    ext = extend_to_quotient(Coloring(tuple(colors)), g, part, variant)
    assert check(quotient(g).quotient, ext, variant)
    assert len(ext.palette) <= len(set(colors)) + part.t


@settings(max_examples=30, deadline=None)
@given(graph_with_twins())
def test_constructive_checks_pass(g):
    assert all(c.ok for c in constructive_checks(g))
