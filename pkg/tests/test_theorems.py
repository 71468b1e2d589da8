from itertools import combinations

import pytest
from hypothesis import given, settings

from gainrank.gain_core import AngleGain, build_graph, disjoint_union
from gainrank.generators import (
    ADVERSARIAL_KINDS,
    GainDomain,
    adversarial_instance,
    random_gain_graph,
    random_gain_tree,
    random_lower_optimal,
)
from gainrank.linalg import graph_rank
from gainrank.theorems import (
    LEMMAS,
    BoundCheck,
    analyze,
    applicable_lemmas,
    check_bounds,
    is_lower_optimal_by_rank,
    is_lower_optimal_by_structure,
    lemma_suite,
    pendant_cycles,
)

from conftest import cycle, exact_graphs, gain_graphs, path

K4 = build_graph(4, list(combinations(range(4), 2)))


def test_bounds_examples():
    assert check_bounds(cycle(4)) == BoundCheck(2, 2, 4, True)
    assert check_bounds(cycle(4, [1, 1, 1, -1])) == BoundCheck(2, 4, 4, True)
    assert check_bounds(path(4)) == BoundCheck(4, 4, 4, True)
    assert check_bounds(build_graph(0)) == BoundCheck(0, 0, 0, True)


def test_bounds_report_a_bad_rank_function():
    chk = check_bounds(path(4), rank_fn=lambda g: graph_rank(g) + 2)
    assert chk.rank == 6 and not chk.holds


@settings(max_examples=300, deadline=None)
@given(gain_graphs(max_n=9))
def test_bounds_hold_fourth_roots(g):
    assert check_bounds(g).holds


@settings(max_examples=150, deadline=None)
@given(exact_graphs(max_n=9))
def test_bounds_hold_pythagorean(g):
    assert check_bounds(g).holds


@pytest.mark.parametrize("seed", range(20))
def test_bounds_hold_angle_gains(seed):
    g = random_gain_graph(4 + seed % 8, 0.45, GainDomain.RandomAngle, seed)
    assert check_bounds(g).holds


def test_lower_optimal_by_rank_examples():
    assert is_lower_optimal_by_rank(cycle(3, [1, 1, 1j]))
    assert not is_lower_optimal_by_rank(cycle(3))
    assert is_lower_optimal_by_rank(cycle(4))
    assert not is_lower_optimal_by_rank(cycle(4, [1, 1, 1, -1]))
    assert is_lower_optimal_by_rank(build_graph(0))


@pytest.mark.parametrize("seed", range(25))
def test_trees_are_lower_optimal(seed):
    t = random_gain_tree(1 + seed % 20, GainDomain.PythagoreanExact, seed)
    assert is_lower_optimal_by_rank(t)
    assert is_lower_optimal_by_structure(t).holds


def test_structure_type_e_triangle():
    v = is_lower_optimal_by_structure(cycle(3, [1, 1, 1j]))
    assert v.holds and v.disjoint and v.types_ok and v.alpha_condition
    assert (v.alpha_t, v.alpha_bracket, v.c) == (1, 0, 1)


def test_structure_type_b_square():
    v = is_lower_optimal_by_structure(cycle(4, [1, 1, 1, -1]))
    assert not v.holds and v.disjoint and v.types_ok is False and v.alpha_condition


def test_structure_overlap_leaves_other_conditions_open():
    v = is_lower_optimal_by_structure(K4)
    assert not v.holds and not v.disjoint
    assert v.breakdown() == {
        "i_disjoint_cycles": False,
        "ii_cycle_types": None,
        "iii_alpha_condition": None,
        "alpha_T": None,
        "alpha_T_bracket": None,
        "c": 3,
    }


def test_structure_alpha_condition_can_fail_alone():
    # a Type A square with a pendant vertex hung on a cycle vertex
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    v = is_lower_optimal_by_structure(g)
    assert v.disjoint and v.types_ok and v.alpha_condition is False
    assert not is_lower_optimal_by_rank(g)


@settings(max_examples=300, deadline=None)
@given(gain_graphs(max_n=9))
def test_rank_and_structure_agree(g):
    assert is_lower_optimal_by_rank(g) == is_lower_optimal_by_structure(g).holds


@settings(max_examples=100, deadline=None)
@given(exact_graphs(max_n=9))
def test_rank_and_structure_agree_pythagorean(g):
    assert is_lower_optimal_by_rank(g) == is_lower_optimal_by_structure(g).holds


@pytest.mark.parametrize("seed", range(40))
def test_certified_instances_pass_structure(seed):
    g = random_lower_optimal(seed)
    assert is_lower_optimal_by_structure(g).holds


@pytest.mark.parametrize("kind", ADVERSARIAL_KINDS)
@pytest.mark.parametrize("seed", range(15))
def test_adversarial_agree(kind, seed):
    g = adversarial_instance(kind, seed)
    assert is_lower_optimal_by_rank(g) == is_lower_optimal_by_structure(g).holds


def test_pendant_cycles():
    # triangle 0-1-2 hanging off vertex 3 through the edge 2-3
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    ((cyc, x, y),) = pendant_cycles(g)
    assert sorted(cyc) == [0, 1, 2] and (x, y) == (2, 3)
    assert pendant_cycles(cycle(5)) == []


def _statuses(checks, lemma):
    return [c.status for c in checks if c.lemma == lemma]


def test_lemma_suite_skips_carry_a_reason():
    checks = lemma_suite(K4)
    assert {c.lemma for c in checks} == set(LEMMAS)
    assert all(c.status == "skip" and c.detail for c in checks)
    assert applicable_lemmas(checks) == set()


def test_lemma_suite_on_pendant_type_e_triangle():
    g = build_graph(5, [(0, 1, 1), (1, 2, 1), (0, 2, 1j), (2, 3, 1), (3, 4, 1)])
    checks = lemma_suite(g)
    assert not [c for c in checks if c.status == "fail"]
    for lemma in ("L4.2", "L4.6", "L4.7"):
        assert "pass" in _statuses(checks, lemma)


def test_lemma_suite_on_components():
    g = disjoint_union(cycle(4), cycle(3, [1, 1, 1j]))
    checks = lemma_suite(g)
    assert _statuses(checks, "L4.5") == ["pass"]
    assert _statuses(checks, "L4.4") == ["pass"] * 7
    assert _statuses(checks, "L4.8") == ["pass"]


def test_lemma_suite_single_cycles():
    for g in (cycle(6), cycle(6, [1, 1, 1, 1, 1, 1j]), cycle(5, [1, 1, 1, 1, -1j])):
        assert _statuses(lemma_suite(g, lemmas=("L4.3",)), "L4.3") == ["pass"]


def test_lemma_suite_angle_gains_skip_type_e_lemmas():
    g = build_graph(3, [(0, 1, AngleGain(0.1)), (1, 2, AngleGain(0.2)), (0, 2, AngleGain(0.3))])
    assert _statuses(lemma_suite(g, lemmas=("L4.3",)), "L4.3") == ["skip"]


@pytest.mark.parametrize("seed", range(30))
def test_lemma_suite_has_no_failures(seed):
    g = random_lower_optimal(seed) if seed % 2 else adversarial_instance(
        ADVERSARIAL_KINDS[seed % 3], seed)
    fails = [c for c in lemma_suite(g) if c.status == "fail"]
    assert not fails, fails


def test_analyze_report_fields():
    rep = analyze(cycle(3, [1, 1, 1j]))
    d = rep.to_dict()
    assert d["rank"] == 2 and d["alpha"] == 1 and d["c"] == 1
    assert d["inertia"] == {"p_plus": 1, "n_minus": 1, "zero": 1}
    assert d["bound_lower"] == 2 and d["bound_upper"] == 4 and d["bounds_hold"]
    assert d["cycles"] == [{"vertices": d["cycles"][0]["vertices"], "length": 3,
                            "gain_product": d["cycles"][0]["gain_product"], "type": "E"}]
    assert d["lower_optimal_by_rank"] and d["lower_optimal_by_structure"]
    assert d["arithmetic"] == "exact" and d["violations"] == []
    assert len(d["independent_set"]) == 1


def test_analyze_empty_graph_note():
    d = analyze(build_graph(0)).to_dict()
    assert d["rank"] == 0 and d["notes"] and d["lower_optimal_by_rank"]


def test_analyze_angle_gains_note():
    g = random_gain_graph(6, 0.5, GainDomain.RandomAngle, 3)
    d = analyze(g).to_dict()
    assert d["arithmetic"] == "approx"
    assert any("floating point" in note for note in d["notes"])


def test_lemma_suite_type_b_square():
    checks = lemma_suite(cycle(4, [1, 1, 1, -1]))
    assert _statuses(checks, "L4.4") == ["skip"]
    assert _statuses(checks, "L4.5") == ["skip"]


def test_lemma_suite_two_squares_joined_at_cycle_vertices():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)]
    g = build_graph(8, edges)
    assert not is_lower_optimal_by_rank(g)
    checks = lemma_suite(g)
    assert _statuses(checks, "L4.6") == ["skip"]
    assert _statuses(checks, "L4.8") == ["skip"]
    assert "fail" not in {c.status for c in checks}
