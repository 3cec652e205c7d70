import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ulrichfano.chow import ChowClass, builtin_registry, get_class, integrate, polarization
from ulrichfano.qpoly import QPoly
from ulrichfano.rr import ChernData, DivisorClass, hilbert_poly_line, ulrich_target
from ulrichfano.search import (
    bivariate_form,
    check_rank2_relations,
    dual_divisor,
    enumerate_rank2_c1,
    eval_bivariate,
    extension_chern,
    forced_Hc2,
    quadratic_roots,
    solve_line_candidates,
)

REG = builtin_registry()
Y = "P3-d6-g3"


def test_Y_line_solutions():
    r = solve_line_candidates(Y)
    assert r.solutions == [DivisorClass(3, 0), DivisorClass(9, 3)]
    assert r.relation_a_of_b == (2, 3)
    assert r.verified_all_coefficients


def test_d9_g10_surds():
    r = solve_line_candidates("P3-d9-g10")
    assert r.solutions == []
    assert r.quadratic_roots == ["3/2 - 7/30*sqrt(65)", "3/2 + 7/30*sqrt(65)"]
    assert r.relation_a_of_b == (Fraction(18, 7), Fraction(15, 7))


@pytest.mark.parametrize("cid", sorted(c for c in REG if c != Y))
def test_other_classes_empty(cid):
    assert solve_line_candidates(cid).solutions == []


@pytest.mark.parametrize("cid", sorted(REG))
def test_solutions_hit_target_and_close_under_duality(cid):
    X = REG[cid]
    sols = solve_line_candidates(X).solutions
    for D in sols:
        assert hilbert_poly_line(X, D) - ulrich_target(X, 1) == QPoly()
    assert {dual_divisor(X, D) for D in sols} == set(sols)


def test_brute_force_agrees_on_small_box():
    # independent check: scan a box directly with the RR engine
    X = get_class(Y)
    target = ulrich_target(X, 1)
    hits = [
        DivisorClass(a, b)
        for a in range(-5, 16)
        for b in range(-5, 8)
        if hilbert_poly_line(X, DivisorClass(a, b)) == target
    ]
    assert hits == [DivisorClass(3, 0), DivisorClass(9, 3)]


def test_dual_divisor_examples():
    assert dual_divisor(Y, DivisorClass(9, 3)) == DivisorClass(3, 0)
    assert dual_divisor(Y, DivisorClass(3, 0)) == DivisorClass(9, 3)
    assert dual_divisor("Q-d6-g2", DivisorClass(0, 0)) == DivisorClass(9, 3)


@given(st.sampled_from(sorted(REG)), st.integers(-50, 50), st.integers(-50, 50))
def test_dual_is_involution(cid, a, b):
    D = DivisorClass(a, b)
    assert dual_divisor(cid, dual_divisor(cid, D)) == D


def test_bivariate_form_recovers_polynomial():
    f = lambda a, b: 3 * a ** 3 - Fraction(1, 2) * a * b ** 2 + 7 * b - 4
    form = bivariate_form(f, 3)
    assert form == {(3, 0): 3, (1, 2): Fraction(-1, 2), (0, 1): 7, (0, 0): -4}
    assert eval_bivariate(form, Fraction(5, 3), -2) == f(Fraction(5, 3), -2)


def test_quadratic_roots_shapes():
    assert quadratic_roots(1, -3, 2) == (["1", "2"], [1, 2])
    assert quadratic_roots(1, 0, -2)[0] == ["-1*sqrt(2)", "1*sqrt(2)"]
    assert quadratic_roots(0, 2, -1) == (["1/2"], [Fraction(1, 2)])


def test_rank2_candidates_Y():
    r = enumerate_rank2_c1(Y)
    assert [(c.x, c.y) for c in r.candidates] == [(6 + 2 * y, y) for y in range(7)]
    assert r.linear_relation == (2, 6)
    assert r.y_interval == ["0", "6"]
    c = next(c for c in r.candidates if c.y == 3)
    assert (c.x, c.Hc2) == (12, 54)


@pytest.mark.parametrize("cid", sorted(REG))
def test_rank2_candidates_satisfy_constraints(cid):
    X = REG[cid]
    H = polarization(X)
    H3 = integrate(H ** 3)(0)
    for c in enumerate_rank2_c1(X).candidates:
        c1 = ChowClass.divisor(X, c.x, c.y)
        assert integrate(H * H * c1)(0) == 3 * H3
        assert 4 * c.Hc2 - integrate(H * c1 * c1)(0) >= 0


def test_three_H_is_a_candidate():
    X = get_class(Y)
    L1, L2 = solve_line_candidates(X).solutions
    E = extension_chern(X, L1, L2)
    c1 = E.c1.part(1)
    assert c1 == polarization(X) * 3
    assert (12, 3) in {(c.x, c.y) for c in enumerate_rank2_c1(X).candidates}


def test_extension_chern_examples():
    X = get_class(Y)
    E = extension_chern(X, DivisorClass(9, 3), DivisorClass(3, 0))
    assert E.c1 == ChowClass.divisor(X, 12, 3)
    assert E.c2 == ChowClass.degree2(X, 27, -9, 0)
    F = extension_chern(X, DivisorClass(3, 0), DivisorClass(9, 3))
    assert (F.c1, F.c2) == (E.c1, E.c2)
    Z = extension_chern(X, DivisorClass(0, 0), DivisorClass(0, 0))
    assert Z.c1 == ChowClass(X) and Z.c2 == ChowClass(X)


def test_relations_on_extension():
    X = get_class(Y)
    E = extension_chern(X, DivisorClass(9, 3), DivisorClass(3, 0))
    rel = check_rank2_relations(X, E)
    assert tuple(rel) == (True, True, True)
    assert rel.sides[2] == (180, 180)
    c1 = E.c1
    assert integrate(c1 ** 3) == 540
    assert E.c2_functional.pair(c1) == 162


@pytest.mark.parametrize("cid", sorted(REG))
def test_relation_two_perturbed(cid):
    X = REG[cid]
    H = polarization(X)
    c1 = H * 3
    Hc2 = forced_Hc2(X, c1)
    # c2 as a pairing functional whose degree against H is Hc2 + 1
    on_h = Fraction(0)
    on_e = -(Hc2 + 1)
    from ulrichfano.chow import A2Functional

    E = ChernData(X, 2, c1, A2Functional(on_h, on_e), 0)
    rel = check_rank2_relations(X, E)
    assert rel.degree_relation and not rel.c2_relation


def test_relation_two_for_six_h():
    X = get_class(Y)
    c1 = ChowClass.divisor(X, 6, 0)
    assert integrate(polarization(X) * c1 * c1) == 144
    assert forced_Hc2(X, c1) == 36


def test_rank2_requires_rank_two():
    X = get_class(Y)
    with pytest.raises(ValueError):
        check_rank2_relations(X, ChernData.line_bundle(X, DivisorClass(1, 0)))
