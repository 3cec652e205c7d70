from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ulrichfano.cas import (
    Ideal,
    NotACurveError,
    Ring,
    curve_invariants,
    free_resolution,
    hilbert_function,
    hilbert_poly_from_resolution,
    ideal_power,
    parse_ideal,
    schreyer_resolution,
    minimize,
)
from ulrichfano.qpoly import QPoly

R = Ring(101)


def standard_count(I, t):
    """dim (S/I)_t from the leading terms of a Groebner basis."""
    leads = [g.lead for g in I.groebner()]
    ring = I.groebner()[0].ring
    return sum(1 for m in ring.monomials(t) if not any(ring.divides(l, m) for l in leads))


def test_koszul():
    res = free_resolution(parse_ideal("x\ny\nz\nw"))
    assert res.betti() == [1, 4, 6, 4, 1]
    assert res.twists()[2] == [-2] * 6
    assert hilbert_poly_from_resolution(res) == QPoly()
    with pytest.raises(NotACurveError):
        curve_invariants(res)


def test_fixture_resolution(J):
    res = free_resolution(J)
    assert res.betti() == [1, 4, 3]
    assert res.twists() == [[0], [-3] * 4, [-4] * 3]
    assert curve_invariants(res) == (6, 3)
    # h^0(I_C(3)) = dim J_3 = 4 since the higher cohomology vanishes
    assert comb(6, 3) - hilbert_function(res, 3) == 4


def test_fixture_powers(J2, J3):
    r2, r3 = free_resolution(J2), free_resolution(J3)
    assert r2.betti() == [1, 10, 12, 3]
    assert r3.betti() == [1, 20, 30, 12, 1]
    assert r3.twists()[4] == [-12]


def test_differentials_compose_to_zero(J, J2, J3):
    for I in (J, J2, J3):
        for minimal in (False, True):
            res = free_resolution(I, minimal=minimal)
            assert res.check_complex()
            assert res.length <= 4


def test_minimal_has_no_units(J2, J3):
    for I in (J2, J3):
        assert not free_resolution(I).has_unit_entries()
        assert free_resolution(I, minimal=False).has_unit_entries()


def test_hilbert_poly_invariant_under_minimization(J3):
    assert hilbert_poly_from_resolution(free_resolution(J3)) == hilbert_poly_from_resolution(
        free_resolution(J3, minimal=False)
    )


def test_hilbert_function_matches_standard_monomials(J2):
    res = free_resolution(J2)
    for t in range(0, 12):
        assert hilbert_function(res, t) == standard_count(J2, t)


def _random_monomialish(data):
    mons = {d: R.monomials(d) for d in (1, 2, 3)}
    gens = []
    for _ in range(data.draw(st.integers(1, 4))):
        d = data.draw(st.sampled_from([2, 3]))
        picks = data.draw(st.lists(st.sampled_from(mons[d]), min_size=1, max_size=3, unique=True))
        coeffs = data.draw(st.lists(st.integers(1, 100), min_size=len(picks), max_size=len(picks)))
        gens.append(R.poly(dict(zip(picks, coeffs))))
    return Ideal(R, gens)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_random_resolutions(data):
    I = _random_monomialish(data)
    raw = schreyer_resolution(I)
    res = minimize(raw)
    assert raw.check_complex() and res.check_complex()
    assert not res.has_unit_entries()
    assert hilbert_poly_from_resolution(raw) == hilbert_poly_from_resolution(res)
    for t in range(0, 7):
        assert hilbert_function(res, t) == standard_count(I, t)
    # alternating sum of Betti numbers of S/I vanishes unless I = 0
    assert sum((-1) ** k * b for k, b in enumerate(res.betti())) == 0
