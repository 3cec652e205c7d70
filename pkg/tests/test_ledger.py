import pytest
from hypothesis import given, settings, strategies as st

from ulrichfano.chow import ChowClass, get_class
from ulrichfano.ledger import (
    LedgerNotApplicable,
    acm_certificate,
    ext_chi_report,
    quot_dimension_report,
    tensor_rank2_with_dual,
    verify_residuals,
)
from ulrichfano.rr import DivisorClass, euler_poly

Y = "P3-d6-g3"
L1, L2 = DivisorClass(9, 3), DivisorClass(3, 0)


def test_ext_chi_report():
    assert ext_chi_report(Y, L1, L2) == (-8, 8)
    assert ext_chi_report(Y, L1, L1)[0] == 1


def test_tensor_examples():
    X = get_class(Y)
    a1, a2 = L1.to_chow(X), L2.to_chow(X)
    T = tensor_rank2_with_dual(X, a1, a2)
    assert T.rank == 4
    assert T.c1 == ChowClass(X)
    assert T.c2 == ChowClass.degree2(X, -36, 36, -9)
    assert euler_poly(X, T)(0) == -14
    assert tensor_rank2_with_dual(X, a1, a1).c2 == ChowClass(X)


@settings(max_examples=30, deadline=None)
@given(*[st.integers(-10, 10)] * 2)
def test_tensor_depends_on_difference_only(a, b):
    X = get_class(Y)
    v = ChowClass.divisor(X, a, b)
    a1, a2 = L1.to_chow(X), L2.to_chow(X)
    assert tensor_rank2_with_dual(X, a1 + v, a2 + v).c2 == tensor_rank2_with_dual(X, a1, a2).c2
    assert tensor_rank2_with_dual(X, a2, a1).c2 == tensor_rank2_with_dual(X, a1, a2).c2


def test_ledger_numbers():
    r = quot_dimension_report(Y)
    assert (r.L1, r.L2) == (L1, L2)
    assert r.N == 40 and r.N ** 2 == 1600
    assert r.chi_L2dual_L1 == -8 and r.ext1_L2_L1 == 8
    assert r.chi_K_twist == 8 and r.ext1_L1_L2_upper == 8
    assert r.chi_EEdual == -14 and r.h1_minus_h2 == 15
    assert (r.dim_R_lower, r.dim_Rprime, r.dim_Rdoubleprime_upper) == (1614, 1606, 1606)
    assert r.stable_exists
    assert r.stable_exists == (r.dim_R_lower > max(r.dim_Rprime, r.dim_Rdoubleprime_upper))
    assert r.dim_R_lower - r.dim_Rprime == r.h1_minus_h2 - r.ext1_L2_L1 + 1 == 8


def test_ledger_assumptions_tagged():
    r = quot_dimension_report(Y)
    statuses = {a.name: a.status for a in r.assumptions}
    assert statuses["hom(E,E)=1"] == "cited"
    assert statuses["h2(I_C^3(6))=0"] == "computed"
    assert all(a.status in ("cited", "computed") for a in r.assumptions)
    assert "assumptions" in r.to_json()


def test_ledger_recomputes_with_other_measurement():
    r = quot_dimension_report(Y, h2_I2_2=40)
    assert r.dim_Rdoubleprime_upper == 1599 + 39
    assert not r.stable_exists


def test_ledger_not_applicable():
    with pytest.raises(LedgerNotApplicable):
        quot_dimension_report("Q-d6-g2")


def test_certificate_L1_residuals():
    cert = acm_certificate(Y, L1)
    assert cert.residual_checks() == {-1: {(2, 5, 1), (2, 5, 2)}, -2: {(1, 1, 1), (1, 1, 2)}}


def test_certificate_L1_regimes():
    cert = acm_certificate(Y, L1)
    r5 = cert.regime_at(5)
    assert r5.rule == "BEL" and r5.reduction == "I_C^(t+3)(4t+9)"
    # at t = 5 this is I_C^8(29), and 29 >= 24
    assert (4 * 5 + 9, 5 + 3) == (29, 8)
    r = cert.regime_at(-4)
    assert r.rule == "pullback-line-bundle" and r.reduction == "O_P3(-7)"
    assert cert.regime_at(-3).reduction == "O_P3(-3)"
    assert cert.regime_at(-10).reduction == "dual I_C^(-t-4)(-4t-13)"


@given(st.integers(-30, 30), st.integers(-10, 10))
def test_certificates_cover_integers(a, b):
    cert = acm_certificate(Y, DivisorClass(a, b))
    for t in range(-100, 101):
        cert.regime_at(t)
    tails = [r for r in cert.regimes if r.t_min is None or r.t_max is None]
    assert len(tails) == 2 and all(r.rule == "BEL" for r in tails)


def test_L2_certificate_is_dual_mirror():
    c1 = acm_certificate(Y, L1).residual_checks()
    c2 = acm_certificate(Y, L2).residual_checks()
    assert sorted(map(sorted, c1.values())) == sorted(map(sorted, c2.values()))


def test_certificate_needs_P3():
    with pytest.raises(ValueError):
        acm_certificate("Q-d6-g2", DivisorClass(0, 0))


def test_residuals_vanish_on_reference_curve(J):
    got = verify_residuals(acm_certificate(Y, L1), J)
    assert set(got) == {(2, 5, 1), (2, 5, 2), (1, 1, 1), (1, 1, 2)}
    assert all(v == 0 for v in got.values())
