from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ulrichfano.chow import (
    ChowClass,
    FanoBlowupClass,
    IncompatibleClassError,
    RegistryError,
    builtin_registry,
    get_class,
    integrate,
    intersection_numbers,
    load_registry,
    parse_registry,
    polarization,
    tangent_data,
)

REG = builtin_registry()
small = st.integers(-6, 6)


def test_registry_has_21_classes_with_base_constants():
    assert len(REG) == 21
    for X in REG.values():
        assert X.index * X.gamma == 24
        assert X.id == f"{X.base}-d{X.d}-g{X.g}"


def test_intersection_numbers_examples():
    assert intersection_numbers("P3-d6-g3") == (1, 0, -6, -28)
    assert intersection_numbers(FanoBlowupClass.make("P3", 0, 0)) == (1, 0, 0, 2)
    assert intersection_numbers("Q-d6-g2") == (2, 0, -6, -20)


def test_unknown_class():
    with pytest.raises(RegistryError):
        get_class("P3-d5-g5")


def test_anticanonical_cube_examples():
    X = get_class("P3-d6-g3")
    H = polarization(X)
    assert integrate(H * H * H) == 20
    assert integrate(polarization("Q-d8-g5") ** 3) == 14


def test_H_times_c2T_example():
    X = get_class("P3-d6-g3")
    H = polarization(X)
    c2 = ChowClass.degree2(X, 12, -4, 0)
    assert integrate(H * c2) == 24
    # the pairing form agrees with the explicit class on P3
    T = tangent_data(X)
    assert T.c2.pair(H) == 24
    assert T.c2.pair(ChowClass.h(X)) == 6 + 6 and T.c2.pair(ChowClass.e(X)) == 4 * 6


@pytest.mark.parametrize("cid", sorted(REG))
def test_c1_c2_tangent_is_24(cid):
    T = tangent_data(cid)
    assert T.c2.pair(T.c1) == 24


@pytest.mark.parametrize("cid", sorted(REG))
def test_H_cubed_positive(cid):
    assert integrate(polarization(cid) ** 3)(0) > 0


def test_identity_and_truncation():
    X = get_class("V3-d3-g1")
    x = ChowClass.divisor(X, 2, 1)
    assert ChowClass.scalar(X, 1) * x == x
    assert x ** 4 == ChowClass(X)


def test_mixed_classes_rejected():
    with pytest.raises(IncompatibleClassError):
        ChowClass.h(get_class("P3-d6-g3")) * ChowClass.h(get_class("Q-d6-g2"))


@given(st.sampled_from(sorted(REG)), *[small] * 6)
def test_mul_commutative_associative(cid, a1, b1, a2, b2, a3, b3):
    X = REG[cid]
    x, y, z = (ChowClass.divisor(X, a, b) for a, b in ((a1, b1), (a2, b2), (a3, b3)))
    x = x + ChowClass.scalar(X, a3)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(st.sampled_from(sorted(REG)), st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_h2e_vanishes(cid, a, b):
    X = REG[cid]
    assert integrate(ChowClass.h(X) * Fraction(a) * ChowClass.h(X) * Fraction(b) * ChowClass.e(X)) == 0


def test_registry_file_override(tmp_path, monkeypatch):
    path = tmp_path / "reg.txt"
    path.write_text("# test\nP3-d6-g3 P3 6 3 sextic genus three\nV4-d1-g0 V4 1 0\n")
    monkeypatch.setenv("ULRICHFANO_REGISTRY", str(path))
    reg = load_registry()
    assert sorted(reg) == ["P3-d6-g3", "V4-d1-g0"]
    with pytest.raises(RegistryError):
        parse_registry("bad line")
