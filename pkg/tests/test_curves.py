import pytest

from ulrichfano.cas import curve_invariants, free_resolution, random_acm_curve
from ulrichfano.cas.curves import maximal_minors
from ulrichfano.cas import Ring


def test_deterministic_per_seed():
    assert random_acm_curve(1).gens == random_acm_curve(1).gens
    assert random_acm_curve(1).gens != random_acm_curve(2).gens


def test_seed_one_shape():
    res = free_resolution(random_acm_curve(1))
    assert res.betti() == [1, 4, 3]
    assert curve_invariants(res) == (6, 3)


def test_other_prime():
    I = random_acm_curve(3, p=101)
    assert I.ring.p == 101
    assert curve_invariants(free_resolution(I)) == (6, 3)


def test_small_prime_rejected():
    with pytest.raises(ValueError):
        random_acm_curve(1, p=3)


def test_minors_of_twisted_cubic_matrix():
    # rows (x, y, z, w) shifted: minors of a 4x3 Hankel-like matrix are cubics
    R = Ring(101)
    x, y, z, w = (R.var(v) for v in "xyzw")
    M = [[x, y, z], [y, z, w], [z, w, x], [w, x, y]]
    minors = maximal_minors(M)
    assert all(f.degree == 3 for f in minors)
