"""Hirzebruch-Riemann-Roch on the blown-up threefold.

``euler_poly`` returns chi(E(t)) for a bundle described by its Chern data,
where ``E(t) = E (x) O(tH)`` and ``H`` is the anticanonical polarization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import (
    A2Functional,
    ChowClass,
    FanoBlowupClass,
    IncompatibleClassError,
    get_class,
    integrate,
    polarization,
    tangent_data,
)
from .qpoly import QPoly, binom_poly


@dataclass(frozen=True)
class DivisorClass:
    """The divisor a*h - b*e."""

    a: int
    b: int

    def to_chow(self, X) -> ChowClass:
        return ChowClass.divisor(get_class(X), self.a, self.b)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return DivisorClass(-self.a, -self.b)

    def __str__(self):
        if self.b == 0:
            return f"{self.a}h"
        if self.a == 0:
            return f"{-self.b}e"
        return f"{self.a}h{'-' if self.b > 0 else '+'}{abs(self.b)}e"

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Parse ``"a,b"``."""
        try:
            a, b = (int(s) for s in text.split(","))
        except ValueError:
            raise ValueError(f"bad divisor {text!r}; expected 'a,b'") from None
        return cls(a, b)


class ChernData:
    """Rank and Chern classes of a bundle on a blow-up.

    ``c2`` may be a degree-2 :class:`ChowClass` or an :class:`A2Functional`
    (its degrees against h and e); every formula here only needs the latter.
    """

    def __init__(self, X, rank: int, c1: ChowClass, c2=None, c3=0):
        self.X = get_class(X)
        if rank <= 0:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        if c1.X != self.X:
            raise IncompatibleClassError("c1 lives on a different class")
        self.c1 = c1
        if c2 is None:
            c2 = ChowClass(self.X)
        if isinstance(c2, ChowClass) and c2.X != self.X:
            raise IncompatibleClassError("c2 lives on a different class")
        self.c2 = c2
        self.c3 = Fraction(c3)
        if rank == 1 and (self.c3 != 0 or not _is_zero_c2(self.c2)):
            raise ValueError("a line bundle has c2 = c3 = 0")

    @classmethod
    def line_bundle(cls, X, D: DivisorClass) -> "ChernData":
        X = get_class(X)
        return cls(X, 1, D.to_chow(X))

    @property
    def c2_functional(self) -> A2Functional:
        if isinstance(self.c2, A2Functional):
            return self.c2
        return self.c2.functional()

    def __repr__(self):
        return f"ChernData({self.X.id}, rank={self.rank}, c1={self.c1}, c2={self.c2}, c3={self.c3})"


def _is_zero_c2(c2) -> bool:
    if isinstance(c2, A2Functional):
        return c2.on_h.is_zero() and c2.on_e.is_zero()
    return not c2.terms and c2.pt.is_zero()


def euler_poly(X, E: ChernData) -> QPoly:
    """chi(E(t)) = integral of ch(E) exp(tH) td(X) as a cubic in t."""
    X = get_class(X)
    if E.X != X:
        raise IncompatibleClassError(f"bundle lives on {E.X.id}, not {X.id}")
    if E.rank <= 0:
        raise ValueError("rank must be positive")
    T = tangent_data(X)
    H = polarization(X)
    t = QPoly.t()
    r = E.rank
    c1 = E.c1.part(1)
    c2 = E.c2_functional

    # ch(E(t)) degree by degree; ch2 is carried as a functional on divisors
    ch1 = c1 + H * (r * t)
    ch2_cls = c1 * c1 * Fraction(1, 2) + c1 * H * t + H * H * (t * t * Fraction(r, 2))
    ch2_fun = -c2
    ch3 = (
        integrate(c1 ** 3) / 6
        - c2.pair(c1) / 2
        + E.c3 / 2
        + (integrate(H * c1 * c1) / 2 - c2.pair(H)) * t
        + integrate(H * H * c1) * (t * t) / 2
        + integrate(H ** 3) * (t ** 3) * Fraction(r, 6)
    )

    td1 = T.c1 * Fraction(1, 2)
    # ch2 . td1
    term2 = integrate(ch2_cls * td1) + ch2_fun.pair(td1)
    # ch1 . td2, td2 = (c1(T)^2 + c2(T)) / 12
    term1 = (integrate(ch1 * T.c1 * T.c1) + T.c2.pair(ch1)) / 12
    # ch0 . td3, td3 = c1(T) c2(T) / 24
    term0 = T.c2.pair(T.c1) * Fraction(r, 24)
    return ch3 + term2 + term1 + term0


def hilbert_poly_line(X, D: DivisorClass) -> QPoly:
    X = get_class(X)
    return euler_poly(X, ChernData.line_bundle(X, D))


def ulrich_target(X, rank: int) -> QPoly:
    """H^3 * rank * binom(t+3, 3)."""
    X = get_class(X)
    if rank < 1:
        raise ValueError("rank must be at least 1")
    H = polarization(X)
    return binom_poly(3) * (integrate(H ** 3) * rank)


def printed_hilbert_poly(X, D: DivisorClass) -> QPoly:
    """Closed-form line-bundle Hilbert polynomials as published, per base.

    Kept as an independent transcription for comparison against
    :func:`hilbert_poly_line`; not used by any computation.
    """
    X = get_class(X)
    a, b, d, g = D.a, D.b, X.d, X.g
    if X.base == "P3":
        scale = Fraction(1, 6)
        cs = [
            6 + (g - 3 * d * a - 4 * d - 1) * b + 11 * a + (3 * g - 3 * d * a - 3) * b ** 2
            + 6 * a ** 2 + (4 * d + 2 * g - 2) * b ** 3 + a ** 3,
            12 * a ** 2 + (6 * g - 6) * b ** 2 - 6 * d * a * b + (48 - 3 * d) * a
            + (6 * g - 6 - 12 * d) * b + 43 - 4 * d + g,
            (48 - 3 * d) * a + (6 * g - 12 * d - 6) * b - 12 * d + 3 * g + 93,
            62 - 8 * d + 2 * g,
        ]
    elif X.base == "Q":
        scale = Fraction(1, 24)
        cs = [
            8 * a ** 3 + (12 * d + 8 * g - 8) * b ** 3 + 36 * a ** 2
            + (12 * g - 12 * d * a - 12) * b ** 2 + 52 * a + (4 * g - 12 * d * a - 12 * d - 4) * b
            + 24 + 3 * d,
            72 * a ** 2 + (24 * g - 24) * b ** 2 - 24 * d * a * b + (216 - 12 * d) * a
            + (24 * g - 24 - 36 * d) * b + 152 - 6 * d + 4 * g,
            (216 - 12 * d) * a + (24 * g - 36 * d - 24) * b - 36 * d + 12 * g + 312,
            208 - 24 * d + 8 * g,
        ]
    elif X.base == "V3":
        scale = Fraction(1, 12)
        cs = [
            6 * a ** 3 + (4 * d + 4 * g - 4) * b ** 3 + 18 * a ** 2
            + (6 * g - 6 * d * a - 6) * b ** 2 + (24 + 2 * d) * a
            + (2 * g - 6 * d * a - 4 * d - 2) * b + 12 + 2 * d,
            36 * a ** 2 + (12 * g - 12) * b ** 2 - 12 * d * a * b + (72 - 6 * d) * a
            + (12 * g - 12 - 12 * d) * b + 46 + 2 * g,
            (72 - 6 * d) * a + (12 * g - 12 * d - 12) * b - 12 * d + 6 * g + 66,
            44 - 8 * d + 4 * g,
        ]
    elif X.base == "V4":
        scale = Fraction(1, 12)
        cs = [
            8 * a ** 3 + (4 * d + 4 * g - 4) * b ** 3 + 24 * a ** 2
            + (6 * g - 6 * d * a - 6) * b ** 2 + (28 + 3 * d) * a
            + (2 * g - 6 * d * a - 4 * d - 2) * b + 12 + 3 * d,
            48 * a ** 2 + (12 * g - 12) * b ** 2 - 12 * d * a * b + (96 - 6 * d) * a
            + (12 * g - 12 - 12 * d) * b + 54 + 2 * g + 2 * d,
            (96 - 6 * d) * a + (12 * g - 12 * d - 12) * b - 12 * d + 6 * g + 90,
            60 - 8 * d + 4 * g,
        ]
    else:  # pragma: no cover - FanoBlowupClass validates the base
        raise ValueError(X.base)
    return QPoly(c * scale for c in cs)
