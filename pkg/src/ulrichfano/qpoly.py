"""Univariate polynomials in ``t`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QPoly:
    """Immutable polynomial in one variable over the rationals.

    Coefficients are stored lowest degree first with trailing zeros
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> "QPoly":
        return x if isinstance(x, QPoly) else cls.const(x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = QPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            c = _frac(other)
            return QPoly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _frac(other)
        return QPoly(a / c for a in self.coeffs)

    def __pow__(self, n: int):
        out = QPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == QPoly.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        text = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            text += f" {s} {b}"
        return text

    def to_json(self) -> list[list[str]]:
        """Exact ``[numerator, denominator]`` string pairs, lowest degree first."""
        return [[str(c.numerator), str(c.denominator)] for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "QPoly":
        return cls(Fraction(int(n), int(d)) for n, d in data)


def binom_poly(shift: int, k: int = 3) -> QPoly:
    """binom(t + shift, k) as a polynomial in t."""
    out = QPoly.const(1)
    for i in range(k):
        out = out * QPoly((shift - i, 1))
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return out / fact
