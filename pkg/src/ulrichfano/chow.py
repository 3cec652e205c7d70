"""Numerical Chow ring of the blow-up of a Fano threefold along a smooth curve.

A class is stored in the monomial basis ``1; h, e; h^2, he, e^2; pt`` where
``h`` is the pulled-back hyperplane class and ``e`` the exceptional divisor.
Coefficients are :class:`QPoly` in a formal twist variable ``t`` so that the
same arithmetic produces both intersection numbers and Hilbert polynomials.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .qpoly import QPoly

# base -> (degree c_X, Fano index r, gamma = c2(T_X).h)
BASES: dict[str, tuple[int, int, int]] = {
    "P3": (1, 4, 6),
    "Q": (2, 3, 8),
    "V3": (3, 2, 12),
    "V4": (4, 2, 12),
}

REGISTRY_ENV = "ULRICHFANO_REGISTRY"


class RegistryError(KeyError):
    pass


class IncompatibleClassError(ValueError):
    pass


@dataclass(frozen=True)
class FanoBlowupClass:
    id: str
    base: str
    d: int
    g: int
    description: str = ""

    def __post_init__(self):
        if self.base not in BASES:
            raise RegistryError(f"unknown base {self.base!r}")
        if self.d < 0 or self.g < 0:
            raise ValueError("curve degree and genus must be nonnegative")

    @classmethod
    def make(cls, base: str, d: int, g: int, description: str = "") -> "FanoBlowupClass":
        return cls(f"{base}-d{d}-g{g}", base, d, g, description)

    @property
    def base_degree(self) -> int:
        return BASES[self.base][0]

    @property
    def index(self) -> int:
        return BASES[self.base][1]

    @property
    def gamma(self) -> int:
        return BASES[self.base][2]


_BUILTIN = [
    ("P3", 9, 10, "blow-up of P3 along an intersection of two cubics"),
    ("P3", 7, 5, "blow-up of P3 along a curve of degree 7 and genus 5 cut out by cubics"),
    ("P3", 6, 3, "blow-up of P3 along a curve of degree 6 and genus 3 cut out by cubics"),
    ("P3", 6, 4, "blow-up of P3 along the intersection of a quadric and a cubic"),
    ("P3", 4, 1, "blow-up of P3 along an elliptic quartic (intersection of two quadrics)"),
    ("P3", 3, 0, "blow-up of P3 along a twisted cubic"),
    ("P3", 3, 1, "blow-up of P3 along a plane cubic"),
    ("P3", 2, 0, "blow-up of P3 along a conic"),
    ("P3", 1, 0, "blow-up of P3 along a line"),
    ("Q", 8, 5, "blow-up of Q along the intersection of two divisors from |O_Q(2)|"),
    ("Q", 6, 2, "blow-up of Q along a curve of degree 6 and genus 2"),
    ("Q", 5, 1, "blow-up of Q along an elliptic curve of degree 5"),
    ("Q", 4, 0, "blow-up of Q along a twisted quartic"),
    ("Q", 4, 1, "blow-up of Q along the intersection of divisors from |O_Q(1)| and |O_Q(2)|"),
    ("Q", 2, 0, "blow-up of Q along a conic"),
    ("Q", 1, 0, "blow-up of Q along a line"),
    ("V3", 3, 1, "blow-up of V3 along a plane cubic"),
    ("V3", 1, 0, "blow-up of V3 along a line"),
    ("V4", 4, 1, "blow-up of V4 along an elliptic curve cut by two hyperplane sections"),
    ("V4", 2, 0, "blow-up of V4 along a conic"),
    ("V4", 1, 0, "blow-up of V4 along a line"),
]


def builtin_registry() -> dict[str, FanoBlowupClass]:
    out = {}
    for base, d, g, desc in _BUILTIN:
        c = FanoBlowupClass.make(base, d, g, desc)
        out[c.id] = c
    return out


def parse_registry(text: str) -> dict[str, FanoBlowupClass]:
    """Parse ``id base d g description`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 4)
        if len(parts) < 4:
            raise RegistryError(f"line {lineno}: expected 'id base d g [description]'")
        cid, base, d, g = parts[:4]
        try:
            cls = FanoBlowupClass(cid, base, int(d), int(g), parts[4] if len(parts) > 4 else "")
        except ValueError as exc:
            raise RegistryError(f"line {lineno}: {exc}") from None
        out[cid] = cls
    return out


def load_registry(path: str | os.PathLike | None = None) -> dict[str, FanoBlowupClass]:
    if path is None:
        path = os.environ.get(REGISTRY_ENV) or None
    if path is None:
        return builtin_registry()
    return parse_registry(Path(path).read_text())


def get_class(cls: "FanoBlowupClass | str", registry: dict | None = None) -> FanoBlowupClass:
    if isinstance(cls, FanoBlowupClass):
        return cls
    reg = load_registry() if registry is None else registry
    try:
        return reg[cls]
    except KeyError:
        raise RegistryError(f"unknown class id {cls!r}") from None


def intersection_numbers(cls: "FanoBlowupClass | str") -> tuple[int, int, int, int]:
    """Degrees of (h^3, h^2 e, h e^2, e^3)."""
    X = get_class(cls)
    return (X.base_degree, 0, -X.d, -X.index * X.d + 2 - 2 * X.g)


def _top_degree(X: FanoBlowupClass, i: int, j: int) -> int:
    # i + j == 3; value of h^i e^j
    return intersection_numbers(X)[j]


_DEG1 = ((1, 0), (0, 1))
_DEG2 = ((2, 0), (1, 1), (0, 2))


class ChowClass:
    """Element of the numerical Chow ring, truncated above degree 3."""

    __slots__ = ("X", "terms", "pt")

    def __init__(self, X: FanoBlowupClass, terms: dict | None = None, pt=None):
        self.X = X
        self.terms: dict[tuple[int, int], QPoly] = {}
        for k, v in (terms or {}).items():
            v = QPoly.coerce(v)
            if sum(k) > 2:
                raise ValueError("degree-3 monomials must be collapsed into pt")
            if not v.is_zero():
                self.terms[k] = v
        self.pt = QPoly.coerce(0 if pt is None else pt)

    # constructors
    @classmethod
    def scalar(cls, X, c) -> "ChowClass":
        return cls(X, {(0, 0): c})

    @classmethod
    def h(cls, X) -> "ChowClass":
        return cls(X, {(1, 0): 1})

    @classmethod
    def e(cls, X) -> "ChowClass":
        return cls(X, {(0, 1): 1})

    @classmethod
    def divisor(cls, X, a, b) -> "ChowClass":
        """The class a*h - b*e."""
        return cls(X, {(1, 0): a, (0, 1): -QPoly.coerce(b)})

    @classmethod
    def degree2(cls, X, hh=0, he=0, ee=0) -> "ChowClass":
        return cls(X, {(2, 0): hh, (1, 1): he, (0, 2): ee})

    @classmethod
    def point(cls, X, c=1) -> "ChowClass":
        return cls(X, pt=c)

    # accessors
    def coeff(self, i: int, j: int) -> QPoly:
        if i + j == 3:
            raise KeyError("degree-3 part is stored as pt")
        return self.terms.get((i, j), QPoly())

    @property
    def deg0(self) -> QPoly:
        return self.coeff(0, 0)

    @property
    def deg1(self) -> tuple[QPoly, QPoly]:
        return tuple(self.coeff(*k) for k in _DEG1)

    @property
    def deg2(self) -> tuple[QPoly, QPoly, QPoly]:
        return tuple(self.coeff(*k) for k in _DEG2)

    @property
    def deg3(self) -> QPoly:
        return self.pt

    def part(self, degree: int) -> "ChowClass":
        if degree == 3:
            return ChowClass(self.X, pt=self.pt)
        return ChowClass(self.X, {k: v for k, v in self.terms.items() if sum(k) == degree})

    def _check(self, other: "ChowClass"):
        if other.X != self.X:
            raise IncompatibleClassError(f"classes on {self.X.id} and {other.X.id} cannot be combined")

    def _lift(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            self._check(other)
            return other
        return ChowClass.scalar(self.X, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, QPoly()) + v
        return ChowClass(self.X, terms, self.pt + other.pt)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.X, {k: -v for k, v in self.terms.items()}, -self.pt)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, ChowClass):
            c = QPoly.coerce(other)
            return ChowClass(self.X, {k: v * c for k, v in self.terms.items()}, self.pt * c)
        self._check(other)
        terms: dict[tuple[int, int], QPoly] = {}
        pt = QPoly()
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i + j <= 2:
                    terms[(i, j)] = terms.get((i, j), QPoly()) + a * b
                elif i + j == 3:
                    pt = pt + a * b * _top_degree(self.X, i, j)
        pt = pt + self.deg0 * other.pt + other.deg0 * self.pt
        return ChowClass(self.X, terms, pt)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ChowClass.scalar(self.X, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.X == other.X and self.terms == other.terms and self.pt == other.pt

    def __hash__(self):
        return hash((self.X, tuple(sorted(self.terms.items())), self.pt))

    def functional(self) -> "A2Functional":
        """Degree-2 part as the linear form it defines on divisor classes."""
        x = self.part(2)
        return A2Functional(
            integrate(x * ChowClass.h(self.X)), integrate(x * ChowClass.e(self.X))
        )

    def __repr__(self):
        return f"ChowClass({self.X.id}: {self})"

    def __str__(self):
        names = {(0, 0): "1", (1, 0): "h", (0, 1): "e", (2, 0): "h^2", (1, 1): "he", (0, 2): "e^2"}
        parts = []
        for k in ((0, 0),) + _DEG1 + _DEG2:
            v = self.terms.get(k)
            if v is not None:
                parts.append(_fmt_term(v, names[k]))
        if not self.pt.is_zero():
            parts.append(_fmt_term(self.pt, "pt"))
        if not parts:
            return "0"
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s


def _fmt_term(c: QPoly, name: str) -> str:
    if c.is_const():
        v = c.coeff(0)
        if name == "1":
            return str(v)
        if v == 1:
            return name
        if v == -1:
            return "-" + name
        return f"{v}{name}"
    return f"({c}){name}" if name != "1" else f"({c})"


@dataclass(frozen=True)
class A2Functional:
    """A codimension-2 class known only through its degrees against h and e."""

    on_h: QPoly
    on_e: QPoly

    def __init__(self, on_h, on_e):
        object.__setattr__(self, "on_h", QPoly.coerce(on_h))
        object.__setattr__(self, "on_e", QPoly.coerce(on_e))

    def pair(self, D: ChowClass) -> QPoly:
        a, b = D.deg1
        return a * self.on_h + b * self.on_e

    def __add__(self, other: "A2Functional"):
        return A2Functional(self.on_h + other.on_h, self.on_e + other.on_e)

    def __neg__(self):
        return A2Functional(-self.on_h, -self.on_e)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return A2Functional(self.on_h * c, self.on_e * c)

    __rmul__ = __mul__


def integrate(x: ChowClass) -> QPoly:
    """Degree of the top-dimensional part; lower-degree parts are discarded."""
    return x.pt


@dataclass(frozen=True)
class TangentData:
    c1: ChowClass
    c2: A2Functional


def tangent_data(cls: "FanoBlowupClass | str") -> TangentData:
    """c1(T) = r h - e; c2(T) pairs to gamma + d on h and r d on e."""
    X = get_class(cls)
    r = X.index
    return TangentData(
        ChowClass.divisor(X, r, 1),
        A2Functional(Fraction(X.gamma + X.d), Fraction(r * X.d)),
    )


def polarization(cls: "FanoBlowupClass | str") -> ChowClass:
    """The anticanonical class H = r h - e."""
    X = get_class(cls)
    return ChowClass.divisor(X, X.index, 1)


def anticanonical_degree(cls) -> int:
    H = polarization(cls)
    return int(integrate(H ** 3)(0))
