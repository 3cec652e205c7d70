"""Graded polynomial rings over F_p with monomials packed into Python ints.

Each exponent occupies a 16-bit field. Under grevlex a monomial is stored as
``(deg << 16n) - P`` where ``P`` packs the exponents with the last variable most
significant; under lex it is ``P`` with the first variable most significant.
Both encodings turn monomial multiplication into integer addition and the
monomial order into integer comparison.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

DEFAULT_PRIME = 32467
DEFAULT_VARS = ("x", "y", "z", "w")
FIELD = 16
MAX_EXP = (1 << (FIELD - 1)) - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Ring:
    """F_p[vars] with a fixed monomial order ("grevlex" or "lex")."""

    def __init__(self, p: int = DEFAULT_PRIME, names=DEFAULT_VARS, order: str = "grevlex"):
        if not is_prime(p) or p >= 1 << 31:
            raise ValueError(f"p must be a prime below 2^31, got {p}")
        if order not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {order!r}")
        self.p = p
        self.names = tuple(names)
        self.n = len(self.names)
        self.order = order
        self.nbits = FIELD * self.n
        self.mask = (1 << self.nbits) - 1
        self.guard = sum(1 << (FIELD * i + FIELD - 1) for i in range(self.n))
        self._fmask = (1 << FIELD) - 1

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.p, self.names, self.order) == (other.p, other.names, other.order)

    def __hash__(self):
        return hash((self.p, self.names, self.order))

    def __repr__(self):
        return f"Ring(p={self.p}, vars={' '.join(self.names)}, order={self.order})"

    def with_order(self, order: str) -> "Ring":
        return self if order == self.order else Ring(self.p, self.names, order)

    # exponent packing

    def _pack(self, exps) -> int:
        if self.order == "grevlex":
            return sum(e << (FIELD * i) for i, e in enumerate(exps))
        return sum(e << (FIELD * (self.n - 1 - i)) for i, e in enumerate(exps))

    def _packed(self, m: int) -> int:
        return (-m) & self.mask if self.order == "grevlex" else m

    def mono(self, exps) -> int:
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 or e > MAX_EXP for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        P = self._pack(exps)
        if self.order == "grevlex":
            return (sum(exps) << self.nbits) - P
        return P

    def exps(self, m: int) -> tuple[int, ...]:
        P = self._packed(m)
        fm = self._fmask
        raw = [(P >> (FIELD * i)) & fm for i in range(self.n)]
        return tuple(raw) if self.order == "grevlex" else tuple(reversed(raw))

    def deg(self, m: int) -> int:
        if self.order == "grevlex":
            return -((-m) >> self.nbits)
        return sum(self.exps(m))

    def divides(self, a: int, b: int) -> bool:
        """True if monomial a divides monomial b."""
        if self.order == "grevlex":
            M = self.mask
            return (((((-b) & M) | self.guard) - ((-a) & M)) & self.guard) == self.guard
        return (((b | self.guard) - a) & self.guard) == self.guard

    def lcm(self, a: int, b: int) -> int:
        return self.mono(max(u, v) for u, v in zip(self.exps(a), self.exps(b)))

    def coprime(self, a: int, b: int) -> bool:
        return all(u == 0 or v == 0 for u, v in zip(self.exps(a), self.exps(b)))

    def monomials(self, degree: int) -> list[int]:
        """All monomials of a given degree, descending in the ring order."""
        if degree < 0:
            return []
        out = []
        for combo in combinations_with_replacement(range(self.n), degree):
            e = [0] * self.n
            for v in combo:
                e[v] += 1
            out.append(self.mono(e))
        out.sort(reverse=True)
        return out

    def mono_str(self, m: int) -> str:
        parts = []
        for name, e in zip(self.names, self.exps(m)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts)

    # polynomial helpers on raw term dicts

    def poly(self, terms: dict) -> "Poly":
        return Poly(self, terms)

    def var(self, name: str) -> "Poly":
        i = self.names.index(name)
        e = [0] * self.n
        e[i] = 1
        return Poly(self, {self.mono(e): 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {0: c} if c else {})


def mul_terms(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            k = m1 + m2
            out[k] = (out.get(k, 0) + c1 * c2) % p
    return {k: c for k, c in out.items() if c}


def add_terms(f: dict, g: dict, p: int, scale: int = 1) -> dict:
    out = dict(f)
    for m, c in g.items():
        v = (out.get(m, 0) + scale * c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


class Poly:
    """Immutable-by-convention polynomial: a ring and a {monomial: coeff} dict."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict | None = None):
        self.ring = ring
        p = ring.p
        self.terms = {m: c % p for m, c in (terms or {}).items() if c % p}

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead(self) -> int:
        return max(self.terms)

    @property
    def lc(self) -> int:
        return self.terms[self.lead]

    def degrees(self) -> set[int]:
        return {self.ring.deg(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees()) if self.terms else -1

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = pow(self.lc, -1, self.ring.p)
        return Poly(self.ring, {m: c * inv for m, c in self.terms.items()})

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ring, add_terms(self.terms, other.terms, self.ring.p))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.ring, add_terms(self.terms, other.terms, self.ring.p, -1))

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        return Poly(self.ring, mul_terms(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items(), reverse=True)

    def convert(self, ring: Ring) -> "Poly":
        """Re-encode into a ring with the same field and variables but another order."""
        if ring.p != self.ring.p or ring.names != self.ring.names:
            raise ValueError("incompatible rings")
        return Poly(ring, {ring.mono(self.ring.exps(m)): c for m, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            ms = self.ring.mono_str(m)
            body = ms if c == 1 and ms else f"{c}{ms}"
            out.append(body)
        return "+".join(out)

    def __repr__(self):
        return f"Poly({self})"
