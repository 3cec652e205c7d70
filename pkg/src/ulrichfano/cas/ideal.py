"""Homogeneous ideals of F_p[x, y, z, w]."""

from __future__ import annotations

from .groebner import groebner_terms
from .ring import Poly, Ring


class Ideal:
    def __init__(self, ring: Ring, gens):
        gens = list(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g}")
        self.ring = ring
        self.gens = tuple(gens)
        self._gb: dict[str, list[Poly]] = {}

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators of degrees {self.degrees()} over F_{self.ring.p})"

    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]

    def groebner(self, order: str = "grevlex") -> list[Poly]:
        if order not in self._gb:
            R = self.ring.with_order(order)
            terms = groebner_terms([g.convert(R).terms for g in self.gens], R)
            self._gb[order] = [Poly(R, t) for t in terms]
        return self._gb[order]

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """Ideal generated by pairwise products, deduplicated after making each monic."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    seen = set()
    gens = []
    for f in I.gens:
        for g in J.gens:
            h = (f * g).monic()
            key = frozenset(h.terms.items())
            if key not in seen:
                seen.add(key)
                gens.append(h)
    return Ideal(I.ring, gens)


def ideal_power(I: Ideal, m: int) -> Ideal:
    if m < 1:
        raise ValueError("ideal powers need m >= 1")
    out = I
    for _ in range(m - 1):
        out = ideal_product(out, I)
    return out
