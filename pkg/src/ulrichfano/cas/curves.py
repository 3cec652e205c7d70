"""Seeded Hilbert-Burch generator for ACM curves of degree 6 and genus 3."""

from __future__ import annotations

import numpy as np

from .ideal import Ideal
from .resolution import curve_invariants, free_resolution
from .ring import DEFAULT_PRIME, Poly, Ring

MAX_TRIES = 10
EXPECTED_BETTI = [1, 4, 3]
EXPECTED_TWISTS = [[0], [-3] * 4, [-4] * 3]


class CurveGenerationError(RuntimeError):
    pass


def _det3(m: list[list[Poly]]) -> Poly:
    a, b, c = m
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def maximal_minors(matrix: list[list[Poly]]) -> list[Poly]:
    """The four 3x3 minors of a 4x3 matrix, deleting one row at a time."""
    return [_det3([row for k, row in enumerate(matrix) if k != skip]) for skip in range(len(matrix))]


def random_linear_matrix(rng: np.random.Generator, ring: Ring, rows: int = 4, cols: int = 3) -> list[list[Poly]]:
    coeffs = rng.integers(0, ring.p, size=(rows, cols, ring.n))
    xs = [ring.var(v) for v in ring.names]
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            f = ring.const(0)
            for v in range(ring.n):
                f = f + xs[v] * int(coeffs[r, c, v])
            row.append(f)
        out.append(row)
    return out


def random_acm_curve(seed: int, p: int = DEFAULT_PRIME) -> Ideal:
    """Ideal of maximal minors of a seeded random 4x3 matrix of linear forms.

    Resamples from the same stream until the resolution has shape
    S <- S(-3)^4 <- S(-4)^3 and the curve has (d, g) = (6, 3).
    """
    if p <= 3:
        raise ValueError("p must be a prime larger than 3")
    ring = Ring(p)
    rng = np.random.default_rng(seed)
    last = None
    for _ in range(MAX_TRIES):
        minors = maximal_minors(random_linear_matrix(rng, ring))
        if any(f.is_zero() for f in minors):
            last = "a maximal minor vanished"
            continue
        I = Ideal(ring, minors)
        res = free_resolution(I)
        if res.twists() != EXPECTED_TWISTS:
            last = f"resolution shape {res.twists()}"
            continue
        try:
            dg = curve_invariants(res)
        except ValueError as exc:
            last = str(exc)
            continue
        if dg != (6, 3):
            last = f"(d, g) = {dg}"
            continue
        return I
    raise CurveGenerationError(f"seed {seed}, p {p}: no ACM (6, 3) curve after {MAX_TRIES} draws; last: {last}")
