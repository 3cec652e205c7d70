"""Schreyer free resolutions and unit-pruning minimalization.

Module terms x^a e_i of F_k are packed as ``((x^a * N_i) << s_k) | rank_k(i)``
where N_i is the total leading monomial of e_i's image in F_0 and rank_k
encodes the Schreyer tie-break, so integer comparison is the Schreyer order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..qpoly import QPoly, binom_poly
from .ideal import Ideal
from .ring import Poly, Ring, add_terms, mul_terms


class Mat:
    """Sparse matrix of polynomial term dicts; columns are images of source basis vectors."""

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], dict] = {k: v for k, v in (entries or {}).items() if v}

    def get(self, i: int, j: int) -> dict:
        return self.entries.get((i, j), {})

    def column(self, j: int) -> dict[int, dict]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def compose(self, other: "Mat", p: int) -> "Mat":
        """self * other."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        rows: dict[int, list] = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(j, []).append((i, v))
        out: dict = {}
        for (j, l), w in other.entries.items():
            for i, v in rows.get(j, ()):
                out[(i, l)] = add_terms(out.get((i, l), {}), mul_terms(v, w, p), p)
        return Mat(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not self.entries

    def unit_entries(self) -> list[tuple[int, int]]:
        return [k for k, v in self.entries.items() if len(v) == 1 and 0 in v]


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... with ``maps[k-1]`` the differential F_k -> F_{k-1}."""

    ring: Ring
    degrees: list[list[int]]
    maps: list[Mat]
    minimal: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def length(self) -> int:
        return len(self.maps)

    def betti(self) -> list[int]:
        return [len(d) for d in self.degrees]

    def twists(self) -> list[list[int]]:
        return [sorted(-a for a in d) for d in self.degrees]

    def graded_betti(self) -> dict[tuple[int, int], int]:
        out: dict = {}
        for k, ds in enumerate(self.degrees):
            for a in ds:
                out[(k, a)] = out.get((k, a), 0) + 1
        return out

    def differential(self, k: int) -> Mat:
        return self.maps[k - 1]

    def check_complex(self) -> bool:
        p = self.ring.p
        return all(self.maps[k].compose(self.maps[k + 1], p).is_zero() for k in range(len(self.maps) - 1))

    def has_unit_entries(self) -> bool:
        return any(m.unit_entries() for m in self.maps)

    def to_json(self) -> dict:
        return {"betti": self.betti(), "twists": self.twists(), "minimal": self.minimal}


@dataclass
class _Level:
    s: int
    N: list[int]
    rank_of: list[int]
    idx_of_rank: list[int]


def _syzygies(ring: Ring, prev: _Level, gens: list[dict]):
    """Sort a Schreyer Groebner basis, define the next free module and its syzygies."""
    s0 = prev.s
    rmask0 = (1 << s0) - 1
    div, lcm, p = ring.divides, ring.lcm, ring.p

    def xpart(K):
        return (K >> s0) - prev.N[prev.idx_of_rank[K & rmask0]]

    leads0 = [max(g) for g in gens]
    order = sorted(
        range(len(gens)),
        key=lambda i: (leads0[i] & rmask0, tuple(-e for e in ring.exps(xpart(leads0[i])))),
    )
    gens = [gens[i] for i in order]
    leads = [leads0[i] for i in order]
    n = len(gens)
    N = [K >> s0 for K in leads]
    pos = [K & rmask0 for K in leads]
    by_tie = sorted(range(n), key=lambda i: (pos[i], -i))
    rank_of = [0] * n
    for r, i in enumerate(by_tie):
        rank_of[i] = r
    s = max(1, n.bit_length())
    level = _Level(s, N, rank_of, by_tie)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(pos[i], []).append(i)
    lookup = {pr: [(N[l], l) for l in idx] for pr, idx in groups.items()}

    def enc(q, l):
        return ((q + N[l]) << s) | rank_of[l]

    syz = []
    for idx in groups.values():
        for a, i in enumerate(idx):
            cands = []
            for j in idx[a + 1:]:
                L = lcm(N[i], N[j])
                cands.append((L - N[i], L, j))
            kept = []
            for c, (m, L, j) in enumerate(cands):
                if any(
                    div(m2, m) and (m2 != m or c2 < c)
                    for c2, (m2, _, _) in enumerate(cands)
                    if c2 != c
                ):
                    continue
                kept.append((m, L, j))
            for m_ij, L, j in kept:
                m_ji = L - N[j]
                sigma = {enc(m_ij, i): 1, enc(m_ji, j): p - 1}
                f = {K + (m_ij << s0): c for K, c in gens[i].items()}
                f = add_terms(f, {K + (m_ji << s0): c for K, c in gens[j].items()}, p, -1)
                _reduce_tracking(f, gens, lookup, s0, rmask0, ring, sigma, enc)
                syz.append(sigma)
    return level, gens, syz


def _reduce_tracking(f, gens, lookup, s0, rmask0, ring, sigma, enc):
    from heapq import heapify, heappop, heappush

    p, div = ring.p, ring.divides
    heap = [-K for K in f]
    heapify(heap)
    while heap:
        K = -heappop(heap)
        c = f.get(K)
        if c is None:
            continue
        tot = K >> s0
        for lt, l in lookup.get(K & rmask0, ()):
            if div(lt, tot):
                break
        else:
            raise ArithmeticError("S-pair did not reduce to zero: input is not a Groebner basis")
        q = tot - lt
        shift = q << s0
        for gK, gc in gens[l].items():
            k = gK + shift
            old = f.get(k)
            if old is None:
                f[k] = (-c * gc) % p
                heappush(heap, -k)
            else:
                v = (old - c * gc) % p
                if v:
                    f[k] = v
                else:
                    del f[k]
        e = enc(q, l)
        v = (sigma.get(e, 0) - c) % p
        if v:
            sigma[e] = v
        else:
            sigma.pop(e, None)


def _to_matrix(ring: Ring, level: _Level, gens: list[dict], nrows: int) -> Mat:
    rmask = (1 << level.s) - 1
    entries: dict = {}
    for j, g in enumerate(gens):
        for K, c in g.items():
            r = level.idx_of_rank[K & rmask]
            m = (K >> level.s) - level.N[r]
            entries.setdefault((r, j), {})[m] = c
    return Mat(nrows, len(gens), entries)


def schreyer_resolution(I: Ideal, max_length: int = 8) -> FreeResolution:
    """Non-minimal Schreyer resolution of S/I starting from the reduced grevlex basis."""
    ring = I.ring.with_order("grevlex")
    gb = I.groebner("grevlex")
    level = _Level(0, [0], [0], [0])
    gens = [dict(g.terms) for g in gb]
    degrees = [[0]]
    maps = []
    while gens:
        if len(maps) >= max_length:
            raise ArithmeticError("resolution did not terminate")
        nxt, gens_sorted, syz = _syzygies(ring, level, gens)
        maps.append(_to_matrix(ring, level, gens_sorted, len(degrees[-1])))
        degrees.append([ring.deg(m) for m in nxt.N])
        level, gens = nxt, syz
    return FreeResolution(ring, degrees, maps, minimal=False)


def minimize(res: FreeResolution) -> FreeResolution:
    """Prune unit entries until no differential has a nonzero constant entry."""
    p = res.ring.p
    maps = [dict(m.entries) for m in res.maps]
    alive = [set(range(len(d))) for d in res.degrees]
    degs = res.degrees
    while True:
        hit = None
        for k, ent in enumerate(maps, 1):
            for (i, j), v in ent.items():
                if len(v) == 1 and 0 in v and degs[k][j] == degs[k - 1][i]:
                    hit = (k, i, j, v[0])
                    break
            if hit:
                break
        if hit is None:
            break
        k, i, j, c = hit
        ent = maps[k - 1]
        inv = pow(c, -1, p)
        colj = {r: v for (r, jj), v in ent.items() if jj == j}
        updates = [(l, v) for (r, l), v in ent.items() if r == i and l != j]
        for l, a in updates:
            scale = {m: -cc * inv % p for m, cc in a.items()}
            for r, v in colj.items():
                key = (r, l)
                new = add_terms(ent.get(key, {}), mul_terms(scale, v, p), p)
                if new:
                    ent[key] = new
                else:
                    ent.pop(key, None)
        maps[k - 1] = {key: v for key, v in ent.items() if key[1] != j and key[0] != i}
        if k < len(maps):
            maps[k] = {key: v for key, v in maps[k].items() if key[0] != j}
        if k >= 2:
            maps[k - 2] = {key: v for key, v in maps[k - 2].items() if key[1] != i}
        alive[k].discard(j)
        alive[k - 1].discard(i)

    index = [{old: new for new, old in enumerate(sorted(a))} for a in alive]
    new_degrees = [[degs[k][old] for old in sorted(a)] for k, a in enumerate(alive)]
    new_maps = []
    for k, ent in enumerate(maps, 1):
        rows, cols = index[k - 1], index[k]
        new_maps.append(Mat(len(rows), len(cols), {(rows[i], cols[j]): v for (i, j), v in ent.items()}))
    while new_maps and new_maps[-1].ncols == 0:
        new_maps.pop()
        new_degrees.pop()
    return FreeResolution(res.ring, new_degrees, new_maps, minimal=True)


def free_resolution(I: Ideal, minimal: bool = True) -> FreeResolution:
    """Graded free resolution of S/I (minimal unless asked otherwise)."""
    key = ("res", minimal)
    cache = I.__dict__.setdefault("_res_cache", {})
    if key not in cache:
        res = schreyer_resolution(I)
        cache[key] = minimize(res) if minimal else res
    return cache[key]


class NotACurveError(ValueError):
    pass


def hilbert_poly_from_resolution(res: FreeResolution) -> QPoly:
    """Hilbert polynomial of F_0 / im(d_1) from the alternating sum of twisted binomials."""
    n = res.ring.n - 1
    out = QPoly()
    for k, ds in enumerate(res.degrees):
        for a in ds:
            term = binom_poly(n - a, n)
            out = out + term if k % 2 == 0 else out - term
    return out


def curve_invariants(res: FreeResolution) -> tuple[int, int]:
    """(degree, arithmetic genus) when the Hilbert polynomial is d t + 1 - g."""
    P = hilbert_poly_from_resolution(res)
    if P.degree != 1 or any(c.denominator != 1 for c in P.coeffs):
        raise NotACurveError(f"not a curve module: Hilbert polynomial {P}")
    return int(P.coeff(1)), int(1 - P.coeff(0))


def hilbert_function(res: FreeResolution, t: int) -> int:
    n = res.ring.n - 1
    total = 0
    for k, ds in enumerate(res.degrees):
        for a in ds:
            v = comb(t - a + n, n) if t - a >= 0 else 0
            total += v if k % 2 == 0 else -v
    return total
