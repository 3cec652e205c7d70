"""Buchberger's algorithm with the Gebauer-Moeller pair criteria."""

from __future__ import annotations

from heapq import heapify, heappop, heappush

from .ring import Poly, Ring


def normal_form(f: dict, basis: list[tuple[int, dict]], ring: Ring) -> dict:
    """Fully reduce ``f`` by monic polynomials given as (lead, terms) pairs."""
    p, div = ring.p, ring.divides
    f = dict(f)
    heap = [-m for m in f]
    heapify(heap)
    rem: dict = {}
    while heap:
        m = -heappop(heap)
        c = f.get(m)
        if c is None:
            continue
        for lead, g in basis:
            if div(lead, m):
                break
        else:
            rem[m] = f.pop(m)
            continue
        q = m - lead
        for gm, gc in g.items():
            k = gm + q
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
    return rem


def _monic(f: dict, p: int) -> dict:
    inv = pow(f[max(f)], -1, p)
    return {m: c * inv % p for m, c in f.items()}


def spoly(f: dict, lf: int, g: dict, lg: int, L: int, p: int) -> dict:
    """S-polynomial of two monic polynomials with leads lf, lg and lcm L."""
    qf, qg = L - lf, L - lg
    out = {m + qf: c for m, c in f.items()}
    for m, c in g.items():
        k = m + qg
        v = (out.get(k, 0) - c) % p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def groebner_terms(gens: list[dict], ring: Ring) -> list[dict]:
    """Reduced Groebner basis of homogeneous generators, as monic term dicts sorted by lead."""
    p, div, lcm, deg = ring.p, ring.divides, ring.lcm, ring.deg
    polys: list[dict] = []
    leads: list[int] = []
    G: list[int] = []
    B: list[tuple[int, int, int]] = []  # (lcm, i, j)
    inputs = sorted((dict(g) for g in gens if g), key=lambda g: deg(max(g)))

    def coprime(a, b):
        return ring.coprime(a, b)

    def update(h: int):
        nonlocal G, B
        lh = leads[h]
        C = [(lcm(lh, leads[g]), g) for g in G]
        D: list[tuple[int, int]] = []
        while C:
            L1, g1 = C.pop(0)
            if coprime(lh, leads[g1]) or not any(div(L2, L1) for L2, _ in C) and not any(div(L2, L1) for L2, _ in D):
                D.append((L1, g1))
        E = [(L, g, h) for L, g in D if not coprime(lh, leads[g])]
        keep = []
        for L, g1, g2 in B:
            if div(lh, L) and lcm(leads[g1], lh) != L and lcm(lh, leads[g2]) != L:
                continue
            keep.append((L, g1, g2))
        B = keep + E
        G = [g for g in G if not div(lh, leads[g])] + [h]

    def add(f: dict):
        h = normal_form(f, [(leads[g], polys[g]) for g in G], ring)
        if h:
            h = _monic(h, p)
            polys.append(h)
            leads.append(max(h))
            update(len(polys) - 1)

    while B or inputs:
        pair_deg = min((deg(L), L) for L, _, _ in B) if B else None
        if inputs and (pair_deg is None or deg(max(inputs[0])) <= pair_deg[0]):
            add(inputs.pop(0))
            continue
        k = min(range(len(B)), key=lambda i: (deg(B[i][0]), B[i][0], B[i][1], B[i][2]))
        L, i, j = B.pop(k)
        add(spoly(polys[i], leads[i], polys[j], leads[j], L, p))

    # minimal, then reduced
    G = [g for g in G if not any(h != g and div(leads[h], leads[g]) for h in G)]
    out = []
    for g in G:
        others = [(leads[h], polys[h]) for h in G if h != g]
        tail = {m: c for m, c in polys[g].items() if m != leads[g]}
        red = normal_form(tail, others, ring)
        red[leads[g]] = 1
        out.append(red)
    out.sort(key=max)
    return out


def buchberger(I, order: str = "grevlex") -> list[Poly]:
    """Reduced Groebner basis of a homogeneous ideal under grevlex or lex."""
    return I.groebner(order)


def reduce_poly(f: Poly, gb: list[Poly]) -> Poly:
    ring = f.ring
    return Poly(ring, normal_form(f.terms, [(g.lead, g.monic().terms) for g in gb], ring))


def spoly_residues(gb: list[Poly]) -> list[Poly]:
    """Normal forms of all S-polynomials of a Groebner basis (all zero when it is one)."""
    if not gb:
        return []
    ring = gb[0].ring
    basis = [(g.lead, g.monic().terms) for g in gb]
    out = []
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            la, fa = basis[a]
            lb, fb = basis[b]
            s = spoly(fa, la, fb, lb, ring.lcm(la, lb), ring.p)
            out.append(Poly(ring, normal_form(s, basis, ring)))
    return out
