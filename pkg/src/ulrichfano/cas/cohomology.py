"""Sheaf cohomology of ideal sheaves on P^3 via graded local duality.

For an ideal M with resolution G_. (G_q = F_{q+1} of S/M),
H^i(M~(t)) = Ext^{3-i}(M, S(-4))_{-t}, computed as the homology of the dual
complex in one graded degree with dense linear algebra over F_p.
"""

from __future__ import annotations

import os

import numpy as np

from .ideal import Ideal
from .resolution import FreeResolution, free_resolution

DIM_CAP_ENV = "ULRICHFANO_DIM_CAP"
DEFAULT_DIM_CAP = 200_000


class ResourceError(RuntimeError):
    def __init__(self, shape: tuple[int, int], cap: int):
        super().__init__(
            f"graded piece needs a {shape[0]}x{shape[1]} matrix ({shape[0] * shape[1]} entries), "
            f"above the cap of {cap}; raise {DIM_CAP_ENV} to allow it"
        )
        self.shape = shape
        self.cap = cap


def dim_cap() -> int:
    return int(os.environ.get(DIM_CAP_ENV, DEFAULT_DIM_CAP))


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination on an int64 copy."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.flatnonzero(A[r + 1:, c]) + r + 1
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r


def _dual_map(res: FreeResolution, q: int, t: int, cap: int) -> tuple[int, int, np.ndarray | None]:
    """Matrix of Hom(G_{q-1}, S(-4))_{-t} -> Hom(G_q, S(-4))_{-t}; returns (n_src, n_tgt, M)."""
    ring = res.ring
    n = ring.n

    def piece(level: int):
        if level < 1 or level >= len(res.degrees):
            return [], [], 0
        bases, offs, total = [], [], 0
        for a in res.degrees[level]:
            mons = ring.monomials(a - n - t)
            bases.append({m: k for k, m in enumerate(mons)})
            offs.append(total)
            total += len(mons)
        return bases, offs, total

    src_b, src_o, n_src = piece(q)  # G_{q-1} = F_q
    tgt_b, tgt_o, n_tgt = piece(q + 1)  # G_q = F_{q+1}
    if n_src == 0 or n_tgt == 0:
        return n_src, n_tgt, None
    if n_src * n_tgt > cap:
        raise ResourceError((n_tgt, n_src), cap)
    M = np.zeros((n_tgt, n_src), dtype=np.int64)
    d = res.maps[q]  # F_{q+1} -> F_q
    for (j, l), poly in d.entries.items():
        sb, tb = src_b[j], tgt_b[l]
        for mu, col in sb.items():
            c0 = src_o[j] + col
            for m, c in poly.items():
                M[tgt_o[l] + tb[m + mu], c0] += c
    return n_src, n_tgt, M % ring.p


def ext_dim(res: FreeResolution, q: int, t: int, cap: int | None = None) -> int:
    """dim Ext^q(M, S(-4))_{-t} for M the image of d_1 (so G_q = F_{q+1})."""
    cap = dim_cap() if cap is None else cap
    p = res.ring.p
    n_q, _, T_out = _dual_map(res, q + 1, t, cap)
    _, _, T_in = _dual_map(res, q, t, cap) if q >= 1 else (0, 0, None)
    r_out = rank_mod_p(T_out, p) if T_out is not None else 0
    r_in = rank_mod_p(T_in, p) if T_in is not None else 0
    return n_q - r_out - r_in


def sheaf_cohomology_dim(M: Ideal | FreeResolution, i: int, t: int, minimal: bool = True, cap: int | None = None) -> int:
    """dim H^i(P^3, M~(t)) for i in 1..3."""
    if i == 0:
        raise NotImplementedError("H^0 needs saturation, which is not supported")
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    res = M if isinstance(M, FreeResolution) else free_resolution(M, minimal=minimal)
    n = res.ring.n
    return ext_dim(res, n - 1 - i, t, cap)
