"""Enumeration of Ulrich candidates: line bundles and rank-2 first Chern classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Callable

from .chow import ChowClass, get_class, integrate, polarization, tangent_data
from .qpoly import QPoly
from .rr import ChernData, DivisorClass, euler_poly, ulrich_target

FALLBACK_BOUND = 200

Bivariate = dict  # {(i, j): Fraction} meaning sum c * a^i * b^j


def _binom_poly(n: int) -> QPoly:
    """binom(x, n) as a polynomial in x."""
    out = QPoly.const(1)
    for i in range(n):
        out = out * QPoly((-i, 1)) / (i + 1)
    return out


def bivariate_form(f: Callable[[int, int], Fraction], degree: int) -> Bivariate:
    """Recover a polynomial of total degree <= ``degree`` from its integer values.

    Uses Newton forward differences at the origin, then expands the binomial
    basis into monomials.
    """
    grid = {(i, j): Fraction(f(i, j)) for i in range(degree + 1) for j in range(degree + 1 - i)}
    out: Bivariate = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            delta = sum(
                (-1) ** (i - k + j - l) * comb(i, k) * comb(j, l) * grid[(k, l)]
                for k in range(i + 1)
                for l in range(j + 1)
            )
            if delta == 0:
                continue
            pa, pb = _binom_poly(i), _binom_poly(j)
            for u, ca in enumerate(pa.coeffs):
                for v, cb in enumerate(pb.coeffs):
                    out[(u, v)] = out.get((u, v), Fraction(0)) + delta * ca * cb
    return {k: v for k, v in out.items() if v != 0}


def eval_bivariate(form: Bivariate, a, b) -> Fraction:
    return sum((c * Fraction(a) ** i * Fraction(b) ** j for (i, j), c in form.items()), Fraction(0))


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = k^2 * m with m squarefree (sign kept on m)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, m, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            m *= p
        p += 1
    return k, sign * m * n


def _fmt(q: Fraction) -> str:
    return str(q)


def quadratic_roots(A: Fraction, B: Fraction, C: Fraction) -> tuple[list[str], list[Fraction]]:
    """Exact roots of A x^2 + B x + C as strings, plus the rational ones."""
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if A == 0:
        if B == 0:
            return [], []
        r = -C / B
        return [_fmt(r)], [r]
    disc = B * B - 4 * A * C
    centre = -B / (2 * A)
    if disc == 0:
        return [_fmt(centre)], [centre]
    num, den = disc.numerator, disc.denominator
    k, m = _squarefree_split(num * den)
    coef = Fraction(k, den) / (2 * abs(A))
    if m == 1:
        roots = sorted([centre - coef, centre + coef])
        return [_fmt(r) for r in roots], roots
    head = "" if centre == 0 else f"{_fmt(centre)} "
    tail = f"{_fmt(coef)}*sqrt({m})"
    if head:
        strs = [f"{head}- {tail}", f"{head}+ {tail}"]
    else:
        strs = [f"-{tail}", tail]
    return strs, []


@dataclass
class LineCandidateReport:
    class_id: str
    relation_a_of_b: tuple[Fraction, Fraction] | str
    quadratic: tuple[Fraction, Fraction, Fraction] | None
    quadratic_roots: list[str]
    solutions: list[DivisorClass]
    verified_all_coefficients: bool

    def relation_str(self) -> str:
        if isinstance(self.relation_a_of_b, str):
            return self.relation_a_of_b
        lam, mu = self.relation_a_of_b
        return f"a = {lam}*b + {mu}"


def coefficient_forms(X) -> list[Bivariate]:
    """chi(O(a h - b e)(t)) - H^3 binom(t+3,3), one bivariate form per power of t."""
    X = get_class(X)
    target = ulrich_target(X, 1)
    cache: dict[tuple[int, int], QPoly] = {}

    def diff(a, b) -> QPoly:
        if (a, b) not in cache:
            cache[(a, b)] = euler_poly(X, ChernData.line_bundle(X, DivisorClass(a, b))) - target
        return cache[(a, b)]

    return [bivariate_form(lambda a, b, k=k: diff(a, b).coeff(k), 3 - k) for k in range(4)]


def solve_line_candidates(X) -> LineCandidateReport:
    """All integer (a, b) with chi(O(ah - be)(t)) equal to the rank-1 Ulrich polynomial."""
    X = get_class(X)
    forms = coefficient_forms(X)
    if forms[3]:
        raise AssertionError(f"{X.id}: leading coefficients disagree: {forms[3]}")
    e2, e1, e0 = forms[2], forms[1], forms[0]
    alpha = e2.get((1, 0), Fraction(0))
    beta = e2.get((0, 1), Fraction(0))
    gamma = e2.get((0, 0), Fraction(0))

    def all_vanish(a, b) -> bool:
        return all(eval_bivariate(f, a, b) == 0 for f in forms)

    if alpha == 0:
        sols = [
            DivisorClass(a, b)
            for a in range(-FALLBACK_BOUND, FALLBACK_BOUND + 1)
            for b in range(-FALLBACK_BOUND, FALLBACK_BOUND + 1)
            if eval_bivariate(e2, a, b) == 0 and all_vanish(a, b)
        ]
        return LineCandidateReport(X.id, "no-linear-elimination", None, [], sols, True)

    lam, mu = -beta / alpha, -gamma / alpha
    # substitute a = lam*b + mu into the t^1 equation
    q = [eval_bivariate(e1, lam * b + mu, b) for b in (0, 1, 2)]
    C = q[0]
    A = (q[2] - 2 * q[1] + q[0]) / 2
    B = q[1] - q[0] - A
    root_strs, rational_roots = quadratic_roots(A, B, C)
    if A == 0 and B == 0 and C == 0:
        raise ValueError(f"{X.id}: t^1 equation vanishes identically on the t^2 line")
    sols = []
    for b in rational_roots:
        a = lam * b + mu
        if b.denominator == 1 and a.denominator == 1 and eval_bivariate(e0, a, b) == 0:
            sols.append(DivisorClass(int(a), int(b)))
    sols.sort(key=lambda D: (D.a, D.b))
    verified = all(all_vanish(D.a, D.b) for D in sols)
    return LineCandidateReport(X.id, (lam, mu), (A, B, C), root_strs, sols, verified)


def dual_divisor(X, D: DivisorClass) -> DivisorClass:
    """3H - D for H = r h - e."""
    X = get_class(X)
    return DivisorClass(3 * X.index - D.a, 3 - D.b)


@dataclass
class Rank2Candidate:
    x: int
    y: int
    Hc2: Fraction

    @property
    def c1(self) -> DivisorClass:
        return DivisorClass(self.x, self.y)


@dataclass
class Rank2C1Report:
    class_id: str
    linear_relation: tuple[Fraction, Fraction]  # x = slope*y + offset
    bogomolov: tuple[Fraction, Fraction, Fraction]  # A y^2 + B y + C >= 0
    y_interval: list[str]
    candidates: list[Rank2Candidate] = field(default_factory=list)


def forced_Hc2(X, c1: ChowClass) -> Fraction:
    """H.c2 forced by the t^1 coefficient of the rank-2 Ulrich polynomial."""
    X = get_class(X)
    H = polarization(X)
    T = tangent_data(X)
    return (
        integrate(H * c1 * c1)(0) / 2
        - 2 * integrate(H ** 3)(0)
        + T.c2.pair(H)(0) / 6
    )


def enumerate_rank2_c1(X) -> Rank2C1Report:
    X = get_class(X)
    H = polarization(X)
    H3 = integrate(H ** 3)(0)
    p_h = integrate(H * H * ChowClass.h(X))(0)
    p_e = integrate(H * H * ChowClass.e(X))(0)
    # H^2.(x h - y e) = 3 H^3
    slope, offset = p_e / p_h, 3 * H3 / p_h

    def c1_of(y) -> ChowClass:
        return ChowClass.divisor(X, slope * y + offset, y)

    def bogomolov(y) -> Fraction:
        c1 = c1_of(y)
        return 4 * forced_Hc2(X, c1) - integrate(H * c1 * c1)(0)

    vals = [bogomolov(y) for y in (0, 1, 2)]
    C = vals[0]
    A = (vals[2] - 2 * vals[1] + vals[0]) / 2
    B = vals[1] - vals[0] - A
    if A >= 0:
        raise ValueError(f"{X.id}: Bogomolov quadratic is not bounded (leading coefficient {A})")
    report = Rank2C1Report(X.id, (slope, offset), (A, B, C), [])
    disc = B * B - 4 * A * C
    if disc < 0:
        return report
    report.y_interval, _ = quadratic_roots(A, B, C)
    centre = -B / (2 * A)
    radius2 = disc / (4 * A * A)
    R = isqrt(radius2.numerator // radius2.denominator + 1) + 2
    lo, hi = int(centre) - R - 1, int(centre) + R + 1
    for y in range(lo, hi + 1):
        x = slope * y + offset
        if x.denominator != 1 or bogomolov(y) < 0:
            continue
        report.candidates.append(Rank2Candidate(int(x), y, forced_Hc2(X, c1_of(y))))
    return report


@dataclass(frozen=True)
class Rank2Relations:
    degree_relation: bool  # H^2.c1 = 3H^3
    c2_relation: bool  # H.c2 = H.c1^2/2 - 2H^3 + H.c2(T)/6
    constant_relation: bool  # 2c1^3 - 6c1.c2 + c1.c2(T) = 9H^3
    sides: tuple[tuple[Fraction, Fraction], ...]

    def __iter__(self):
        return iter((self.degree_relation, self.c2_relation, self.constant_relation))


def check_rank2_relations(X, E: ChernData) -> Rank2Relations:
    """Evaluate the three numerical identities forced on a rank-2 Ulrich bundle.

    ``c2`` is only ever needed through its degrees against divisors, so the
    identities are decidable from either representation of ``E.c2``.
    """
    X = get_class(X)
    if E.rank != 2:
        raise ValueError("relations apply to rank-2 bundles only")
    H = polarization(X)
    T = tangent_data(X)
    c1 = E.c1.part(1)
    c2 = E.c2_functional
    H3 = integrate(H ** 3)(0)
    s1 = (integrate(H * H * c1)(0), 3 * H3)
    s2 = (c2.pair(H)(0), forced_Hc2(X, c1))
    lhs3 = 2 * integrate(c1 ** 3)(0) - 6 * c2.pair(c1)(0) + T.c2.pair(c1)(0)
    s3 = (lhs3, 9 * H3)
    return Rank2Relations(s1[0] == s1[1], s2[0] == s2[1], s3[0] == s3[1], (s1, s2, s3))


def extension_chern(X, D1: DivisorClass, D2: DivisorClass) -> ChernData:
    """Chern data of an extension 0 -> O(D1) -> E -> O(D2) -> 0."""
    X = get_class(X)
    a1, a2 = D1.to_chow(X), D2.to_chow(X)
    return ChernData(X, 2, a1 + a2, a1 * a2, 0)
