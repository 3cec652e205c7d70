"""Reader and writer for the plain-text ideal format.

    p 32467
    vars x y z w
    -2215x^3+10620x^2y+...   # one generator per line
"""

from __future__ import annotations

from .ring import DEFAULT_PRIME, DEFAULT_VARS, Poly, Ring


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def parse_poly(text: str, ring: Ring, line: int = 1, col0: int = 1) -> Poly:
    names = sorted(ring.names, key=len, reverse=True)
    s = text
    i, n = 0, len(s)
    terms: dict[int, int] = {}

    def err(msg, at):
        raise ParseError(msg, line, col0 + at)

    def skip(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read_int(j):
        k = j
        while k < n and s[k].isdigit():
            k += 1
        return k

    i = skip(i)
    if i == n:
        err("empty generator", i)
    first = True
    while True:
        i = skip(i)
        if i == n:
            break
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = skip(i + 1)
        elif not first:
            err(f"expected '+' or '-', found {s[i]!r}", i)
        first = False
        start = i
        coeff = None
        k = read_int(i)
        if k > i:
            coeff = int(s[i:k])
            i = k
        exps = [0] * ring.n
        nfactors = 0
        while True:
            j = skip(i)
            if j < n and s[j] == "*":
                j = skip(j + 1)
                if j == n or not s[j].isalpha():
                    err("expected a variable after '*'", j)
            if j < n and s[j].isalpha():
                for name in names:
                    if s.startswith(name, j):
                        break
                else:
                    err(f"unknown variable starting at {s[j:j + 8]!r}", j)
                j += len(name)
                e = 1
                jj = skip(j)
                if jj < n and s[jj] == "^":
                    jj = skip(jj + 1)
                    k = read_int(jj)
                    if k == jj:
                        err("expected an exponent after '^'", jj)
                    e = int(s[jj:k])
                    j = k
                exps[ring.names.index(name)] += e
                nfactors += 1
                i = j
                continue
            if j < n and s[j].isdigit():
                err("malformed integer or missing operator", j)
            break
        if coeff is None and nfactors == 0:
            err("expected a term", start)
        m = ring.mono(exps)
        terms[m] = (terms.get(m, 0) + sign * (1 if coeff is None else coeff)) % ring.p
    return Poly(ring, terms)


def parse_ideal(text: str, p: int | None = None):
    """Parse the ideal format; header lines are optional."""
    from .ideal import Ideal

    prime = DEFAULT_PRIME if p is None else p
    names = DEFAULT_VARS
    gens_src: list[tuple[int, int, str]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        head, _, rest = stripped.partition(" ")
        if head == "p" and rest.strip().isdigit():
            prime = int(rest)
            continue
        if head == "vars":
            names = tuple(rest.split())
            if not names or any(not v.isalpha() for v in names):
                raise ParseError("bad variable list", ln, 1)
            continue
        for piece in _split_commas(body):
            off, chunk = piece
            if chunk.strip():
                gens_src.append((ln, off + 1, chunk))
    try:
        ring = Ring(prime, names)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
    gens = []
    for ln, col, src in gens_src:
        f = parse_poly(src, ring, ln, col)
        if f.is_zero():
            raise ParseError("generator is zero", ln, col)
        if not f.is_homogeneous():
            raise ParseError(f"generator is not homogeneous (degrees {sorted(f.degrees())})", ln, col)
        gens.append(f)
    if not gens:
        raise ParseError("no generators", 1, 1)
    return Ideal(ring, gens)


def _split_commas(line: str) -> list[tuple[int, str]]:
    out, start = [], 0
    for k, ch in enumerate(line):
        if ch == ",":
            out.append((start, line[start:k]))
            start = k + 1
    out.append((start, line[start:]))
    return out


def format_ideal(I) -> str:
    lines = [f"p {I.ring.p}", "vars " + " ".join(I.ring.names)]
    lines += [str(g) for g in I.gens]
    return "\n".join(lines) + "\n"
