"""Command-line front end: ``ulrichfano <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import cas
from .chow import ChowClass, RegistryError, A2Functional, anticanonical_degree, get_class, load_registry
from .ledger import LedgerNotApplicable, acm_certificate, quot_dimension_report, verify_residuals
from .rr import ChernData, DivisorClass, euler_poly
from .search import enumerate_rank2_c1, solve_line_candidates

EXIT_OK, EXIT_ERROR, EXIT_EXPECT = 0, 1, 2


class ExpectationFailed(Exception):
    pass


def q(x) -> str | int:
    """Exact rational for JSON: ints stay ints, others become 'n/d'."""
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


# payload builders


def line_report_json(X) -> dict:
    r = solve_line_candidates(X)
    return {
        "class_id": r.class_id,
        "relation": r.relation_str(),
        "quadratic_roots": r.quadratic_roots,
        "solutions": [{"a": D.a, "b": D.b} for D in r.solutions],
        "verified_all_coefficients": r.verified_all_coefficients,
    }


def rank2_json(X) -> dict:
    r = enumerate_rank2_c1(X)
    slope, offset = r.linear_relation
    return {
        "relation": f"x = {slope}*y + {offset}",
        "interval": r.y_interval,
        "candidates": [{"x": c.x, "y": c.y, "Hc2": q(c.Hc2)} for c in r.candidates],
    }


def _registry(args):
    return load_registry(args.registry) if getattr(args, "registry", None) else load_registry()


def cmd_classes(args) -> dict:
    reg = _registry(args)
    rows = [
        {"id": c.id, "base": c.base, "d": c.d, "g": c.g, "H3": anticanonical_degree(c), "description": c.description}
        for c in sorted(reg.values(), key=lambda c: c.id)
    ]
    return {"command": "classes", "class_ids": [r["id"] for r in rows], "payload": {"classes": rows}}


def _parse_triple(text: str, n: int) -> list[Fraction]:
    parts = [Fraction(s) for s in text.split(",")]
    if len(parts) != n:
        raise ValueError(f"expected {n} comma-separated rationals, got {text!r}")
    return parts


def cmd_hilbert(args) -> dict:
    X = get_class(args.cls, _registry(args))
    if args.divisor is not None:
        E = ChernData.line_bundle(X, DivisorClass.parse(args.divisor))
        label = str(DivisorClass.parse(args.divisor))
    else:
        a, b = _parse_triple(args.c1 or "0,0", 2)
        if args.c2_pairing:
            vh, ve = _parse_triple(args.c2_pairing, 2)
            c2 = A2Functional(vh, ve)
        else:
            c2 = ChowClass.degree2(X, *_parse_triple(args.c2 or "0,0,0", 3))
        E = ChernData(X, args.rank, ChowClass.divisor(X, a, b), c2, Fraction(args.c3))
        label = f"rank {args.rank} bundle"
    P = euler_poly(X, E)
    payload = {
        "class_id": X.id,
        "object": label,
        "polynomial": str(P),
        "coefficients": P.to_json(),
        "chi": q(P(0)),
    }
    return {"command": "hilbert", "class_ids": [X.id], "payload": payload}


def cmd_ulrich_lines(args) -> dict:
    reg = _registry(args)
    if args.all:
        classes = sorted(reg.values(), key=lambda c: c.id)
    elif args.cls:
        classes = [get_class(args.cls, reg)]
    else:
        raise ValueError("pass --all or --class")
    t0 = time.perf_counter()
    reports = [line_report_json(X) for X in classes]
    elapsed = time.perf_counter() - t0
    env = {
        "command": "ulrich-lines",
        "class_ids": [X.id for X in classes],
        "payload": {"reports": reports, "nonempty": [r["class_id"] for r in reports if r["solutions"]]},
        "timing_s": round(elapsed, 4),
    }
    if args.expect_solutions and not any(r["solutions"] for r in reports):
        env["expectation_failed"] = True
    return env


def cmd_rank2(args) -> dict:
    X = get_class(args.cls, _registry(args))
    return {"command": "rank2", "class_ids": [X.id], "payload": {"class_id": X.id, "rank2": rank2_json(X)}}


def cmd_ledger(args) -> dict:
    X = get_class(args.cls, _registry(args))
    rep = quot_dimension_report(X, h2_I2_2=args.h2_I2_2)
    body = rep.to_json()
    assumptions = body.pop("assumptions")
    return {"command": "ledger", "class_ids": [X.id], "payload": body, "assumptions": assumptions}


def cmd_acm(args) -> dict:
    X = get_class(args.cls, _registry(args))
    cert = acm_certificate(X, DivisorClass.parse(args.divisor))
    payload = cert.to_json()
    if args.verify:
        I = _load_ideal(args.ideal)
        got = verify_residuals(cert, I)
        payload["verification"] = [{"m": m, "k": k, "i": i, "dim": v} for (m, k, i), v in sorted(got.items())]
        payload["all_vanish"] = all(v == 0 for v in got.values())
    return {"command": "acm", "class_ids": [X.id], "payload": payload}


def _load_ideal(path: str | None) -> "cas.Ideal":
    if path is None:
        return cas.paper_ideal()
    p = Path(path)
    if not p.exists() and p.name == "paper_J.txt":
        return cas.paper_ideal()
    return cas.parse_ideal(p.read_text())


def cmd_cas(args) -> dict:
    sub = args.cas_command
    if sub == "random-curve":
        I = cas.random_acm_curve(args.seed, args.p)
        res = cas.free_resolution(I)
        payload = {
            "seed": args.seed,
            "p": args.p,
            "generators": [str(g) for g in I.gens],
            "betti": res.betti(),
            "degree_genus": list(cas.curve_invariants(res)),
        }
        return {"command": "cas random-curve", "class_ids": [], "payload": payload}
    I = _load_ideal(args.ideal)
    if sub == "resolve":
        if args.power > 1:
            I = cas.ideal_power(I, args.power)
        res = cas.free_resolution(I, minimal=not args.non_minimal)
        payload = {"betti": res.betti(), "twists": res.twists(), "minimal": res.minimal}
        P = cas.hilbert_poly_from_resolution(res)
        payload["hilbert_polynomial"] = str(P)
        try:
            payload["degree_genus"] = list(cas.curve_invariants(res))
        except cas.NotACurveError:
            payload["degree_genus"] = None
        return {"command": "cas resolve", "class_ids": [], "payload": payload}
    if sub == "cohomology":
        M = cas.ideal_power(I, args.power)
        dim = cas.sheaf_cohomology_dim(M, args.i, args.twist, minimal=not args.non_minimal)
        payload = {"power": args.power, "twist": args.twist, "i": args.i, "dim": dim}
        return {"command": "cas cohomology", "class_ids": [], "payload": payload}
    if sub == "product":
        J = _load_ideal(args.ideal2) if args.ideal2 else I
        P = cas.ideal_product(I, J) if args.ideal2 else cas.ideal_power(I, args.power)
        payload = {"generators": [str(g) for g in P.gens], "count": len(P.gens)}
        return {"command": "cas product", "class_ids": [], "payload": payload}
    raise ValueError(f"unknown cas command {sub!r}")


# rendering


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
            return ", ".join(str(x) for x in v)
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


def _table(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    out += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return out


def _render(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            lines += [pad + "  " + s for s in _table(v)]
        elif isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines += _render(v, indent + 1)
        else:
            lines.append(f"{pad}{k}: {_cell(v)}")
    return lines


def render_table(envelope: dict) -> str:
    """Human table built only from the JSON-decoded envelope."""
    lines = [f"# {envelope['command']}"]
    lines += _render(envelope["payload"])
    if envelope.get("assumptions"):
        lines.append("assumptions:")
        lines += ["  " + s for s in _table(envelope["assumptions"])]
    return "\n".join(lines) + "\n"


def render_csv(envelope: dict) -> str:
    payload = envelope["payload"]
    rows = next((v for v in payload.values() if isinstance(v, list) and v and all(isinstance(x, dict) for x in v)), None)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rows is None:
        w.writerow(["key", "value"])
        for k, v in payload.items():
            w.writerow([k, _cell(v)])
    else:
        cols = list(dict.fromkeys(k for r in rows for k in r))
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def render(envelope: dict, fmt: str) -> str:
    envelope = dict(envelope, format=fmt)
    text = json.dumps(envelope, indent=2, sort_keys=False)
    if fmt == "json":
        return text + "\n"
    decoded = json.loads(text)
    return render_table(decoded) if fmt == "table" else render_csv(decoded)


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for failed expectations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ulrichfano", description=__doc__)
    ap.add_argument("--format", choices=["table", "json", "csv"], default="table")
    ap.add_argument("--registry", help="registry file overriding the built-in 21 classes")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("classes", help="list registry classes")

    h = sub.add_parser("hilbert", help="chi(E(t)) for a line bundle or Chern data")
    h.add_argument("--class", dest="cls", required=True)
    h.add_argument("--divisor", help="a,b for the divisor a*h - b*e")
    h.add_argument("--rank", type=int, default=1)
    h.add_argument("--c1", help="a,b for c1 = a*h - b*e")
    h.add_argument("--c2", help="hh,he,ee coordinates of c2")
    h.add_argument("--c2-pairing", help="c2.h,c2.e degrees")
    h.add_argument("--c3", default="0")

    u = sub.add_parser("ulrich-lines", help="Ulrich line bundle candidates")
    u.add_argument("--all", action="store_true")
    u.add_argument("--class", dest="cls")
    u.add_argument("--expect-solutions", action="store_true", help="exit 2 if no class has solutions")

    r = sub.add_parser("rank2", help="rank-2 first Chern class candidates")
    r.add_argument("--class", dest="cls", required=True)

    l = sub.add_parser("ledger", help="Quot-scheme dimension ledger")
    l.add_argument("--class", dest="cls", required=True)
    l.add_argument("--h2-I2-2", dest="h2_I2_2", type=int, help="measured h^2(I_C^2(2))")

    a = sub.add_parser("acm", help="ACM certificate for a divisor")
    a.add_argument("--class", dest="cls", required=True)
    a.add_argument("--divisor", required=True)
    a.add_argument("--verify", action="store_true", help="measure residual cohomology on an ideal")
    a.add_argument("--ideal", help="ideal file (default: packaged paper_J.txt)")

    c = sub.add_parser("cas", help="polynomial kernel")
    csub = c.add_subparsers(dest="cas_command", required=True, parser_class=_Parser)
    cr = csub.add_parser("resolve")
    cr.add_argument("--ideal")
    cr.add_argument("--power", type=int, default=1)
    cr.add_argument("--non-minimal", action="store_true")
    cc = csub.add_parser("cohomology")
    cc.add_argument("--ideal")
    cc.add_argument("--power", type=int, default=1)
    cc.add_argument("--twist", type=int, required=True)
    cc.add_argument("--i", type=int, required=True)
    cc.add_argument("--non-minimal", action="store_true")
    cg = csub.add_parser("random-curve")
    cg.add_argument("--seed", type=int, required=True)
    cg.add_argument("--p", type=int, default=cas.DEFAULT_PRIME)
    cp = csub.add_parser("product")
    cp.add_argument("--ideal")
    cp.add_argument("--ideal2")
    cp.add_argument("--power", type=int, default=2)
    return ap


COMMANDS = {
    "classes": cmd_classes,
    "hilbert": cmd_hilbert,
    "ulrich-lines": cmd_ulrich_lines,
    "rank2": cmd_rank2,
    "ledger": cmd_ledger,
    "acm": cmd_acm,
    "cas": cmd_cas,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env = COMMANDS[args.command](args)
    except (RegistryError, LedgerNotApplicable, ValueError, OSError, cas.ResourceError, NotImplementedError,
            cas.CurveGenerationError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render(env, args.format))
    return EXIT_EXPECT if env.get("expectation_failed") else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
