"""Command-line interface: cohomology queries, Ulrich checks, towers and claim reports."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .chow import (
    XI,
    DivisorClass,
    InvalidParams,
    ScrollParams,
    canonical_class,
    tangent_chern,
    triple,
)
from .claims import RegistryError, load_registry, unexpected_failures, verify_claims
from .constituents import TowerError, TowerSpec, line_class
from .riemann_roch import chi_end, chi_line
from .scroll import coh_scroll_line, coh_tower_twist
from .tower import build_tower, ext1_dim, moduli_dim
from .ulrich import (
    DEFAULT_ALPHA_BOUND,
    DEFAULT_BETA_BOUND,
    DEFAULT_X_RANGE,
    Status,
    is_ulrich_line,
    ulrich_dual,
    ulrich_scan,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def fmt_tuple(values) -> str:
    if values is None:
        return "-"
    values = tuple(values)
    if len(values) == 1:
        return fmt_value(values[0])
    return "(" + ", ".join(fmt_value(v) for v in values) + ")"


def json_value(v):
    """Integers stay integers; other rationals become 'p/q' strings."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def parse_range(text: str) -> range:
    try:
        a, b = (int(s) for s in text.split(":"))
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected a:b") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def params_from(args) -> ScrollParams:
    if args.t is not None:
        if any(v is not None for v in (args.e, args.b, args.k)):
            raise UsageError("give either --t or --e/--b/--k, not both")
        return ScrollParams.sporadic(args.t)
    if any(v is None for v in (args.b, args.k)):
        raise UsageError("need --t, or --b and --k (with optional --e, default 0)")
    return ScrollParams(args.e or 0, args.b, args.k)


def class_from(args) -> DivisorClass:
    return DivisorClass.of(args.xi, args.alpha, args.beta)


def add_param_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("scroll parameters")
    g.add_argument("--t", type=int, help="shorthand for e=0, b=2t, k=3t")
    g.add_argument("--e", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--k", type=int)


def add_class_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("divisor class x xi + phi^*(alpha C + beta f)")
    g.add_argument("--xi", type=int, required=required, default=0)
    g.add_argument("--alpha", type=int, required=required, default=0)
    g.add_argument("--beta", type=int, required=required, default=0)


def tower_from(args, params) -> TowerSpec:
    chosen = [v is not None for v in (args.tower, args.sporadic, args.mixed)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --tower, --sporadic, --mixed")
    if args.tower is not None:
        return TowerSpec.parse(params, args.tower)
    if args.sporadic is not None:
        return TowerSpec.sporadic(params, args.sporadic)
    return TowerSpec.mixed(params, args.mixed)


def add_tower_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tower", help="comma-separated constituents, e.g. M1,M2,L2")
    p.add_argument("--sporadic", type=int, metavar="R", help="[M1, M2, M1, ...] of rank R")
    p.add_argument("--mixed", type=int, metavar="R", help="[M1, M2, L2, L1, ...] of rank R")


# Subcommands ----------------------------------------------------------------

def cmd_coh(args, out) -> int:
    params = params_from(args)
    D = class_from(args)
    coh = coh_scroll_line(params, D)
    print(f"# {params}  D = {D}", file=out)
    for i, b in enumerate(coh):
        print(f"h{i}\t{b}", file=out)
    print(f"chi\t{coh.chi}", file=out)
    return EXIT_OK


def cmd_chow(args, out) -> int:
    params = params_from(args)
    c1, c2, c3 = tangent_chern(params)
    rows = [
        ("params", str(params)),
        ("xi^3", triple(XI, XI, XI, params)),
        ("degree", params.degree),
        ("sectional_genus", params.sectional_genus),
        ("embedding_dim", params.embedding_dim),
        ("K_X", canonical_class(params)),
        ("c1(T_X)", c1),
        ("c2(T_X)", c2),
        ("c3(T_X)", c3),
    ]
    if args.xi is not None:
        D = DivisorClass.of(args.xi, args.alpha or 0, args.beta or 0)
        rows += [
            ("D", D),
            ("D^3", triple(D, D, D, params)),
            ("D^2.xi", triple(D, D, XI, params)),
            ("D.xi^2", triple(D, XI, XI, params)),
        ]
    for k, v in rows:
        print(f"{k}\t{v}", file=out)
    return EXIT_OK


def cmd_chi(args, out) -> int:
    params = params_from(args)
    if any(v is not None for v in (args.tower, args.sporadic, args.mixed)):
        spec = tower_from(args, params)
        print(f"chi_end\t{chi_end(params, spec)}", file=out)
        return EXIT_OK
    if args.xi is None:
        raise UsageError("chi needs a class (--xi/--alpha/--beta) or a tower")
    D = DivisorClass.of(args.xi, args.alpha or 0, args.beta or 0)
    print(f"chi\t{chi_line(params, D)}", file=out)
    return EXIT_OK


def cmd_ulrich_check(args, out) -> int:
    params = params_from(args)
    D = class_from(args)
    verdict = is_ulrich_line(params, D)
    print(f"{D}\t{verdict.status.value}", file=out)
    if args.verbose:
        print(f"# Ulrich dual: {ulrich_dual(params, D)}", file=out)
        for j, coh in enumerate(verdict.certificate, start=1):
            print(f"H^*(D - {j}xi)\t{coh}", file=out)
    return EXIT_OK


def label_of(params, D) -> str:
    for lbl in ("L1", "L2", "M1", "M2"):
        try:
            if line_class(lbl, params) == D:
                return lbl
        except TowerError:
            pass
    return "-"


def cmd_ulrich_scan(args, out) -> int:
    params = params_from(args)
    x_range = tuple(parse_range(args.x_range)[i] for i in (0, -1))
    results = ulrich_scan(params, x_range, args.alpha_bound, args.beta_bound,
                          workers=args.workers)
    shown = [(D, v) for D, v in results
             if args.all or v.status in (Status.ULRICH, Status.UNDECIDED)]
    for D, v in shown:
        x, a, b = D.coords()
        print(f"{x}\t{a}\t{b}\t{v.status.value}\t{label_of(params, D)}", file=out)
    n_ulrich = sum(v.status == Status.ULRICH for _, v in results)
    n_undecided = sum(v.status == Status.UNDECIDED for _, v in results)
    print(f"# {params}: {len(results)} classes, {n_ulrich} ulrich, {n_undecided} undecided",
          file=sys.stderr)
    return EXIT_OK


def cmd_tower_build(args, out) -> int:
    params = params_from(args)
    spec = tower_from(args, params)
    T = build_tower(spec)
    rows = [
        ("tower", spec),
        ("rank", T.rank),
        ("c1", T.c1),
        ("c2", T.c2),
        ("c3", T.c3),
        ("slope", fmt_value(T.slope)),
        ("chi_end", chi_end(params, spec)),
        ("moduli_dim", moduli_dim(spec)),
    ]
    for k, v in rows:
        print(f"{k}\t{v}", file=out)
    return EXIT_OK


def cmd_tower_verify(args, out) -> int:
    """Step-by-step Ext^1 bounds and the Ulrich vanishing of the tower."""
    params = params_from(args)
    spec = tower_from(args, params)
    ok = True
    for r in range(2, spec.rank + 1):
        base = spec.prefix(r - 1)
        label = spec.constituents[r - 1]
        b = ext1_dim(label, base, nonsplit=args.nonsplit)
        note = "" if b.hi > 0 else "\tsplit only"
        ok &= b.hi > 0
        print(f"ext1({label}, {base})\t{b}{note}", file=out)
    for j in (1, 2, 3):
        coh = coh_tower_twist(params, spec, -j * XI, nonsplit=args.nonsplit)
        vanishes = coh.is_zero
        ok &= vanishes
        print(f"H^*(G - {j}xi)\t{coh}", file=out)
    print(f"chi_end\t{chi_end(params, spec)}", file=out)
    print(f"verdict\t{'OK' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def build_report(results, t_range, r_range, claim_ids) -> dict:
    summary = {"pass": 0, "fail": 0, "undecided": 0}
    rows = []
    for res in results:
        summary[res.status.lower()] += 1
        rows.append({
            "claim_id": res.claim_id,
            "t": res.t,
            "r": res.r,
            "expected": [json_value(v) for v in res.expected],
            "computed": None if res.computed is None else [json_value(v) for v in res.computed],
            "status": res.status,
            "known_discrepancy": res.known_discrepancy,
        })
    return {
        "engine_version": __version__,
        "grid": {
            "t_range": [t_range[0], t_range[-1]],
            "r_range": [r_range[0], r_range[-1]],
            "claims": sorted(claim_ids),
        },
        "results": rows,
        "summary": summary,
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_tsv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(["claim_id", "t", "r", "expected", "computed", "status"])
    for res in results:
        expected = "> 0" if res.claim_id == "INEQPAL" else fmt_tuple(res.expected)
        w.writerow([res.claim_id, res.t, "-" if res.r is None else res.r,
                    expected, fmt_tuple(res.computed), res.status])
    return buf.getvalue()


def cmd_report(args, out) -> int:
    t_range = parse_range(args.t_range)
    r_range = parse_range(args.r_range)
    if t_range[0] < 1 or r_range[0] < 1:
        raise UsageError("t and r must be >= 1")
    registry = load_registry(args.registry)
    claim_ids = [c.strip() for c in args.claims.split(",")] if args.claims else None
    try:
        results = verify_claims(t_range, r_range, registry, claim_ids, workers=args.workers)
    except RegistryError as exc:
        raise UsageError(str(exc)) from None
    ids = claim_ids if claim_ids is not None else [rec.id for rec in registry]
    if args.format == "json":
        text = render_json(build_report(results, t_range, r_range, ids))
    else:
        text = render_tsv(results)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    bad = unexpected_failures(results, strict=args.strict)
    counts = {s: sum(r.status == s for r in results) for s in ("PASS", "FAIL", "UNDECIDED")}
    print(f"# {counts['PASS']} pass, {counts['FAIL']} fail "
          f"({len(bad)} unexpected), {counts['UNDECIDED']} undecided", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


# Parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scroll-ulrich",
        description="Exact cohomology and Ulrich checks on 3-fold scrolls over F_e.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coh", help="cohomology of a line bundle on X")
    add_param_flags(p)
    add_class_flags(p)
    p.set_defaults(func=cmd_coh)

    p = sub.add_parser("chow", help="intersection numbers and tangent Chern classes")
    add_param_flags(p)
    p.add_argument("--xi", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.set_defaults(func=cmd_chow)

    p = sub.add_parser("chi", help="Euler characteristic of a line bundle or End of a tower")
    add_param_flags(p)
    p.add_argument("--xi", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    add_tower_flags(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("ulrich", help="Ulrich checks")
    usub = p.add_subparsers(dest="ulrich_command", required=True)
    q = usub.add_parser("check", help="check one line bundle")
    add_param_flags(q)
    add_class_flags(q)
    q.add_argument("--verbose", "-v", action="store_true", help="print the certificate")
    q.set_defaults(func=cmd_ulrich_check)
    q = usub.add_parser("scan", help="classify every class in a box")
    add_param_flags(q)
    q.add_argument("--x-range", default=f"{DEFAULT_X_RANGE[0]}:{DEFAULT_X_RANGE[1]}")
    q.add_argument("--alpha-bound", type=int, default=DEFAULT_ALPHA_BOUND)
    q.add_argument("--beta-bound", type=int, default=DEFAULT_BETA_BOUND)
    q.add_argument("--all", action="store_true", help="also list NOT_ULRICH rows")
    q.add_argument("--workers", type=int)
    q.set_defaults(func=cmd_ulrich_scan)

    p = sub.add_parser("tower", help="iterated extensions of Ulrich line bundles")
    tsub = p.add_subparsers(dest="tower_command", required=True)
    q = tsub.add_parser("build", help="Chern data, slope and moduli dimension")
    add_param_flags(q)
    add_tower_flags(q)
    q.set_defaults(func=cmd_tower_build)
    q = tsub.add_parser("verify", help="Ext^1 at each step and Ulrich vanishing")
    add_param_flags(q)
    add_tower_flags(q)
    q.add_argument("--nonsplit", action="store_true",
                   help="assume every step is a non-split extension")
    q.set_defaults(func=cmd_tower_verify)

    p = sub.add_parser("report", help="evaluate the claim registry over a grid")
    p.add_argument("--t-range", default="1:10")
    p.add_argument("--r-range", default="2:12")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--out")
    p.add_argument("--claims", help="comma-separated claim ids")
    p.add_argument("--registry", help="alternative claim manifest (JSON)")
    p.add_argument("--strict", action="store_true",
                   help="count known discrepancies as failures")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (InvalidParams, UsageError, TowerError, RegistryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
