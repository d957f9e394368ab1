"""Command-line front end.

Exit codes: 0 ok, 1 mathematical validation failure, 2 input error,
3 unsupported pair (no complement).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import acceptance, catalog
from .algebra_file import AlgebraFileError, dumps, parse_algebra_file
from .checks import algebra_bound_report, check_pair_defect_one, pair_bound_report
from .core import (
    AntisymmetryConflict,
    GradedSubspace,
    NotAnIdeal,
    center,
    commutator_subspace,
    is_nilpotent,
    lower_central_series,
    nilpotency_class,
    pair_center,
    validate,
)
from .homology import multiplier_dim
from .pairs import PairPresentation, UnsupportedPair, pair_multiplier_dim

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class Output:
    def __init__(self, as_json: bool, quiet: bool):
        self.as_json = as_json
        self.quiet = quiet

    def emit(self, payload: dict, lines: list[str]) -> None:
        if self.as_json:
            print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
        elif not self.quiet:
            print("\n".join(lines))

    def error(self, msg: str) -> None:
        if self.as_json:
            print(json.dumps({"error": msg}, sort_keys=True, ensure_ascii=False))
        print(f"error: {msg}", file=sys.stderr)


def _dim(sd) -> str:
    return f"({sd[0]}|{sd[1]})"


def _load(path, out: Output, need_valid: bool = True):
    A, pair, name = parse_algebra_file(path)
    if need_valid:
        rep = validate(A)
        if not rep.ok:
            out.emit({"valid": False, "violations": [str(v) for v in rep.violations]},
                     ["not a Lie superalgebra:"] + [f"  {v}" for v in rep.violations])
            return None
    return A, pair, name or str(path)


def cmd_validate(args, out: Output) -> int:
    A, _, name = parse_algebra_file(args.file)
    rep = validate(A)
    lines = [f"{name}: dim {_dim(A.sdim)}"]
    lines += ["valid Lie superalgebra"] if rep.ok else [f"  {v}" for v in rep.violations]
    out.emit({"name": name, "dim": list(A.sdim), "valid": rep.ok,
              "violations": [{"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                             for v in rep.violations]}, lines)
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_analyze(args, out: Output) -> int:
    loaded = _load(args.file, out)
    if loaded is None:
        return EXIT_INVALID
    A, pair, name = loaded
    Z = center(A)
    L2 = commutator_subspace(A)
    series = lower_central_series(A)
    cls = nilpotency_class(A)
    payload = {
        "name": name, "dim": list(A.sdim),
        "center": {"dim": list(Z.sdim), "basis": [A.format_vector(v) for v in Z.vectors]},
        "L2": {"dim": list(L2.sdim), "basis": [A.format_vector(v) for v in L2.vectors]},
        "lower_central_series": [list(t.sdim) for t in series],
        "nilpotency_class": cls if cls is not None else "not nilpotent",
    }
    lines = [f"{name}: dim {_dim(A.sdim)}",
             f"center Z(L)      {_dim(Z.sdim)}  {Z.describe()}",
             f"derived L^2      {_dim(L2.sdim)}  {L2.describe()}",
             "lower central    " + " > ".join(_dim(t.sdim) for t in series),
             f"nilpotency class {cls if cls is not None else 'not nilpotent'}"]
    if pair is not None:
        ZN = pair_center(A, pair.N)
        NL = commutator_subspace(A, pair.N, None)
        payload["pair"] = {"N": list(pair.N.sdim), "Z_NL": list(ZN.sdim), "NL": list(NL.sdim)}
        lines += [f"ideal N          {_dim(pair.N.sdim)}  {pair.N.describe()}",
                  f"Z(N,L)           {_dim(ZN.sdim)}  {ZN.describe()}",
                  f"[N,L]            {_dim(NL.sdim)}  {NL.describe()}"]
    out.emit(payload, lines)
    return EXIT_OK


def cmd_multiplier(args, out: Output) -> int:
    loaded = _load(args.file, out)
    if loaded is None:
        return EXIT_INVALID
    A, _, name = loaded
    dim_M, rep = multiplier_dim(A)
    br = algebra_bound_report(A, name)
    payload = {
        "name": name, "dim": list(A.sdim),
        "dim_M": dim_M, "rank_d2": rep.rank_d2, "rank_d3": rep.rank_d3,
        "bound": rep.nayak_bound, "bounds": br.bounds, "t": rep.t,
        "checks": dict(br.flags, equality_iff_abelian=(rep.t == 0) == A.is_abelian()),
    }
    lines = [f"{name}: dim {_dim(A.sdim)}",
             f"dim M(L)   {dim_M}",
             f"rank d2    {rep.rank_d2}",
             f"rank d3    {rep.rank_d3}",
             f"bound      {rep.nayak_bound}",
             f"defect t   {rep.t}"]
    out.emit(payload, lines)
    return EXIT_OK


def cmd_pair(args, out: Output) -> int:
    loaded = _load(args.file, out)
    if loaded is None:
        return EXIT_INVALID
    A, pair, name = loaded
    if pair is None:
        raise AlgebraFileError("the file has no 'ideal' field, so there is no pair")
    if args.complement is not None:
        labels = [x for x in args.complement.split(",") if x]
        unknown = [x for x in labels if x not in A.names]
        if unknown:
            raise AlgebraFileError(f"unknown complement labels {unknown}")
        pair = PairPresentation(A, pair.N, GradedSubspace.of_labels(A, labels))
    try:
        value, rep = pair_multiplier_dim(pair)
    except UnsupportedPair as e:
        out.error(f"unsupported pair: {e}")
        return EXIT_UNSUPPORTED
    br = pair_bound_report(pair, name)
    checks = {"complement_is_ideal": rep.complement_is_ideal,
              "bounds_hold": all(s >= 0 for s in br.slack.values())}
    if is_nilpotent(A):
        dich = check_pair_defect_one(pair)
        checks["dichotomy"] = {"passed": dich.passed, "applicable": dich.applicable, "detail": dich.detail}
    payload = dict(rep.as_dict(), name=name, dim=list(A.sdim), checks=checks)
    lines = [f"{name}: dim {_dim(A.sdim)}, N {_dim(rep.dim_N)}, L/N {_dim(rep.dim_L_over_N)}",
             f"complement K     {rep.complement.describe()}",
             f"dim M(N,L)       {value}  (= {rep.dim_M_L} - {rep.dim_M_quotient})",
             f"dim [N,L]        {rep.dim_NL}  (bound {rep.commutator_bound})",
             f"dim Z(N,L)       {_dim(rep.dim_Z_NL)}",
             f"bound            {rep.multiplier_bound}",
             f"bound - [N,L]    {rep.commutator_corrected_bound}",
             f"defect t(N,L)    {rep.t}"]
    if "dichotomy" in checks:
        lines.append(f"dichotomy check  {'pass' if checks['dichotomy']['passed'] else 'FAIL'}"
                     f" ({checks['dichotomy']['detail']})")
    out.emit(payload, lines)
    return EXIT_OK if checks["bounds_hold"] else EXIT_INVALID


def cmd_catalog(args, out: Output) -> int:
    try:
        A = catalog.build_family(args.family, args.m, args.n, args.kind)
    except ValueError as e:
        raise AlgebraFileError(str(e)) from None
    name = f"{args.family}(m={args.m},n={args.n})"
    text = dumps(A, name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not out.quiet and not out.as_json:
            print(f"wrote {args.output}")
        elif out.as_json:
            print(json.dumps({"written": args.output}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    start = time.perf_counter()
    results = []
    for crit in acceptance.CRITERIA:
        r = crit(args.max_dim, args.seed)
        results.append(r)
        if not out.as_json and not out.quiet:
            print(r.line(), flush=True)
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results)
    if out.as_json:
        print(json.dumps({"passed": ok, "seconds": round(elapsed, 2),
                          "criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                                        "checked": r.checked, "detail": r.detail} for r in results]},
                         sort_keys=True))
    elif not out.quiet:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed in {elapsed:.1f}s")
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress human-readable output")
    p = argparse.ArgumentParser(prog="superschur", parents=[common],
                                description="Schur multipliers of Lie superalgebras and pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the superalgebra axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common], help="center, L^2, lower central series")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("multiplier", parents=[common], help="dim M(L), ranks, bound, defect")
    s.add_argument("file")
    s.set_defaults(func=cmd_multiplier)

    s = sub.add_parser("pair", parents=[common], help="dim M(N,L) and the pair bounds")
    s.add_argument("file")
    s.add_argument("--complement", help="comma-separated labels spanning a complement of N")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("catalog", parents=[common], help="emit a family instance as JSON")
    s.add_argument("family", choices=sorted(catalog.FAMILIES))
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--kind", default="heisenberg", choices=["heisenberg", "solvable"],
                   help="for nonabelian_11")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("selftest", parents=[common], help="run the regression criteria")
    s.add_argument("--max-dim", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    out = Output(getattr(args, "json", False), getattr(args, "quiet", False))
    try:
        return args.func(args, out)
    except (AlgebraFileError, AntisymmetryConflict) as e:
        out.error(str(e))
        return EXIT_INPUT
    except NotAnIdeal as e:
        out.error(str(e))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
