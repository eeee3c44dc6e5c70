"""Command-line interface: ``projforce <command> ...``.

Exit codes: 0 success, 2 malformed input, 3 search budget exhausted.  With
``--exit-status`` the check command returns 1 for NotForcing instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import forcing, oracle
from .codes import GeneratorMatrix, LinearMapSpec, is_projection, multiplicities, weight_changes
from .errors import BudgetExhausted, ProjForceError
from .forcing import SearchBudget, Status
from .gf import field_new
from .matfile import MatrixFormatError, format_matrix, matrix_to_json, read_matrix
from .projgeom import build_incidence
from .survey import SurveySpec, survey

EXIT_OK, EXIT_NOT_FORCING, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, integers only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _multiset(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"malformed multiset {text!r}") from exc


def _budget(args) -> SearchBudget:
    if getattr(args, "budget", None) is not None:
        return SearchBudget(args.budget)
    return forcing.budget_from_env()


def _print_witness(w: forcing.Witness, q: int) -> None:
    print(format_matrix(q, w.map.domain.rows, "witness domain generator matrix B"), end="")
    print(format_matrix(q, w.map.image, "witness image matrix C"), end="")
    print(f"difference vector D = {list(w.d.d)}")


def _verdict_text(v: forcing.ForcingVerdict, q: int) -> None:
    print(f"split difference: {v.delta}  (threshold {v.delta_threshold})")
    print(f"verdict: {v.status.value}  reason: {v.reason.value}")
    print(f"stats: {v.stats.to_dict()}")
    if v.witness is not None:
        _print_witness(v.witness, q)


def cmd_check(args) -> int:
    f = field_new(args.q)
    s = _multiset(args.multiset)
    v = forcing.decide(f, args.k, s, _budget(args), threads=args.threads)
    if v.witness is not None and not v.witness.verify():  # pragma: no cover
        raise AssertionError("unverified witness")
    if args.format == "json":
        print(dumps(v.to_dict()))
    else:
        _verdict_text(v, args.q)
    if args.exit_status and v.status is Status.NOT_FORCING:
        return EXIT_NOT_FORCING
    return EXIT_OK


def cmd_matrix(args) -> int:
    f = field_new(args.q)
    system = build_incidence(f, args.k, args.cap)
    inv = system.inverse_numerators()
    if args.format == "json":
        print(dumps({
            "denominator": system.denominator,
            "inverse_numerators": inv.tolist(),
            "m": system.m.astype(int).tolist(),
            "points": [list(p) for p in system.points],
            "q": args.q,
            "k": args.k,
        }))
        return EXIT_OK
    print(f"# PG({args.k - 1},{args.q}): {system.n_points} points")
    for i, p in enumerate(system.points):
        print(f"{i}: {' '.join(map(str, p))}")
    print("# M")
    for row in system.m:
        print(" ".join(str(int(x)) for x in row))
    print(f"# inverse numerators (denominator {system.denominator})")
    for row in inv:
        print(" ".join(str(int(x)) for x in row))
    return EXIT_OK


def cmd_verify_map(args) -> int:
    f, dom = read_matrix(args.domain_file)
    g, img = read_matrix(args.image_file)
    if f != g or len(dom) != len(img):
        raise InputError("domain and image must share q and k")
    phi = LinearMapSpec(GeneratorMatrix(f, dom), img)
    changes = weight_changes(phi)
    proj = is_projection(phi)
    r = multiplicities(f, dom)
    qv = multiplicities(f, img)
    if args.format == "json":
        print(dumps({
            "changes": list(changes),
            "projection": proj,
            "q_multiplicities": list(qv.counts),
            "q_zero_cols": qv.zero_cols,
            "r_multiplicities": list(r.counts),
            "r_zero_cols": r.zero_cols,
        }))
    else:
        print(f"weight changes: {{{','.join(map(str, changes))}}}")
        print(f"projection: {str(proj).lower()}")
        print(f"R = {list(r.counts)}  (zero columns {r.zero_cols})")
        print(f"Q = {list(qv.counts)}  (zero columns {qv.zero_cols})")
    return EXIT_OK


def cmd_survey(args) -> int:
    spec = SurveySpec(args.q, args.k, args.min_entry, args.max_entry, not args.include_vacuous)
    try:
        report = survey(spec, _budget(args), checkpoint=args.checkpoint, resume=args.resume,
                        workers=args.threads)
    except BudgetExhausted as exc:
        partial = getattr(exc, "report", None)
        if partial is not None and args.json_out:
            with open(args.json_out, "w") as fh:
                fh.write(partial.to_json())
        raise
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(report.to_json())
    if args.csv_out:
        with open(args.csv_out, "w") as fh:
            fh.write(report.to_csv())
    if args.format == "json":
        print(dumps(report.to_dict()))
        return EXIT_OK
    print(f"enumerated: {report.total_enumerated}")
    for name, n in report.counts.items():
        print(f"  {name}: {n}")
    print(f"forcing: {len(report.forcing)}")
    print(f"forcing beyond split difference: {len(report.forcing_beyond_split)}")
    for s in report.forcing_beyond_split:
        print("  {" + ",".join(map(str, s)) + "}")
    return EXIT_OK


def cmd_witness(args) -> int:
    f = field_new(args.q)
    s = _multiset(args.multiset)
    v = forcing.decide(f, args.k, s, _budget(args), use_split_difference=False, threads=args.threads)
    if v.witness is None:
        if args.format == "json":
            print(dumps({"status": v.status.value, "witness": None}))
        else:
            print(f"no witness: {v.status.value}")
        return EXIT_OK
    assert v.witness.verify()
    if args.format == "json":
        print(dumps({"status": v.status.value, "verified": True, "witness": v.witness.to_dict()}))
    else:
        _print_witness(v.witness, args.q)
        print("verified: true")
    return EXIT_OK


def cmd_realizable(args) -> int:
    f = field_new(args.q)
    ok, phi = forcing.realizable(f, args.k, _multiset(args.multiset), _budget(args))
    if args.format == "json":
        out = {"realizable": ok}
        if phi is not None:
            out["domain"] = matrix_to_json(args.q, phi.domain.rows)
            out["image"] = matrix_to_json(args.q, phi.image)
        print(dumps(out))
    else:
        print(f"realizable: {str(ok).lower()}")
        if phi is not None:
            print(format_matrix(args.q, phi.domain.rows, "domain generator matrix B"), end="")
            print(format_matrix(args.q, phi.image, "image matrix C"), end="")
    return EXIT_OK


def cmd_split_diff(args) -> int:
    f = field_new(args.q)
    s = _multiset(args.multiset)
    delta = forcing.split_difference(f, args.k, s)
    threshold = forcing.split_threshold(f, args.k)
    if args.format == "json":
        print(dumps({"delta": delta, "delta_threshold": threshold, "forcing": delta > threshold}))
    else:
        print(delta)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.oracle == "ab":
        realizable, forcing_ = oracle.ab_characterization(args.k, args.a, args.b)
    elif args.oracle == "abc":
        realizable, forcing_ = oracle.abc_characterization(args.k, args.a, args.b, args.c)
    else:
        f = field_new(args.q)
        s = _multiset(args.multiset)
        if args.oracle == "bruteforce":
            v = oracle.decide_bruteforce(f, args.k, s)
        else:
            v = oracle.exhaustive_map_check(f, args.k, s, args.max_cols)
        if args.format == "json":
            print(dumps(v.to_dict()))
        else:
            _verdict_text(v, args.q)
        return EXIT_OK
    if args.format == "json":
        print(dumps({"forcing": forcing_, "realizable": realizable}))
    else:
        print(f"realizable: {str(realizable).lower()}")
        print(f"forcing: {'n/a' if forcing_ is None else str(forcing_).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projforce", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, multiset=True, qk=True):
        if qk:
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        if multiset:
            p.add_argument("--multiset", required=True, help="comma-separated integers")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=None, help="search node cap (env PROJFORCE_BUDGET)")
        p.add_argument("--threads", type=int, default=1)
        return p

    p = common(sub.add_parser("check", help="decide projection-forcing"))
    p.add_argument("--exit-status", action="store_true")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("matrix", help="dump points, M and M^-1 numerators"), multiset=False)
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(func=cmd_matrix)

    p = common(sub.add_parser("verify-map", help="weight changes of a map given by two matrix files"),
               multiset=False, qk=False)
    p.add_argument("domain_file")
    p.add_argument("image_file")
    p.set_defaults(func=cmd_verify_map)

    p = common(sub.add_parser("survey", help="classify all multisets in a range"), multiset=False)
    p.add_argument("--min-entry", type=int, default=1)
    p.add_argument("--max-entry", type=int, default=7)
    p.add_argument("--include-vacuous", action="store_true")
    p.add_argument("--json-out")
    p.add_argument("--csv-out")
    p.add_argument("--checkpoint")
    p.add_argument("--resume", action="store_true")
    p.set_defaults(func=cmd_survey)

    for name, func in (("witness", cmd_witness), ("realizable", cmd_realizable), ("split-diff", cmd_split_diff)):
        common(sub.add_parser(name)).set_defaults(func=func)

    p = sub.add_parser("oracle", help="reference checks")
    osub = p.add_subparsers(dest="oracle", required=True)
    for name in ("bruteforce", "maps"):
        o = common(osub.add_parser(name))
        if name == "maps":
            o.add_argument("--max-cols", type=int, default=8)
    for name, letters in (("ab", "ab"), ("abc", "abc")):
        o = common(osub.add_parser(name), multiset=False, qk=False)
        o.add_argument("--k", type=int, required=True)
        for ch in letters:
            o.add_argument(f"--{ch}", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"error: {exc}; stats {exc.stats.to_dict() if exc.stats else {}}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, MatrixFormatError, ProjForceError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
