"""Command-line interface.

Exit codes: 0 success, 1 verification/search failure, 2 usage error
(malformed input, infeasible request).  All commands are deterministic
given the same flags and seed, and `--jobs` never changes output.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bounds import approval_lower_bound, emit_bounds_table
from .corpus import verify_corpus, verify_corpus_strings
from .endpoints import EndpointParseError, parse_endpoint_rep
from .exhaustive import EnumerationLimitError, delta_exhaustive
from .search import (
    InfeasibleTargetError,
    SearchConfig,
    construction_start,
    format_certificate,
    hill_climb,
    objective,
    parse_certificate,
    verify_certificate,
)
from .society import (
    SocietyError,
    approval_number,
    format_society,
    is_pairwise_intersecting,
    parse_society,
)
from .strings import (
    DoubleString,
    DoubleStringError,
    construct_quarter,
    construct_thirteen,
    society_from_string,
)

_USAGE_ERRORS = (
    SocietyError,
    EndpointParseError,
    DoubleStringError,
    EnumerationLimitError,
    InfeasibleTargetError,
    ValueError,
)


def _string_arg(value: str) -> DoubleString:
    """Accept a double string literally or as a path to a file holding one."""
    path = Path(value)
    if path.is_file():
        value = path.read_text().strip()
    return DoubleString.parse(value)


def cmd_diameter(args: argparse.Namespace) -> int:
    s = _string_arg(args.string)
    report = s.diameter()
    if report.witness_pair is None:
        print(f"diameter={report.diameter}")
    else:
        a, b = report.witness_pair
        print(f"diameter={report.diameter} witness={a},{b}")
    return 0


def cmd_delta(args: argparse.Namespace) -> int:
    result = delta_exhaustive(args.n, limit=args.limit, jobs=args.jobs)
    print(f"delta({args.n}) = {result.delta}")
    print(f"witness {result.witness}")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    build = construct_quarter if args.method == "quarter" else construct_thirteen
    s = build(args.n)
    if args.emit == "string":
        print(s)
        return 0
    width = args.width if args.width is not None else s.diameter().diameter
    society = society_from_string(s, width)
    sys.stdout.write(format_society(society))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text()
    if not text.strip():
        raise SocietyError(f"{args.file}: empty input")
    claim = args.claim
    if args.format == "society":
        society = parse_society(text)
        approval = approval_number(society).approval_number
        pairwise = is_pairwise_intersecting(society)
        n = society.n
        passed = bool(pairwise) and (claim is None or approval == claim)
        missing = pairwise.violations
    else:
        stripped = text.lstrip()
        if stripped.startswith("#"):
            cert = parse_certificate(text)
            rep = cert.rep
            if claim is None:
                claim = cert.claimed_approval
        else:
            rep = parse_endpoint_rep(text)
        report = verify_certificate(rep, claim if claim is not None else -1)
        n, approval = report.n, report.approval
        passed = report.pairwise_intersecting and (
            claim is None or approval == claim
        )
        missing = sorted(report.missing_pairs)
    claim_part = f" claim={claim}" if claim is not None else ""
    verdict = "PASS" if passed else "FAIL"
    print(
        f"n={n} a={approval} ratio={approval}/{n} "
        f"pairwise={'yes' if not missing else 'no'}{claim_part} {verdict}"
    )
    for a, b in missing:
        print(f"missing: {a}-{b}")
    return 0 if passed else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.n is not None:
        print(approval_lower_bound(args.n))
        return 0
    lo, _, hi = args.a_range.partition("..")
    try:
        a_lo, a_hi = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"bad --a-range {args.a_range!r}; expected LO..HI") from None
    sys.stdout.write(emit_bounds_table(a_lo, a_hi, "csv" if args.csv else "text"))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    target = args.target if args.target is not None else approval_lower_bound(args.n)
    config = SearchConfig(
        target_approval=target,
        max_iterations=args.iters,
        restarts=args.restarts,
        sideways_limit=args.sideways,
        rng_seed=args.seed,
    )
    initial = construction_start(args.n, target)
    outcome = hill_climb(initial, config, jobs=args.jobs)
    if outcome.success:
        sys.stdout.write(format_certificate(outcome.best.rep, args.seed))
        return 0
    excess, missing = objective(outcome.best, target)
    print(f"# best-effort: target {target} not reached")
    print(
        f"# n={args.n} best_approval={outcome.best.approval} "
        f"approval_excess={excess} missing_pairs={missing} seed={args.seed}"
    )
    print(str(outcome.best.rep))
    return 1


def cmd_corpus(args: argparse.Namespace) -> int:
    ok = 0
    results = verify_corpus()
    for r in results:
        rep = r.report
        verdict = "PASS" if r.passed else "FAIL"
        ok += r.passed
        print(
            f"{r.entry.id}: n={rep.n} a={rep.approval} "
            f"ratio={rep.ratio.numerator}/{rep.ratio.denominator} {verdict}"
        )
    string_rows = verify_corpus_strings()
    s_ok = 0
    for entry, got, good in string_rows:
        s_ok += good
        print(f"{entry.id}: diameter={got} {'PASS' if good else 'FAIL'}")
    all_good = ok == len(results) and s_ok == len(string_rows)
    print(
        f"corpus: {ok}/{len(results)} societies, "
        f"{s_ok}/{len(string_rows)} strings {'PASS' if all_good else 'FAIL'}"
    )
    return 0 if all_good else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disoc",
        description="Pairwise-intersecting double-interval societies: "
        "construct, verify, bound, and search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diameter", help="diameter of a double-n string")
    p.add_argument("string", help="string literal (ABAB or 1,2,1,2) or file path")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("delta", help="exact minimum diameter over all double-n strings")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=8, help="refuse n beyond this")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("construct", help="build a low-diameter double-n string")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("quarter", "thirteen"), default="quarter")
    p.add_argument("--emit", choices=("string", "society"), default="string")
    p.add_argument("--width", type=int, default=None,
                   help="interval width for --emit society (default: diameter)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a society or certificate file")
    p.add_argument("file")
    p.add_argument("--format", choices=("endpoints", "society"), default="endpoints")
    p.add_argument("--claim", type=int, default=None, help="claimed approval number")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="approval bounds and the size table")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a-range", help="approval range LO..HI for the table")
    g.add_argument("--n", type=int, help="least possible approval for one size")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="hill-climb for a low-approval society")
    p.add_argument("n", type=int)
    p.add_argument("--target", type=int, default=None,
                   help="approval to aim for (default: the proven lower bound)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=20_000)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--sideways", type=int, default=2_000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("corpus", help="re-verify every bundled example end-to-end")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
