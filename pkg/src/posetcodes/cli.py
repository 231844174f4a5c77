"""Command-line front end.

Verbs: analyze, weightdist, construct, points, verify-net,
verify-distribution, tiling.  Output is a ``# key: value`` preamble plus
plain space-separated tables (``--format tsv`` switches the tables to
tabs).  Exit codes: 0 success/pass, 1 verified-fail, 2 usage or resource
error.  Reports are buffered and printed whole, so an exit-2 run produces
no partial report.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .code import classify, generalized_weights, read_code_file, write_code_text
from .construct import construct_n1, construct_n2, construct_n3
from .cube import (
    code_to_points,
    verify_net,
    verify_nmds_distribution,
    verify_tiling,
    write_points_csv,
)
from .errors import DEFAULT_MAX_ENUM, PosetCodesError
from .ordered import detect_chain_product
from .weights import seed_by_shape, weight_dist_bruteforce, weight_dist_nmds_ordered, weight_dist_nmds_poset

ENV_MAX_ENUM = "POSET_CODES_MAX_ENUM"


class Report:
    """Accumulates preamble comments and table rows; renders byte-stably."""

    def __init__(self, fmt: str):
        self.sep = "\t" if fmt == "tsv" else " "
        self.lines: list[str] = []

    def comment(self, key: str, value) -> None:
        self.lines.append(f"# {key}: {value}")

    def row(self, *cells) -> None:
        self.lines.append(self.sep.join(str(c) for c in cells))

    def render(self) -> str:
        return "\n".join(self.lines)


def _max_enum(args) -> int:
    if args.max_enum is not None:
        return args.max_enum
    env = os.environ.get(ENV_MAX_ENUM)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_MAX_ENUM} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ENUM


def _poset_summary(code) -> str:
    detected = detect_chain_product(code.poset)
    if detected is not None and detected[1] == 1:
        return f"hamming n={detected[0]}"
    if detected is not None:
        return f"ordered n={detected[0]} r={detected[1]}"
    return f"general n={code.poset.n}"


def _cmd_analyze(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    rep = Report(args.format)
    rep.comment("command", "analyze")
    rep.comment("input", args.codefile)
    profile = generalized_weights(code)
    verdict = classify(code)
    rep.row("q", code.field.q)
    rep.row("poset", _poset_summary(code))
    rep.row("n", code.n)
    rep.row("k", code.k)
    rep.row("d", verdict.d)
    rep.row("profile", *profile.weights)
    rep.row("dual_distance", verdict.dual_distance)
    rep.row("classification", verdict.label)
    outcome = "pass" if verdict.duality_criterion == verdict.is_nmds else "fail"
    rep.row(
        "duality_check",
        f"d+d_dual={verdict.d}+{verdict.dual_distance}",
        f"n={code.n}",
        outcome,
    )
    return rep, 0


def _cmd_weightdist(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    max_enum = _max_enum(args)
    rep = Report(args.format)
    rep.comment("command", "weightdist")
    rep.comment("input", args.codefile)
    rep.comment("method", args.method)
    rep.row("q", code.field.q)
    rep.row("n", code.n)
    rep.row("k", code.k)

    brute = analytic = None
    if args.method in ("brute", "both"):
        brute = weight_dist_bruteforce(code, max_enum)
    if args.method in ("analytic", "both"):
        detected = detect_chain_product(code.poset)
        if detected is not None and detected[1] > 1:
            verdict = classify(code)
            from .ordered import OrderedSpace

            space = OrderedSpace(detected[0], detected[1], code.field.q)
            analytic = weight_dist_nmds_ordered(
                space, code.k, verdict.d, seed_by_shape(code, verdict.d)
            )
        else:
            analytic = weight_dist_nmds_poset(code, max_enum=max_enum)

    if args.method == "both":
        rep.row("s", "A_s_brute", "A_s_analytic")
        for s in range(code.n + 1):
            rep.row(s, brute.by_size[s], analytic.by_size[s])
    else:
        rep.row("s", "A_s")
        table = brute if brute is not None else analytic
        for s in range(code.n + 1):
            rep.row(s, table.by_size[s])

    if brute is not None and brute.by_shape is not None:
        rep.row("shape", "A_e")
        for shape in sorted(brute.by_shape, key=lambda sh: sh.e):
            rep.row(",".join(map(str, shape.e)), brute.by_shape[shape])

    exit_code = 0
    if args.method == "both":
        agree = brute.by_size == analytic.by_size
        rep.row("verdict", "AGREE" if agree else "DISAGREE")
        exit_code = 0 if agree else 1
    return rep, exit_code


def _cmd_construct(args) -> tuple[Report, int]:
    if args.family == "n1":
        if args.k is None:
            raise ValueError("--family n1 requires --k")
        code = construct_n1(args.q, args.r, args.k, seed=args.seed)
    elif args.family == "n2":
        if args.k1 is None or args.k2 is None:
            raise ValueError("--family n2 requires --k1 and --k2")
        code = construct_n2(args.q, args.r, args.k1, args.k2, seed=args.seed)
    else:
        code = construct_n3(args.q, args.r, seed=args.seed)
    Path(args.out).write_text(write_code_text(code))
    verdict = classify(code)
    rep = Report(args.format)
    rep.comment("command", "construct")
    rep.comment("family", args.family)
    rep.comment("q", args.q)
    rep.comment("r", args.r)
    if args.family == "n1":
        rep.comment("k", args.k)
    if args.family == "n2":
        rep.comment("k1", args.k1)
        rep.comment("k2", args.k2)
    rep.comment("seed", args.seed if args.seed is not None else "none")
    rep.row("written", args.out)
    rep.row("n", code.n)
    rep.row("k", code.k)
    rep.row("d", verdict.d)
    rep.row("classification", verdict.label)
    return rep, 0


def _cmd_points(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    ps = code_to_points(code, _max_enum(args))
    write_points_csv(ps, args.out)
    rep = Report(args.format)
    rep.comment("command", "points")
    rep.comment("input", args.codefile)
    rep.row("written", args.out)
    rep.row("points", len(ps))
    return rep, 0


def _cmd_verify_net(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    ps = code_to_points(code, _max_enum(args))
    check = verify_net(ps, args.t, args.m)
    rep = Report(args.format)
    rep.comment("command", "verify-net")
    rep.comment("input", args.codefile)
    rep.comment("t", args.t)
    rep.comment("m", args.m)
    rep.row("families_checked", check.families_checked)
    if check.truncated:
        rep.row("note", "resolutions above r skipped (points have resolution r)")
    if check.counterexample is not None:
        interval, count = check.counterexample
        rep.row(
            "counterexample",
            interval.describe(code.field.q),
            f"count={count}",
            f"expected={check.target}",
        )
    rep.row("result", "pass" if check.ok else "fail")
    return rep, 0 if check.ok else 1


def _cmd_verify_distribution(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    check = verify_nmds_distribution(code, _max_enum(args))
    rep = Report(args.format)
    rep.comment("command", "verify-distribution")
    rep.comment("input", args.codefile)
    if check.degenerate_k1:
        rep.row("note", "k=1 is degenerate for this characterization")
    if check.vacuous_note:
        rep.row("note", check.vacuous_note)
    if check.part1.counterexample is not None:
        interval, count = check.part1.counterexample
        rep.row(
            "part1_counterexample",
            interval.describe(code.field.q),
            f"count={count}",
            f"expected={check.part1.target}",
        )
    rep.row("part1", "pass" if check.part1.ok else "fail")
    if check.part2_witness is not None:
        rep.row("part2_witness", "l=(" + ",".join(map(str, check.part2_witness)) + ")")
    if check.part2_counterexample is not None:
        exponents, count = check.part2_counterexample
        rep.row(
            "part2_counterexample",
            "l=(" + ",".join(map(str, exponents)) + ")",
            f"count={count}",
        )
    rep.row("part2", "pass" if check.part2_ok else "fail")
    rep.row("result", "pass" if check.ok else "fail")
    return rep, 0 if check.ok else 1


def _cmd_tiling(args) -> tuple[Report, int]:
    code = read_code_file(args.codefile)
    max_enum = _max_enum(args)
    s = args.ideal_size
    rep = Report(args.format)
    rep.comment("command", "tiling")
    rep.comment("input", args.codefile)
    rep.comment("ideal-size", s)
    results = []
    for ideal in code.poset.ideals(size=s):
        t = verify_tiling(code, ideal, max_enum)
        results.append(t)
        rep.row(
            "ideal",
            "{" + ",".join(map(str, ideal.labels)) + "}",
            f"tiling={'yes' if t.is_tiling else 'no'}",
            f"perfect={'yes' if t.perfect else 'no'}",
        )
    nk = code.n - code.k
    if s == nk + 1:
        ok = all(t.is_tiling and t.perfect for t in results)
        rep.row("expectation", "all-perfect-at-size-n-k+1")
    elif s == nk:
        ok = any(t.is_tiling for t in results)
        rep.row("expectation", "some-tiling-at-size-n-k")
    elif s < nk:
        ok = not any(t.is_tiling for t in results)
        rep.row("expectation", "no-tiling-below-size-n-k")
    else:
        ok = True
        rep.row("expectation", "none (size above n-k+1 is unconstrained)")
    rep.row("result", "pass" if ok else "fail")
    return rep, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetcodes",
        description="Near-MDS poset/ordered codes: analysis, constructions, "
        "weight distributions and cube-distribution checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, codefile=True):
        if codefile:
            p.add_argument("codefile", help="code text file (q=, poset=, G= sections)")
        p.add_argument("--format", choices=("text", "tsv"), default="text")
        p.add_argument(
            "--max-enum",
            type=int,
            default=None,
            help=f"enumeration budget (default {DEFAULT_MAX_ENUM}; env {ENV_MAX_ENUM})",
        )

    p = sub.add_parser("analyze", help="parameters, weight hierarchy and classification")
    common(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("weightdist", help="weight distribution table")
    common(p)
    p.add_argument("--method", choices=("brute", "analytic", "both"), default="brute")
    p.set_defaults(handler=_cmd_weightdist)

    p = sub.add_parser("construct", help="emit an NMDS code file")
    common(p, codefile=False)
    p.add_argument("--family", choices=("n1", "n2", "n3"), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="dimension (family n1)")
    p.add_argument("--k1", type=int, default=None, help="block-1 dimension (family n2)")
    p.add_argument("--k2", type=int, default=None, help="block-2 dimension (family n2)")
    p.add_argument("--seed", type=int, default=None, help="randomize free template entries")
    p.add_argument("--out", required=True, help="output code file")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("points", help="export the unit-cube point set as CSV")
    common(p)
    p.add_argument("--out", required=True, help="output CSV file")
    p.set_defaults(handler=_cmd_points)

    p = sub.add_parser("verify-net", help="check the (t,m,n)-net property")
    common(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_net)

    p = sub.add_parser("verify-distribution", help="two-part NMDS interval check")
    common(p)
    p.set_defaults(handler=_cmd_verify_distribution)

    p = sub.add_parser("tiling", help="coset tilings against ideals of one size")
    common(p)
    p.add_argument("--ideal-size", type=int, required=True, dest="ideal_size")
    p.set_defaults(handler=_cmd_tiling)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, exit_code = args.handler(args)
    except (PosetCodesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.render())
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
