"""Command-line entry point: ``gracelab <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .certificate import determinantal_certificate, subset_certificate
from .config import DEFAULT_SEED, OUTPUT_FORMATS, RunConfig, check_size
from .errors import GraceError
from .labeling import beta, cycle_union, fixed_point_swap, grl
from .report import ReportWriteError, emit_report
from .transform import automorphism_group, enumerate_all, enumerate_semigroup, parse_function_literal
from .verify import VerificationReport, run_lemma

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-n", type=int, default=None, help="size cap (default: $GRACE_MAX_N or 10)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="json")
    p.add_argument("--output", dest="output_path", default=None)
    p.add_argument("--timing", action="store_true", help="include wall_time in reports")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gracelab", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [("beta", "max distinct edge labels and a witness"),
                        ("aut", "automorphism group of G_f"),
                        ("grl", "graceful conjugates, one per Aut(G_f) coset"),
                        ("certify", "determinantal certificate")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--f", required=True, help="function literal, e.g. 0,0,1")

    p = sub.add_parser("subset-certify", parents=[common], help="m-subset certificate")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list semigroup members")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list all n^n maps instead")

    p = sub.add_parser("verify", parents=[common], help="run a lemma sweep")
    p.add_argument("--lemma", required=True, choices=["a", "b", "swap", "trees", "cycles"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--sample-size", type=int, default=None)
    p.add_argument("--exhaustive", action="store_true")

    p = sub.add_parser("cycles", parents=[common], help="build and label C_1 + 2^s C_{2^t}")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("swap", parents=[common], help="fixed-point swap of a semigroup member")
    p.add_argument("--f", required=True)
    p.add_argument("--all-vertices", action="store_true")
    return parser


def _execute(args, config: RunConfig):
    cmd = args.command
    cap = config.max_n
    if cmd in ("beta", "aut", "grl", "certify", "subset-certify", "swap"):
        f = parse_function_literal(args.f)
        check_size(f.n, cap)
    if cmd == "beta":
        r = beta(f, max_n=cap, workers=config.workers)
        return {"beta": r.beta, "graceful": r.graceful, "witness": list(r.witness.values)}
    if cmd == "aut":
        g = automorphism_group(f)
        return {"order": g.order, "elements": [list(e) for e in g.elements]}
    if cmd == "grl":
        r = grl(f, max_n=cap)
        return {"count": r.count,
                "representatives": [{"sigma": list(s), "conjugate": str(g)} for s, g in r.representatives]}
    if cmd == "certify":
        ok, wit = determinantal_certificate(f, max_n=cap)
        return {"certificate": True, "witness": list(wit)} if ok else {"certificate": False}
    if cmd == "subset-certify":
        return {"certificate": subset_certificate(f, args.m, max_n=cap), "m": args.m}
    if cmd == "enumerate":
        check_size(args.n, cap)
        gen = enumerate_all(args.n) if args.all else enumerate_semigroup(args.n)
        members = [str(g) for g in gen]
        return {"n": args.n, "count": len(members), "members": members,
                "rows": [{"f": m} for m in members]}
    if cmd == "cycles":
        f = cycle_union(args.s, args.t, max_n=cap)
        r = beta(f, max_n=cap, workers=config.workers)
        return {"f": str(f), "n": f.n, "graceful": r.graceful, "witness": list(r.witness.values)}
    if cmd == "swap":
        if args.all_vertices:
            return {"f": str(f), "g": [str(g) for g in fixed_point_swap(f, all_vertices=True)]}
        return {"f": str(f), "g": str(fixed_point_swap(f))}
    if cmd == "verify":
        kw = {}
        if args.lemma == "cycles":
            if args.s is None or args.t is None:
                raise ValueError("verify --lemma cycles needs --s and --t")
            kw.update(s=args.s, t=args.t)
        else:
            if args.n is None:
                raise ValueError(f"verify --lemma {args.lemma} needs --n")
            if args.lemma == "b":
                if args.sample_size is not None:
                    kw["sample_size"] = args.sample_size
                if args.exhaustive:
                    kw["exhaustive"] = True
        return run_lemma(args.lemma, args.n, config, **kw)
    raise ValueError(f"unknown command {cmd!r}")


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig.from_env(max_n=args.max_n, workers=args.workers, seed=args.seed,
                                    output_format=args.output_format,
                                    output_path=args.output_path)
        result = _execute(args, config)
        if isinstance(result, dict) and config.output_format == "json":
            result.pop("rows", None)
        emit_report(result, config.output_format, config.output_path,
                    include_timing=args.timing, stream=stdout)
    except (GraceError, ValueError, ReportWriteError) as exc:
        print(f"gracelab: error: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(result, VerificationReport) and result.verdict == "FAIL":
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
