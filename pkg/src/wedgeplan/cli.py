"""Command line entry point: ``wedgeplan {plan,domain,topology,verify}``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .chain import build_chain
from .discrete_topology import build_complex, cycle_graph, farber_tc, subdivide
from .planner import classify_domain, plan
from .probes import continuity_probe, run_validity_suite
from .svg import render_svg
from .trajectory import sample

ENV_PREFIX = "WEDGEPLAN_"
EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 1, 2


def _env(name: str, cast, default):
    raw = os.environ.get(ENV_PREFIX + name)
    return default if raw is None else cast(raw)


def _read_query(args):
    if args.inline is not None:
        return io.load_query(args.inline)
    with open(args.query, encoding="utf-8") as fh:
        return io.load_query(fh.read())


def cmd_plan(args) -> int:
    initial, final = _read_query(args)
    p = plan(initial, final, rho=args.rho)
    sys.stdout.write(io.dumps(io.plan_document(p)))
    if args.trajectory:
        with open(args.trajectory, "w", encoding="utf-8") as fh:
            for line in io.trajectory_lines(sample(p, args.samples)):
                fh.write(line + "\n")
    if args.svg:
        render_svg(p, args.svg, args.samples)
    return EXIT_OK


def cmd_domain(args) -> int:
    initial, final = _read_query(args)
    print(classify_domain(initial, final, args.rho))
    return EXIT_OK


def cmd_topology(args) -> int:
    g = cycle_graph(args.k) if args.single_circle else subdivide(args.k)
    summary = build_complex(g).as_dict()
    if not args.single_circle:
        summary["chain_b1"] = build_chain().betti_1()
    print(json.dumps(summary))
    return EXIT_OK


def cmd_verify(args) -> int:
    validity = run_validity_suite(args.trials, args.seed, fault=args.inject_fault)
    failures = [{"suite": "validity", **f} for f in validity.as_dict()["failures"]]

    chain_b1 = build_chain().betti_1()
    for k in (3, 4, 5):
        b1 = build_complex(subdivide(k)).b1
        if not b1 == chain_b1 == 19 or farber_tc(b1) != 3:
            failures.append({"suite": "topology", "check": "b1", "detail": f"k={k}: b1={b1}, chain b1={chain_b1}"})

    probes = []
    for region in "UVW":
        rep = continuity_probe(region, 1e-4, 1e-3, min(args.trials, 200), args.seed)
        probes.append(rep.as_dict())
        for v in rep.violations:
            failures.append({"suite": "continuity", "check": region, "detail": v})

    print(json.dumps({"ok": not failures, "trials": args.trials, "seed": args.seed,
                      "fault": args.inject_fault, "failures": failures,
                      "continuity": probes}, indent=2))
    return EXIT_OK if not failures else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgeplan",
        description="Collision-free motion planning for two robots on a wedge of three circles.",
        epilog=f"Defaults for --rho and --samples can be set with {ENV_PREFIX}RHO and "
               f"{ENV_PREFIX}SAMPLES; flags take precedence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def query_flags(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--query", metavar="FILE", help="JSON query file")
        src.add_argument("--inline", metavar="JSON", help="JSON query given directly")
        p.add_argument("--rho", type=float, default=_env("RHO", float, 1e-9),
                       help="snap tolerance for poles, vertex and node tests")

    p = sub.add_parser("plan", help="plan a path and print the plan document")
    query_flags(p)
    p.add_argument("--samples", type=int, default=_env("SAMPLES", int, 400),
                   help="time samples for --trajectory and --svg")
    p.add_argument("--trajectory", metavar="PATH", help="write sampled states as JSON lines")
    p.add_argument("--svg", metavar="PATH", help="write an SVG drawing of both robots' traces")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("domain", help="print the continuity domain (U, V or W) of a query")
    query_flags(p)
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("topology", help="Euler characteristic, b1 and TC of the discrete model")
    p.add_argument("--k", type=int, default=4, help="edges per circle after subdivision (>= 3)")
    p.add_argument("--single-circle", action="store_true", help="use a single circle as a control")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("verify", help="run the randomized invariant suites")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", metavar="STAGE",
                   choices=("preliminary", "step1", "step2", "step3", "final"),
                   help="drop a plan stage before checking, to confirm failures are caught")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 2) < 2:
        parser.error("--samples must be at least 2")
    try:
        return args.func(args)
    except (io.QueryError, ValueError, OSError) as exc:
        print(f"wedgeplan: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
