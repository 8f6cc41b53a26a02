"""Command-line entry point: ``wbounds {measures,bounds,sweep,verify,reproduce}``.

Exit codes: 0 success, 1 validation error, 2 property or regression failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from dataclasses import replace

from .bounds import MONOGAMY, comparison_bounds
from .errors import DomainError, InputError, ValidationError
from .measures import concurrence_pure, negativity
from .properties import corrupted_kernel, run_property_suite
from .scenario import Scenario, load_scenario
from .sweep import FORMATS, SweepResult, run_sweep

EXIT_OK, EXIT_VALIDATION, EXIT_PROPERTY, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("weighted_bounds")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(42), help="RNG seed (default 42)")
    parser.add_argument("--out", default=default("out"), help="output directory (default ./out)")
    parser.add_argument(
        "--format", choices=FORMATS, default=default("both"), help="files to write (default both)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wbounds",
        description="Entanglement measures and weighted monogamy/polygamy bounds.",
    )
    _global_flags(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _global_flags(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", parents=[shared], help="print the measure vector of a scenario")
    p.add_argument("scenario", help="preset name (example1, example2) or JSON file")

    p = sub.add_parser("bounds", parents=[shared], help="evaluate all bounds at one exponent")
    p.add_argument("scenario")
    p.add_argument("--exponent", type=float, required=True, help="alpha (monogamy) or beta (polygamy)")
    p.add_argument("--s", type=float, help="override the scenario's s")

    p = sub.add_parser("sweep", parents=[shared], help="sweep the exponent and write CSV/SVG")
    p.add_argument("scenario")

    p = sub.add_parser("verify", parents=[shared], help="run the seeded property suite")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument(
        "--self-test", action="store_true", help="run against a deliberately corrupted kernel"
    )

    p = sub.add_parser("reproduce", parents=[shared], help="regenerate a figure and check it")
    p.add_argument("--figure", type=int, choices=(1, 2), required=True)
    return parser


def _print_measures(sc: Scenario) -> None:
    mv = sc.measure_vector
    print(f"scenario: {sc.name} ({mv.label})")
    print(f"  joint A|rest: {mv.joint:.15g}")
    for name, value in zip(mv.names, mv.parts):
        print(f"  {name}: {value:.15g}")
    if sc.state is not None:
        n = sc.state.n_subsystems
        print("  single-subsystem cuts (concurrence, negativity):")
        for i in range(n):
            print(
                f"    {i}|rest: {concurrence_pure(sc.state, i):.15g}, "
                f"{negativity(sc.state, i):.15g}"
            )


def _cmd_measures(args) -> int:
    _print_measures(load_scenario(args.scenario))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    sc = load_scenario(args.scenario)
    if args.s is not None:
        sc = replace(sc, s=args.s)
    report = comparison_bounds(
        sc.measure_vector, sc.params(args.exponent), p=sc.p, alternates="ZLJM_t" in sc.comparisons
    )
    ours = "Z1" if sc.mode == MONOGAMY else "W1"
    print(f"{sc.name}: {sc.mode}, g={sc.g:g}, exponent={args.exponent:g}, a={sc.a:.15g}, s={sc.s:.15g}")
    print(f"  t = {report.t:.15g}, s window = [{report.s_window[0]:.15g}, {report.s_window[1]:g}]")
    print(f"  {ours} (ours): {report.our_bound:.15g}")
    for key, value in report.comparison.items():
        print(f"  {key}: {value:.15g}")
    print(f"  {sc.measure_vector.label}^exponent: {sc.measure_vector.joint ** args.exponent:.15g}")
    print("  flags: " + ", ".join(f"{k}={v}" for k, v in report.flags.items()))
    return EXIT_OK


def _write_sweep(sc: Scenario, args) -> SweepResult:
    result = run_sweep(sc, out_dir=args.out, fmt=args.format)
    flagged = sum(1 for r in result.rows if not r.flags["valid"])
    print(f"{sc.name}: {len(result.rows)} grid points, {flagged} with failed preconditions")
    for path in result.paths:
        print(f"  wrote {path}")
    return result


def _cmd_sweep(args) -> int:
    _write_sweep(load_scenario(args.scenario), args)
    return EXIT_OK


def figure_checks(result: SweepResult) -> list[tuple[str, bool]]:
    """Regression checks shared by ``reproduce`` and the test-suite."""
    sc = result.scenario
    ours = result.column("our")
    zljm = result.column("ZLJM")
    rows = result.rows
    checks = []
    if sc.mode == MONOGAMY:
        checks.append(("Z1 >= Z2 at every grid point", all(o - z >= -1e-12 for o, z in zip(ours, zljm))))
        last = rows[-1]
        if math.isclose(last.exponent, sc.g):
            same = all(
                abs(last.comparison[c] - last.our_bound) <= 1e-12 for c in ("ZLJM", "JFQ") if c in last.comparison
            )
            checks.append((f"Z1 = Z2 = Z3 at alpha = {sc.g:g}", same))
    else:
        checks.append(("W1 <= W2 at every grid point", all(o - z <= 1e-12 for o, z in zip(ours, zljm))))
    checks.append(("joint power respects our bound everywhere", all(r.flags["sound"] for r in rows)))
    return checks


def _cmd_reproduce(args) -> int:
    sc = load_scenario(f"example{args.figure}")
    result = _write_sweep(sc, args)
    ok = True
    for name, passed in figure_checks(result):
        print(f"  [{'PASS' if passed else 'FAIL'}] {name}")
        ok &= passed
    return EXIT_OK if ok else EXIT_PROPERTY


def _cmd_verify(args) -> int:
    kernel = corrupted_kernel if args.self_test else None
    kwargs = {"kernel": kernel} if kernel else {}
    report = run_property_suite(seed=args.seed, samples=args.samples, **kwargs)
    print(f"property suite: seed={report.seed}, samples={report.samples}")
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_PROPERTY


COMMANDS = {
    "measures": _cmd_measures,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "reproduce": _cmd_reproduce,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ValidationError, DomainError) as exc:
        log.error("%s", exc)
        return EXIT_VALIDATION
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
