"""Command-line front end.

    rabipackets run SCENARIO [--out DIR] [--workers N] [--override-validity]
    rabipackets verify SCENARIO [--step S | --tolerance T]
    rabipackets presets
    rabipackets preset NAME [--emit] [-o PATH]

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import AccuracyError, ConservationError, InvalidParameterError, ScenarioError
from .oracle import OdeSettings
from .scenario import (
    PRESET_DESCRIPTIONS,
    list_presets,
    load_scenario,
    preset,
    run_scenario,
    scenario_to_ini,
    verify_scenario,
)


def _load(path, override: bool):
    return load_scenario(path, override_validity=override)


def cmd_run(args) -> int:
    scenario = _load(args.scenario, args.override_validity)
    result = run_scenario(scenario, out_dir=args.out, workers=args.workers)
    for name, path in result.files.items():
        if not name.startswith("snapshot"):
            print(f"wrote {path}")
    snaps = sum(1 for n in result.files if n.startswith("snapshot"))
    if snaps:
        print(f"wrote {snaps} snapshot tables")
    print(f"max norm drift {result.max_norm_drift:.3e}, max momentum drift {result.max_momentum_drift:.3e}")
    return 0


def cmd_verify(args) -> int:
    scenario = _load(args.scenario, args.override_validity)
    if args.step is not None:
        settings = OdeSettings(step=args.step)
    elif args.tolerance is not None:
        settings = OdeSettings(tolerance=args.tolerance)
    else:
        settings = None
    report = verify_scenario(scenario, settings)
    for line in report.lines():
        print(line)
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_presets(args) -> int:
    for line in list_presets():
        print(line)
    return 0


def cmd_preset(args) -> int:
    scenario = preset(args.name)
    if args.emit:
        path = Path(args.output or f"{args.name}.ini")
        path.write_text(scenario_to_ini(scenario))
        print(f"wrote {path}")
    else:
        print(f"{args.name}: {PRESET_DESCRIPTIONS[args.name]}")
        print()
        print(scenario_to_ini(scenario), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabipackets",
        description="Two-level atom wave packets in a travelling wave.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="evolve a scenario and write CSV, snapshots and a JSON summary")
    p.add_argument("scenario")
    p.add_argument("--out", help="output directory (overrides [output] directory)")
    p.add_argument("--workers", type=int, default=1, help="threads used by the propagator")
    p.add_argument("--override-validity", action="store_true", help="run even if grid rules fail")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="compare the closed form with the RK4 oracle")
    p.add_argument("scenario")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--step", type=float, help="fixed RK4 step for every family")
    group.add_argument("--tolerance", type=float, help="per-amplitude error target (default 1e-9)")
    p.add_argument("--override-validity", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("presets", help="list the built-in scenarios")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("preset", help="show or write a built-in scenario")
    p.add_argument("name")
    p.add_argument("--emit", action="store_true", help="write the scenario file")
    p.add_argument("-o", "--output", help="path for --emit (default NAME.ini)")
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AccuracyError, ConservationError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
