"""Command-line front end: check / compute / run-all.

Exit codes: 0 all checks pass, 1 any check fails, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .suites import (
    SUITES,
    SuiteSpec,
    compute,
    default_config,
    reports_to_json,
    run_all,
    run_suite,
)


def _parse_points(text: str):
    return [Fraction(part) for part in text.split(",") if part.strip()]


def _suite_params(args) -> dict:
    params = {}
    for key in ("m", "n", "order", "r_max", "s_max", "bound", "legs",
                "schedules", "filt_max", "n_max", "samples", "seed",
                "coassoc_r_max"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if getattr(args, "points", None):
        params["points"] = [str(p) for p in _parse_points(args.points)]
    return params


def _add_param_flags(parser):
    parser.add_argument("--m", type=int, help="even block size M")
    parser.add_argument("--n", type=int, help="odd block size N")
    parser.add_argument("--order", type=int, help="series truncation order")
    parser.add_argument("--r-max", dest="r_max", type=int)
    parser.add_argument("--s-max", dest="s_max", type=int)
    parser.add_argument("--bound", type=int)
    parser.add_argument("--legs", type=int)
    parser.add_argument("--schedules", type=int)
    parser.add_argument("--filt-max", dest="filt_max", type=int)
    parser.add_argument("--n-max", dest="n_max", type=int)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--coassoc-r-max", dest="coassoc_r_max", type=int)
    parser.add_argument("--points", help="comma-separated rational points")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superyangian",
        description="Exact verification harness for the Yangian of gl(M|N)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run one named verification suite")
    check.add_argument("suite", choices=sorted(SUITES))
    _add_param_flags(check)

    comp = sub.add_parser("compute", help="compute a series or a normal form")
    comp.add_argument(
        "target",
        choices=["z", "berezinian", "qdet", "c-series", "normal-form", "apply-map"],
    )
    comp.add_argument("input", nargs="*", help="input element (grammar: 1*T[i,j,r]*...)")
    comp.add_argument("--map", dest="map_name",
                      choices=["eta_M", "antipode_S", "transpose_T", "omega"])
    _add_param_flags(comp)

    runall = sub.add_parser("run-all", help="run a configured suite matrix")
    runall.add_argument("--config", help="JSON config path (defaults to the built-in matrix)")
    runall.add_argument("--filter", dest="name_filter",
                        help="only run suites whose name contains this substring")
    runall.add_argument("--output", help="override the report output path")
    runall.add_argument("--print-default-config", action="store_true",
                        help="print the built-in configuration and exit")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if extra:
        # argparse will not match a positional that trails the options of
        # a subcommand; fold the leftovers into the compute input
        if args.command == "compute":
            args.input = list(getattr(args, "input", []) or []) + extra
        else:
            print(f"error: unrecognized arguments: {' '.join(extra)}", file=sys.stderr)
            return 2

    try:
        if args.command == "check":
            report = run_suite(SuiteSpec(args.suite, _suite_params(args)))
            print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
            return 0 if report.status != "fail" else 1

        if args.command == "compute":
            params = _suite_params(args)
            params.setdefault("m", 1)
            params.setdefault("n", 1)
            params.setdefault("order", 4)
            if args.target == "qdet" and args.m is None:
                raise ValueError("qdet needs --m")
            if args.target == "c-series" and args.n is None:
                raise ValueError("c-series needs --n")
            if args.target == "apply-map":
                if not args.map_name:
                    raise ValueError("apply-map needs --map")
                params["map"] = args.map_name
            input_text = " ".join(args.input) if args.input else None
            print(compute(args.target, params, input_text))
            return 0

        if args.command == "run-all":
            if args.print_default_config:
                print(json.dumps(default_config(), sort_keys=True, indent=2))
                return 0
            if args.config:
                with open(args.config, "r", encoding="utf-8") as fh:
                    config = json.load(fh)
            else:
                config = default_config()
            reports, exit_code = run_all(config, args.name_filter)
            out_path = args.output or config.get("output", "reports.json")
            payload = reports_to_json(reports)
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(payload)
            for r in reports:
                line = f"{r.status.upper():7s} {r.suite} {json.dumps(r.params, sort_keys=True)}"
                if r.skip_reason:
                    line += f"  [{r.skip_reason}]"
                print(line)
            print(f"wrote {len(reports)} reports to {out_path}")
            return exit_code
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
