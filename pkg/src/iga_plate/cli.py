"""Command-line entry point.

Exit codes: 0 success, 2 configuration or validation error, 3 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import pipeline
from .config import ConfigError, load_config
from .solution import SolverError

EXIT_OK, EXIT_INVALID, EXIT_SOLVER = 0, 2, 3


def _outdir(args, cfg) -> Path:
    return Path(args.output_dir or cfg.output_dir)


def cmd_run(args, cfg) -> dict:
    report = pipeline.run_case(cfg)
    written = pipeline.write_case(report, _outdir(args, cfg))
    return {"written": [str(p) for p in written], "diagnostics": report.diagnostics,
            "entries": len(report.entries)}


def cmd_sweep(args, cfg) -> dict:
    rows = pipeline.run_sweep(cfg)
    path = _outdir(args, cfg) / "sweep.csv"
    pipeline.write_csv(path, pipeline.SWEEP_HEADER, rows)
    return {"written": [str(path)], "rows": len(rows)}


def cmd_tables(args, cfg) -> dict:
    rows = pipeline.run_tables(cfg)
    out = _outdir(args, cfg)
    path = out / "tables.csv"
    pipeline.write_csv(path, pipeline.TABLE_HEADER, rows)
    fpath = out / "fixtures.csv"
    pipeline.write_csv(fpath, pipeline.FIXTURE_HEADER, pipeline.fixture_rows())
    worst = max((abs(v) for r in rows for v in r[-3:] if v is not None), default=0.0)
    return {"written": [str(path), str(fpath)], "rows": len(rows),
            "max_rel_diff_vs_published": worst}


def cmd_navier(args, cfg) -> dict:
    return pipeline.navier_summary(cfg)


COMMANDS = {"run": cmd_run, "sweep": cmd_sweep, "tables": cmd_tables, "navier": cmd_navier}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iga-plate", description="Laminated Kirchhoff plate solver with "
                                 "through-thickness stress recovery.")
    sub = ap.add_subparsers(dest="command", required=True)
    helps = {
        "run": "solve one case and write profiles plus report.json",
        "sweep": "thickness L2 errors over S and control-net lists",
        "tables": "computed values beside every published benchmark record",
        "navier": "closed-form amplitude and bending stiffness",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("config", help="key=value configuration file")
        p.add_argument("-o", "--output-dir", help="override output_dir from the config")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        for msg in exc.errors:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        result = COMMANDS[args.command](args, cfg)
    except ConfigError as exc:
        for msg in exc.errors:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    print(json.dumps(pipeline._round(result), indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
