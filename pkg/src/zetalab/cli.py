"""Command-line front end.

One positional experiment name plus flags mirroring ExperimentConfig; a
flat key = value config file can seed any field and flags override it.
Exit codes: 0 success, 1 acceptance failures, 2 bad configuration,
3 compute error, 4 output error.
"""

from __future__ import annotations

import argparse
import sys

from .acceptance import run_acceptance
from .errors import ConfigError, ZetalabError
from .harness import (EXPERIMENTS, build_config, emit_plot_data,
                      parse_config_text, rows_to_csv, run)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetalab",
        description="Gram-grid correlation sums and sampling checks for "
                    "Riemann's Z.")
    p.add_argument("experiment", choices=EXPERIMENTS)
    p.add_argument("--T", dest="T_ladder", default=None,
                   help="comma-separated ladder heights, e.g. 1e3,1e4,1e5")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--kind", default=None,
                   choices=["full", "half", "half-theta1"])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--out", dest="out_path", default=None,
                   help="CSV output path")
    p.add_argument("--plot-data", default=None,
                   help="also write (ln T, ratio) text files at this path")
    p.add_argument("--config", default=None,
                   help="flat key = value file; flags override it")
    p.add_argument("--stdout", action="store_true",
                   help="write the CSV to standard output")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        raw: dict = {}
        if args.config:
            try:
                text = open(args.config).read()
            except OSError as exc:
                print(f"config: {exc}", file=sys.stderr)
                return 2
            raw = parse_config_text(text)
        for key in ("experiment", "T_ladder", "k", "l", "M", "N", "kind",
                    "seed", "shards", "out_path"):
            val = getattr(args, key)
            if val is not None:
                raw[key] = val
        config = build_config(raw)
    except (ConfigError, ZetalabError) as exc:
        print(f"config: {exc}", file=sys.stderr)
        return 2

    if config.experiment == "acceptance":
        results, all_ok = run_acceptance(progress=sys.stderr)
        if args.stdout:
            for res in results:
                print(res.line())
        return 0 if all_ok else 1

    try:
        rows = run(config)
    except ConfigError as exc:
        print(f"config: {exc}", file=sys.stderr)
        return 2
    except ZetalabError as exc:
        print(f"compute: {config.experiment}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"output: {exc}", file=sys.stderr)
        return 4

    try:
        if args.stdout or not config.out_path:
            sys.stdout.write(rows_to_csv(rows))
        if args.plot_data:
            emit_plot_data(rows, args.plot_data)
    except OSError as exc:
        print(f"output: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
