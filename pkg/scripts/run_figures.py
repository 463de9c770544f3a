#!/usr/bin/env python3
"""Regenerate every figure preset as CSV (and optionally SVG) into an
output directory.

Usage:
    python3 scripts/run_figures.py [--out DIR] [--svg] [fig1 fig2a ...]

With no figure names given, all presets are produced.
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qutritxxz.output import emit_csv, emit_svg
from qutritxxz.sweeps import FIGURE_NAMES, figure_preset


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("figures", nargs="*", default=[], metavar="FIG",
                    help=f"subset of {', '.join(FIGURE_NAMES)}")
    ap.add_argument("--out", default="figures", help="output directory")
    ap.add_argument("--svg", action="store_true", help="also render SVG charts")
    args = ap.parse_args(argv)

    names = args.figures or list(FIGURE_NAMES)
    unknown = [n for n in names if n not in FIGURE_NAMES]
    if unknown:
        ap.error(f"unknown figure(s): {', '.join(unknown)}")

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    t0 = time.perf_counter()
    for name in names:
        results = figure_preset(name)
        path = outdir / f"{name}.csv"
        emit_csv(results, path)
        if args.svg:
            emit_svg(results, outdir / f"{name}.svg")
        n_rows = sum(len(r.rows) for r in results)
        print(f"{name}: {len(results)} curve(s), {n_rows} rows -> {path}")
    print(f"done in {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
