#!/usr/bin/env python3
"""Regenerate the standard figure set (CSV + SVG) into an output directory."""
import argparse
from pathlib import Path

from zetaderiv import plots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures", help="output directory")
    ap.add_argument("--ks", type=int, nargs="+",
                    default=[100, 200, 400, 800],
                    help="orders for the multi-panel strip figure")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    written = []
    written += plots.plot_figure2(out / "strip_k38")
    written += plots.plot_figure4(out / "strips_highk", ks=args.ks)
    for k in (38, 100, 400):
        written += plots.plot_regions(k, out / f"regions_k{k}")
    for p in written:
        print(f"wrote {p}")


if __name__ == "__main__":
    main()
