"""Command-line entry point: render scan CSVs into figure images."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, render_figure


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplots",
        description="Render entropic-uncertainty scan CSVs into 2x2-panel figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    render = sub.add_parser("render", help="render one figure")
    render.add_argument(
        "--figure", type=int, required=True, choices=(1, 2, 3, 4, 5),
        help="layout: 1-2 are error-probability sweeps, 3-5 are simplex maps",
    )
    render.add_argument(
        "--data", nargs="+", required=True, metavar="CSV",
        help="scan CSV files (simplex figures: one per panel, up to 4)",
    )
    render.add_argument(
        "--out", required=True, help="output image path (.png or .pdf)"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            figure_id=args.figure, data=tuple(args.data), out=args.out
        )
        result = render_figure(spec)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for panel in result.panels:
        region = "negative region" if panel.has_negative_region else "no negative region"
        print(f"panel p={panel.p:g} [{panel.source}]: {region}")
    print(f"wrote {result.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
