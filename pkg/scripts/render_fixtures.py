#!/usr/bin/env python3
"""Write an SVG rendering (with forbidden region and quiver overlay) of every
fixture polygon into ./fixture_svgs/."""
import pathlib
import sys

from delpezzo.fixtures import all_fixtures
from delpezzo.polygon import polygon_of
from delpezzo.svg import render_svg


def main() -> int:
    outdir = pathlib.Path("fixture_svgs")
    outdir.mkdir(exist_ok=True)
    for entry in all_fixtures():
        poly = polygon_of(entry.collection().without_blocks())
        doc = render_svg(poly, show_forbidden=True, quiver=True)
        name = f"{entry.surface}_{entry.label[0]}_{entry.label[1]}.svg"
        (outdir / name).write_text(doc)
        print("wrote", outdir / name)
    return 0


if __name__ == "__main__":
    sys.exit(main())
