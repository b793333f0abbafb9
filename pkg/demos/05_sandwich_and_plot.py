"""End-to-end sandwich report and an SVG picture, via the CLI entry point.

The `sandwich` subcommand gathers everything the library can certify for
one pair of points: a lower bound (enclosing ball / Poisson witnesses),
every applicable upper bound (one-step pair bound, entropy bound, relay
set bound, chain bound), and — when the domain is a disk — the exact
value, then checks that lower <= exact <= uppers actually holds.

This script drives the CLI in-process, prints the JSON report, and
renders the domain, the pair, and a connecting ball chain to SVG.
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from harnack import Ball, build_ball_chain, eac_estimate
from harnack.cli import main as cli_main
from harnack.svg import render_svg


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        domain_file = tmp / "disk.json"
        domain_file.write_text(
            json.dumps({"dim": 2, "shape": {"type": "ball", "center": [0, 0], "radius": 1}})
        )

        print("== sandwich report for (-0.4, 0) vs (0.4, 0) on the unit disk ==")
        code = cli_main(
            ["sandwich", "--domain", str(domain_file), "--pair=-0.4,0;0.4,0", "--hops", "2"]
        )
        print(f"(exit code {code})")

        print()
        print("== SVG rendering ==")
        disk = Ball(np.zeros(2), 1.0)
        pts = np.array([[-0.5, 0.0], [0.5, 0.0]])
        est = eac_estimate(disk, pts, grid_step=0.05)
        chain = build_ball_chain(disk, pts[0], pts[1], est.value + 0.1, est)
        doc = render_svg(disk, point_sets=[pts], chains=[chain])
        out = Path("sandwich_demo.svg")
        out.write_text(doc)
        print(f"wrote {out.resolve()} ({len(doc)} bytes, {doc.count('<circle')} circles)")


if __name__ == "__main__":
    main()
