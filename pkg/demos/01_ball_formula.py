"""Closed-form Harnack distance from the center of a ball.

For a ball of radius R in R^d and a point at distance rho from the
center, the Harnack distance has the closed form

    (R + rho) * R^(d-2) / (R - rho)^(d-1).

This script prints a small table and shows the two structural facts the
rest of the library leans on: the value is 1 exactly at the center, and
it grows monotonically (and without bound) as the point approaches the
boundary.
"""

import numpy as np

from harnack import ball_harnack_from_center


def main():
    print("Harnack distance from the center of the unit ball")
    print(f"{'rho':>6} {'d=2':>12} {'d=3':>12} {'d=5':>12}")
    for rho in (0.0, 0.25, 0.5, 0.75, 0.9, 0.99):
        row = [ball_harnack_from_center(d, 1.0, rho) for d in (2, 3, 5)]
        print(f"{rho:>6.2f} {row[0]:>12.4f} {row[1]:>12.4f} {row[2]:>12.4f}")

    print()
    print("Scale invariance: the value depends only on rho/R.")
    for scale in (0.5, 1.0, 7.0):
        v = ball_harnack_from_center(3, scale, 0.5 * scale)
        print(f"  R = {scale:4.1f}, rho = R/2  ->  {v:.12f}")

    print()
    print("Blow-up near the boundary (d = 2):")
    rhos = 1.0 - np.geomspace(1e-1, 1e-6, 6)
    for rho in rhos:
        print(f"  rho = {rho:.6f}  ->  {ball_harnack_from_center(2, 1.0, rho):.4e}")


if __name__ == "__main__":
    main()
