"""Cantor constructions and anisotropic box counting.

Cells are left translates of the box with side eps^w on each weight-w
coordinate, so a segment along u_0 (weight k+1) measures dimension k+1:
the gauge snowflakes that axis.  The same counting machinery calibrates on
segments and boxes before it is trusted on fractal sets.
"""

import math

from jetlab import (
    ScaleWindowError,
    axis_segment_set,
    box_count,
    box_set,
    cantor_axis_set,
    cantor_set,
    dyadic_plan,
    estimate_dimension,
)


def show(label, sset, plan):
    est = estimate_dimension(sset, plan)
    window = f"[2^{math.log2(est.scale_window[0]):.0f}, " \
             f"2^{math.log2(est.scale_window[1]):.0f}]"
    print(f"  {label:34s} slope {est.slope:6.3f}  r2 {est.r2:.4f}  "
          f"scales {window}")
    return est


def main():
    third = math.log(2.0) / math.log(3.0)
    print(f"cantor_set(alpha=log2/log3, depth=4): {cantor_set(third, 4).round(4)}")

    print("\ncalibration on sets with known dimension:")
    show("x segment (dim 1)", axis_segment_set(1, "x", 4097), dyadic_plan(2, 10))
    show("u0 segment, k=1 (dim 2)", axis_segment_set(1, "u0", 2 ** 16 + 1),
         dyadic_plan(2, 7))
    show("middle-thirds cantor on x (0.631)", cantor_axis_set(1, third, 16),
         dyadic_plan(2, 12))
    show("plane box, k=1 (dim 3)", box_set(1, "plane", 5), dyadic_plan(2, 5))
    show("group box, k=1 (dim 4)", box_set(1, "group", 4),
         dyadic_plan(2, 4, per_octave=2))

    # counting scales must stay coarser than the sample resolution
    print("\nasking for scales finer than the sampling:")
    try:
        estimate_dimension(cantor_axis_set(1, 0.5, 6), dyadic_plan(2, 14))
    except ScaleWindowError as err:
        print(f"  ScaleWindowError: {err}")
        print(f"  (suggested max depth: {err.suggested_max_depth})")

    # dyadic dilation covariance: doubling the set and the scale together
    s = cantor_axis_set(1, 0.5, 10)
    doubled = s.with_coords(s.coords * [2.0, 2.0, 4.0])  # weights (1, 1, 2)
    print("\ncovariance under the group dilation delta_2:")
    for m in (3, 5, 7):
        eps = 2.0 ** -m
        print(f"  N(E, 2^-{m}) = {box_count(s, eps):5d}   "
              f"N(delta_2 E, 2^-{m - 1}) = {box_count(doubled, 2 * eps):5d}")


if __name__ == "__main__":
    main()
