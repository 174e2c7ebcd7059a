"""Jet curves and the vertical/horizontal factorization p = V(p) . J(p).

For a smooth f and base offset t, every point factors uniquely into a
vertical part in the plane {x = t} and a horizontal part on the jet curve
of f.  The demo shows the factor maps, the exact isometric action of V on
the plane, and the collapse that makes linear functions special.
"""

from fractions import Fraction

from jetlab import (
    JetPoint,
    Polynomial,
    SplitConfig,
    compose,
    gauge_dist,
    jet,
    jet_length_bound,
    oracle,
    split,
    vertical_map,
)


def main():
    k = 1
    square = Polynomial((0, 0, 1))
    cfg = SplitConfig(square, 0, k)

    p = JetPoint(k, (1, 2, 3))
    v, j = split(cfg, p)
    print(f"f(x) = x^2, t = 0, p = {p.coords}")
    print(f"  J(p) = {j.coords}   (the jet of f at x = 1)")
    print(f"  V(p) = {v.coords}   (lands in the plane x = 0)")
    print(f"  V(p) . J(p) == p: {compose(v, j) == p}")

    # jets of catalog functions lift to horizontal curves
    s = oracle("sin")
    print(f"\njet of sin at 0.0: {jet(s, 3, 0.0).coords}")
    b = jet_length_bound(square, k, 0, 1)
    d = gauge_dist(jet(square, k, 0.0), jet(square, k, 1.0))
    print(f"curve stretch x in [0,1]: gauge distance {d:.4f}, "
          f"bounds [{b.lower:.4f}, {b.upper:.4f}]")

    # on the plane {x = t}, V is translation by -j_0(f): an exact isometry
    cubic = Polynomial((0, Fraction(-1, 2), 0, 1))
    cfg_plane = SplitConfig(cubic, Fraction(1, 2), 2)
    a = JetPoint(2, (Fraction(1, 2), 1, 2, 3))
    bpt = JetPoint(2, (Fraction(1, 2), -4, Fraction(1, 3), 0))
    va, vb = vertical_map(cfg_plane, a), vertical_map(cfg_plane, bpt)
    print(f"\nplane pair under V (f cubic, t = 1/2):")
    print(f"  d(p, q)       = {gauge_dist(a, bpt):.12f}")
    print(f"  d(V(p), V(q)) = {gauge_dist(va, vb):.12f}   (equal, exactly)")

    # along the jet curve of a *linear* function, V never moves
    linear = Polynomial((Fraction(1, 3), 2))
    cfg_lin = SplitConfig(linear, Fraction(1, 2), k)
    images = {vertical_map(cfg_lin, jet(linear, k, Fraction(n, 5))).coords
              for n in range(-10, 11)}
    print(f"\nf(x) = 2x + 1/3: V over 21 points of its jet curve gives "
          f"{len(images)} distinct image(s): {sorted(images)}")
    print("the vertical image of a linear jet curve is a single point.")
    print("mapping a genuinely different curve through the splitting moves V:")
    cfg_sq = SplitConfig(square, Fraction(1, 2), k)
    cubic2 = Polynomial((0, 0, 0, 1))
    spread = {vertical_map(cfg_sq, jet(cubic2, k, Fraction(n, 5))).coords
              for n in range(-10, 11)}
    print(f"V_(x^2) over the jet curve of x^3 gives {len(spread)} distinct images")


if __name__ == "__main__":
    main()
