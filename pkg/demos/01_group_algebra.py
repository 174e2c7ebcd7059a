"""Tour of the group structure on J^k(R).

Points are (x, u_k, ..., u_0) with x of weight 1 and u_j of weight k+1-j.
Everything below runs in exact rational arithmetic until the gauge, which
is a float by construction.
"""

from fractions import Fraction

from jetlab import (
    JetPoint,
    ball_box_norm,
    compose,
    dilate,
    gauge_dist,
    gauge_norm,
    inverse,
    left_diff,
    origin,
    weights,
)


def main():
    k = 2
    p = JetPoint(k, (1, 2, 3, 4))
    q = JetPoint(k, (Fraction(1, 2), -1, 0, Fraction(5, 3)))

    print(f"k = {k}, coordinates (x, u_{k}, ..., u_0), weights {weights(k)}")
    print(f"p          = {p.coords}")
    print(f"q          = {q.coords}")
    print(f"p . q      = {compose(p, q).coords}")
    print(f"q . p      = {compose(q, p).coords}   (not abelian beyond x, u_k)")
    print(f"p^-1       = {inverse(p).coords}")
    print(f"p^-1 . p   = {compose(inverse(p), p).coords}")
    print(f"p^-1 . q   = {left_diff(p, q).coords} (closed form, no inversion)")

    # dilations scale each slot by its weight and are automorphisms
    eps = Fraction(1, 3)
    lhs = dilate(eps, compose(p, q))
    rhs = compose(dilate(eps, p), dilate(eps, q))
    print(f"\ndelta_(1/3)(p.q) == delta_(1/3)p . delta_(1/3)q: {lhs == rhs}")

    # the gauge snowflakes low slots: |u_0|^(1/(k+1)) for weight k+1
    print(f"\ngauge(p)            = {gauge_norm(p):.6f}")
    print(f"gauge(delta_eps p)  = {gauge_norm(dilate(eps, p)):.6f}"
          f"  (= eps * gauge(p) = {float(eps) * gauge_norm(p):.6f})")
    print(f"ball-box norm       = {ball_box_norm(p):.6f}")
    print(f"sandwich: bb <= gauge <= (k+2) bb: "
          f"{ball_box_norm(p) <= gauge_norm(p) <= (k + 2) * ball_box_norm(p)}")

    # gauge_dist is left-invariant but not symmetric
    e = origin(k)
    print(f"\nd(p, q) = {gauge_dist(p, q):.6f}")
    print(f"d(q, p) = {gauge_dist(q, p):.6f}   (asymmetry is expected)")
    r = JetPoint(k, (2, -3, 1, 0))
    print(f"d(r.p, r.q) = {gauge_dist(compose(r, p), compose(r, q)):.6f}"
          f"   (matches d(p, q))")
    print(f"d(p, p) = {gauge_dist(p, p):.6f}")


if __name__ == "__main__":
    main()
