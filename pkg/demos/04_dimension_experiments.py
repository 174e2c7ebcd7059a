"""The named dimension experiments, including the one that fails on purpose.

Three stories:
  1. weight snowflaking: the same Cantor set measures alpha on the x axis
     but (k+1) * alpha when embedded along u_0;
  2. factor-map dimensions: the horizontal image of a translated jet curve
     keeps the parameter dimension while the vertical image collapses, and
     a union set feeds both predictions in a single run;
  3. the linear-jet experiment asserts the nominal snowflake prediction for
     the vertical image of a linear function's jet curve; the image is a
     single point, so the check fails and the report says why.
"""

import math

from jetlab import (
    builtin_config,
    cantor_axis_set,
    dyadic_plan,
    estimate_dimension,
    run_experiment,
)


def print_report(rep):
    print(f"\n== {rep.name} ==")
    for c in rep.checks:
        mark = "ok " if c.passed else "XXX"
        tol = f" +- {c.tolerance}" if c.tolerance is not None else ""
        print(f"  [{mark}] {c.label}: observed={c.observed} "
              f"expected={c.expected}{tol}")
        if not c.passed and c.detail:
            print(f"        {c.detail}")
    print(f"  -> {'PASS' if rep.passed else 'FAIL'} in {rep.wall_time_s:.2f} s")


def main():
    alpha = 0.5
    print("weight snowflaking of one Cantor set (alpha = 0.5, k = 1):")
    on_x = estimate_dimension(cantor_axis_set(1, alpha, 12, axis="x"),
                              dyadic_plan(2, 9))
    on_u0 = estimate_dimension(cantor_axis_set(1, alpha, 12, axis="u0"),
                               dyadic_plan(2, 6))
    print(f"  on the x axis  (weight 1): {on_x.slope:.3f}  (predicted 0.5)")
    print(f"  on the u0 axis (weight 2): {on_u0.slope:.3f}  (predicted 1.0)")

    third = math.log(2.0) / math.log(3.0)
    print_report(run_experiment(builtin_config("coset-jet", alpha=third)))
    print_report(run_experiment(builtin_config("union-pair")))
    print_report(run_experiment(builtin_config("graph-curve", n=192)))

    print("\nand the experiment that is expected to fail:")
    print_report(run_experiment(builtin_config("linear-jet")))
    print("\nthe vertical image of a linear function's jet curve is one point,")
    print("so no scale window can measure the predicted (k+1)*alpha; the")
    print("failure above is the honest reading of that construction.")


if __name__ == "__main__":
    main()
