"""Model filiform jet-space Carnot groups J^k(R): exact group algebra,
jet lifts, vertical/horizontal factor maps, fractal set constructions, and
anisotropic box-counting dimension estimation.
"""

from .version import __version__
from .errors import (DomainError, InsufficientDataError, ParseError,
                     ResourceError, ScaleWindowError, StructureError)
from .group import (MAX_K, JetPoint, Scalar, ball_box_norm, compose, dilate,
                    gauge_dist, gauge_norm, inverse, left_diff, origin,
                    right_diff, weights)
from .jets import (DerivativeOracle, JetCurveSample, LengthBound, Polynomial,
                   SmoothFn, builtin_catalog, eval_derivative, jet, jet_array,
                   jet_curve, jet_length_bound, oracle)
from .splitting import (RegularityFit, SplitConfig, gauge_dist_rows, holder_probe,
                        horizontal_image, horizontal_map, is_constant_image,
                        is_j_idempotent, is_v_idempotent, j_idempotence_expected,
                        lipschitz_probe, split, v_idempotence_expected,
                        vertical_image, vertical_map)
from .fractals import (MAX_CANTOR_DEPTH, MAX_SET_POINTS, CantorSpec, SampledSet,
                       axis_segment_set, box_set, cantor_axis_set, cantor_set,
                       coset_jet_set, graph_curve_set, linear_image_set,
                       merge_sets, plane_product_set, plane_weight_index,
                       union_pair_set)
from .boxdim import (DimensionEstimate, ScalePlan, box_count, cell_keys,
                     dyadic_plan, estimate_dimension)
from .serialize import (estimate_from_json, estimate_to_json, point_from_json,
                        point_to_json, read_counts_csv, read_set,
                        smoothfn_from_json, smoothfn_to_json,
                        splitconfig_from_json, splitconfig_to_json,
                        write_counts_csv, write_set)
from .experiments import (EXPERIMENT_NAMES, CheckResult, ExperimentConfig,
                          ExperimentReport, IdentitySuiteReport, builtin_config,
                          config_from_json, config_to_json,
                          identity_report_to_json, report_to_json,
                          run_experiment, run_identity_suite)

__all__ = [
    "__version__",
    # errors
    "DomainError", "InsufficientDataError", "ParseError", "ResourceError",
    "ScaleWindowError", "StructureError",
    # group
    "MAX_K", "JetPoint", "Scalar", "ball_box_norm", "compose", "dilate",
    "gauge_dist", "gauge_norm", "inverse", "left_diff", "origin", "right_diff",
    "weights",
    # jets
    "DerivativeOracle", "JetCurveSample", "LengthBound", "Polynomial", "SmoothFn",
    "builtin_catalog", "eval_derivative", "jet", "jet_array", "jet_curve",
    "jet_length_bound", "oracle",
    # splitting
    "RegularityFit", "SplitConfig", "gauge_dist_rows", "holder_probe",
    "horizontal_image", "horizontal_map", "is_constant_image", "is_j_idempotent",
    "is_v_idempotent", "j_idempotence_expected", "lipschitz_probe", "split",
    "v_idempotence_expected", "vertical_image", "vertical_map",
    # fractals
    "MAX_CANTOR_DEPTH", "MAX_SET_POINTS", "CantorSpec", "SampledSet",
    "axis_segment_set", "box_set", "cantor_axis_set", "cantor_set",
    "coset_jet_set", "graph_curve_set", "linear_image_set", "merge_sets",
    "plane_product_set", "plane_weight_index", "union_pair_set",
    # boxdim
    "DimensionEstimate", "ScalePlan", "box_count", "cell_keys", "dyadic_plan",
    "estimate_dimension",
    # serialize
    "estimate_from_json", "estimate_to_json", "point_from_json", "point_to_json",
    "read_counts_csv", "read_set", "smoothfn_from_json", "smoothfn_to_json",
    "splitconfig_from_json", "splitconfig_to_json", "write_counts_csv",
    "write_set",
    # experiments
    "EXPERIMENT_NAMES", "CheckResult", "ExperimentConfig", "ExperimentReport",
    "IdentitySuiteReport", "builtin_config", "config_from_json", "config_to_json",
    "identity_report_to_json", "report_to_json", "run_experiment",
    "run_identity_suite",
]
