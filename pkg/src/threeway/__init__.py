"""Three-way decisions (accept / defer / reject) from time-dependent losses.

The package turns a six-entry loss matrix whose entries vary with a
time parameter ``t`` into acceptance and rejection thresholds, applies
them to a tabular dataset through rough-set membership probabilities,
and cross-checks every assignment against the minimum-expected-risk
rule the thresholds were derived from.
"""

from .config import ConfigError, RunConfig, TimeGrid
from .expr import (
    BinOp,
    Const,
    ExprEvalError,
    ExprSyntaxError,
    Neg,
    TimeExpr,
    Var,
    parse,
)
from .losses import (
    Band,
    FuzzyElement,
    FuzzyLoss,
    IntervalLoss,
    LossMatrix,
    LossModelError,
    NormalBandLoss,
    OrderingMode,
    OrderingReport,
    OrderingViolation,
    PointLoss,
    Scalar,
    UniformLoss,
    bounds_at,
    central_at,
    cut_set,
    evaluate_loss,
    validate_ordering,
)
from .risk import RiskTriple, expected_risks, min_risk_region
from .rough import (
    DegenerateThresholdsError,
    InformationSystem,
    Partition,
    Region,
    RegionAssignment,
    classify,
    conditional_probability,
    partition,
)
from .sweep import (
    DatasetError,
    StrictSweepError,
    SweepRow,
    check_ordering,
    emit_outputs,
    load_dataset,
    run_sweep,
    thresholds_at,
)
from .thresholds import (
    BandPair,
    DegenerateMatrixError,
    OrderingViolationError,
    PointPair,
    ThresholdError,
    fuzzy_threshold_bounds,
    fuzzy_thresholds,
    interval_threshold_bounds,
    interval_thresholds,
    normal_band_extremes,
    normal_band_thresholds,
    normal_special_thresholds,
    point_thresholds,
    uniform_thresholds,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BandPair",
    "BinOp",
    "ConfigError",
    "Const",
    "DatasetError",
    "DegenerateMatrixError",
    "DegenerateThresholdsError",
    "ExprEvalError",
    "ExprSyntaxError",
    "FuzzyElement",
    "FuzzyLoss",
    "InformationSystem",
    "IntervalLoss",
    "LossMatrix",
    "LossModelError",
    "Neg",
    "NormalBandLoss",
    "OrderingMode",
    "OrderingReport",
    "OrderingViolation",
    "OrderingViolationError",
    "Partition",
    "PointLoss",
    "PointPair",
    "Region",
    "RegionAssignment",
    "RiskTriple",
    "RunConfig",
    "Scalar",
    "StrictSweepError",
    "SweepRow",
    "ThresholdError",
    "TimeExpr",
    "TimeGrid",
    "UniformLoss",
    "Var",
    "bounds_at",
    "central_at",
    "check_ordering",
    "classify",
    "conditional_probability",
    "cut_set",
    "emit_outputs",
    "evaluate_loss",
    "expected_risks",
    "fuzzy_threshold_bounds",
    "fuzzy_thresholds",
    "interval_threshold_bounds",
    "interval_thresholds",
    "load_dataset",
    "min_risk_region",
    "normal_band_extremes",
    "normal_band_thresholds",
    "normal_special_thresholds",
    "parse",
    "partition",
    "point_thresholds",
    "run_sweep",
    "thresholds_at",
    "uniform_thresholds",
    "validate_ordering",
]
