"""Acceptance and rejection thresholds from six-entry loss matrices.

For scalar losses the two cut points of the minimum-expected-risk rule
have closed forms:

    alpha = (pn - bn) / ((pn - bn) + (bp - pp))
    beta  = (bn - nn) / ((bn - nn) + (np - bp))

An object is accepted when its concept probability reaches ``alpha``
and rejected when it does not exceed ``beta``.  The other families
reduce to this scalar case:

* uniform entries via their midpoints;
* normal bands via the two all-lower / all-upper special cases, plus a
  four-formula envelope that brackets every threshold the band can
  produce;
* intervals via the all-lower (optimistic) or all-upper (pessimistic)
  selection, plus an envelope that brackets the thresholds of every
  pointwise selection from the six intervals;
* fuzzy numbers by first collapsing each entry to its cut interval and
  then proceeding as for intervals.

Nothing here clamps a scalar threshold: if a computed value escapes
[0, 1] the input orderings were violated and an error is raised.  Band
envelopes are clamped to [0, 1], matching how they are defined.

All arithmetic is plain ``+ - * /`` on whatever real type the inputs
carry, so ``fractions.Fraction`` inputs yield exact results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .losses import (
    FuzzyLoss,
    IntervalLoss,
    LossMatrix,
    NormalBandLoss,
    OrderingMode,
    OrderingReport,
    UniformLoss,
    bounds_at,
    central_at,
    validate_ordering,
)

__all__ = [
    "BandPair",
    "DEGENERATE_TOL",
    "DegenerateMatrixError",
    "OrderingViolationError",
    "PointPair",
    "ThresholdError",
    "ThresholdResult",
    "interval_threshold_bounds",
    "interval_thresholds",
    "normal_band_extremes",
    "normal_band_thresholds",
    "normal_special_thresholds",
    "point_thresholds",
    "uniform_thresholds",
    "fuzzy_threshold_bounds",
    "fuzzy_thresholds",
]

DEGENERATE_TOL = 1e-12


class ThresholdError(ValueError):
    """Raised when thresholds cannot be computed from the given losses."""


class DegenerateMatrixError(ThresholdError):
    """Raised when a threshold denominator vanishes (or goes negative)."""


class OrderingViolationError(ThresholdError):
    """Raised when a required loss-ordering chain fails.

    Carries the full :class:`OrderingReport` as ``report``.
    """

    def __init__(self, report: OrderingReport):
        first = report.first
        assert first is not None
        super().__init__(str(first))
        self.report = report


@dataclass(frozen=True)
class PointPair:
    """A single (alpha, beta) threshold pair.

    ``beta <= alpha`` is deliberately not required: the crossover case
    is meaningful and must be reported by callers, not hidden here.
    """

    alpha: float
    beta: float


@dataclass(frozen=True)
class BandPair:
    """Envelopes [alpha_lo, alpha_hi] and [beta_lo, beta_hi]."""

    alpha_lo: float
    alpha_hi: float
    beta_lo: float
    beta_hi: float

    def __post_init__(self) -> None:
        for name, value in (
            ("alpha_lo", self.alpha_lo),
            ("alpha_hi", self.alpha_hi),
            ("beta_lo", self.beta_lo),
            ("beta_hi", self.beta_hi),
        ):
            if not 0 <= value <= 1:
                raise ThresholdError(f"{name} is {value!r}, outside [0, 1]")
        if self.alpha_lo > self.alpha_hi:
            raise ThresholdError(
                f"alpha envelope inverted: {self.alpha_lo!r} > {self.alpha_hi!r}"
            )
        if self.beta_lo > self.beta_hi:
            raise ThresholdError(
                f"beta envelope inverted: {self.beta_lo!r} > {self.beta_hi!r}"
            )


ThresholdResult = Union[PointPair, BandPair]


def _ratio(num, den, what: str):
    if den < DEGENERATE_TOL:
        raise DegenerateMatrixError(
            f"{what} denominator is {den!r}; must be positive"
        )
    return num / den


def point_thresholds(pp, bp, np_, nn, bn, pn) -> PointPair:
    """Thresholds for six scalar losses.

    Requires the usual ordering chains (pp <= bp <= np and
    nn <= bn <= pn, all non-negative); violations surface either as a
    non-positive denominator or as a threshold escaping [0, 1], both of
    which raise.  Denominators smaller than ``DEGENERATE_TOL`` count as
    zero.
    """

    alpha = _ratio((pn - bn), (pn - bn) + (bp - pp), "alpha")
    beta = _ratio((bn - nn), (bn - nn) + (np_ - bp), "beta")
    if not 0 <= alpha <= 1:
        raise ThresholdError(
            f"alpha is {alpha!r}, outside [0, 1]; loss orderings are violated"
        )
    if not 0 <= beta <= 1:
        raise ThresholdError(
            f"beta is {beta!r}, outside [0, 1]; loss orderings are violated"
        )
    return PointPair(alpha, beta)


def _require(matrix: LossMatrix, family: type) -> None:
    if matrix.family is not family:
        raise TypeError(
            f"expected a {family.__name__} matrix, got {matrix.family.__name__}"
        )


def _checked(report: OrderingReport) -> None:
    if not report.ok:
        raise OrderingViolationError(report)


def uniform_thresholds(matrix: LossMatrix, t: float) -> PointPair:
    """Thresholds for a uniform matrix at ``t``, via entry midpoints.

    Both endpoint chains (all the ``a`` endpoints and all the ``b``
    endpoints) must be ordered; the midpoint reduction is exact for
    uniform distributions.
    """

    _require(matrix, UniformLoss)
    _checked(validate_ordering(matrix, t, OrderingMode.LOWER))
    _checked(validate_ordering(matrix, t, OrderingMode.UPPER))
    mids = [central_at(spec, t) for _, spec in matrix.entries]
    return point_thresholds(*mids)


def _matrix_bounds(matrix: LossMatrix, t: float) -> list[tuple[float, float]]:
    return [bounds_at(spec, t) for _, spec in matrix.entries]


def _band_extremes(bounds) -> tuple[float, float, float, float]:
    """The four envelope ratios from six (lo, hi) entry bounds."""

    pp, bp, np_, nn, bn, pn = bounds
    alpha_lo = _ratio(
        pn[0] - bn[1], (pn[1] - bn[0]) + (bp[1] - pp[0]), "alpha envelope lower"
    )
    alpha_hi = _ratio(
        pn[1] - bn[0], (pn[0] - bn[1]) + (bp[0] - pp[1]), "alpha envelope upper"
    )
    beta_lo = _ratio(
        bn[0] - nn[1], (bn[1] - nn[0]) + (np_[1] - bp[0]), "beta envelope lower"
    )
    beta_hi = _ratio(
        bn[1] - nn[0], (bn[0] - nn[1]) + (np_[0] - bp[1]), "beta envelope upper"
    )
    return alpha_lo, alpha_hi, beta_lo, beta_hi


def _clamped_band(extremes) -> BandPair:
    alpha_lo, alpha_hi, beta_lo, beta_hi = extremes
    pair = (
        max(alpha_lo, 0.0),
        min(alpha_hi, 1.0),
        max(beta_lo, 0.0),
        min(beta_hi, 1.0),
    )
    if pair[0] > pair[1] or pair[2] > pair[3]:
        raise ThresholdError(
            f"threshold envelope collapsed after clamping: {pair!r}; "
            "loss orderings are violated"
        )
    return BandPair(*pair)


def normal_band_extremes(matrix: LossMatrix, t: float) -> tuple[float, float, float, float]:
    """Raw envelope ratios (alpha_lo, alpha_hi, beta_lo, beta_hi) for a
    normal matrix at ``t``, before any clamping to [0, 1].

    The upper ratios can legitimately exceed 1 and the lower ones can
    go negative; :func:`normal_band_thresholds` applies the clamping.
    """

    _require(matrix, NormalBandLoss)
    return _band_extremes(_matrix_bounds(matrix, t))


def normal_band_thresholds(matrix: LossMatrix, t: float) -> BandPair:
    """Clamped threshold envelope for a normal matrix at ``t``.

    Every entry's band [mu - n*sigma, mu + n*sigma] must stay
    non-negative, and all four envelope denominators must be positive.
    """

    return _clamped_band(normal_band_extremes(matrix, t))


def normal_special_thresholds(matrix: LossMatrix, t: float, which: int) -> PointPair:
    """Point thresholds from a normal matrix's band edges.

    ``which=1`` uses every entry's lower edge mu - n*sigma, ``which=2``
    every upper edge mu + n*sigma.
    """

    _require(matrix, NormalBandLoss)
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which!r}")
    side = 0 if which == 1 else 1
    edges = [b[side] for b in _matrix_bounds(matrix, t)]
    return point_thresholds(*edges)


_SIDE_FOR_MODE = {"optimistic": 0, "pessimistic": 1}
_MODE_FOR_SIDE = {
    "optimistic": OrderingMode.LOWER,
    "pessimistic": OrderingMode.UPPER,
}


def _one_sided_thresholds(matrix: LossMatrix, t: float, mode: str) -> PointPair:
    if mode not in _SIDE_FOR_MODE:
        raise ValueError(f"mode must be 'optimistic' or 'pessimistic', got {mode!r}")
    _checked(validate_ordering(matrix, t, _MODE_FOR_SIDE[mode]))
    side = _SIDE_FOR_MODE[mode]
    chosen = [b[side] for b in _matrix_bounds(matrix, t)]
    return point_thresholds(*chosen)


def interval_thresholds(matrix: LossMatrix, t: float, mode: str) -> PointPair:
    """Thresholds for an interval matrix at ``t``.

    ``mode='optimistic'`` uses every entry's lower endpoint,
    ``mode='pessimistic'`` every upper endpoint.  The chosen endpoints
    must satisfy the ordering chains.
    """

    _require(matrix, IntervalLoss)
    return _one_sided_thresholds(matrix, t, mode)


def interval_threshold_bounds(matrix: LossMatrix, t: float) -> BandPair:
    """Threshold envelope for an interval matrix at ``t``.

    Under the interleaved ordering (each entry's whole interval sits
    below the next entry's along both chains), the thresholds of every
    pointwise selection from the six intervals fall inside this
    envelope.
    """

    _require(matrix, IntervalLoss)
    _checked(validate_ordering(matrix, t, OrderingMode.INTERLEAVED))
    return _clamped_band(_band_extremes(_matrix_bounds(matrix, t)))


def fuzzy_thresholds(matrix: LossMatrix, t: float, mode: str) -> PointPair:
    """Thresholds for a fuzzy matrix at ``t``.

    Each entry first collapses to the hull of its cut values; the
    optimistic/pessimistic endpoint selection then proceeds exactly as
    for interval matrices.
    """

    _require(matrix, FuzzyLoss)
    return _one_sided_thresholds(matrix, t, mode)


def fuzzy_threshold_bounds(matrix: LossMatrix, t: float) -> BandPair:
    """Threshold envelope for a fuzzy matrix at ``t``.

    The cut hulls must satisfy the interleaved ordering; the envelope
    then brackets the thresholds of every selection from those hulls.
    """

    _require(matrix, FuzzyLoss)
    _checked(validate_ordering(matrix, t, OrderingMode.INTERLEAVED))
    return _clamped_band(_band_extremes(_matrix_bounds(matrix, t)))
