"""Dataset loading, the time sweep, and deterministic output files.

A sweep walks the configured time grid.  At each grid value it checks
the family-appropriate loss orderings, computes thresholds, and (for
point-valued modes) assigns every object to POS, BND, or NEG via its
block's concept probability.  Each assignment is cross-checked against
the minimum-expected-risk rule; the two must agree by construction, so
a mismatch raises immediately.

Threshold and classification arithmetic runs on exact rationals built
from the evaluated losses, which makes the cross-check and all boundary
comparisons (p exactly at a threshold) deterministic.  Only the final
output values are floats.

Outputs are three files with LF line endings and floats printed to 12
significant digits:

* ``thresholds.csv``  -- t, alpha_lo, alpha_hi, beta_lo, beta_hi
  (point results repeat alpha and beta in both columns);
* ``regions.csv``     -- t, object_id, probability, region
  (omitted for band-mode and degenerate time points);
* ``summary.txt``     -- per-t region counts, degenerate time points,
  and ordering/evaluation errors.
"""

from __future__ import annotations

import csv
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .config import RunConfig
from .expr import ExprEvalError
from .losses import LossModelError, OrderingMode, bounds_at, central_at, validate_ordering
from .rough import InformationSystem, Region, RegionAssignment, classify, partition
from .risk import min_risk_region
from .thresholds import (
    BandPair,
    OrderingViolationError,
    PointPair,
    ThresholdError,
    ThresholdResult,
    fuzzy_threshold_bounds,
    interval_threshold_bounds,
    normal_band_thresholds,
    point_thresholds,
)

__all__ = [
    "DatasetError",
    "StrictSweepError",
    "SweepRow",
    "check_ordering",
    "emit_outputs",
    "load_dataset",
    "run_sweep",
    "thresholds_at",
]

_ID_RE = re.compile(r"[A-Za-z0-9_-]+\Z")


class DatasetError(ValueError):
    """Raised for malformed dataset files."""


class StrictSweepError(RuntimeError):
    """A per-t failure promoted to a hard stop by strict ordering mode."""

    def __init__(self, t: float, reason: str):
        super().__init__(f"t={t!r}: {reason}")
        self.t = t
        self.reason = reason


@dataclass(frozen=True)
class SweepRow:
    """Outcome at one grid value.

    ``status`` is ``ok``, ``degenerate`` (point thresholds computed but
    beta > alpha, so no assignments), or ``error`` (ordering violation
    or evaluation failure; see ``message``).
    """

    t: float
    status: str
    thresholds: ThresholdResult | None
    assignments: tuple[RegionAssignment, ...]
    message: str | None = None


def load_dataset(path: str, decision_attr: str, positive_value: str) -> InformationSystem:
    """Read a CSV dataset into an :class:`InformationSystem`.

    The first column holds object ids (restricted to ``[A-Za-z0-9_-]``);
    the remaining header names are attributes.  Rows must all have the
    header's width, ids must be unique, the decision attribute must be
    one of the columns, and at least one object row is required.
    """

    try:
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            table = list(reader)
    except OSError as exc:
        raise DatasetError(f"cannot read dataset: {exc}") from None
    if not table:
        raise DatasetError("dataset is empty: missing header row")
    header = table[0]
    if len(header) < 2:
        raise DatasetError("header must name an id column and at least one attribute")
    attributes = tuple(header[1:])
    if any(not name for name in attributes):
        raise DatasetError("header contains an empty attribute name")
    if len(set(attributes)) != len(attributes):
        raise DatasetError("header contains duplicate attribute names")
    if decision_attr not in attributes:
        raise DatasetError(
            f"decision attribute {decision_attr!r} not found in dataset columns"
        )

    objects: list[str] = []
    rows: list[tuple[str, ...]] = []
    seen: set[str] = set()
    for lineno, row in enumerate(table[1:], start=2):
        if len(row) != len(header):
            raise DatasetError(
                f"row {lineno} has {len(row)} fields, expected {len(header)}"
            )
        obj = row[0]
        if not _ID_RE.fullmatch(obj):
            raise DatasetError(
                f"row {lineno}: object id {obj!r} is not limited to [A-Za-z0-9_-]"
            )
        if obj in seen:
            raise DatasetError(f"duplicate object id {obj!r}")
        seen.add(obj)
        objects.append(obj)
        rows.append(tuple(row[1:]))
    if not objects:
        raise DatasetError("dataset has no objects")
    return InformationSystem(objects, attributes, rows, decision_attr, positive_value)


_ORDERING_MODES = {
    "point": (OrderingMode.CENTRAL,),
    "uniform": (OrderingMode.LOWER, OrderingMode.UPPER),
    "normal": (OrderingMode.CENTRAL,),
}


def _ordering_modes(family: str, mode: str | None) -> tuple[OrderingMode, ...]:
    if family in _ORDERING_MODES:
        return _ORDERING_MODES[family]
    # interval and fuzzy depend on the mode
    if mode == "optimistic":
        return (OrderingMode.LOWER,)
    if mode == "pessimistic":
        return (OrderingMode.UPPER,)
    return (OrderingMode.INTERLEAVED,)


def _scalar_matrix(config: RunConfig, t: float) -> list[float]:
    """The six scalars a point-valued mode feeds to the threshold rule."""

    matrix = config.matrix
    if config.family in ("point", "uniform") or (
        config.family == "normal" and config.mode == "central"
    ):
        return [central_at(spec, t) for _, spec in matrix.entries]
    side = 0 if config.mode == "optimistic" else 1
    return [bounds_at(spec, t)[side] for _, spec in matrix.entries]


_BAND_FUNCTIONS = {
    "normal": normal_band_thresholds,
    "interval": interval_threshold_bounds,
    "fuzzy": fuzzy_threshold_bounds,
}


def _evaluate_at(config: RunConfig, t: float):
    """Validate orderings and compute thresholds at one grid value.

    Returns ``(result, exact_pair, exact_scalars)`` where the last two
    are ``None`` for band modes.  Raises ``LossModelError``,
    ``ExprEvalError``, or ``ThresholdError`` on failure.
    """

    for ordering_mode in _ordering_modes(config.family, config.mode):
        report = validate_ordering(config.matrix, t, ordering_mode)
        if not report.ok:
            raise OrderingViolationError(report)
    if config.mode == "band":
        return _BAND_FUNCTIONS[config.family](config.matrix, t), None, None
    scalars = [Fraction(value) for value in _scalar_matrix(config, t)]
    pair = point_thresholds(*scalars)
    result = PointPair(float(pair.alpha), float(pair.beta))
    return result, pair, scalars


def thresholds_at(config: RunConfig, t: float) -> tuple[ThresholdResult, bool]:
    """Thresholds at a single time value, plus a degeneracy flag.

    The flag is True when a point result has beta > alpha (no regions
    can be assigned there).  Needs no dataset.
    """

    result, pair, _ = _evaluate_at(config, t)
    degenerate = pair is not None and pair.beta > pair.alpha
    return result, degenerate


def check_ordering(config: RunConfig, t: float) -> list[str]:
    """Messages for every ordering violation at ``t`` (empty when fine).

    Uses the same family- and mode-appropriate chains as the sweep.
    Evaluation failures propagate as exceptions.
    """

    messages: list[str] = []
    for ordering_mode in _ordering_modes(config.family, config.mode):
        report = validate_ordering(config.matrix, t, ordering_mode)
        messages.extend(str(violation) for violation in report.violations)
    return messages


_PER_T_ERRORS = (LossModelError, ExprEvalError, ThresholdError)


def run_sweep(
    config: RunConfig,
    strict: bool | None = None,
    system: InformationSystem | None = None,
) -> list[SweepRow]:
    """Execute the configured sweep and return one row per grid value.

    ``strict`` overrides ``config.strict_ordering`` when given.  With
    strict mode off, per-t failures become ``error`` rows and beta >
    alpha becomes a ``degenerate`` row; with it on, either aborts the
    sweep with :class:`StrictSweepError`.  ``system`` substitutes an
    already-loaded dataset (the config's file is read otherwise).
    """

    if strict is None:
        strict = config.strict_ordering
    if system is None:
        system = load_dataset(
            config.dataset_path, config.decision_attr, config.positive_value
        )
    try:
        blocks = partition(system, config.condition_attrs)
    except ValueError as exc:
        raise DatasetError(str(exc)) from None
    concept = system.concept
    block_probability = [
        Fraction(len(concept & block), len(block)) for block in blocks.blocks
    ]
    block_of = {
        obj: index for index, block in enumerate(blocks.blocks) for obj in block
    }

    rows: list[SweepRow] = []
    for t in config.time_grid.points():
        try:
            result, pair, scalars = _evaluate_at(config, t)
        except _PER_T_ERRORS as exc:
            if strict:
                raise StrictSweepError(t, str(exc)) from exc
            rows.append(SweepRow(t, "error", None, (), str(exc)))
            continue
        if pair is None:
            rows.append(SweepRow(t, "ok", result, ()))
            continue
        if pair.beta > pair.alpha:
            if strict:
                raise StrictSweepError(
                    t,
                    f"beta ({float(pair.beta)!r}) exceeds alpha ({float(pair.alpha)!r})",
                )
            rows.append(SweepRow(t, "degenerate", result, ()))
            continue
        assignments = []
        region_of_block: dict[int, Region] = {}
        for index, p in enumerate(block_probability):
            region = classify(p, pair.alpha, pair.beta)
            check = min_risk_region(p, *scalars)
            if check is not region:
                raise RuntimeError(
                    f"threshold rule and risk rule disagree at t={t!r}, "
                    f"p={p!r}: {region.value} vs {check.value}"
                )
            region_of_block[index] = region
        for obj in system.objects:
            index = block_of[obj]
            assignments.append(
                RegionAssignment(
                    obj, float(block_probability[index]), region_of_block[index]
                )
            )
        rows.append(SweepRow(t, "ok", result, tuple(assignments)))
    return rows


def _fmt(value: float) -> str:
    return f"{float(value):.12g}"


def _threshold_columns(result: ThresholdResult) -> tuple[str, str, str, str]:
    if isinstance(result, PointPair):
        alpha, beta = _fmt(result.alpha), _fmt(result.beta)
        return alpha, alpha, beta, beta
    assert isinstance(result, BandPair)
    return (
        _fmt(result.alpha_lo),
        _fmt(result.alpha_hi),
        _fmt(result.beta_lo),
        _fmt(result.beta_hi),
    )


def emit_outputs(rows: list[SweepRow], out_dir: str) -> None:
    """Write thresholds.csv, regions.csv, and summary.txt to ``out_dir``.

    Rows are ordered by ascending t regardless of input order, floats
    carry 12 significant digits, and lines end with LF, so identical
    sweeps produce byte-identical files.
    """

    os.makedirs(out_dir, exist_ok=True)
    ordered = sorted(rows, key=lambda row: row.t)

    lines = ["t,alpha_lo,alpha_hi,beta_lo,beta_hi"]
    for row in ordered:
        if row.thresholds is not None:
            lines.append(",".join((_fmt(row.t),) + _threshold_columns(row.thresholds)))
    _write_lines(os.path.join(out_dir, "thresholds.csv"), lines)

    lines = ["t,object_id,probability,region"]
    for row in ordered:
        for assignment in row.assignments:
            lines.append(
                ",".join(
                    (
                        _fmt(row.t),
                        assignment.object_id,
                        _fmt(assignment.probability),
                        assignment.region.value,
                    )
                )
            )
    _write_lines(os.path.join(out_dir, "regions.csv"), lines)

    counts = {status: 0 for status in ("ok", "degenerate", "error")}
    for row in ordered:
        counts[row.status] += 1
    lines = [
        "three-way sweep summary",
        f"time points: {len(ordered)}",
        "status counts: ok={ok} degenerate={degenerate} error={error}".format(**counts),
        "per-t results:",
    ]
    for row in ordered:
        if row.status == "error":
            lines.append(f"  t={_fmt(row.t)}: error")
        elif row.status == "degenerate":
            lines.append(f"  t={_fmt(row.t)}: degenerate (beta > alpha)")
        elif not row.assignments:
            lines.append(f"  t={_fmt(row.t)}: thresholds only (band mode)")
        else:
            tally = {region: 0 for region in Region}
            for assignment in row.assignments:
                tally[assignment.region] += 1
            lines.append(
                f"  t={_fmt(row.t)}: "
                f"POS={tally[Region.POS]} BND={tally[Region.BND]} NEG={tally[Region.NEG]}"
            )
    degenerate_ts = [_fmt(row.t) for row in ordered if row.status == "degenerate"]
    lines.append(
        "degenerate time points (beta > alpha): "
        + (", ".join(degenerate_ts) if degenerate_ts else "none")
    )
    error_rows = [row for row in ordered if row.status == "error"]
    if error_rows:
        lines.append("ordering violations / evaluation errors:")
        for row in error_rows:
            lines.append(f"  t={_fmt(row.t)}: {row.message}")
    else:
        lines.append("ordering violations / evaluation errors: none")
    _write_lines(os.path.join(out_dir, "summary.txt"), lines)


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
