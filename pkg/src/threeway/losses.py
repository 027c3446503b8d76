"""Time-dependent loss functions for three-way decision making.

A loss matrix has six entries, one per (action, state) pair:

    ======  ========================  ========================
    entry   action                    state
    ======  ========================  ========================
    pp      accept                    in the concept
    bp      defer                     in the concept
    np      reject                    in the concept
    nn      reject                    outside the concept
    bn      defer                     outside the concept
    pn      accept                    outside the concept
    ======  ========================  ========================

Each entry is one of five ``LossSpec`` variants, all built from
expressions in the time variable ``t``:

* ``PointLoss``       -- a single value.
* ``UniformLoss``     -- a uniform distribution on [a(t), b(t)]; its
  expected loss is the midpoint, so it evaluates to a scalar.
* ``NormalBandLoss``  -- a normal distribution summarized by the band
  [mu - n*sigma, mu + n*sigma] for n in {1, 2, 3}.
* ``IntervalLoss``    -- an interval [lo(t), hi(t)].
* ``FuzzyLoss``       -- a discrete fuzzy number; an eta-cut keeps the
  values whose membership reaches eta(t), and the hull of the kept
  values is the entry's interval.

Every evaluation enforces non-negative losses.  ``evaluate_loss``
returns a ``Scalar`` for the point and uniform variants and a ``Band``
for the rest.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .expr import TimeExpr

__all__ = [
    "Band",
    "ENTRY_NAMES",
    "FuzzyElement",
    "FuzzyLoss",
    "IntervalLoss",
    "LossMatrix",
    "LossModelError",
    "LossSpec",
    "LossValue",
    "NormalBandLoss",
    "OrderingMode",
    "OrderingReport",
    "OrderingViolation",
    "PointLoss",
    "Scalar",
    "UniformLoss",
    "bounds_at",
    "central_at",
    "cut_set",
    "evaluate_loss",
    "validate_ordering",
]


class LossModelError(ValueError):
    """Raised when a loss specification cannot be evaluated at some t."""


@dataclass(frozen=True)
class Scalar:
    value: float

    def __post_init__(self) -> None:
        if self.value < 0:
            raise LossModelError(f"loss must be non-negative, got {self.value!r}")


@dataclass(frozen=True)
class Band:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise LossModelError(f"loss must be non-negative, got {self.lo!r}")
        if self.lo > self.hi:
            raise LossModelError(
                f"band lower bound {self.lo!r} exceeds upper bound {self.hi!r}"
            )


LossValue = Union[Scalar, Band]


@dataclass(frozen=True)
class PointLoss:
    value: TimeExpr


@dataclass(frozen=True)
class UniformLoss:
    a: TimeExpr
    b: TimeExpr


@dataclass(frozen=True)
class NormalBandLoss:
    mu: TimeExpr
    sigma: TimeExpr
    n: int

    def __post_init__(self) -> None:
        if self.n not in (1, 2, 3):
            raise ValueError(f"n must be 1, 2, or 3, got {self.n!r}")


@dataclass(frozen=True)
class IntervalLoss:
    lo: TimeExpr
    hi: TimeExpr


@dataclass(frozen=True)
class FuzzyElement:
    value: TimeExpr
    membership: TimeExpr


@dataclass(frozen=True)
class FuzzyLoss:
    elements: tuple[FuzzyElement, ...]
    eta: TimeExpr
    strong: bool = False

    def __init__(
        self,
        elements: Iterable[FuzzyElement],
        eta: TimeExpr,
        strong: bool = False,
    ):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "strong", bool(strong))
        if not self.elements:
            raise ValueError("fuzzy loss needs at least one element")


LossSpec = Union[PointLoss, UniformLoss, NormalBandLoss, IntervalLoss, FuzzyLoss]

ENTRY_NAMES = ("pp", "bp", "np", "nn", "bn", "pn")


@dataclass(frozen=True)
class LossMatrix:
    """Six loss entries, all of the same variant family."""

    pp: LossSpec
    bp: LossSpec
    np_: LossSpec
    nn: LossSpec
    bn: LossSpec
    pn: LossSpec

    def __post_init__(self) -> None:
        family = type(self.pp)
        for name, spec in self.entries:
            if type(spec) is not family:
                raise ValueError(
                    "mixed loss families: "
                    f"pp is {family.__name__} but {name} is {type(spec).__name__}"
                )

    @property
    def entries(self) -> tuple[tuple[str, LossSpec], ...]:
        """The six (name, spec) pairs in canonical order."""
        return (
            ("pp", self.pp),
            ("bp", self.bp),
            ("np", self.np_),
            ("nn", self.nn),
            ("bn", self.bn),
            ("pn", self.pn),
        )

    @property
    def family(self) -> type:
        return type(self.pp)


def cut_set(
    elements: Iterable[FuzzyElement],
    eta_value: float,
    strong: bool,
    t: float,
) -> frozenset[float]:
    """Values of a discrete fuzzy number whose membership reaches ``eta_value``.

    Memberships must lie in [0, 1], as must ``eta_value``.  When two
    elements evaluate to the same value at ``t``, the larger membership
    wins.  ``strong`` switches the comparison from ``>=`` to ``>``.
    """

    if not 0 <= eta_value <= 1:
        raise LossModelError(f"cut level must be in [0, 1], got {eta_value!r}")
    merged: dict[float, float] = {}
    for element in elements:
        value = element.value(t)
        membership = element.membership(t)
        if not 0 <= membership <= 1:
            raise LossModelError(
                f"membership of '{element.membership}' is {membership!r} "
                f"at t={t!r}, outside [0, 1]"
            )
        if membership > merged.get(value, -1.0):
            merged[value] = membership
    if strong:
        kept = {v for v, m in merged.items() if m > eta_value}
    else:
        kept = {v for v, m in merged.items() if m >= eta_value}
    return frozenset(kept)


def evaluate_loss(spec: LossSpec, t: float) -> LossValue:
    """Evaluate one loss entry at time ``t``.

    Point and uniform entries produce a ``Scalar`` (the uniform one via
    its midpoint); normal-band, interval, and fuzzy entries produce a
    ``Band``.  Violated shape constraints (a > b, mu - n*sigma < 0,
    lo > hi, empty cut, negative loss) raise ``LossModelError``.
    """

    if isinstance(spec, PointLoss):
        return Scalar(spec.value(t))
    if isinstance(spec, UniformLoss):
        a = spec.a(t)
        b = spec.b(t)
        if a > b:
            raise LossModelError(
                f"uniform endpoints inverted at t={t!r}: "
                f"'{spec.a}' = {a!r} > '{spec.b}' = {b!r}"
            )
        if a < 0:
            raise LossModelError(f"loss must be non-negative, got {a!r} at t={t!r}")
        return Scalar((a + b) / 2)
    if isinstance(spec, NormalBandLoss):
        mu = spec.mu(t)
        sigma = spec.sigma(t)
        if sigma < 0:
            raise LossModelError(f"sigma is negative ({sigma!r}) at t={t!r}")
        spread = spec.n * sigma
        if mu - spread < 0:
            raise LossModelError(
                f"normal band dips below zero at t={t!r}: "
                f"mu - n*sigma = {mu - spread!r}"
            )
        return Band(mu - spread, mu + spread)
    if isinstance(spec, IntervalLoss):
        lo = spec.lo(t)
        hi = spec.hi(t)
        if lo > hi:
            raise LossModelError(
                f"interval endpoints inverted at t={t!r}: "
                f"'{spec.lo}' = {lo!r} > '{spec.hi}' = {hi!r}"
            )
        if lo < 0:
            raise LossModelError(f"loss must be non-negative, got {lo!r} at t={t!r}")
        return Band(lo, hi)
    if isinstance(spec, FuzzyLoss):
        eta_value = spec.eta(t)
        if not 0 <= eta_value <= 1:
            raise LossModelError(
                f"cut level '{spec.eta}' is {eta_value!r} at t={t!r}, outside [0, 1]"
            )
        kept = cut_set(spec.elements, eta_value, spec.strong, t)
        if not kept:
            raise LossModelError(
                f"empty cut at t={t!r}: no membership reaches {eta_value!r}"
            )
        lo = min(kept)
        if lo < 0:
            raise LossModelError(f"loss must be non-negative, got {lo!r} at t={t!r}")
        return Band(lo, max(kept))
    raise TypeError(f"not a loss spec: {spec!r}")


def bounds_at(spec: LossSpec, t: float) -> tuple[float, float]:
    """Lower and upper representative of one entry at ``t``.

    Point entries repeat their value, uniform entries report their raw
    support endpoints (a, b), and banded variants use the band
    endpoints.
    """

    value = evaluate_loss(spec, t)
    if isinstance(spec, UniformLoss):
        # evaluate_loss has enforced a <= b and non-negativity
        return spec.a(t), spec.b(t)
    if isinstance(value, Scalar):
        return value.value, value.value
    return value.lo, value.hi


def central_at(spec: LossSpec, t: float) -> float:
    """Central scalar representative of one entry at ``t``."""

    if isinstance(spec, NormalBandLoss):
        # evaluate to enforce the band invariants, then use the mean
        evaluate_loss(spec, t)
        return spec.mu(t)
    value = evaluate_loss(spec, t)
    if isinstance(value, Scalar):
        return value.value
    return (value.lo + value.hi) / 2


class OrderingMode(enum.Enum):
    """Which representative of each entry the ordering check uses."""

    CENTRAL = "central"
    LOWER = "lower"
    UPPER = "upper"
    INTERLEAVED = "interleaved"


@dataclass(frozen=True)
class OrderingViolation:
    constraint: str
    t: float
    lhs: float
    rhs: float

    def __str__(self) -> str:
        return f"{self.constraint} fails at t={self.t!r}: {self.lhs!r} > {self.rhs!r}"


@dataclass(frozen=True)
class OrderingReport:
    mode: OrderingMode
    t: float
    violations: tuple[OrderingViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> OrderingViolation | None:
        return self.violations[0] if self.violations else None


_CHAINS = (("pp", "bp", "np"), ("nn", "bn", "pn"))


def validate_ordering(
    matrix: LossMatrix, t: float, mode: OrderingMode
) -> OrderingReport:
    """Check the loss-ordering chains at ``t``.

    For the scalar modes the constraint is ``pp <= bp <= np`` and
    ``nn <= bn <= pn`` on the chosen representative (central value,
    all lower bounds, or all upper bounds).  INTERLEAVED additionally
    demands that consecutive entries' bands do not overlap:
    ``upper(pp) <= lower(bp) <= upper(bp) <= lower(np)`` and the same
    along the nn/bn/pn chain.
    """

    specs = dict(matrix.entries)
    violations: list[OrderingViolation] = []

    def check(constraint: str, lhs: float, rhs: float) -> None:
        if lhs > rhs:
            violations.append(OrderingViolation(constraint, t, lhs, rhs))

    if mode is OrderingMode.INTERLEAVED:
        for chain in _CHAINS:
            bounds = {name: bounds_at(specs[name], t) for name in chain}
            for left, right in zip(chain, chain[1:]):
                check(
                    f"upper({left}) <= lower({right})",
                    bounds[left][1],
                    bounds[right][0],
                )
    else:
        if mode is OrderingMode.CENTRAL:
            rep = {name: central_at(spec, t) for name, spec in matrix.entries}
            label = "central"
        elif mode is OrderingMode.LOWER:
            rep = {name: bounds_at(spec, t)[0] for name, spec in matrix.entries}
            label = "lower"
        elif mode is OrderingMode.UPPER:
            rep = {name: bounds_at(spec, t)[1] for name, spec in matrix.entries}
            label = "upper"
        else:
            raise TypeError(f"not an ordering mode: {mode!r}")
        for chain in _CHAINS:
            for left, right in zip(chain, chain[1:]):
                check(f"{label}({left}) <= {label}({right})", rep[left], rep[right])

    return OrderingReport(mode, t, tuple(violations))
