"""Expected risk of the three actions, and the minimum-risk decision.

This is the ground-truth decision rule that the threshold machinery
compresses into (alpha, beta): given a concept probability ``p`` and
six scalar losses, each action's expected risk is a convex combination
of its two losses, and the cheapest action wins.  Ties break toward
accept, then reject, then defer, which matches how the thresholds treat
boundary probabilities.

The arithmetic is plain ``+ * <=`` on whatever real type the inputs
carry; ``fractions.Fraction`` inputs make the comparison exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rough import Region

__all__ = ["RiskTriple", "expected_risks", "min_risk_region"]


@dataclass(frozen=True)
class RiskTriple:
    accept: float
    defer: float
    reject: float


def expected_risks(p, pp, bp, np_, nn, bn, pn) -> RiskTriple:
    """Expected risk of accept, defer, and reject at probability ``p``.

    ``pp``/``pn`` are the accept losses inside/outside the concept,
    ``bp``/``bn`` the defer losses, ``np_``/``nn`` the reject losses.
    """

    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p!r}")
    q = 1 - p
    return RiskTriple(pp * p + pn * q, bp * p + bn * q, np_ * p + nn * q)


def min_risk_region(p, pp, bp, np_, nn, bn, pn) -> Region:
    """Region of the cheapest action at probability ``p``.

    Ties resolve POS over NEG over BND.
    """

    risks = expected_risks(p, pp, bp, np_, nn, bn, pn)
    if risks.accept <= risks.defer and risks.accept <= risks.reject:
        return Region.POS
    if risks.reject <= risks.defer and risks.reject <= risks.accept:
        return Region.NEG
    return Region.BND
