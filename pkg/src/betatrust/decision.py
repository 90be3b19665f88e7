"""Job-acceptance decisions: required trust versus the trust sources.

A request carries a required trust level T.  It is tested against the
sources in a fixed short-circuit order: direct trust A first, then
indirect trust B, then the fused combined trust C.  Whichever source
first reaches T accepts the job with zero risk and the combined value is
never computed.  Only when the chain falls through to C is a risk value
R = max(0, T - C) attached; the node's risk appetite then separates
accepting the shortfall from declining the job.

Risk is derived from the combined value only, never from an A or B
shortfall: a job cleared by A or B carries no risk by definition.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .fusion import TrustEstimate, _check_unit_interval, combined_trust

# Anything turning a (direct, indirect) pair into one combined trust
# value; combined_trust is the default, simple averaging the alternative.
Combiner = Callable[[TrustEstimate, TrustEstimate], float]


class Decision(Enum):
    """Outcome of evaluating one job request against one peer."""

    ACCEPT_DIRECT = "AcceptDirect"
    ACCEPT_INDIRECT = "AcceptIndirect"
    ACCEPT_COMBINED = "AcceptCombined"
    ACCEPT_WITH_RISK = "AcceptWithRisk"
    DECLINE = "Decline"

    @property
    def accepted(self) -> bool:
        return self is not Decision.DECLINE

    @property
    def reached_combined(self) -> bool:
        """True when the decision required computing the combined trust."""
        return self in (
            Decision.ACCEPT_COMBINED,
            Decision.ACCEPT_WITH_RISK,
            Decision.DECLINE,
        )


@dataclass(frozen=True)
class RiskAppetite:
    """Maximum risk a node is willing to take when trust falls short.

    The default of 0 declines on any shortfall.
    """

    max_acceptable_risk: float = 0.0

    def __post_init__(self) -> None:
        _check_unit_interval("max_acceptable_risk", self.max_acceptable_risk)


@dataclass(frozen=True)
class TrustRecord:
    """One directed edge's bookkeeping: requirement, sources, outcome.

    combined is None exactly when the decision short-circuited before
    the combined-trust step; serialisers render the absent value as 0.
    The one exception is the self-trust convention of self_record, which
    fixes combined at 1 without evaluating anything.  The full estimates
    rather than bare means are kept so the record can be re-evaluated
    when either source is updated.
    """

    required: float
    direct: TrustEstimate
    indirect: TrustEstimate
    combined: Optional[float]
    risk: float
    decision: Decision

    def __post_init__(self) -> None:
        _check_unit_interval("required", self.required)
        _check_unit_interval("risk", self.risk)


def risk_value(required: float, achieved: float) -> float:
    """Shortfall of the achieved trust against the requirement.

    Returns max(0, required - achieved): zero whenever the achieved
    trust covers the requirement, never negative, non-increasing in
    achieved and non-decreasing in required.
    """
    _check_unit_interval("required", required)
    _check_unit_interval("achieved", achieved)
    return max(0.0, required - achieved)


def evaluate_request(
    required: float,
    direct: TrustEstimate,
    indirect: TrustEstimate,
    appetite: RiskAppetite = RiskAppetite(),
    combiner: Combiner = combined_trust,
) -> TrustRecord:
    """Run the A -> B -> C short-circuit chain for one job request.

    Acceptance via A or B leaves combined absent and risk 0.  Otherwise
    the combiner produces C, risk becomes max(0, required - C), and the
    outcome is ACCEPT_COMBINED (no shortfall), ACCEPT_WITH_RISK
    (shortfall within appetite) or DECLINE.

    Fusion errors from the combiner propagate unchanged; batch callers
    attach edge identification (see netsim.run_assessment).
    """
    _check_unit_interval("required", required)
    if direct.mean >= required:
        return TrustRecord(required, direct, indirect, None, 0.0, Decision.ACCEPT_DIRECT)
    if indirect.mean >= required:
        return TrustRecord(required, direct, indirect, None, 0.0, Decision.ACCEPT_INDIRECT)
    combined = combiner(direct, indirect)
    risk = risk_value(required, combined)
    if risk == 0.0:
        decision = Decision.ACCEPT_COMBINED
    elif risk <= appetite.max_acceptable_risk:
        decision = Decision.ACCEPT_WITH_RISK
    else:
        decision = Decision.DECLINE
    return TrustRecord(required, direct, indirect, combined, risk, decision)


def self_record() -> TrustRecord:
    """The fixed convention for a node's trust in itself.

    A node blindly trusts itself: no required trust, no risk, and all
    three trust values pinned at 1.  These diagonal values never enter
    any calculation.
    """
    full = TrustEstimate(mean=1.0)
    return TrustRecord(0.0, full, full, 1.0, 0.0, Decision.ACCEPT_DIRECT)


def update_record(
    old: TrustRecord,
    new_direct: Optional[TrustEstimate] = None,
    new_indirect: Optional[TrustEstimate] = None,
    appetite: RiskAppetite = RiskAppetite(),
    combiner: Combiner = combined_trust,
) -> TrustRecord:
    """Replace one or both trust estimates and re-evaluate from scratch.

    Trust evolution is re-formation: the result is identical to a fresh
    evaluate_request on the merged inputs, so updating with the existing
    estimates is a no-op.
    """
    if new_direct is None and new_indirect is None:
        raise ValueError("update_record needs at least one new estimate")
    return evaluate_request(
        old.required,
        new_direct if new_direct is not None else old.direct,
        new_indirect if new_indirect is not None else old.indirect,
        appetite,
        combiner,
    )


def average_combiner(direct: TrustEstimate, indirect: TrustEstimate) -> float:
    """Unweighted average (A + B) / 2 of the two source means.

    A naive stand-in baseline for side-by-side comparison with the Beta
    fusion; it is not a calibrated weighting scheme and ignores the
    variances entirely.
    """
    return (direct.mean + indirect.mean) / 2.0


#: Named combiners selectable from configuration and the command line.
COMBINERS: dict[str, Combiner] = {
    "beta": combined_trust,
    "average": average_combiner,
}
