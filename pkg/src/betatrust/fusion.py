"""Beta-distribution fusion of direct and indirect trust estimates.

Each trust source is summarised as an estimate (mean, variance) of the
probability p that a peer behaves well.  An estimate is matched to a
Beta(alpha, beta) distribution by the method of moments:

    alpha = m * (m * (1 - m) / var - 1)
    beta  = alpha * (1 - m) / m

With the direct-trust Beta acting as the prior and the indirect-trust
Beta kernel as the likelihood, the product of the two kernels

    p^(aA - 1) * (1 - p)^(bA - 1) * p^(aB - 1) * (1 - p)^(bB - 1)

is the kernel of Beta(aA + aB - 1, bA + bB - 1).  Its mean is the
combined trust:

    C = (aA + aB - 1) / K,    K = aA + aB + bA + bB - 2

and the same value decomposes into a weighted sum of the source means:

    C = m_A * W_A + m_B * W_B
    W_A = (aA + bA) / K
    W_B = (aB + bB) * (aB - 1) / (aB * K)

Note the shape arithmetic: multiplying the kernels lowers each combined
exponent by one relative to summing the shape parameters outright, hence
the "- 1" in both posterior shapes.  A sloppier bookkeeping that keeps
exponent (bA + bB) on (1 - p) would shift the second shape up by one;
the kernel product above is the form the conjugacy tests pin down.

W_B is negative whenever aB < 1 (a very pessimistic indirect source).
The weighted sum still equals the posterior mean exactly, so negative
weights are returned as-is rather than clipped.

All functions here are pure and deterministic: identical inputs give
bit-identical outputs, and no shared state exists, so they are safe to
call from any number of concurrent contexts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegeneratePosteriorError, InvalidVarianceError

# Trust means are clamped to [EPSILON, 1 - EPSILON] before the moment
# inversion; a mean of exactly 0 or 1 would divide by zero in the beta
# shape formula while clamping preserves the ordering of estimates.
MEAN_EPSILON = 1e-6

# Variance assumed for a trust source that does not report one.  Small
# enough that every mean in (0.0106, 0.9894) stays invertible.
DEFAULT_VARIANCE = 0.01


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")


def clamp_mean(mean: float) -> float:
    """Clamp a trust mean to [MEAN_EPSILON, 1 - MEAN_EPSILON]."""
    return min(max(mean, MEAN_EPSILON), 1.0 - MEAN_EPSILON)


@dataclass(frozen=True)
class BetaParams:
    """Shape pair (alpha, beta) of a Beta distribution, both positive."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise ValueError(
                f"Beta shapes must be positive, got ({self.alpha!r}, {self.beta!r})"
            )


@dataclass(frozen=True)
class TrustEstimate:
    """A trust value in [0, 1] together with the variance of the estimate.

    The variance must be strictly positive.  Whether it is also small
    enough for a Beta distribution with this mean (variance < m*(1-m)
    after clamping) is enforced by moments_to_beta at fusion time, not
    here, so fixed-convention values such as a node's full trust in
    itself (mean 1.0) stay representable in records.
    """

    mean: float
    variance: float = DEFAULT_VARIANCE

    def __post_init__(self) -> None:
        _check_unit_interval("mean", self.mean)
        if not self.variance > 0.0:
            raise InvalidVarianceError(
                f"variance must be positive, got {self.variance!r}"
            )


@dataclass(frozen=True)
class FusionWeights:
    """Weights (w_a, w_b) and normaliser k of the combined-trust sum.

    k equals the sum of all four source shapes minus two, which is also
    the total shape mass of the posterior.  w_a is always positive; w_b
    may be negative or zero when the likelihood's alpha is at most 1.
    """

    w_a: float
    w_b: float
    k: float

    def __post_init__(self) -> None:
        if not self.k > 0.0:
            raise DegeneratePosteriorError(f"normaliser k must be positive, got {self.k!r}")


def beta_pdf(params: BetaParams, x: float) -> float:
    """Density of Beta(alpha, beta) at x, evaluated in log space.

    Log-gamma keeps the normalising constant finite for large shapes.
    The endpoints are legal inputs: where the corresponding exponent is
    negative the density diverges and math.inf is returned rather than
    raising, so callers can distinguish an unbounded density from a
    domain error (x outside [0, 1], which raises ValueError).
    """
    _check_unit_interval("x", x)
    a, b = params.alpha, params.beta
    log_norm = math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
    if x == 0.0 or x == 1.0:
        exponent = a - 1.0 if x == 0.0 else b - 1.0
        if exponent < 0.0:
            return math.inf
        if exponent > 0.0:
            return 0.0
        return math.exp(log_norm)
    return math.exp(log_norm + (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x))


def beta_mean(params: BetaParams) -> float:
    """Expected value alpha / (alpha + beta), strictly inside (0, 1)."""
    return params.alpha / (params.alpha + params.beta)


def beta_variance(params: BetaParams) -> float:
    """Variance alpha*beta / ((alpha+beta+1) * (alpha+beta)^2)."""
    total = params.alpha + params.beta
    return params.alpha * params.beta / ((total + 1.0) * total * total)


def moments_to_beta(estimate: TrustEstimate) -> BetaParams:
    """Recover the Beta shape pair whose mean and variance match the estimate.

    The mean is clamped away from 0 and 1 first.  Raises
    InvalidVarianceError when the variance is at least m*(1-m), the
    supremum attainable by any Beta distribution with mean m; both
    recovered shapes are strictly positive otherwise, and feeding them
    back through beta_mean / beta_variance reproduces the (clamped)
    input moments.
    """
    m = clamp_mean(estimate.mean)
    bound = m * (1.0 - m)
    if estimate.variance >= bound:
        raise InvalidVarianceError(
            f"variance {estimate.variance!r} >= mean*(1-mean) = {bound!r}: "
            "no Beta distribution has these moments"
        )
    alpha = m * (bound / estimate.variance - 1.0)
    beta = alpha * (1.0 - m) / m
    return BetaParams(alpha, beta)


def posterior_params(prior: BetaParams, likelihood: BetaParams) -> BetaParams:
    """Multiply two Beta kernels and return the resulting Beta shape pair.

    Raises DegeneratePosteriorError when either combined shape would be
    non-positive (the evidence is too diffuse to yield a proper
    posterior).
    """
    alpha = prior.alpha + likelihood.alpha - 1.0
    beta = prior.beta + likelihood.beta - 1.0
    if alpha <= 0.0 or beta <= 0.0:
        raise DegeneratePosteriorError(
            f"posterior shapes ({alpha!r}, {beta!r}) are not both positive"
        )
    return BetaParams(alpha, beta)


def fusion_weights(params_a: BetaParams, params_b: BetaParams) -> FusionWeights:
    """Weights turning the two source means into the posterior mean.

    Satisfies w_a * mean_a + w_b * mean_b == (aA + aB - 1) / k exactly
    (up to floating point) for every valid shape pair.
    """
    k = params_a.alpha + params_a.beta + params_b.alpha + params_b.beta - 2.0
    if k <= 0.0:
        raise DegeneratePosteriorError(f"normaliser k = {k!r} is not positive")
    w_a = (params_a.alpha + params_a.beta) / k
    w_b = (
        (params_b.alpha + params_b.beta)
        * (params_b.alpha - 1.0)
        / (params_b.alpha * k)
    )
    return FusionWeights(w_a=w_a, w_b=w_b, k=k)


def combined_trust(direct: TrustEstimate, indirect: TrustEstimate) -> float:
    """Fuse a direct and an indirect trust estimate into the combined trust.

    The direct estimate plays the prior and the indirect estimate the
    likelihood; swap the arguments to swap the roles.  The result is the
    weighted sum m_A * W_A + m_B * W_B of the clamped source means,
    which equals the posterior Beta mean up to floating point and lies
    strictly inside (0, 1).

    Propagates InvalidVarianceError from the moment inversion and
    DegeneratePosteriorError when the combination is degenerate.
    """
    params_a = moments_to_beta(direct)
    params_b = moments_to_beta(indirect)
    posterior_params(params_a, params_b)  # reject degenerate combinations
    weights = fusion_weights(params_a, params_b)
    return clamp_mean(direct.mean) * weights.w_a + clamp_mean(indirect.mean) * weights.w_b
