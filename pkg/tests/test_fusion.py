"""Unit tests for the Beta fusion core.

Frozen reference values were computed with a separate 50-digit
script evaluating the moment inversion, the kernel-product posterior
and the weighted sum directly; every frozen value is additionally
cross-checked here through an independent route (round trips, the
posterior-mean identity, or the exact closed form).
"""
import math

import pytest

from betatrust import (
    BetaParams,
    DegeneratePosteriorError,
    InvalidVarianceError,
    MEAN_EPSILON,
    TrustEstimate,
    beta_mean,
    beta_pdf,
    beta_variance,
    clamp_mean,
    combined_trust,
    fusion_weights,
    moments_to_beta,
    posterior_params,
)

# moment inversion of (0.6844, 0.01) and (0.0445, 0.01); 50-digit script
ALPHA_A_13 = 14.0984100416
BETA_A_13 = 6.5012539584
ALPHA_B_13 = 0.1447128875
BETA_B_13 = 3.1072621125
COMBINED_13 = 0.6060471220991707
W_A_13 = 0.9427056707279486
W_B_13 = -0.8795649201581424
K_13 = 21.851639


class TestBetaPdf:
    def test_uniform(self):
        assert beta_pdf(BetaParams(1, 1), 0.3) == pytest.approx(1.0, abs=1e-12)

    def test_symmetric(self):
        assert beta_pdf(BetaParams(2, 2), 0.5) == pytest.approx(1.5, abs=1e-12)

    def test_asymmetric(self):
        # 12 * 0.5 * 0.25
        assert beta_pdf(BetaParams(2, 3), 0.5) == pytest.approx(1.5, abs=1e-12)

    def test_large_shapes_stay_finite(self):
        assert beta_pdf(BetaParams(400, 600), 0.4) > 0.0

    @pytest.mark.parametrize("x", [-0.1, 1.1, 2.0])
    def test_domain_error(self, x):
        with pytest.raises(ValueError):
            beta_pdf(BetaParams(2, 2), x)

    def test_endpoint_zero_density(self):
        assert beta_pdf(BetaParams(2, 2), 0.0) == 0.0
        assert beta_pdf(BetaParams(2, 2), 1.0) == 0.0

    def test_endpoint_infinite_density_signalled(self):
        assert beta_pdf(BetaParams(0.5, 2), 0.0) == math.inf
        assert beta_pdf(BetaParams(2, 0.5), 1.0) == math.inf

    def test_endpoint_unit_exponent(self):
        # Beta(1, b) at 0 reduces to the normalising constant b
        assert beta_pdf(BetaParams(1, 2), 0.0) == pytest.approx(2.0, rel=1e-12)
        assert beta_pdf(BetaParams(3, 1), 1.0) == pytest.approx(3.0, rel=1e-12)


class TestMoments:
    @pytest.mark.parametrize(
        "params, mean",
        [(BetaParams(1, 1), 0.5), (BetaParams(2, 3), 0.4), (BetaParams(10, 10), 0.5)],
    )
    def test_mean(self, params, mean):
        assert beta_mean(params) == pytest.approx(mean, abs=1e-15)

    @pytest.mark.parametrize(
        "params, variance",
        [
            (BetaParams(1, 1), 1 / 12),
            (BetaParams(2, 2), 0.05),
            (BetaParams(2, 3), 0.04),
        ],
    )
    def test_variance(self, params, variance):
        assert beta_variance(params) == pytest.approx(variance, abs=1e-15)


class TestMomentsToBeta:
    def test_uniform_moments(self):
        params = moments_to_beta(TrustEstimate(0.5, 1 / 12))
        assert params.alpha == pytest.approx(1.0, rel=1e-12)
        assert params.beta == pytest.approx(1.0, rel=1e-12)

    def test_symmetric(self):
        params = moments_to_beta(TrustEstimate(0.5, 0.05))
        assert params.alpha == pytest.approx(2.0, rel=1e-12)
        assert params.beta == pytest.approx(2.0, rel=1e-12)

    def test_reference_edge_estimate(self):
        params = moments_to_beta(TrustEstimate(0.6844, 0.01))
        assert params.alpha == pytest.approx(ALPHA_A_13, rel=1e-12)
        assert params.beta == pytest.approx(BETA_A_13, rel=1e-12)
        # independent confirmation: the moments round-trip
        assert beta_mean(params) == pytest.approx(0.6844, rel=1e-12)
        assert beta_variance(params) == pytest.approx(0.01, rel=1e-12)

    def test_pessimistic_source_small_alpha(self):
        params = moments_to_beta(TrustEstimate(0.0445, 0.01))
        assert params.alpha == pytest.approx(ALPHA_B_13, rel=1e-12)
        assert params.beta == pytest.approx(BETA_B_13, rel=1e-12)

    def test_mean_clamped_at_zero(self):
        params = moments_to_beta(TrustEstimate(0.0, 1e-8))
        assert beta_mean(params) == pytest.approx(MEAN_EPSILON, rel=1e-9)

    def test_mean_clamped_at_one(self):
        params = moments_to_beta(TrustEstimate(1.0, 1e-8))
        assert beta_mean(params) == pytest.approx(1.0 - MEAN_EPSILON, rel=1e-9)

    @pytest.mark.parametrize("variance", [0.25, 0.3, 1.0])
    def test_unreachable_variance(self, variance):
        with pytest.raises(InvalidVarianceError):
            moments_to_beta(TrustEstimate(0.5, variance))

    def test_nonpositive_variance_rejected_at_construction(self):
        with pytest.raises(InvalidVarianceError):
            TrustEstimate(0.5, 0.0)
        with pytest.raises(InvalidVarianceError):
            TrustEstimate(0.5, -0.01)

    def test_mean_out_of_range(self):
        with pytest.raises(ValueError):
            TrustEstimate(1.0001, 0.01)


class TestPosterior:
    def test_uniform_pair(self):
        assert posterior_params(BetaParams(1, 1), BetaParams(1, 1)) == BetaParams(1, 1)

    def test_shape_arithmetic(self):
        assert posterior_params(BetaParams(2, 3), BetaParams(4, 5)) == BetaParams(5, 7)

    def test_symmetric_posterior_mean(self):
        # kernel product of Beta(2,2) with itself is Beta(3,3): mean 1/2
        post = posterior_params(BetaParams(2, 2), BetaParams(2, 2))
        assert post == BetaParams(3, 3)
        assert beta_mean(post) == pytest.approx(0.5, abs=1e-15)

    def test_degenerate_alpha(self):
        with pytest.raises(DegeneratePosteriorError):
            posterior_params(BetaParams(0.5, 2), BetaParams(0.5, 2))

    def test_degenerate_beta(self):
        with pytest.raises(DegeneratePosteriorError):
            posterior_params(BetaParams(2, 0.4), BetaParams(2, 0.6))


class TestFusionWeights:
    def test_symmetric_pair(self):
        weights = fusion_weights(BetaParams(2, 2), BetaParams(2, 2))
        assert weights.k == pytest.approx(6.0, abs=1e-15)
        assert weights.w_a == pytest.approx(2 / 3, abs=1e-15)
        assert weights.w_b == pytest.approx(1 / 3, abs=1e-15)

    def test_asymmetric_pair(self):
        weights = fusion_weights(BetaParams(2, 3), BetaParams(4, 5))
        assert weights.k == pytest.approx(12.0, abs=1e-15)
        assert weights.w_a == pytest.approx(5 / 12, abs=1e-15)
        assert weights.w_b == pytest.approx(9 * 3 / (4 * 12), abs=1e-15)

    @pytest.mark.parametrize(
        "pair",
        [
            (BetaParams(2, 2), BetaParams(2, 2)),
            (BetaParams(2, 3), BetaParams(4, 5)),
            (BetaParams(14.0984100416, 6.5012539584), BetaParams(0.1447128875, 3.1072621125)),
        ],
    )
    def test_weighted_sum_identity(self, pair):
        params_a, params_b = pair
        weights = fusion_weights(params_a, params_b)
        lhs = weights.w_a * beta_mean(params_a) + weights.w_b * beta_mean(params_b)
        rhs = (params_a.alpha + params_b.alpha - 1.0) / weights.k
        assert lhs == pytest.approx(rhs, abs=1e-14)

    def test_negative_weight_for_alpha_below_one(self):
        weights = fusion_weights(
            BetaParams(ALPHA_A_13, BETA_A_13), BetaParams(ALPHA_B_13, BETA_B_13)
        )
        assert weights.k == pytest.approx(K_13, rel=1e-12)
        assert weights.w_a == pytest.approx(W_A_13, rel=1e-12)
        assert weights.w_b == pytest.approx(W_B_13, rel=1e-12)
        assert weights.w_b < 0.0

    def test_degenerate_k(self):
        with pytest.raises(DegeneratePosteriorError):
            fusion_weights(BetaParams(0.4, 0.4), BetaParams(0.5, 0.5))


class TestCombinedTrust:
    def test_symmetric_case(self):
        c = combined_trust(TrustEstimate(0.5, 0.05), TrustEstimate(0.5, 0.05))
        assert c == pytest.approx(0.5, abs=1e-14)

    def test_identical_inputs_match_doubled_shapes(self):
        estimate = TrustEstimate(0.73, 0.004)
        params = moments_to_beta(estimate)
        expected = beta_mean(BetaParams(2 * params.alpha - 1, 2 * params.beta - 1))
        assert combined_trust(estimate, estimate) == pytest.approx(expected, rel=1e-12)

    def test_reference_edge(self):
        c = combined_trust(TrustEstimate(0.6844, 0.01), TrustEstimate(0.0445, 0.01))
        assert c == pytest.approx(COMBINED_13, rel=1e-12)

    def test_matches_posterior_mean_route(self):
        direct = TrustEstimate(0.6844, 0.01)
        indirect = TrustEstimate(0.0445, 0.01)
        posterior = posterior_params(moments_to_beta(direct), moments_to_beta(indirect))
        assert combined_trust(direct, indirect) == pytest.approx(
            beta_mean(posterior), abs=1e-14
        )

    def test_role_swap_changes_result(self):
        direct = TrustEstimate(0.6844, 0.01)
        indirect = TrustEstimate(0.0445, 0.02)
        assert combined_trust(direct, indirect) != combined_trust(indirect, direct)

    def test_propagates_invalid_variance(self):
        with pytest.raises(InvalidVarianceError):
            combined_trust(TrustEstimate(0.5, 0.3), TrustEstimate(0.5, 0.05))

    def test_propagates_degenerate_posterior(self):
        # alpha = 0.05 each: the combined shapes would not be positive
        weak = TrustEstimate(0.1, 0.06)
        with pytest.raises(DegeneratePosteriorError):
            combined_trust(weak, weak)

    def test_deterministic(self):
        a = TrustEstimate(0.3141592653589793, 0.0123456789)
        b = TrustEstimate(0.2718281828459045, 0.0098765432)
        assert combined_trust(a, b) == combined_trust(a, b)


def test_clamp_mean_bounds():
    assert clamp_mean(-1.0) == MEAN_EPSILON
    assert clamp_mean(2.0) == 1.0 - MEAN_EPSILON
    assert clamp_mean(0.5) == 0.5


def test_beta_params_must_be_positive():
    with pytest.raises(ValueError):
        BetaParams(0.0, 1.0)
    with pytest.raises(ValueError):
        BetaParams(1.0, -2.0)
