import math

import pytest

from phasecat import (DiscreteObservable, RateProfile, ValidationError,
                      bernoulli, binary_entropy, cgf, cgf_prime, cramer,
                      legendre)

BERNOULLI_PS = (0.1, 0.3, 0.5, 0.7)


def bernoulli_cgf(p, theta):
    return math.log(1.0 - p * (1.0 - math.exp(theta)))


def bernoulli_rate(p, x):
    """Relative entropy form of the Bernoulli Legendre transform."""
    return x * math.log(x / p) + (1 - x) * math.log((1 - x) / (1 - p))


class TestObservable:
    def test_mean_and_support(self):
        obs = DiscreteObservable(((-1.0, 0.25), (0.0, 0.5), (2.0, 0.25)))
        assert obs.mean == pytest.approx(0.25)
        assert obs.support == (-1.0, 2.0)

    def test_rejects_nonpositive_probability(self):
        with pytest.raises(ValidationError):
            DiscreteObservable(((0.0, 0.0), (1.0, 1.0)))

    def test_rejects_bad_total(self):
        with pytest.raises(ValidationError):
            DiscreteObservable(((0.0, 0.4), (1.0, 0.4)))

    def test_rejects_degenerate_support(self):
        with pytest.raises(ValidationError):
            DiscreteObservable(((1.0, 0.5), (1.0, 0.5)))

    def test_bernoulli_parameter_range(self):
        with pytest.raises(ValidationError):
            bernoulli(0.0)
        with pytest.raises(ValidationError):
            bernoulli(1.0)


class TestCGF:
    def test_zero_at_origin(self):
        for p in BERNOULLI_PS:
            assert cgf(bernoulli(p), 0.0) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("p", BERNOULLI_PS)
    def test_bernoulli_closed_form(self, p):
        obs = bernoulli(p)
        for theta in (-2.0, -1.0, 0.0, 1.0, 2.0, 10.0, -30.0):
            assert cgf(obs, theta) \
                == pytest.approx(bernoulli_cgf(p, theta), abs=1e-12)

    def test_two_point_example(self):
        obs = DiscreteObservable(((0.0, 0.5), (2.0, 0.5)))
        assert cgf(obs, 1.0) \
            == pytest.approx(math.log((1.0 + math.e ** 2) / 2.0))

    def test_large_theta_no_overflow(self):
        obs = bernoulli(0.5)
        g = cgf(obs, 800.0)
        assert math.isfinite(g)
        assert g == pytest.approx(800.0 + math.log(0.5), abs=1e-9)

    def test_rejects_non_finite_theta(self):
        with pytest.raises(ValidationError):
            cgf(bernoulli(0.5), math.inf)

    def test_derivative_matches_finite_difference(self):
        obs = bernoulli(0.3)
        for theta in (-1.0, 0.0, 0.5, 2.0):
            h = 1e-6
            fd = (cgf(obs, theta + h) - cgf(obs, theta - h)) / (2 * h)
            assert cgf_prime(obs, theta) == pytest.approx(fd, abs=1e-8)

    def test_convexity_second_differences(self):
        obs = bernoulli(0.3)
        h = 1e-3
        prev2, prev1 = cgf(obs, -5.0), cgf(obs, -5.0 + h)
        theta = -5.0 + 2 * h
        while theta <= 5.0:
            cur = cgf(obs, theta)
            assert cur - 2 * prev1 + prev2 >= -1e-9
            prev2, prev1 = prev1, cur
            theta += h


class TestLegendre:
    def test_zero_at_mean(self):
        for p in BERNOULLI_PS:
            assert abs(legendre(bernoulli(p), p)) <= 1e-12

    @pytest.mark.parametrize("p", BERNOULLI_PS)
    def test_bernoulli_relative_entropy(self, p):
        obs = bernoulli(p)
        for k in range(1, 20):
            x = k / 20.0
            assert legendre(obs, x) \
                == pytest.approx(bernoulli_rate(p, x), abs=1e-9)

    def test_boundary_rejected(self):
        obs = bernoulli(0.5)
        for x in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ValidationError):
                legendre(obs, x)

    def test_fenchel_inequality(self):
        # theta*x <= Gamma(theta) + Gamma*(x) for all theta, x
        obs = DiscreteObservable(((-1.0, 0.3), (0.0, 0.2), (1.0, 0.5)))
        for theta in (-3.0, -1.0, 0.0, 0.7, 2.5):
            g = cgf(obs, theta)
            for k in range(1, 10):
                x = -1.0 + 2.0 * k / 10.0
                assert theta * x <= g + legendre(obs, x) + 1e-9

    def test_convex_in_x(self):
        obs = bernoulli(0.4)
        xs = [0.05 + 0.9 * k / 40 for k in range(41)]
        vals = [legendre(obs, x) for x in xs]
        for i in range(1, len(vals) - 1):
            assert vals[i + 1] - 2 * vals[i] + vals[i - 1] >= -1e-9

    def test_nonnegative(self):
        obs = DiscreteObservable(((0.0, 0.25), (1.0, 0.25), (3.0, 0.5)))
        for k in range(1, 30):
            x = 3.0 * k / 30.0
            assert legendre(obs, x) >= -1e-12


class TestCramer:
    def test_sum_with_legendre_is_zero(self):
        obs = bernoulli(0.3)
        for k in range(1, 10):
            x = k / 10.0
            assert cramer(obs, x) + legendre(obs, x) == 0.0

    def test_nonpositive(self):
        obs = bernoulli(0.7)
        for k in range(1, 10):
            assert cramer(obs, k / 10.0) <= 1e-12

    def test_uniform_coin_rate_is_entropy_defect(self):
        # for p = 1/2: C(x) = S(x) - log 2
        obs = bernoulli(0.5)
        for k in range(1, 10):
            x = k / 10.0
            assert cramer(obs, x) \
                == pytest.approx(binary_entropy(x) - math.log(2.0),
                                 abs=1e-9)


class TestBinaryEntropy:
    def test_endpoints_vanish(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_maximum_at_half(self):
        assert binary_entropy(0.5) == pytest.approx(math.log(2.0))
        assert binary_entropy(0.3) < binary_entropy(0.5)

    def test_symmetry(self):
        for x in (0.1, 0.25, 0.4):
            assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x))

    def test_domain_checked(self):
        with pytest.raises(ValidationError):
            binary_entropy(-0.1)
        with pytest.raises(ValidationError):
            binary_entropy(1.1)


class TestRateProfile:
    def test_bundles_everything(self):
        rp = RateProfile(bernoulli(0.3))
        assert rp.mean_value == pytest.approx(0.3)
        assert rp.cgf(0.0) == pytest.approx(0.0, abs=1e-15)
        assert rp.conjugate(0.3) == pytest.approx(0.0, abs=1e-12)
        assert rp.cramer(0.5) == -rp.conjugate(0.5)
