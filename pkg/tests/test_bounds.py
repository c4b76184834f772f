import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_complex_matrix, random_hermitian, rng_for, spectrum_with_equal_tail
from kdframes.bounds import (
    BoundReport,
    Interval,
    eigen_interval,
    etf_eigen_interval,
    etf_spectral_bound,
    gershgorin_disks,
    gram_frobenius_sq,
    ic_upper_bound,
    kd_frobenius_norm,
    max_eig_upper_bound,
    pure_state_margin,
    renyi_uncertainty_bound,
    singular_interval,
    tsallis_uncertainty_bound,
)
from kdframes.channels import (
    kd_matrix,
    principal_kraus,
    transform_unraveling,
    unraveling_gram,
    unraveling_probabilities,
)
from kdframes.entropy import alpha_log, index_of_coincidence, renyi_entropy, tsallis_entropy
from kdframes.frames import (
    DensityMatrix,
    EtfParameters,
    coherence_constant,
    frame_mixture,
    outcome_probabilities,
    povm_from_frame,
    purity,
    random_density_matrix,
)
from kdframes.linalg import haar_unitary, hermitian_eig, schatten_norm, singular_values

seeds = st.integers(0, 2**32 - 1)

SIC_PARAMS = EtfParameters(4, 2)


def sic_pure_gram(sic):
    ket = sic.vectors[0]
    rho = DensityMatrix(np.outer(ket, ket.conj()))
    return unraveling_gram(principal_kraus(sic), rho)


class TestIcUpperBound:
    def test_sic_pure(self):
        assert ic_upper_bound(SIC_PARAMS, 1.0) == pytest.approx(1.0 / 3.0)

    def test_sic_maximally_mixed(self):
        assert ic_upper_bound(SIC_PARAMS, 0.5) == pytest.approx(0.25)

    @pytest.mark.parametrize("p", [0.4, 0.65, 1.0])
    def test_orthonormal_reduces_to_purity(self, p):
        assert ic_upper_bound(EtfParameters(3, 3), p) == pytest.approx(p)

    def test_purity_domain(self):
        with pytest.raises(ValueError):
            ic_upper_bound(SIC_PARAMS, 0.2)
        with pytest.raises(ValueError):
            ic_upper_bound(SIC_PARAMS, 1.2)

    @settings(deadline=None, max_examples=40)
    @given(seed=seeds)
    def test_holds_and_saturates_for_mixtures(self, seed, trine):
        # The bound holds for arbitrary states and becomes an equality on
        # convex mixtures of the frame states.
        rng = rng_for(seed)
        params = EtfParameters.of_frame(trine)
        povm = povm_from_frame(trine)
        rho = random_density_matrix(2, rng)
        ic = index_of_coincidence(outcome_probabilities(povm, rho))
        assert ic <= ic_upper_bound(params, purity(rho)) + 1e-10
        mixture = frame_mixture(trine, rng.dirichlet(np.ones(3)))
        ic = index_of_coincidence(outcome_probabilities(povm, mixture))
        assert ic == pytest.approx(ic_upper_bound(params, purity(mixture)), abs=1e-10)


class TestGramFrobenius:
    def test_sic_maximally_mixed_value(self):
        assert gram_frobenius_sq(SIC_PARAMS, 0.25, 0.5) == pytest.approx(1.0 / 3.0)

    def test_sic_pure_value(self):
        value = gram_frobenius_sq(SIC_PARAMS, 1.0 / 3.0, 1.0)
        assert value == pytest.approx(5.0 / 9.0)
        assert value == pytest.approx((2 / 3) ** 2 + (1 / 3) ** 2)

    def test_coherence_zero_reduces_to_ic(self):
        assert gram_frobenius_sq(EtfParameters(4, 4), 0.37, 0.8) == pytest.approx(0.37)

    @settings(deadline=None, max_examples=40)
    @given(seed=seeds)
    def test_matches_actual_matrix(self, seed, sic):
        rho = random_density_matrix(2, rng_for(seed))
        u = principal_kraus(sic)
        gram = unraveling_gram(u, rho)
        ic = index_of_coincidence(unraveling_probabilities(u, rho))
        closed = gram_frobenius_sq(SIC_PARAMS, ic, purity(rho))
        assert schatten_norm(gram, 2) ** 2 == pytest.approx(closed, abs=1e-10)


class TestKdFrobenius:
    def test_sic_values(self):
        assert kd_frobenius_norm(SIC_PARAMS, 0.25, 0.5) == pytest.approx(0.5 * np.sqrt(1 / 3))
        assert kd_frobenius_norm(SIC_PARAMS, 1 / 3, 1.0) == pytest.approx(0.5 * np.sqrt(5 / 9))

    def test_projective_basis_state(self):
        assert kd_frobenius_norm(EtfParameters(2, 2), 1.0, 1.0) == pytest.approx(1.0)

    def test_matches_actual_kd_matrix(self, sic):
        rho = random_density_matrix(2, rng_for(21))
        u = principal_kraus(sic)
        ic = index_of_coincidence(unraveling_probabilities(u, rho))
        closed = kd_frobenius_norm(SIC_PARAMS, ic, purity(rho))
        actual = schatten_norm(kd_matrix(povm_from_frame(sic), rho), 2)
        assert actual == pytest.approx(closed, abs=1e-10)


class TestEigenInterval:
    def test_equal_tail_spectrum_sits_on_boundary(self):
        m = spectrum_with_equal_tail(2.0, 0.5, 5, rng_for(3))
        interval = eigen_interval(m)
        assert interval.upper == pytest.approx(2.0, abs=1e-10)

    def test_generic_spectrum_strictly_inside(self):
        m = np.diag([3.0, 2.0, 1.0]).astype(complex)
        interval = eigen_interval(m)
        assert interval.upper > 3.0 + 1e-6
        assert interval.lower < 1.0 - 1e-6

    def test_sic_pure_gram_interval(self, sic):
        interval = eigen_interval(sic_pure_gram(sic))
        assert interval.center == pytest.approx(0.25, abs=1e-12)
        assert interval.radius == pytest.approx(np.sqrt(11.0 / 3.0) / 4.0, abs=1e-12)

    def test_scalar_matrix_degenerate(self):
        interval = eigen_interval(np.array([[2.5]], dtype=complex))
        assert (interval.lower, interval.upper) == (pytest.approx(2.5), pytest.approx(2.5))

    @settings(deadline=None)
    @given(seed=seeds, n=st.integers(2, 8))
    def test_containment(self, seed, n):
        m = random_hermitian(n, rng_for(seed))
        interval = eigen_interval(m)
        for value in hermitian_eig(m).eigenvalues:
            assert interval.slack(float(value)) >= -1e-10


class TestSingularInterval:
    def test_unitary_zero_radius(self):
        u = haar_unitary(4, 17)
        interval = singular_interval(u)
        assert interval.radius == pytest.approx(0.0, abs=1e-7)
        assert interval.center == pytest.approx(1.0, abs=1e-10)

    def test_equal_tail_boundary(self):
        interval = singular_interval(np.diag([2.0, 1.0, 1.0]).astype(complex))
        assert interval.upper == pytest.approx(2.0, abs=1e-10)

    @settings(deadline=None)
    @given(seed=seeds, rows=st.integers(2, 6), cols=st.integers(2, 6))
    def test_containment(self, seed, rows, cols):
        x = random_complex_matrix(rows, cols, rng_for(seed))
        interval = singular_interval(x)
        for value in singular_values(x):
            assert interval.slack(float(value)) >= -1e-10


class TestMaxEigUpperBound:
    def test_identity(self):
        assert max_eig_upper_bound(np.eye(3)) == pytest.approx(1.0)

    def test_equal_tail_saturation(self):
        m = spectrum_with_equal_tail(3.0, 1.0, 6, rng_for(5))
        assert max_eig_upper_bound(m) == pytest.approx(3.0, abs=1e-10)

    def test_sic_pure_gram_value(self, sic):
        bound = max_eig_upper_bound(sic_pure_gram(sic))
        assert bound == pytest.approx((1.0 + np.sqrt(11.0 / 3.0)) / 4.0, abs=1e-12)
        assert 2.0 / 3.0 <= bound < 0.729

    def test_non_psd_rejected(self):
        with pytest.raises(ValueError):
            max_eig_upper_bound(np.diag([1.0, -0.5]).astype(complex))

    @settings(deadline=None)
    @given(seed=seeds, n=st.integers(2, 7))
    def test_dominates_true_maximum(self, seed, n):
        rng = rng_for(seed)
        g = random_complex_matrix(n, n, rng)
        m = g @ g.conj().T
        assert max_eig_upper_bound(m) >= float(np.linalg.eigvalsh(m)[-1]) - 1e-10


class TestGershgorin:
    def test_etf_maximally_mixed_disks(self, catalog):
        for _, frame in catalog:
            params = EtfParameters.of_frame(frame)
            rho = DensityMatrix(np.eye(frame.d) / frame.d)
            gram = unraveling_gram(principal_kraus(frame), rho)
            expected_radius = (frame.n - 1) * params.coherence / frame.n
            for center, radius in gershgorin_disks(gram):
                assert center.real == pytest.approx(1.0 / frame.n, abs=1e-12)
                assert radius == pytest.approx(expected_radius, abs=1e-12)

    def test_diagonal_matrix_zero_radii(self):
        for _, radius in gershgorin_disks(np.diag([1.0, 2.0, 3.0]).astype(complex)):
            assert radius == 0.0

    def test_sic_pure_union_is_unit_interval(self, sic):
        disks = gershgorin_disks(sic_pure_gram(sic))
        upper = max(center.real + radius for center, radius in disks)
        lower = max(0.0, min(center.real - radius for center, radius in disks))
        assert upper == pytest.approx(1.0, abs=1e-12)
        assert lower == pytest.approx(0.0, abs=1e-12)

    @settings(deadline=None)
    @given(seed=seeds, n=st.integers(2, 7))
    def test_eigenvalue_containment(self, seed, n):
        m = random_complex_matrix(n, n, rng_for(seed))
        disks = gershgorin_disks(m)
        for value in np.linalg.eigvals(m):
            assert min(abs(value - center) - radius for center, radius in disks) <= 1e-9


class TestEtfInterval:
    def test_sic_pure_radius(self):
        interval = etf_eigen_interval(SIC_PARAMS, 1.0)
        assert interval.center == pytest.approx(0.25)
        assert interval.radius == pytest.approx(np.sqrt(11.0 / 3.0) / 4.0, abs=1e-12)

    def test_maximally_mixed_matches_gershgorin_radius(self, catalog):
        for _, frame in catalog:
            params = EtfParameters.of_frame(frame)
            interval = etf_eigen_interval(params, 1.0 / frame.d)
            expected = (frame.n - frame.d) / (frame.n * frame.d)
            assert interval.radius == pytest.approx(expected, abs=1e-10)

    def test_orthonormal_formula(self):
        params = EtfParameters(3, 3)
        interval = etf_eigen_interval(params, 1.0)
        assert interval.radius == pytest.approx(np.sqrt(2.0) / 3.0 * np.sqrt(2.0))

    @settings(deadline=None, max_examples=30)
    @given(seed=seeds)
    def test_contains_gram_spectrum_of_any_unraveling(self, seed, sic):
        rng = rng_for(seed)
        rho = random_density_matrix(2, rng)
        u = transform_unraveling(principal_kraus(sic), haar_unitary(4, rng))
        interval = etf_eigen_interval(SIC_PARAMS, purity(rho))
        for value in hermitian_eig(unraveling_gram(u, rho)).eigenvalues:
            assert interval.slack(float(value)) >= -1e-10


class TestEtfSpectralBound:
    def test_sic_pure_stays_below_0729(self):
        assert etf_spectral_bound(SIC_PARAMS, 1.0) < 0.729

    def test_sic_maximally_mixed_achieved_exactly(self, sic):
        bound = etf_spectral_bound(SIC_PARAMS, 0.5)
        assert bound == pytest.approx(0.5, abs=1e-12)
        rho = DensityMatrix(np.eye(2) / 2)
        top = hermitian_eig(unraveling_gram(principal_kraus(sic), rho)).eigenvalues[0]
        assert top == pytest.approx(bound, abs=1e-10)

    def test_below_one_for_pure_frame_states(self, catalog):
        for _, frame in catalog:
            if frame.n == frame.d:
                continue
            assert etf_spectral_bound(EtfParameters.of_frame(frame), 1.0) < 1.0

    @settings(deadline=None, max_examples=30)
    @given(seed=seeds)
    def test_dominates_sampled_spectral_norms(self, seed, sic):
        rng = rng_for(seed)
        rho = random_density_matrix(2, rng)
        u = transform_unraveling(principal_kraus(sic), haar_unitary(4, rng))
        achieved = schatten_norm(unraveling_gram(u, rho), np.inf)
        assert etf_spectral_bound(SIC_PARAMS, purity(rho)) >= achieved - 1e-10


def direct_renyi_bound(n: int, d: int, state_purity: float, alpha: float) -> float:
    """Single-expression transcription of the interpolated bound."""
    c = coherence_constant(n, d)
    s = n / d
    first = (
        alpha * np.log(n)
        - 2.0 * np.log(d)
        - np.log((1 - c) * c * s + ((1 - c) ** 2 + c * s * s) * state_purity)
    ) / (alpha - 1.0)
    radicand = ((1 - c) ** 2 / s**2 + c) * n * state_purity + (1 - c) * c * d - 1.0
    second = (alpha - 2.0) / (alpha - 1.0) * np.log(1.0 + np.sqrt(n - 1.0) * np.sqrt(radicand))
    return first - second


class TestRenyiUncertaintyBound:
    def test_infinite_order_collapses_to_spectral_term(self):
        bound = renyi_uncertainty_bound(SIC_PARAMS, 0.8, np.inf)
        assert bound == pytest.approx(-np.log(etf_spectral_bound(SIC_PARAMS, 0.8)))

    def test_order_two_sic_pure(self):
        assert renyi_uncertainty_bound(SIC_PARAMS, 1.0, 2.0) == pytest.approx(
            -np.log(5.0 / 9.0), abs=1e-12
        )

    def test_domain(self):
        with pytest.raises(ValueError):
            renyi_uncertainty_bound(SIC_PARAMS, 1.0, 1.5)

    @pytest.mark.parametrize("n,d", [(4, 2), (9, 3), (6, 3)])
    @pytest.mark.parametrize("alpha", [2.0, 2.5, 3.0, 7.0, 50.0])
    def test_matches_single_expression_form(self, n, d, alpha):
        params = EtfParameters(n, d)
        for state_purity in np.linspace(1.0 / d, 1.0, 7):
            assert renyi_uncertainty_bound(params, state_purity, alpha) == pytest.approx(
                direct_renyi_bound(n, d, state_purity, alpha), abs=1e-12
            )

    @settings(deadline=None, max_examples=25)
    @given(seed=seeds, alpha=st.floats(2.0, 30.0))
    def test_sampled_unravelings_respect_bound(self, seed, alpha, sic):
        rng = rng_for(seed)
        rho = random_density_matrix(2, rng)
        u = transform_unraveling(principal_kraus(sic), haar_unitary(4, rng))
        achieved = renyi_entropy(unraveling_probabilities(u, rho), alpha)
        assert achieved >= renyi_uncertainty_bound(SIC_PARAMS, purity(rho), alpha) - 1e-10


class TestTsallisUncertaintyBound:
    def test_order_two_sic_pure(self):
        assert tsallis_uncertainty_bound(SIC_PARAMS, 1.0, 2.0) == pytest.approx(
            4.0 / 9.0, abs=1e-12
        )

    def test_order_one_is_plain_log(self):
        s, c = 2.0, 1.0 / 3.0
        arg = s * s / ((1 - c) * c * s + ((1 - c) ** 2 + c * s * s) * 0.7)
        assert tsallis_uncertainty_bound(SIC_PARAMS, 0.7, 1.0) == pytest.approx(np.log(arg))

    @pytest.mark.parametrize("p", [0.4, 0.7, 1.0])
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_orthonormal_reduces_to_alpha_log_of_inverse_purity(self, p, alpha):
        params = EtfParameters(3, 3)
        assert tsallis_uncertainty_bound(params, p, alpha) == pytest.approx(
            alpha_log(1.0 / p, alpha)
        )

    def test_domain(self):
        with pytest.raises(ValueError):
            tsallis_uncertainty_bound(SIC_PARAMS, 1.0, 2.5)
        with pytest.raises(ValueError):
            tsallis_uncertainty_bound(SIC_PARAMS, 1.0, np.inf)

    @settings(deadline=None, max_examples=25)
    @given(seed=seeds, alpha=st.floats(0.05, 2.0))
    def test_sampled_unravelings_respect_bound(self, seed, alpha, sic):
        rng = rng_for(seed)
        rho = random_density_matrix(2, rng)
        u = transform_unraveling(principal_kraus(sic), haar_unitary(4, rng))
        achieved = tsallis_entropy(unraveling_probabilities(u, rho), alpha)
        assert achieved >= tsallis_uncertainty_bound(SIC_PARAMS, purity(rho), alpha) - 1e-10

    def test_saturated_by_extremal_at_order_two(self, sic):
        # With the coincidence bound saturated (frame mixtures), the order-2
        # bound equals 1 - sum of squared Gram eigenvalues, which is the
        # Tsallis entropy of the extremal distribution.
        from kdframes.channels import extremal_unraveling

        for rho in (DensityMatrix(np.eye(2) / 2), frame_mixture(sic, [1, 0, 0, 0])):
            _, probs = extremal_unraveling(principal_kraus(sic), rho)
            achieved = tsallis_entropy(probs, 2.0)
            bound = tsallis_uncertainty_bound(SIC_PARAMS, purity(rho), 2.0)
            assert achieved == pytest.approx(bound, abs=1e-8)


class TestPureStateMargin:
    @pytest.mark.parametrize("d", range(2, 13))
    def test_zero_at_n_equals_d(self, d):
        assert pure_state_margin(d, d) == pytest.approx(0.0, abs=1e-12)

    def test_example_value(self):
        assert pure_state_margin(4, 2) == pytest.approx(4.0)

    def test_positive_beyond_d(self):
        for d in range(2, 13):
            for n in range(d + 1, d * d + 1):
                assert pure_state_margin(n, d) > 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            pure_state_margin(3, 1)


class TestReportTypes:
    def test_interval_orientation_enforced(self):
        with pytest.raises(ValueError):
            Interval(1.0, 0.0)

    def test_upper_bound_report(self):
        report = BoundReport.upper(1.0, 0.4)
        assert report.slack == pytest.approx(0.6)
        assert not report.saturated

    def test_lower_bound_report_saturation(self):
        report = BoundReport.lower(0.5, 0.5 + 1e-9)
        assert report.slack == pytest.approx(1e-9)
        assert report.saturated
