import math

import numpy as np
import pytest
from scipy import stats

from gaussedge import (
    CenteringSpec,
    SampleConfig,
    finite_cdf,
    largest_eigenvalue_sample,
    mc_cdf,
    mc_density,
    tw_cdf,
    tw_quantile,
)
from gaussedge.specfun import centering

KS_REPS = 200000


class TestSampler:
    def test_fixed_seed_bitwise_identical(self):
        cfg = SampleConfig("GOE", 8, reps=5000, seed=42)
        assert np.array_equal(largest_eigenvalue_sample(cfg), largest_eigenvalue_sample(cfg))

    def test_seed_changes_stream(self):
        a = largest_eigenvalue_sample(SampleConfig("GUE", 4, reps=100, seed=1))
        b = largest_eigenvalue_sample(SampleConfig("GUE", 4, reps=100, seed=2))
        assert not np.array_equal(a, b)

    def test_prefix_property(self):
        # the first R replications agree between runs of different length
        long = largest_eigenvalue_sample(SampleConfig("GOE", 6, reps=3000, seed=9))
        short = largest_eigenvalue_sample(SampleConfig("GOE", 6, reps=1200, seed=9))
        assert np.array_equal(long[:1200], short)

    @pytest.mark.parametrize("ensemble", ["GOE", "GUE"])
    def test_dense_tridiagonal_equivalence(self, ensemble):
        x = largest_eigenvalue_sample(SampleConfig(ensemble, 8, reps=KS_REPS, seed=1, model="dense"))
        y = largest_eigenvalue_sample(SampleConfig(ensemble, 8, reps=KS_REPS, seed=2, model="tridiagonal"))
        ks = stats.ks_2samp(x, y).statistic
        assert ks <= 1.63 / math.sqrt(KS_REPS / 2.0)

    def test_gue_small_matrix_matches_determinant(self):
        cfg = SampleConfig("GUE", 2, reps=10**6, seed=7)
        est = mc_cdf(cfg, CenteringSpec("GUE", "theorem"), [0.5])
        assert abs(est.p_hat[0] - 0.549) <= 3.0 * est.stderr[0]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SampleConfig("GSE", 8, reps=10)
        with pytest.raises(ValueError):
            SampleConfig("GOE", 1, reps=10)
        with pytest.raises(ValueError):
            SampleConfig("GOE", 8, reps=0)
        with pytest.raises(ValueError):
            SampleConfig("GOE", 8, reps=10, model="sparse")
        with pytest.raises(ValueError):
            SampleConfig("GOE", 8, reps=10, seed=-1)


class TestMcCdf:
    def test_empty_alpha_grid(self):
        est = mc_cdf(SampleConfig("GOE", 4, reps=50, seed=3), CenteringSpec("GOE", "theorem"), [])
        assert est.s_values.size == 0 and est.p_hat.size == 0
        assert est.reps == 50

    def test_stderr_recomputable(self):
        est = mc_cdf(SampleConfig("GOE", 4, reps=4000, seed=3), CenteringSpec("GOE", "theorem"), [0.3, 0.7])
        again = np.sqrt(est.p_hat * (1.0 - est.p_hat) / est.reps)
        assert np.max(np.abs(est.stderr - again)) <= 1e-15

    def test_replication_splitting_pools_exactly(self):
        spec = CenteringSpec("GOE", "theorem")
        alphas = [0.25, 0.5, 0.75]
        r = 3000
        a = mc_cdf(SampleConfig("GOE", 6, reps=r, seed=5), spec, alphas)
        b = mc_cdf(SampleConfig("GOE", 6, reps=r, seed=6), spec, alphas)
        pooled = (a.p_hat * r + b.p_hat * r) / (2.0 * r)
        mu, tau = centering(spec, 5)
        both = np.concatenate(
            [
                largest_eigenvalue_sample(SampleConfig("GOE", 6, reps=r, seed=5)),
                largest_eigenvalue_sample(SampleConfig("GOE", 6, reps=r, seed=6)),
            ]
        )
        s = (both - mu) / tau
        direct = np.count_nonzero(s[:, None] <= a.s_values[None, :], axis=0) / (2.0 * r)
        assert np.array_equal(pooled, direct)

    def test_alpha_domain(self):
        with pytest.raises(ValueError):
            mc_cdf(SampleConfig("GOE", 4, reps=10, seed=1), CenteringSpec("GOE", "theorem"), [0.0])

    def test_sanity_against_determinant(self):
        # Table 1 row 5 cross-check: MC within 4 stderr of the determinant
        spec = CenteringSpec("GUE", "theorem")
        est = mc_cdf(SampleConfig("GUE", 5, reps=4 * 10**5, seed=17), spec, [0.1, 0.5, 0.9])
        for alpha, p in zip([0.1, 0.5, 0.9], est.p_hat):
            det = finite_cdf("GUE", 5, spec, tw_quantile(2, alpha)).value
            tol = 4.0 * math.sqrt(alpha * (1.0 - alpha) / est.reps)
            assert abs(p - det) <= tol


class TestMcDensity:
    def test_mass_and_mode(self):
        cfg = SampleConfig("GOE", 2, reps=10**6, seed=5)
        hist = mc_density(cfg, CenteringSpec("GOE", "tuned"), 40)
        mass = float(np.sum(hist.heights * np.diff(hist.edges)))
        assert mass >= 0.999
        centers = 0.5 * (hist.edges[:-1] + hist.edges[1:])
        mode = centers[np.argmax(hist.heights)]
        assert -2.0 <= mode <= 0.0

    def test_l1_distance_to_limit_density(self):
        cfg = SampleConfig("GOE", 2, reps=10**6, seed=5)
        hist = mc_density(cfg, CenteringSpec("GOE", "tuned"), 40)
        centers = 0.5 * (hist.edges[:-1] + hist.edges[1:])
        h = 5e-4
        f1 = np.asarray([(tw_cdf(1, s + h) - tw_cdf(1, s - h)) / (2.0 * h) for s in centers])
        width = hist.edges[1] - hist.edges[0]
        assert float(np.sum(np.abs(hist.heights - f1)) * width) <= 0.08

    def test_bins_validation(self):
        with pytest.raises(ValueError):
            mc_density(SampleConfig("GOE", 2, reps=10, seed=1), CenteringSpec("GOE", "tuned"), 5)
