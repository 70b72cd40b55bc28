import math

import numpy as np
import pytest

from pentagramma.cone_spectrum import (OMEGA_CRITICAL, modulus_from_spectrum,
                                       solve_characteristic)
from pentagramma.elliptic_kernel import complete_K, jacobi_triple
from pentagramma.errors import DomainError, SubcriticalError
from pentagramma.napier_uniformization import (alpha_sequence, beta_sequence,
                                               frame_vectors, k_of_omega,
                                               omega_of_k)
from pentagramma.pentagram_algebra import GOLDEN

K_GRID = [round(0.1 * i, 1) for i in range(10)]


class TestFrameVectors:
    def test_third_coordinate_exactly_one(self, rng):
        for k in (0.0, 0.4, 0.9):
            f = frame_vectors(k, float(rng.uniform(-2, 2)))
            assert all(v[2] == 1.0 for v in f.vectors)

    def test_regular_norms(self, rng):
        f = frame_vectors(0.0, float(rng.uniform(0, 2)))
        for v in f.vectors:
            assert float(np.dot(v, v)) == pytest.approx(math.sqrt(5), abs=1e-12)

    def test_regular_first_vector(self):
        f = frame_vectors(0.0, 0.0)
        assert f.vectors[0] == pytest.approx(
            [1.0 / math.sqrt(math.cos(math.pi / 5)), 0.0, 1.0], abs=1e-14)

    def test_period_five(self, rng):
        for k in (0.3, 0.8):
            u = float(rng.uniform(-1, 1))
            f = frame_vectors(k, u)
            quarter = complete_K(k)
            wrapped = frame_vectors(k, u + 5 * 0.8 * quarter)
            assert np.abs(f.vectors - wrapped.vectors).max() < 1e-12

    def test_lattice_constants_positive(self):
        f = frame_vectors(0.9, 0.1)
        assert f.cn_fifth > 0.0
        assert f.dn_fifth > 0.0

    def test_bad_modulus(self):
        with pytest.raises(DomainError):
            frame_vectors(1.2, 0.0)


class TestAlphaSequence:
    def test_regular_values(self, rng):
        f = frame_vectors(0.0, float(rng.uniform(0, 2)))
        assert alpha_sequence(f).alphas == pytest.approx((GOLDEN,) * 5, abs=1e-12)

    def test_pentagon_law(self):
        a = alpha_sequence(frame_vectors(0.5, 0.3)).alphas
        for j in range(5):
            assert 1 + a[j] == pytest.approx(
                a[(j - 2) % 5] * a[(j + 2) % 5], abs=1e-10)

    def test_translation_is_cyclic_shift(self):
        k, u = 0.5, 0.27
        quarter = complete_K(k)
        a = alpha_sequence(frame_vectors(k, u)).alphas
        b = alpha_sequence(frame_vectors(k, u + 0.8 * quarter)).alphas
        assert b == pytest.approx(tuple(a[(j + 1) % 5] for j in range(5)),
                                  abs=1e-10)

    def test_law_on_grid(self, rng):
        worst = 0.0
        for k in K_GRID:
            quarter = complete_K(k)
            for u in rng.uniform(0.0, 0.8 * quarter, size=20):
                a = alpha_sequence(frame_vectors(k, float(u))).alphas
                worst = max(worst, max(
                    abs(1 + a[j] - a[(j - 2) % 5] * a[(j + 2) % 5])
                    for j in range(5)))
        assert worst < 1e-10

    def test_sum_product_identity_on_grid(self, rng):
        for k in K_GRID:
            quarter = complete_K(k)
            for u in rng.uniform(0.0, 0.8 * quarter, size=5):
                a = alpha_sequence(frame_vectors(k, float(u))).alphas
                prod = math.prod(a)
                assert 3 + sum(a) == pytest.approx(prod, abs=1e-9 * max(1, prod))


class TestBetaSequence:
    def test_regular_values(self):
        f = frame_vectors(0.0, 0.9)
        assert beta_sequence(f) == pytest.approx((1 / GOLDEN,) * 5, abs=1e-12)

    def test_matches_alpha_ratio(self):
        f = frame_vectors(0.5, 0.3)
        alphas = alpha_sequence(f).alphas
        betas = beta_sequence(f)
        for b, a in zip(betas, alphas):
            assert b == pytest.approx(a / (1 + a), abs=1e-12)

    def test_strictly_below_one(self, rng):
        for k in (0.2, 0.7, 0.9):
            f = frame_vectors(k, float(rng.uniform(0, 1)))
            assert all(0.0 < b < 1.0 for b in beta_sequence(f))


class TestOmegaOfK:
    def test_regular_value(self):
        assert omega_of_k(0.0) == pytest.approx(11.0901699, abs=1e-7)

    def test_u_independence(self):
        k = 0.62
        f1 = alpha_sequence(frame_vectors(k, 0.0)).omega()
        f2 = alpha_sequence(frame_vectors(k, 1.1)).omega()
        assert abs(f1 - f2) < 1e-9

    def test_strictly_increasing(self):
        values = [omega_of_k(k) for k in np.linspace(0.0, 0.95, 25)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_bad_modulus(self):
        with pytest.raises(DomainError):
            omega_of_k(-0.5)


class TestKOfOmega:
    def test_regular(self):
        assert k_of_omega(OMEGA_CRITICAL) == 0.0

    def test_omega_20_against_root_formula(self):
        k = k_of_omega(20.0)
        k_formula, _, _ = modulus_from_spectrum(solve_characteristic(20.0))
        assert abs(k - k_formula) < 1e-6
        # the printed four-digit roots imply k ~ 0.98973
        assert k == pytest.approx(0.98973, abs=2e-3)

    def test_roundtrip(self):
        assert omega_of_k(k_of_omega(12.0)) == pytest.approx(12.0, abs=1e-9)

    def test_subcritical(self):
        with pytest.raises(SubcriticalError):
            k_of_omega(5.0)


def test_bridge_on_grid(rng):
    # cn(2K/5) = -G'/G and dn(2K/5) = G'/G'' with the roots taken at the
    # frame's own omega; the k = 0 double root is excluded
    for k in K_GRID[1:]:
        u = float(rng.uniform(0.0, 0.5))
        omega = alpha_sequence(frame_vectors(k, u)).omega()
        s = solve_characteristic(omega)
        lattice = jacobi_triple(0.4 * complete_K(k), k)
        assert abs(lattice.cn + s.Gp / s.G) < 1e-9
        assert abs(lattice.dn - s.Gp / s.Gpp) < 1e-9
        assert abs(k_of_omega(omega) - k) < 1e-9
