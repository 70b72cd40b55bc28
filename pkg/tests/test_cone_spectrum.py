import math

import numpy as np
import pytest

from pentagramma.cone_spectrum import (OMEGA_CRITICAL, ConeQuadric, SpectralTriple,
                                       characteristic_matrix, cone_coefficients,
                                       critical_omega, modulus_from_spectrum,
                                       solve_characteristic)
from pentagramma.elliptic_kernel import complete_K, jacobi_triple
from pentagramma.errors import DegenerateError, DomainError, SubcriticalError
from pentagramma.pentagram_algebra import GOLDEN, complete_from_two

from oracles import characteristic_poly, symmetric_eigenvalues


class TestConeCoefficients:
    def test_gauss_example(self):
        q = cone_coefficients(9.0, 2.0)
        assert q.p == pytest.approx(-3.0, abs=1e-15)
        assert q.q == pytest.approx(-math.sqrt(2), abs=1e-15)
        assert q.r == pytest.approx(-2.0 * math.sqrt(2), abs=1e-14)

    def test_golden_seeds(self):
        # r = -(1 + 2 phi)/phi = -phi^2, by phi^2 = phi + 1
        q = cone_coefficients(GOLDEN, GOLDEN)
        assert q.p == q.q == pytest.approx(-math.sqrt(GOLDEN), abs=1e-15)
        assert q.r == pytest.approx(-GOLDEN ** 2, abs=1e-14)

    def test_unit_seeds(self):
        q = cone_coefficients(1.0, 1.0)
        assert (q.p, q.q, q.r) == pytest.approx((-1.0, -1.0, -3.0), abs=1e-15)

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            cone_coefficients(0.0, 1.0)


class TestCharacteristicMatrix:
    def test_entries(self):
        m = characteristic_matrix(ConeQuadric(-1.0, -1.0, -3.0))
        assert m[0, 1] == -1.5 and m[0, 2] == -0.5 and m[2, 2] == 1.0
        assert np.allclose(m, m.T)

    def test_zero_quadric(self):
        eig = symmetric_eigenvalues(characteristic_matrix(ConeQuadric(0, 0, 0)))
        assert eig == pytest.approx([0.0, 0.0, 1.0], abs=1e-15)

    def test_gauss_eigenvalues(self):
        eig = symmetric_eigenvalues(characteristic_matrix(cone_coefficients(9.0, 2.0)))
        assert eig == pytest.approx([-2.197, 1.069, 2.128], abs=2e-3)

    def test_eigenvalues_match_cubic_roots(self, rng):
        for _ in range(100):
            alpha, gamma = rng.uniform(0.2, 10.0, size=2)
            cycle = complete_from_two(float(alpha), float(gamma))
            eig = symmetric_eigenvalues(
                characteristic_matrix(cone_coefficients(float(alpha), float(gamma))))
            s = solve_characteristic(cycle.omega())
            assert eig == pytest.approx([s.G, s.Gp, s.Gpp], abs=1e-8)


class TestCriticalOmega:
    def test_printed_digits(self):
        assert critical_omega() == pytest.approx(11.0901699, abs=1e-7)

    def test_closed_forms(self):
        assert critical_omega() == pytest.approx(
            (11 + 5 * math.sqrt(5)) / 2, abs=1e-12)
        assert critical_omega() == pytest.approx(3 + 5 * GOLDEN, abs=1e-12)


class TestSolveCharacteristic:
    def test_omega_20(self):
        s = solve_characteristic(20.0)
        assert (s.G, s.Gp, s.Gpp) == pytest.approx(
            (-2.197, 1.069, 2.128), abs=2e-3)
        assert max(abs(r) for r in s.product_residuals()) < 1e-10

    def test_critical_double_root(self):
        s = solve_characteristic(OMEGA_CRITICAL)
        assert s.G == pytest.approx(-GOLDEN, abs=1e-15)
        assert s.Gp == s.Gpp == pytest.approx(GOLDEN ** 2 / 2, abs=1e-15)

    def test_substitution_residuals(self):
        s = solve_characteristic(12.0)
        for t in (s.G, s.Gp, s.Gpp):
            assert abs(characteristic_poly(t, 12.0)) < 1e-11

    def test_subcritical_raises(self, rng):
        for omega in rng.uniform(1e-6, OMEGA_CRITICAL - 1e-6, size=25):
            with pytest.raises(SubcriticalError):
                solve_characteristic(float(omega))

    def test_product_identities_log_grid(self):
        for omega in np.geomspace(OMEGA_CRITICAL, 1e4, 50):
            s = solve_characteristic(float(omega))
            assert max(abs(r) for r in s.product_residuals()) < 1e-9
            assert s.G < 0.0 < s.Gp <= s.Gpp
            if omega > OMEGA_CRITICAL + 1e-9:
                assert s.Gp > 1.0

    def test_near_critical_continuity(self):
        # just above the exact-double-root window the full solve must agree
        s = solve_characteristic(OMEGA_CRITICAL + 1e-9)
        assert s.G == pytest.approx(-GOLDEN, abs=1e-4)
        assert s.Gp == pytest.approx(GOLDEN ** 2 / 2, rel=1e-4)
        assert s.Gp <= s.Gpp


class TestModulusFromSpectrum:
    def test_double_root_is_regular(self):
        k, cnw, dnw = modulus_from_spectrum(solve_characteristic(OMEGA_CRITICAL))
        assert k == 0.0
        assert cnw == pytest.approx(math.cos(math.pi / 5), abs=1e-15)
        assert dnw == 1.0

    @pytest.mark.parametrize("omega", [12.0, 20.0])
    def test_bridge_consistency(self, omega):
        s = solve_characteristic(omega)
        k, cnw, dnw = modulus_from_spectrum(s)
        lattice = jacobi_triple(0.4 * complete_K(k), k)
        assert lattice.cn == pytest.approx(cnw, abs=1e-9)
        assert lattice.dn == pytest.approx(dnw, abs=1e-9)

    def test_ranges(self):
        for omega in np.geomspace(OMEGA_CRITICAL + 1e-3, 100.0, 40):
            k, cnw, dnw = modulus_from_spectrum(solve_characteristic(float(omega)))
            assert 0.0 <= k < 1.0
            assert 0.0 < cnw < 1.0
            assert 0.0 < dnw <= 1.0

    def test_malformed_triple_rejected(self):
        with pytest.raises(DegenerateError):
            modulus_from_spectrum(SpectralTriple(G=1.0, Gp=2.0, Gpp=3.0, omega=20.0))


def test_bridge_property_across_omega_range():
    # the central synthesis: lattice values of cn, dn against root ratios
    for omega in np.geomspace(OMEGA_CRITICAL + 1e-3, 100.0, 30):
        s = solve_characteristic(float(omega))
        k, _, _ = modulus_from_spectrum(s)
        lattice = jacobi_triple(0.4 * complete_K(k), k)
        assert abs(lattice.cn + s.Gp / s.G) < 1e-9
        assert abs(lattice.dn - s.Gp / s.Gpp) < 1e-9
