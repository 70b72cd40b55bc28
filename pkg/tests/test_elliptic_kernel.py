import math

import numpy as np
import pytest

from pentagramma.elliptic_kernel import (EllipticContext, am, complete_K,
                                         half_angle_tan, incomplete_F, jacobi_sum,
                                         jacobi_triple)
from pentagramma.errors import DomainError, NearPoleError

from oracles import invert_quad_F, quad_F, quad_K

# frozen against an adaptive-quadrature / series evaluation of the defining
# integrals (independent multi-precision route, 25 digits)
K_08 = 1.9953027776647294
F_PI5_06 = 0.6429228814909583
TRIPLE_07_05 = (0.6342932763351124, 0.7730925168413343, 0.9483765127305806)


class TestCompleteK:
    def test_k0_is_half_pi(self):
        assert complete_K(0.0) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_frozen_value(self):
        assert complete_K(0.8) == pytest.approx(K_08, abs=1e-14)

    def test_monotone(self):
        ks = np.linspace(0.0, 0.99, 40)
        values = [complete_K(float(k)) for k in ks]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_quadrature_agreement(self):
        for k in (0.1, 0.5, 0.8, 0.95):
            assert complete_K(k) == pytest.approx(quad_K(k), abs=1e-12)

    @pytest.mark.parametrize("k", [-0.1, 1.0, 1.5])
    def test_domain(self, k):
        with pytest.raises(DomainError):
            complete_K(k)


class TestIncompleteF:
    def test_zero(self):
        assert incomplete_F(0.0, 0.7) == 0.0

    def test_quarter_period(self):
        for k in (0.0, 0.3, 0.8):
            assert incomplete_F(math.pi / 2, k) == pytest.approx(
                complete_K(k), abs=1e-13)

    def test_frozen_value(self):
        assert incomplete_F(math.pi / 5, 0.6) == pytest.approx(F_PI5_06, abs=1e-13)

    def test_strictly_increasing(self, rng):
        k = 0.77
        phis = np.sort(rng.uniform(-7.0, 7.0, size=30))
        values = [incomplete_F(float(p), k) for p in phis]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_shift_rule(self, rng):
        k = 0.45
        two_k = 2.0 * complete_K(k)
        for phi in rng.uniform(-3.0, 3.0, size=20):
            assert incomplete_F(phi + math.pi, k) == pytest.approx(
                incomplete_F(phi, k) + two_k, abs=1e-12)

    def test_oddness(self):
        assert incomplete_F(-1.1, 0.6) == -incomplete_F(1.1, 0.6)


class TestAmplitude:
    def test_at_zero(self):
        assert am(0.0, 0.5) == 0.0

    def test_at_quarter_period(self):
        for k in (0.2, 0.6, 0.9):
            assert am(complete_K(k), k) == pytest.approx(math.pi / 2, abs=1e-13)

    def test_quasi_period_once(self):
        k = 0.6
        assert am(3.0 * complete_K(k), k) == pytest.approx(
            1.5 * math.pi, abs=1e-12)

    def test_roundtrip(self, rng):
        for _ in range(200):
            k = rng.uniform(0.0, 0.95)
            phi = rng.uniform(0.0, math.pi / 2)
            assert am(incomplete_F(phi, k), k) == pytest.approx(phi, abs=1e-12)

    def test_quasi_periodicity_random(self, rng):
        k = 0.8
        two_k = 2.0 * complete_K(k)
        for u in rng.uniform(-20.0, 20.0, size=100):
            assert am(u + two_k, k) - am(u, k) - math.pi == pytest.approx(
                0.0, abs=1e-12)

    def test_against_quadrature_inversion(self):
        k = 0.5
        phi = invert_quad_F(0.7, k)
        assert am(0.7, k) == pytest.approx(phi, abs=1e-12)

    def test_odd(self, rng):
        for u in rng.uniform(0.0, 5.0, size=10):
            assert am(-u, 0.7) == -am(u, 0.7)


class TestJacobiTriple:
    def test_at_zero(self):
        assert tuple(jacobi_triple(0.0, 0.4)) == (0.0, 1.0, 1.0)

    def test_at_quarter_period(self):
        k = 0.6
        sn, cn, dn = jacobi_triple(complete_K(k), k)
        assert sn == pytest.approx(1.0, abs=1e-13)
        assert cn == pytest.approx(0.0, abs=1e-13)
        assert dn == pytest.approx(math.sqrt(1 - k * k), abs=1e-13)

    def test_frozen_value(self):
        sn, cn, dn = jacobi_triple(0.7, 0.5)
        assert (sn, cn, dn) == pytest.approx(TRIPLE_07_05, abs=1e-13)

    def test_pythagorean_identities(self, rng):
        for _ in range(200):
            k = rng.uniform(0.0, 0.95)
            u = rng.uniform(-15.0, 15.0)
            sn, cn, dn = jacobi_triple(u, k)
            assert sn * sn + cn * cn == pytest.approx(1.0, abs=1e-13)
            assert dn * dn + (k * sn) ** 2 == pytest.approx(1.0, abs=1e-13)

    def test_parity(self, rng):
        k = 0.7
        for u in rng.uniform(0.0, 8.0, size=20):
            plus = jacobi_triple(u, k)
            minus = jacobi_triple(-u, k)
            assert minus.sn == pytest.approx(-plus.sn, abs=1e-13)
            assert minus.cn == pytest.approx(plus.cn, abs=1e-13)
            assert minus.dn == pytest.approx(plus.dn, abs=1e-13)

    def test_periods(self, rng):
        k = 0.65
        quarter = complete_K(k)
        for u in rng.uniform(-5.0, 5.0, size=20):
            a = jacobi_triple(u, k)
            b = jacobi_triple(u + 4 * quarter, k)
            assert (a.sn, a.cn) == pytest.approx((b.sn, b.cn), abs=1e-12)
            assert jacobi_triple(u + 2 * quarter, k).dn == pytest.approx(
                a.dn, abs=1e-12)

    def test_k0_degenerates_to_trig(self, rng):
        for u in rng.uniform(-10.0, 10.0, size=50):
            sn, cn, dn = jacobi_triple(u, 0.0)
            assert sn == pytest.approx(math.sin(u), abs=1e-14)
            assert cn == pytest.approx(math.cos(u), abs=1e-14)
            assert dn == 1.0


class TestAdditionFormulas:
    def test_v_zero(self, rng):
        k = 0.3
        for u in rng.uniform(-5.0, 5.0, size=10):
            s = jacobi_sum(u, 0.0, k)
            d = jacobi_triple(u, k)
            assert tuple(s) == pytest.approx(tuple(d), abs=1e-14)

    def test_half_quarter_doubling(self):
        k = 0.8
        quarter = complete_K(k)
        s = jacobi_sum(quarter / 2, quarter / 2, k)
        assert s.sn == pytest.approx(1.0, abs=1e-12)
        assert s.cn == pytest.approx(0.0, abs=1e-12)
        assert s.dn == pytest.approx(math.sqrt(1 - k * k), abs=1e-12)

    def test_grid(self, rng):
        k = 0.3
        for _ in range(400):
            u, v = rng.uniform(-8.0, 8.0, size=2)
            s = jacobi_sum(u, v, k)
            d = jacobi_triple(u + v, k)
            assert tuple(s) == pytest.approx(tuple(d), abs=1e-12)

    def test_main_formula(self, rng):
        for _ in range(200):
            k = rng.uniform(0.0, 0.95)
            u, v = rng.uniform(-8.0, 8.0, size=2)
            tu, tv = jacobi_triple(u, k), jacobi_triple(v, k)
            diff = jacobi_triple(u - v, k)
            assert diff.cn - (tu.cn * tv.cn + tu.sn * tv.sn * diff.dn) == \
                pytest.approx(0.0, abs=1e-12)


class TestHalfAngleTan:
    def test_equal_arguments(self):
        x, k = 0.62, 0.44
        assert half_angle_tan(x, x, k) == pytest.approx(
            math.tan(am(x, k)), abs=1e-13)

    def test_opposite_arguments(self):
        assert half_angle_tan(0.8, -0.8, 0.5) == pytest.approx(0.0, abs=1e-13)

    def test_identity_residual(self, rng):
        k = 0.5
        for _ in range(50):
            x, y = rng.uniform(-1.2, 1.2, size=2)
            lhs = half_angle_tan(x, y, k)
            rhs = jacobi_triple((x - y) / 2, k).dn * math.tan(am((x + y) / 2, k))
            assert lhs - rhs == pytest.approx(0.0, abs=1e-10)

    def test_near_pole(self):
        k = 0.6
        quarter = complete_K(k)
        with pytest.raises(NearPoleError):
            half_angle_tan(quarter, quarter, k)


def test_context_invariants():
    ctx = EllipticContext.for_modulus(0.8)
    assert ctx.K >= math.pi / 2
    assert ctx.K == pytest.approx(quad_K(0.8), abs=ctx.tol)
    assert EllipticContext.for_modulus(0.0).K == pytest.approx(
        math.pi / 2, abs=1e-15)
