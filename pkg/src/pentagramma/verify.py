"""The acceptance battery: every release criterion as a named residual check.

Each criterion function returns a list of Check records; a check passes when
its residual is at or below its tolerance.  All randomness flows from one
seed so a fixed seed reproduces the report byte for byte.  The quadrature
oracle used against the elliptic kernel lives here and nowhere near the
kernel itself.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from . import (cone_spectrum, dilogarithm, elliptic_kernel, gauss_projection,
               napier_uniformization, pentagram_algebra, poncelet)
from .errors import NoSolutionError, PentagrammaError
from .pentagram_algebra import GOLDEN

PI = math.pi

# gaps with cosine below this are treated as chord-degenerate and skipped
# (grids at the default seed never trigger it; the policy still applies)
_GAP_COSINE_FLOOR = 0.1
_MIN_VALID_SAMPLES = 15


@dataclass
class Check:
    name: str
    residual: float
    tol: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


@dataclass
class _Collector:
    override: float | None = None
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, residual: float, tol: float, detail: str = "") -> None:
        if self.override is not None:
            tol = self.override
        self.checks.append(Check(name=name, residual=float(residual), tol=tol,
                                 detail=detail))


def _quad_F(phi: float, k: float) -> float:
    with warnings.catch_warnings():
        # near k ~ 1 the integrand steepens and quad warns about roundoff
        # while still delivering ~1e-15; the check tolerance absorbs that
        warnings.simplefilter("ignore", IntegrationWarning)
        value, _ = quad(lambda x: 1.0 / math.sqrt(1.0 - (k * math.sin(x)) ** 2),
                        0.0, phi, epsabs=1e-13, epsrel=1e-13, limit=200)
    return value


def _grid_frames(rng, ks, per_k=20):
    """(k, u) samples with the chord-degenerate skip policy applied."""
    for k in ks:
        quarter = elliptic_kernel.complete_K(k)
        us = rng.uniform(0.0, 0.8 * quarter, size=per_k)
        valid = []
        for u in us:
            frame = napier_uniformization.frame_vectors(k, float(u))
            cosines = []
            for j in range(5):
                a = frame.vectors[j]
                b = frame.vectors[(j + 1) % 5]
                cosines.append(abs(float(np.dot(a, b)))
                               / math.sqrt(float(np.dot(a, a)) * float(np.dot(b, b))))
            if min(cosines) >= _GAP_COSINE_FLOOR:
                valid.append(frame)
        if len(valid) < _MIN_VALID_SAMPLES:
            raise PentagrammaError(
                f"too many chord-degenerate samples at k={k}: {len(valid)}/{per_k}")
        yield k, valid


def criterion_1(col: _Collector, rng) -> None:
    """The (9, 2/3, 2, 5, 1/3) example: exact cycle, omega, triple invariant."""
    cycle = pentagram_algebra.complete_from_two(9.0, 2.0)
    target = (9.0, 2.0 / 3.0, 2.0, 5.0, 1.0 / 3.0)
    col.add("example.cycle", max(abs(a - t) for a, t in zip(cycle.alphas, target)),
            1e-14)
    total, prod, augmented = pentagram_algebra.pentagram_invariants(cycle)
    col.add("example.omega", abs(prod - 20.0), 1e-14)
    col.add("example.invariant_sum", abs(total - 20.0), 1e-12)
    col.add("example.invariant_sqrt", abs(augmented - 20.0), 1e-12)


def criterion_2(col: _Collector, rng) -> None:
    """Spectral roots at omega = 20 and the root-product identities."""
    s = cone_spectrum.solve_characteristic(20.0)
    for name, got, want in (("G", s.G, -2.197), ("Gp", s.Gp, 1.069),
                            ("Gpp", s.Gpp, 2.128)):
        col.add(f"roots20.{name}", abs(got - want), 2e-3)
    col.add("roots20.products", max(abs(r) for r in s.product_residuals()), 1e-10)


def criterion_3(col: _Collector, rng) -> None:
    """Critical omega and the double root at the regular pentagram."""
    w0 = cone_spectrum.critical_omega()
    col.add("critical.value", abs(w0 - 11.0901699), 1e-7)
    s = cone_spectrum.solve_characteristic(w0)
    col.add("critical.G", abs(s.G + GOLDEN), 1e-9)
    col.add("critical.double", max(abs(s.Gp - GOLDEN ** 2 / 2),
                                   abs(s.Gpp - GOLDEN ** 2 / 2)), 1e-9)


def criterion_4(col: _Collector, rng) -> None:
    """Elliptic kernel against itself (identities) and against quadrature."""
    col.add("kernel.K0", abs(elliptic_kernel.complete_K(0.0) - PI / 2), 1e-15)

    worst_rt = worst_add = worst_main = 0.0
    for _ in range(400):
        k = rng.uniform(0.0, 0.95)
        quarter = elliptic_kernel.complete_K(k)
        phi = rng.uniform(0.0, PI / 2)
        worst_rt = max(worst_rt, abs(
            elliptic_kernel.am(elliptic_kernel.incomplete_F(phi, k), k) - phi))
        u = rng.uniform(-3 * quarter, 3 * quarter)
        v = rng.uniform(-3 * quarter, 3 * quarter)
        added = elliptic_kernel.jacobi_sum(u, v, k)
        direct = elliptic_kernel.jacobi_triple(u + v, k)
        worst_add = max(worst_add, abs(added.sn - direct.sn),
                        abs(added.cn - direct.cn), abs(added.dn - direct.dn))
        tu = elliptic_kernel.jacobi_triple(u, k)
        tv = elliptic_kernel.jacobi_triple(v, k)
        diff = elliptic_kernel.jacobi_triple(u - v, k)
        worst_main = max(worst_main, abs(
            diff.cn - (tu.cn * tv.cn + tu.sn * tv.sn * diff.dn)))
    col.add("kernel.roundtrip", worst_rt, 1e-12)
    col.add("kernel.addition", worst_add, 1e-12)
    col.add("kernel.main_formula", worst_main, 1e-12)

    worst_oracle = 0.0
    for _ in range(20):
        k = rng.uniform(0.0, 0.95)
        u = rng.uniform(0.0, elliptic_kernel.complete_K(k))
        phi = elliptic_kernel.am(u, k)
        worst_oracle = max(worst_oracle, abs(_quad_F(phi, k) - u))
    worst_oracle = max(worst_oracle,
                       abs(_quad_F(PI / 2, 0.8) - elliptic_kernel.complete_K(0.8)))
    col.add("kernel.quadrature_oracle", worst_oracle, 1e-11)


def criterion_5(col: _Collector, rng) -> None:
    """Pentagon law on the (k, u) grid; regular values at k = 0."""
    worst_law = 0.0
    for _, frames in _grid_frames(rng, [0.1 * i for i in range(10)]):
        for frame in frames:
            a = napier_uniformization.alpha_sequence(frame).alphas
            worst_law = max(worst_law, max(
                abs(1.0 + a[j] - a[(j - 2) % 5] * a[(j + 2) % 5]) for j in range(5)))
    col.add("law.grid", worst_law, 1e-10)

    frame = napier_uniformization.frame_vectors(0.0, float(rng.uniform(0.0, 2.0)))
    a = napier_uniformization.alpha_sequence(frame).alphas
    col.add("law.regular_alpha", max(abs(v - GOLDEN) for v in a), 1e-12)
    col.add("law.regular_norm", max(
        abs(float(np.dot(v, v)) - math.sqrt(5.0)) for v in frame.vectors), 1e-12)


def criterion_6(col: _Collector, rng) -> None:
    """The spectral-modulus bridge both ways across the k grid."""
    worst_cn = worst_dn = worst_round = worst_formula = 0.0
    for k in [0.1 * i for i in range(1, 10)]:
        omega = napier_uniformization.omega_of_k(k)
        s = cone_spectrum.solve_characteristic(omega)
        quarter = elliptic_kernel.complete_K(k)
        tri = elliptic_kernel.jacobi_triple(0.4 * quarter, k)
        worst_cn = max(worst_cn, abs(tri.cn + s.Gp / s.G))
        worst_dn = max(worst_dn, abs(tri.dn - s.Gp / s.Gpp))
        worst_round = max(worst_round,
                          abs(napier_uniformization.k_of_omega(omega) - k))
        worst_formula = max(worst_formula,
                            abs(cone_spectrum.modulus_from_spectrum(s)[0] - k))
    col.add("bridge.cn", worst_cn, 1e-9)
    col.add("bridge.dn", worst_dn, 1e-9)
    col.add("bridge.k_roundtrip", worst_round, 1e-9)
    col.add("bridge.k_formula", worst_formula, 1e-9)


def _projection_cases(rng):
    k20 = cone_spectrum.modulus_from_spectrum(
        cone_spectrum.solve_characteristic(20.0))[0]
    for k in (0.2, 0.5, k20):
        for u in rng.uniform(0.1, 1.0, size=3):
            frame = napier_uniformization.frame_vectors(k, float(u))
            pentagon = gauss_projection.pentagon_from_frame(frame)
            omega = napier_uniformization.alpha_sequence(frame).omega()
            yield pentagon, cone_spectrum.solve_characteristic(omega)


def criterion_7(col: _Collector, rng) -> None:
    """Anomaly identities, recovery formulas, confocal relation."""
    worst_theorem = worst_rec = worst_conf = 0.0
    for pentagon, s in _projection_cases(rng):
        worst_theorem = max(worst_theorem, float(np.abs(
            gauss_projection.gauss_theorem_residuals(pentagon, s)).max()))
        for i in range(5):
            worst_rec = max(
                worst_rec,
                float(np.linalg.norm(
                    gauss_projection.recover_from_pm2(pentagon, i) - pentagon.point(i))),
                float(np.linalg.norm(
                    gauss_projection.recover_from_pm1(pentagon, s, i) - pentagon.point(i))))
            worst_conf = max(worst_conf, abs(
                gauss_projection.confocal_residual(pentagon, s, i)))
    col.add("projection.theorem", worst_theorem, 1e-8)
    col.add("projection.recovery", worst_rec, 1e-9)
    col.add("projection.confocal", worst_conf, 1e-9)


def criterion_8(col: _Collector, rng) -> None:
    """Poncelet closure: the stated search, the porism, shadowing, modulus."""
    try:
        config = poncelet.search_closing_config(5, 2, 1.0, 0.4)
        worst = abs(poncelet.closure_residual(config, 5, 2))
        porism = max(
            abs(poncelet.trajectory(config, float(p0), 5).phis[-1] - p0 - 2 * PI)
            for p0 in rng.uniform(0.0, 2 * PI, size=5))
        col.add("poncelet.search(5,2,R=1,r=0.4)", porism, 1e-8)
        col.add("poncelet.search_residual(5,2,R=1,r=0.4)", worst, 1e-12)
    except NoSolutionError as exc:
        detail = (f"{exc}; a 5/2 star cannot touch an inner circle beyond "
                  "~0.31 R, so this stated input has no closing distance")
        col.add("poncelet.search(5,2,R=1,r=0.4)", math.inf, 1e-8, detail)
        col.add("poncelet.search_residual(5,2,R=1,r=0.4)", math.inf, 1e-12, detail)

    # the same battery on a feasible star shows the machinery is sound
    config = poncelet.search_closing_config(5, 2, 1.0, 0.3)
    col.add("poncelet.search_residual(5,2,R=1,r=0.3)",
            abs(poncelet.closure_residual(config, 5, 2)), 1e-12)
    col.add("poncelet.porism(5,2,R=1,r=0.3)", max(
        abs(poncelet.trajectory(config, float(p0), 5).phis[-1] - p0 - 2 * PI)
        for p0 in rng.uniform(0.0, 2 * PI, size=5)), 1e-8)

    worst_shadow = worst_consistency = 0.0
    for cfg in (poncelet.TwoCircleConfig(1.0, 0.5, 0.2),
                poncelet.TwoCircleConfig(1.0, 0.4, 0.35),
                config):
        k, alpha = poncelet.modulus_of_config(cfg)
        step = elliptic_kernel.incomplete_F(alpha, k)
        phi0 = float(rng.uniform(0.0, 2 * PI))
        walk = poncelet.trajectory(cfg, phi0, 50)
        u0 = elliptic_kernel.incomplete_F(phi0, k)
        shadow = np.array([elliptic_kernel.am(u0 + i * step, k) for i in range(51)])
        worst_shadow = max(worst_shadow, float(np.abs(walk.phis - shadow).max()))
        worst_consistency = max(
            worst_consistency,
            abs(math.sqrt(1.0 - (k * math.sin(alpha)) ** 2)
                - (cfg.R - cfg.a) / (cfg.R + cfg.a)),
            abs(math.cos(alpha) - cfg.r / (cfg.R + cfg.a)))
    col.add("poncelet.shadowing", worst_shadow, 1e-9)
    col.add("poncelet.modulus_consistency", worst_consistency, 1e-12)


def criterion_9(col: _Collector, rng) -> None:
    """Dilogarithm values, the two functional equations, the pentagon sum."""
    col.add("dilog.landen", abs(dilogarithm.rogers_L(1.0 / GOLDEN) - PI ** 2 / 10),
            1e-12)
    worst_reflection = max(
        abs(dilogarithm.rogers_L(x) + dilogarithm.rogers_L(1.0 - x) - PI ** 2 / 6)
        for x in rng.uniform(1e-6, 1.0 - 1e-6, size=1000))
    col.add("dilog.reflection", worst_reflection, 1e-11)
    worst_spence = max(
        abs(dilogarithm.spence_residual(x, y))
        for x, y in rng.uniform(1e-6, 1.0 - 1e-6, size=(1000, 2)))
    col.add("dilog.spence", worst_spence, 1e-11)

    worst_sum = 0.0
    for _, frames in _grid_frames(rng, [0.1 * i for i in range(10)]):
        for frame in frames:
            betas = napier_uniformization.beta_sequence(frame)
            worst_sum = max(worst_sum, abs(dilogarithm.pentagon_five_term(betas)))
    col.add("dilog.pentagon_sum", worst_sum, 1e-10)


def _right_triangle_parts(a: float, b: float):
    """Law-of-cosines oracle for a right spherical triangle with legs a, b."""
    cos_c = math.cos(a) * math.cos(b)
    c = math.acos(cos_c)
    alpha = math.acos((math.cos(a) - math.cos(b) * cos_c)
                      / (math.sin(b) * math.sin(c)))
    beta = math.acos((math.cos(b) - math.cos(a) * cos_c)
                     / (math.sin(a) * math.sin(c)))
    half = PI / 2
    return pentagram_algebra.NapierParts(
        (a, b, half - alpha, half - c, half - beta))


def criterion_10(col: _Collector, rng) -> None:
    """Napier rules on oracle triangles; exactness of the cyclic maps."""
    worst = 0.0
    for _ in range(100):
        legs = rng.uniform(0.2, 1.35, size=2)
        parts = _right_triangle_parts(float(legs[0]), float(legs[1]))
        rule_one, rule_two = pentagram_algebra.verify_napier(parts)
        worst = max(worst, max(abs(r) for r in rule_one + rule_two))
    col.add("napier.rules", worst, 1e-11)

    parts = _right_triangle_parts(0.7, 1.1)
    rotated = parts
    for _ in range(5):
        rotated = pentagram_algebra.napier_rotate(rotated)
    col.add("napier.rotation_order", 0.0 if rotated == parts else math.inf, 0.0)
    col.add("napier.reflection_is_square",
            0.0 if pentagram_algebra.gauss_reflect(parts)
            == pentagram_algebra.napier_rotate(pentagram_algebra.napier_rotate(parts))
            else math.inf, 0.0)


CRITERIA = {
    1: ("Gauss example cycle and invariants", criterion_1),
    2: ("spectral roots at omega = 20", criterion_2),
    3: ("critical omega and double root", criterion_3),
    4: ("elliptic kernel identities and quadrature oracle", criterion_4),
    5: ("pentagon law on the modulus grid", criterion_5),
    6: ("spectral-modulus bridge", criterion_6),
    7: ("planar projection identities", criterion_7),
    8: ("Poncelet closure and porism", criterion_8),
    9: ("dilogarithm identities and pentagon sum", criterion_9),
    10: ("Napier rules and cyclic maps", criterion_10),
}


def run_criterion(number: int, seed: int = 0,
                  tol_override: float | None = None) -> list[Check]:
    description, func = CRITERIA[number]
    col = _Collector(override=tol_override)
    func(col, np.random.default_rng(seed + number))
    return col.checks


def run_all(seed: int = 0, tol_override: float | None = None) -> dict[int, list[Check]]:
    return {number: run_criterion(number, seed=seed, tol_override=tol_override)
            for number in sorted(CRITERIA)}
