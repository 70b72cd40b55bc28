"""The vertex cone, its characteristic cubic, and the spectral-modulus bridge.

The five pentagon vertices span a quadric cone z^2 + p xz + q yz + r xy = 0
whose principal values solve t(2t-1)^2 = omega(t-1), omega being the product
of the five squared side tangents.  The three real roots (one negative, two
at least 1) carry the whole shape class; their ratios are the cn and dn of
the elliptic lag, which is the bridge this package is built around.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DomainError, InvariantError, SubcriticalError
from .pentagram_algebra import GOLDEN, complete_from_two

OMEGA_CRITICAL = GOLDEN ** 5  # = (11 + 5 sqrt 5)/2, the regular-pentagram value

# below this distance from the critical point the double root is returned
# exactly to dodge catastrophic cancellation in the modulus formula
_NEAR_CRITICAL = 1e-10
_SUBCRITICAL_SLACK = 1e-12


@dataclass(frozen=True)
class ConeQuadric:
    """Coefficients of z^2 + p xz + q yz + r xy = 0."""

    p: float
    q: float
    r: float


@dataclass(frozen=True)
class SpectralTriple:
    """Real roots G < 0 < Gp <= Gpp of t(2t-1)^2 = omega(t-1)."""

    G: float
    Gp: float
    Gpp: float
    omega: float

    def characteristic_residuals(self) -> tuple[float, float, float]:
        return tuple(_cubic(t, self.omega) for t in (self.G, self.Gp, self.Gpp))

    def product_residuals(self) -> tuple[float, float, float]:
        """Scaled residuals of the three root-product identities."""
        G, Gp, Gpp, w = self.G, self.Gp, self.Gpp, self.omega
        r1 = (G * Gp * Gpp + w / 4.0) / w
        r2 = (G - 1.0) * (Gp - 1.0) * (Gpp - 1.0) + 0.25
        r3 = ((2 * G - 1) * (2 * Gp - 1) * (2 * Gpp - 1) + w) / w
        return r1, r2, r3


def cone_coefficients(alpha: float, gamma: float) -> ConeQuadric:
    """(p, q, r) = (-sqrt(alpha), -sqrt(gamma), -(1+alpha+gamma)/sqrt(alpha gamma))."""
    if alpha <= 0.0 or gamma <= 0.0:
        raise DomainError("cone seeds must be positive")
    p = -math.sqrt(alpha)
    q = -math.sqrt(gamma)
    r = -(1.0 + alpha + gamma) / math.sqrt(alpha * gamma)
    # same quantity through the completed cycle: r = -beta sqrt(alpha gamma)
    beta = complete_from_two(alpha, gamma).alphas[1]
    alt = -beta * math.sqrt(alpha * gamma)
    if abs(r - alt) > 1e-12 * abs(r):
        raise InvariantError(f"cone coefficient cross-check failed: {r!r} vs {alt!r}")
    return ConeQuadric(p=p, q=q, r=r)


def characteristic_matrix(c: ConeQuadric) -> np.ndarray:
    """Symmetric matrix of the cone form; eigenvalues solve the characteristic cubic."""
    return np.array([
        [0.0, c.r / 2.0, c.p / 2.0],
        [c.r / 2.0, 0.0, c.q / 2.0],
        [c.p / 2.0, c.q / 2.0, 1.0],
    ])


def critical_omega() -> float:
    """Smallest shape invariant of a real pentagon, attained by the regular one."""
    return OMEGA_CRITICAL


def _cubic(t: float, omega: float) -> float:
    return ((4.0 * t - 4.0) * t + (1.0 - omega)) * t + omega


def _cubic_derivative(t: float, omega: float) -> float:
    return (12.0 * t - 8.0) * t + (1.0 - omega)


def solve_characteristic(omega: float) -> SpectralTriple:
    """Three real roots of 4t^3 - 4t^2 + (1-omega)t + omega = 0, sorted.

    Closed-form trigonometric solution of the depressed cubic, then a Newton
    polish per root.  Inside the +-1e-10 window around the critical omega the
    exact double root is returned instead.
    """
    if omega < OMEGA_CRITICAL - _SUBCRITICAL_SLACK:
        raise SubcriticalError(
            f"omega={omega!r} below the critical value {OMEGA_CRITICAL!r}: "
            "only one real root exists")
    if omega - OMEGA_CRITICAL < _NEAR_CRITICAL:
        half_sq = GOLDEN * GOLDEN / 2.0
        return SpectralTriple(G=-GOLDEN, Gp=half_sq, Gpp=half_sq, omega=omega)

    # monic form t^3 + A t^2 + B t + C, depressed by t = s - A/3
    A = -1.0
    B = (1.0 - omega) / 4.0
    C = omega / 4.0
    pc = B - A * A / 3.0
    qc = 2.0 * A ** 3 / 27.0 - A * B / 3.0 + C
    radius = 2.0 * math.sqrt(-pc / 3.0)
    arg = 3.0 * qc / (pc * radius)
    arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg)
    roots = sorted(
        radius * math.cos((theta - 2.0 * math.pi * j) / 3.0) - A / 3.0
        for j in range(3)
    )
    polished = []
    for t in roots:
        for _ in range(2):
            t -= _cubic(t, omega) / _cubic_derivative(t, omega)
        polished.append(t)
    G, Gp, Gpp = sorted(polished)
    if not (G < 0.0 < Gp <= Gpp):
        raise InvariantError(f"root structure broken for omega={omega!r}: {polished}")
    return SpectralTriple(G=G, Gp=Gp, Gpp=Gpp, omega=omega)


def modulus_from_spectrum(s: SpectralTriple) -> tuple[float, float, float]:
    """(k, cn w, dn w) of the elliptic lag carried by a spectral triple.

    k^2 = (Gp^-2 - Gpp^-2)/(Gp^-2 - G^-2), cn w = -Gp/G, dn w = Gp/Gpp.
    A coincident positive pair is the regular pentagram: k = 0 exactly, and
    the returned cn is then cos(pi/5).
    """
    G, Gp, Gpp = s.G, s.Gp, s.Gpp
    if not (G < 0.0 < Gp <= Gpp):
        raise DegenerateError(f"malformed spectral triple {(G, Gp, Gpp)}")
    cnw = -Gp / G
    dnw = Gp / Gpp
    if Gpp - Gp <= 1e-12 * Gpp:
        return 0.0, cnw, dnw
    k2 = (Gp ** -2 - Gpp ** -2) / (Gp ** -2 - G ** -2)
    k = math.sqrt(k2)
    if not (0.0 <= k < 1.0 and 0.0 < cnw < 1.0 and 0.0 < dnw <= 1.0):
        raise InvariantError(
            f"bridge quantities out of range: k={k!r} cnw={cnw!r} dnw={dnw!r}")
    return k, cnw, dnw
