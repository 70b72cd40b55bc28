"""Real Jacobi elliptic functions for modulus 0 <= k < 1.

Everything is built on the arithmetic-geometric mean: the quarter-period K
comes straight from the AGM limit, and the amplitude is evaluated by the
descending Landen recurrence on the AGM phases.  That makes am(u) continuous
and strictly increasing on all of R (the winding count falls out of the
phase seeding, no table of branch cuts), which the Poncelet turn counting
relies on.  sn, cn, dn are then trig of the amplitude; the quadrature
definition of these functions is only ever used as an independent test
oracle, never in this module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import DomainError, InvariantError, NearPoleError

DEFAULT_TOL = 1e-12

# K(k) ~ log(4/k') as k -> 1; past this bound doubles cannot represent the
# distinction between k and 1 and the AGM loses its contract.
MAX_MODULUS = 1.0 - 1e-12

_MAX_AGM_ITER = 64


def _check_modulus(k: float) -> None:
    if not 0.0 <= k <= MAX_MODULUS:
        raise DomainError(f"modulus k={k!r} outside [0, 1 - 1e-12]")


def _agm_phases(k: float) -> tuple[list[float], list[float]]:
    """AGM scales a_n and half-gaps c_n, iterated to machine convergence."""
    a = 1.0
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    scales = [a]
    gaps = [c]
    for _ in range(_MAX_AGM_ITER):
        # quadratic convergence bottoms out at rounding noise ~eps*a, so the
        # cut sits just above one ulp, with a plateau guard behind it
        if abs(c) <= 2.5e-16 * a:
            return scales, gaps
        nxt = (0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b))
        if abs(nxt[2]) >= abs(c):
            return scales, gaps
        a, b, c = nxt
        scales.append(a)
        gaps.append(c)
    raise InvariantError(f"AGM failed to converge for k={k!r}")


def complete_K(k: float) -> float:
    """Quarter-period K(k), exact to the last AGM iterate."""
    _check_modulus(k)
    scales, _ = _agm_phases(k)
    return math.pi / (2.0 * scales[-1])


def am(u: float, k: float) -> float:
    """Jacobi amplitude, continuous and strictly increasing in u.

    Phase seeding: phi_N = 2^N a_N u, then the half-angle descent
    phi_{n-1} = (phi_n + asin((c_n/a_n) sin phi_n)) / 2.  Because the seed is
    linear in u and every descent step is a contraction, the quasi-period
    am(u + 2K) = am(u) + pi holds to rounding without explicit unwinding.
    """
    _check_modulus(k)
    scales, gaps = _agm_phases(k)
    n = len(scales) - 1
    phi = math.ldexp(scales[-1] * u, n)
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(gaps[i] / scales[i] * math.sin(phi)))
    return phi


@dataclass(frozen=True)
class JacobiTriple:
    """The values (sn u, cn u, dn u) at a common argument."""

    sn: float
    cn: float
    dn: float

    def __iter__(self):
        return iter((self.sn, self.cn, self.dn))


@dataclass(frozen=True)
class EllipticContext:
    """A modulus with its quarter-period and the tolerance used by checks."""

    k: float
    K: float
    tol: float = DEFAULT_TOL

    @classmethod
    def for_modulus(cls, k: float, tol: float = DEFAULT_TOL) -> "EllipticContext":
        return cls(k=k, K=complete_K(k), tol=tol)


def jacobi_triple(u: float, k: float) -> JacobiTriple:
    """(sn, cn, dn) at u.  dn is the positive root of 1 - k^2 sn^2."""
    phi = am(u, k)
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - (k * sn) ** 2)
    return JacobiTriple(sn, cn, dn)


def _invert_am(phi: float, k: float, quarter: float) -> float:
    """Solve am(u) = phi for phi in [0, pi/2].

    k' u <= am(u) <= u pins the root inside [phi, K]; Brent plus one Newton
    polish (the derivative of am is dn) lands at machine precision.
    """
    if phi <= 0.0:
        return 0.0
    u = brentq(lambda t: am(t, k) - phi, phi * (1.0 - 1e-12), quarter,
               xtol=1e-15, rtol=8.9e-16)
    dn = math.sqrt(1.0 - (k * math.sin(phi)) ** 2)
    return u - (am(u, k) - phi) / dn


def incomplete_F(phi: float, k: float) -> float:
    """Incomplete integral of the first kind, i.e. the inverse of am.

    Extended beyond [0, pi/2] by oddness and F(phi + pi) = F(phi) + 2K.
    """
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -incomplete_F(-phi, k)
    if k == 0.0:
        return phi
    quarter = complete_K(k)
    turns = math.floor(phi / math.pi)
    rest = phi - turns * math.pi
    if rest <= 0.5 * math.pi:
        u = _invert_am(rest, k, quarter)
    else:
        u = 2.0 * quarter - _invert_am(math.pi - rest, k, quarter)
    return 2.0 * turns * quarter + u


def jacobi_sum(u: float, v: float, k: float, tol: float = DEFAULT_TOL) -> JacobiTriple:
    """(sn, cn, dn) of u+v through the addition-formula quotients."""
    su, cu, du = jacobi_triple(u, k)
    sv, cv, dv = jacobi_triple(v, k)
    denom = 1.0 - (k * su * sv) ** 2
    if abs(denom) <= tol:
        # denom >= 1 - k^2 > 0 for any real arguments, so reaching this
        # means the kernel itself broke.
        raise DomainError(f"addition-formula denominator vanished: {denom!r}")
    sn = (su * cv * dv + cu * sv * du) / denom
    cn = (cu * cv - su * sv * du * dv) / denom
    dn = (du * dv - k * k * su * sv * cu * cv) / denom
    return JacobiTriple(sn, cn, dn)


def half_angle_tan(x: float, y: float, k: float, tol: float = DEFAULT_TOL) -> float:
    """tan((am x + am y)/2), cross-checked against dn((x-y)/2) tan(am((x+y)/2)).

    The internal check uses the cross-multiplied residual
    sin(h) cos(am m) - dn(v) cos(h) sin(am m), which stays bounded where the
    two tangents blow up together.
    """
    half = 0.5 * (am(x, k) + am(y, k))
    pole_distance = abs(half % math.pi - 0.5 * math.pi)
    if pole_distance <= tol:
        raise NearPoleError(f"half-sum amplitude within {tol} of pi/2 mod pi")
    mid = am(0.5 * (x + y), k)
    dnv = jacobi_triple(0.5 * (x - y), k).dn
    residual = math.sin(half) * math.cos(mid) - dnv * math.cos(half) * math.sin(mid)
    if abs(residual) > 1e-10:
        raise InvariantError(f"half-angle identity residual {residual:.3e}")
    return math.tan(half)
