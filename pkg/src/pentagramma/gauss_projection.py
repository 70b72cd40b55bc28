"""Central projection of the pentagon onto the tangent plane.

The five projected vertices lie on an origin-centred axis-aligned ellipse;
each vertex is recoverable from its neighbours two ways (the right angles,
and the confocal-conic relation through the spectral roots), and the
eccentric anomalies satisfy the four half-sum identities checked by
gauss_theorem_residuals.  The sphere centre sits at (0, 0, 1) in this chart,
so the coordinates here never mix with the sphere-frame ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone_spectrum import SpectralTriple
from .errors import InvariantError, OffEllipseError, SingularError
from .napier_uniformization import PentagonFrame

TWO_PI = 2.0 * math.pi

_FIT_TOL = 1e-9


@dataclass(frozen=True)
class PlanarPentagon:
    """Projected vertices, fitted semi-axes, and unwrapped anomalies.

    anomalies[0] lies in [0, 2pi); the sequence increases and gains exactly
    2pi per full cycle, so anomaly(j) is well defined for any integer j.
    """

    points: np.ndarray           # shape (5, 2)
    axes: tuple[float, float]    # (g', g'')
    anomalies: tuple[float, ...]

    def point(self, j: int) -> np.ndarray:
        return self.points[j % 5]

    def anomaly(self, j: int) -> float:
        q, r = divmod(j, 5)
        return self.anomalies[r] + TWO_PI * q


def _fit_axes(pts: np.ndarray) -> tuple[float, float]:
    """Exact two-point solve of x^2/A + y^2/B = 1, first workable pair."""
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)):
        m = np.array([[pts[i, 0] ** 2, pts[i, 1] ** 2],
                      [pts[j, 0] ** 2, pts[j, 1] ** 2]])
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) > 1e-12 * max(1.0, abs(m).max() ** 2):
            inv_a2, inv_b2 = np.linalg.solve(m, np.ones(2))
            if inv_a2 <= 0.0 or inv_b2 <= 0.0:
                raise InvariantError("points do not span an origin-centred ellipse")
            return 1.0 / math.sqrt(inv_a2), 1.0 / math.sqrt(inv_b2)
    raise InvariantError("all vertex pairs degenerate for the axes solve")


def eccentric_anomaly(point, axes, tol: float = _FIT_TOL) -> float:
    """Angle phi in [0, 2pi) with point = (a cos phi, b sin phi)."""
    x, y = point
    a, b = axes
    cx = x / a
    sy = y / b
    if abs(cx * cx + sy * sy - 1.0) > tol:
        raise OffEllipseError(f"point {(x, y)} misses the ellipse {axes}")
    return math.atan2(sy, cx) % TWO_PI


def pentagon_from_frame(f: PentagonFrame, tol: float = _FIT_TOL) -> PlanarPentagon:
    """Drop the frame rays to the plane and recover axes and anomalies."""
    pts = np.array(f.vectors[:, :2])
    axes = _fit_axes(pts)
    inv_a2 = 1.0 / axes[0] ** 2
    inv_b2 = 1.0 / axes[1] ** 2
    for x, y in pts:
        if abs(x * x * inv_a2 + y * y * inv_b2 - 1.0) > tol:
            raise InvariantError("vertices do not share one axis-aligned ellipse")
    for i in range(5):
        xp, yp = pts[(i - 1) % 5]
        xn, yn = pts[(i + 1) % 5]
        if abs(xp * xn + yp * yn + 1.0) > tol:
            raise InvariantError("next-nearest rays are not orthogonal")

    raw = [eccentric_anomaly(p, axes, tol) for p in pts]
    unwrapped = [raw[0]]
    for j in range(1, 5):
        unwrapped.append(unwrapped[-1] + (raw[j] - unwrapped[-1]) % TWO_PI)
    return PlanarPentagon(points=pts, axes=axes, anomalies=tuple(unwrapped))


def chord_alphas(p: PlanarPentagon) -> tuple[float, ...]:
    """Squared tangents from planar chords alone (no third coordinate)."""
    out = []
    for i in range(5):
        x1, y1 = p.point(i)
        x2, y2 = p.point(i + 1)
        num = (x1 - x2) ** 2 + (y1 - y2) ** 2 + (x1 * y2 - y1 * x2) ** 2
        out.append(num / (x1 * x2 + y1 * y2 + 1.0) ** 2)
    return tuple(out)


def chord_betas(p: PlanarPentagon) -> tuple[float, ...]:
    """Squared sines of the vertex gaps, again from planar data."""
    out = []
    for i in range(5):
        x1, y1 = p.point(i)
        x2, y2 = p.point(i + 1)
        num = (x1 - x2) ** 2 + (y1 - y2) ** 2 + (x1 * y2 - y1 * x2) ** 2
        out.append(num / ((x1 ** 2 + y1 ** 2 + 1.0) * (x2 ** 2 + y2 ** 2 + 1.0)))
    return tuple(out)


def recover_from_pm2(p: PlanarPentagon, i: int, tol: float = 1e-12):
    """Vertex i from vertices i-2 and i+2 through the two right angles."""
    x2, y2 = p.point(i + 2)
    xm, ym = p.point(i - 2)
    den = x2 * ym - y2 * xm
    if abs(den) <= tol:
        raise SingularError("reference vertices collinear with the origin")
    return np.array([(y2 - ym) / den, (xm - x2) / den])


def recover_from_pm1(p: PlanarPentagon, s: SpectralTriple, i: int,
                     tol: float = 1e-12):
    """Vertex i from vertices i-1 and i+1 through the confocal relation."""
    x1, y1 = p.point(i + 1)
    xm, ym = p.point(i - 1)
    den = xm * y1 - x1 * ym
    if abs(den) <= tol:
        raise SingularError("reference vertices collinear with the origin")
    scale = 2.0 * s.G - 1.0
    return np.array([-(2.0 * s.Gp - 1.0) / scale * (y1 - ym) / den,
                     (2.0 * s.Gpp - 1.0) / scale * (x1 - xm) / den])


def confocal_residual(p: PlanarPentagon, s: SpectralTriple, i: int) -> float:
    """x_i x_{i+1}/(2G'-1) + y_i y_{i+1}/(2G''-1) + 1/(2G-1)."""
    x1, y1 = p.point(i)
    x2, y2 = p.point(i + 1)
    return (x1 * x2 / (2.0 * s.Gp - 1.0)
            + y1 * y2 / (2.0 * s.Gpp - 1.0)
            + 1.0 / (2.0 * s.G - 1.0))


def gauss_theorem_residuals(p: PlanarPentagon, s: SpectralTriple) -> np.ndarray:
    """The four half-sum anomaly identities at all five positions, as a 4x5 array.

    Rows 0-1: next-nearest identities with coefficients G/G'' and G/G'.
    Rows 2-3: nearest identities with coefficients G(2G-1)/(G''(2G''-1)) and
    the primed twin.  The square-root forms of those coefficients are equal
    to the rational ones for a genuine triple; that equality is asserted
    here before the residuals are formed.
    """
    G, Gp, Gpp = s.G, s.Gp, s.Gpp
    coeff_pp = G * (2.0 * G - 1.0) / (Gpp * (2.0 * Gpp - 1.0))
    coeff_p = G * (2.0 * G - 1.0) / (Gp * (2.0 * Gp - 1.0))
    root_pp = math.sqrt(G * (G - 1.0) / (Gpp * (Gpp - 1.0)))
    root_p = math.sqrt(G * (G - 1.0) / (Gp * (Gp - 1.0)))
    if abs(root_pp - coeff_pp) > 1e-9 * abs(coeff_pp) or \
            abs(root_p - coeff_p) > 1e-9 * abs(coeff_p):
        raise InvariantError("root/rational coefficient forms disagree: "
                             "spectral triple inconsistent with its cubic")

    res = np.empty((4, 5))
    for i in range(5):
        phi = p.anomaly(i)
        fm2, fp2 = p.anomaly(i - 2), p.anomaly(i + 2)
        half_sum = 0.5 * (fm2 + fp2)
        half_diff = math.cos(0.5 * (fm2 - fp2))
        res[0, i] = math.sin(half_sum) / half_diff - (G / Gpp) * math.sin(phi)
        res[1, i] = math.cos(half_sum) / half_diff - (G / Gp) * math.cos(phi)
        fm1, fp1 = p.anomaly(i - 1), p.anomaly(i + 1)
        half_sum = 0.5 * (fm1 + fp1)
        half_diff = math.cos(0.5 * (fm1 - fp1))
        res[2, i] = math.sin(half_sum) / half_diff - coeff_pp * math.sin(phi)
        res[3, i] = math.cos(half_sum) / half_diff - coeff_p * math.cos(phi)
    return res
