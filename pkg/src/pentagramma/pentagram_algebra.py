"""Right spherical triangles, the cyclic parts machinery, and pentagon algebra.

A self-polar spherical pentagon is encoded by the five squared tangents of
its sides (an AlphaCycle); every identity in this module is rational in
those quantities, so the cycle is the canonical datum and angle tuples are
derived views.  Indices are zero-based and cyclic mod 5 throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvariantError

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

ALPHA_MIN = 1e-8
ALPHA_MAX = 1e8
RATIONAL_TOL = 1e-12   # identities that are rational in the alphas
GEOM_TOL = 1e-10       # identities that go through trig evaluations


@dataclass(frozen=True)
class NapierParts:
    """Five parts of a right spherical triangle in cyclic order."""

    parts: tuple[float, float, float, float, float]

    def __post_init__(self):
        if len(self.parts) != 5:
            raise DomainError("a parts tuple has exactly five entries")


def napier_rotate(t: NapierParts) -> NapierParts:
    """Cyclic shift by one position; order five."""
    p = t.parts
    return NapierParts((p[1], p[2], p[3], p[4], p[0]))


def gauss_reflect(t: NapierParts) -> NapierParts:
    """The square of the rotation; reflects the triangle in a vertex."""
    return napier_rotate(napier_rotate(t))


def verify_napier(t: NapierParts):
    """Residuals of the two Napier rules at each of the five positions.

    Rule I:  sin(middle) - tan(neighbour left) tan(neighbour right)
    Rule II: sin(middle) - cos(opposite) cos(opposite)
    Returns (rule_one, rule_two), two 5-tuples; all ten vanish exactly when
    the tuple belongs to a genuine right triangle.
    """
    p = t.parts
    rule_one = tuple(
        math.sin(p[i]) - math.tan(p[(i - 1) % 5]) * math.tan(p[(i + 1) % 5])
        for i in range(5)
    )
    rule_two = tuple(
        math.sin(p[i]) - math.cos(p[(i + 2) % 5]) * math.cos(p[(i + 3) % 5])
        for i in range(5)
    )
    return rule_one, rule_two


@dataclass(frozen=True)
class AlphaCycle:
    """Squared tangents (alpha, beta, gamma, delta, epsilon) of pentagon sides."""

    alphas: tuple[float, float, float, float, float]

    def __post_init__(self):
        if len(self.alphas) != 5:
            raise DomainError("an alpha cycle has exactly five entries")
        for a in self.alphas:
            if not ALPHA_MIN <= a <= ALPHA_MAX:
                raise DomainError(
                    f"alpha value {a!r} outside [{ALPHA_MIN}, {ALPHA_MAX}]: "
                    "pentagon collapsed or tangent overflowed")

    def relation_residuals(self) -> tuple[float, ...]:
        """Scaled residuals of 1 + a_i = a_{i+2} a_{i+3} at each position."""
        a = self.alphas
        return tuple(
            (1.0 + a[i] - a[(i + 2) % 5] * a[(i + 3) % 5]) / (1.0 + a[i])
            for i in range(5)
        )

    def validate(self, tol: float = RATIONAL_TOL) -> None:
        worst = max(abs(r) for r in self.relation_residuals())
        if worst > tol:
            raise InvariantError(f"cycle law violated, residual {worst:.3e}")

    def omega(self) -> float:
        prod = 1.0
        for a in self.alphas:
            prod *= a
        return prod


def alphas_from_sides(p) -> AlphaCycle:
    """tan^2 of each side; sides must lie strictly inside (0, pi/2)."""
    p = tuple(p)
    if len(p) != 5:
        raise DomainError("expected five side angles")
    for s in p:
        if not 0.0 < s < 0.5 * math.pi:
            raise DomainError(f"side {s!r} outside (0, pi/2)")
    return AlphaCycle(tuple(math.tan(s) ** 2 for s in p))


def sides_from_alphas(c: AlphaCycle) -> tuple[float, ...]:
    """Inverse view: p_i = arctan sqrt(alpha_i)."""
    return tuple(math.atan(math.sqrt(a)) for a in c.alphas)


def complete_from_two(alpha: float, gamma: float) -> AlphaCycle:
    """Rebuild the full cycle from the first and third entries.

    beta = (1+alpha+gamma)/(alpha gamma), delta = (1+alpha)/gamma,
    epsilon = (1+gamma)/alpha; the five cyclic relations then hold
    identically.
    """
    if alpha <= 0.0 or gamma <= 0.0:
        raise DomainError("both seed quantities must be positive")
    beta = (1.0 + alpha + gamma) / (alpha * gamma)
    delta = (1.0 + alpha) / gamma
    epsilon = (1.0 + gamma) / alpha
    return AlphaCycle((alpha, beta, gamma, delta, epsilon))


def pentagram_invariants(c: AlphaCycle) -> tuple[float, float, float]:
    """(3 + sum, product, sqrt of product of (1+a_i)) — all three coincide."""
    a = c.alphas
    total = 3.0 + sum(a)
    prod = c.omega()
    augmented = 1.0
    for v in a:
        augmented *= 1.0 + v
    return total, prod, math.sqrt(augmented)


def pentagon_parts(sides, i: int) -> NapierParts:
    """Parts tuple of the i-th right triangle cut off the pentagon (i = 0..4).

    Entry pattern (complements of sides): indices i+1, i+4, i+2, i+5, i+3
    in one-based labels; successive i are related by the Gaussian reflection.
    """
    s = tuple(sides)
    half = 0.5 * math.pi
    return NapierParts(tuple(half - s[(i + d) % 5] for d in (1, 4, 2, 0, 3)))


@dataclass(frozen=True)
class SpherePentagon:
    """Five unit vertices on the sphere plus the arc lengths of the sides."""

    vertices: np.ndarray          # shape (5, 3), rows P1..P5
    sides: tuple[float, ...]      # p_i = arc between vertices i+2 and i+3 (1-based)


def sphere_sides(vertices: np.ndarray) -> tuple[float, ...]:
    """Recompute side arcs from vertices: p_i spans P_{i+2} P_{i+3} (1-based)."""
    out = []
    for i in range(5):
        a = vertices[(i + 2) % 5]
        b = vertices[(i + 3) % 5]
        cross = np.cross(a, b)
        out.append(math.atan2(float(np.linalg.norm(cross)), float(np.dot(a, b))))
    return tuple(out)


def orthogonality_residuals(vertices: np.ndarray) -> tuple[float, ...]:
    """Dot products of next-nearest vertex pairs; zero for a genuine pentagon."""
    return tuple(float(np.dot(vertices[(j - 1) % 5], vertices[(j + 1) % 5]))
                 for j in range(5))


def build_sphere_vertices(c: AlphaCycle, tol: float = GEOM_TOL) -> SpherePentagon:
    """Place the pentagon on the unit sphere in the standard frame.

    P3 = (1,0,0) and P1 = (0,1,0); P5 and P4 follow from sides p3 and p1;
    P2 spans the ray orthogonal to the P4, P5 plane.  The raw coordinates of
    P2 are along the correct ray but not unit length, so it is normalised.
    Raises InvariantError when the cycle is not a genuine pentagon (the
    orthogonality or cone-membership residuals then exceed tol).
    """
    p1, p2, p3, p4, p5 = sides_from_alphas(c)
    P3 = np.array([1.0, 0.0, 0.0])
    P1 = np.array([0.0, 1.0, 0.0])
    P5 = np.array([0.0, math.cos(p3), math.sin(p3)])
    P4 = np.array([math.cos(p1), 0.0, math.sin(p1)])
    P2 = np.array([math.cos(p5), math.cos(p4), -math.cos(p3) * math.sin(p5)])
    P2 = P2 / np.linalg.norm(P2)
    vertices = np.array([P1, P2, P3, P4, P5])

    worst = max(abs(r) for r in orthogonality_residuals(vertices))
    if worst > tol:
        raise InvariantError(
            f"vertex orthogonality residual {worst:.3e} exceeds {tol:.1e}; "
            "the alpha cycle is not a pentagon")

    # membership in the quadric cone z^2 + p xz + q yz + r xy = 0 built from
    # the first and third cycle entries
    alpha, gamma = c.alphas[0], c.alphas[2]
    cp = -math.sqrt(alpha)
    cq = -math.sqrt(gamma)
    cr = -(1.0 + alpha + gamma) / math.sqrt(alpha * gamma)
    for v in vertices:
        x, y, z = v
        res = z * z + cp * x * z + cq * y * z + cr * x * y
        if abs(res) > tol:
            raise InvariantError(f"cone membership residual {res:.3e} exceeds {tol:.1e}")

    return SpherePentagon(vertices=vertices, sides=sphere_sides(vertices))
