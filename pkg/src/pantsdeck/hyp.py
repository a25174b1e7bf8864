"""Primitives of hyperbolic plane geometry in the upper half-plane model.

Isometries are real 2x2 matrices of determinant one acting by Mobius
transformations; they are kept only up to sign (the projective class), so
traces are always consumed through their absolute value.  Boundary points
are plain floats with ``math.inf`` standing for the single point at
infinity of the circle at infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateQuadruple, DeterminantDrift, NotHyperbolic

__all__ = [
    "INFINITY",
    "Isometry",
    "acosh_stable",
    "compose",
    "cross_ratio",
    "log_cross_ratio",
    "mobius_apply",
    "translation_length",
]

INFINITY = math.inf

# Strictness margin for hyperbolicity: |trace| must exceed 2 by this much.
TRACE_MARGIN = 1e-12

# Determinant drift thresholds for composition, at unit scale.  Both are
# widened in proportion to the square of the largest entry: beyond that the
# computed determinant is pure cancellation noise and proves nothing.
_DET_RENORM = 1e-14
_DET_FAIL = 1e-8
_DET_CONSTRUCT = 1e-12
_MACHINE = 2.0 ** -52


def acosh_stable(x: float) -> float:
    """arccosh via log(x + sqrt(x^2 - 1)), clamped at the branch point and
    switched to log(2x) once squaring would overflow."""
    if x > 1e150:
        return math.log(x) + math.log(2.0)
    s = x * x - 1.0
    if s < 0.0:
        s = 0.0
    return math.log(x + math.sqrt(s))


def _det_tolerance(scale_sq: float, base: float) -> float:
    return max(base, 32.0 * _MACHINE * scale_sq)


@dataclass(frozen=True)
class Isometry:
    """A unit-determinant 2x2 real matrix, up to sign."""

    m11: float
    m12: float
    m21: float
    m22: float

    def __post_init__(self):
        d = self.det()
        tol = _det_tolerance(self._scale_sq(), _DET_CONSTRUCT)
        if not math.isfinite(d) or abs(d - 1.0) > tol:
            raise ValueError(f"matrix determinant {d!r} is not 1 within {tol:g}")

    def _scale_sq(self) -> float:
        m = max(abs(self.m11), abs(self.m12), abs(self.m21), abs(self.m22))
        return m * m

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> float:
        return self.m11 + self.m22

    def inverse(self) -> "Isometry":
        # adjugate; exact for determinant one
        return Isometry(self.m22, -self.m12, -self.m21, self.m11)

    def is_hyperbolic(self) -> bool:
        return abs(self.trace()) > 2.0 + TRACE_MARGIN

    def is_parabolic(self) -> bool:
        return abs(abs(self.trace()) - 2.0) <= TRACE_MARGIN

    def is_elliptic(self) -> bool:
        return abs(self.trace()) < 2.0 - TRACE_MARGIN

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def axis_translation(cls, length: float) -> "Isometry":
        """Translation by ``length`` along the imaginary axis (signed;
        positive moves away from 0)."""
        e = math.exp(0.5 * length)
        return cls(e, 0.0, 0.0, 1.0 / e)

    @classmethod
    def perpendicular_translation(cls, length: float) -> "Isometry":
        """Translation by ``length`` along the geodesic through i that
        meets the imaginary axis at a right angle."""
        c = math.cosh(0.5 * length)
        s = math.sinh(0.5 * length)
        return cls(c, s, s, c)

    @classmethod
    def rotation(cls, angle: float) -> "Isometry":
        """Elliptic rotation by ``angle`` about the point i."""
        c = math.cos(0.5 * angle)
        s = math.sin(0.5 * angle)
        return cls(c, s, -s, c)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)


def compose(a: Isometry, b: Isometry) -> Isometry:
    """Matrix product a.b, renormalized back to determinant one when the
    drift is measurable."""
    m11 = a.m11 * b.m11 + a.m12 * b.m21
    m12 = a.m11 * b.m12 + a.m12 * b.m22
    m21 = a.m21 * b.m11 + a.m22 * b.m21
    m22 = a.m21 * b.m12 + a.m22 * b.m22
    d = m11 * m22 - m12 * m21
    m = max(abs(m11), abs(m12), abs(m21), abs(m22))
    scale_sq = m * m
    drift = abs(d - 1.0)
    if drift > _det_tolerance(scale_sq, _DET_RENORM):
        if drift > _det_tolerance(scale_sq, _DET_FAIL) or d <= 0.0:
            raise DeterminantDrift(f"determinant drifted to {d!r}")
        r = math.sqrt(d)
        m11, m12, m21, m22 = m11 / r, m12 / r, m21 / r, m22 / r
    return Isometry(m11, m12, m21, m22)


def translation_length(a: Isometry) -> float:
    """2 arccosh(|tr|/2) for a strictly hyperbolic isometry."""
    t = abs(a.trace())
    if t <= 2.0 + TRACE_MARGIN:
        raise NotHyperbolic(f"|trace| = {t!r} is not above 2")
    return 2.0 * acosh_stable(0.5 * t)


def mobius_apply(g: Isometry, x: float) -> float:
    """Action of g on a boundary point (math.inf is the point at infinity)."""
    if math.isinf(x):
        if g.m21 == 0.0:
            return INFINITY
        return g.m11 / g.m21
    num = g.m11 * x + g.m12
    den = g.m21 * x + g.m22
    if den == 0.0:
        return INFINITY
    v = num / den
    return INFINITY if math.isinf(v) else v


def _pairwise_distinct(points) -> bool:
    for i in range(4):
        for j in range(i + 1, 4):
            if points[i] == points[j]:
                return False
    return True


def cross_ratio(x: float, y: float, z: float, w: float) -> float:
    """Cross-ratio normalized so that cr(x, 0, 1, inf) = (1 - x)/(-x).

    Infinity in any slot is handled by the usual limit: factors containing
    it cancel in pairs.
    """
    pts = (x, y, z, w)
    if not _pairwise_distinct(pts):
        raise DegenerateQuadruple(f"repeated point in {pts!r}")
    # cr = (x - z)(y - w) / ((x - y)(z - w)); drop the two factors that
    # contain the point at infinity.
    num = 1.0
    den = 1.0
    if not (math.isinf(x) or math.isinf(z)):
        num *= x - z
    if not (math.isinf(y) or math.isinf(w)):
        num *= y - w
    if not (math.isinf(x) or math.isinf(y)):
        den *= x - y
    if not (math.isinf(z) or math.isinf(w)):
        den *= z - w
    return num / den


def log_cross_ratio(x: float, y: float, z: float, w: float) -> float:
    """Natural log of the cross-ratio; requires the quadruple to sit in a
    configuration with positive cross-ratio."""
    cr = cross_ratio(x, y, z, w)
    if cr <= 0.0:
        raise ValueError(f"cross-ratio {cr!r} is not positive; log undefined")
    return math.log(cr)
