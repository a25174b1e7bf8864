"""Closed-form trigonometry of hyperbolic pairs of pants.

All formulas are the classical right-angled hexagon / pentagon relations,
written for cuff *lengths* (twists never enter here).  A cuff length of 0
encodes a puncture: formulas that stay finite use cosh(0/2) = 1, formulas
that would measure a distance to the cusp refuse.

Lengths above MAX_CUFF are rejected outright: cosh grows like e^l and the
useful regime is upper bounded anyway, so nothing is lost by refusing
early instead of returning junk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonpositiveCuff, NonpositiveSide, OverflowGuard, PunctureSeam
from .hyp import acosh_stable

__all__ = [
    "MAX_CUFF",
    "PantsShape",
    "crossing_arc_length",
    "handle_orthogeodesic_length",
    "pentagon_perpendicular_length",
    "seam_length",
    "seam_lengths",
]

MAX_CUFF = 25.0


def _check_length(value: float, name: str) -> float:
    if not math.isfinite(value):
        raise OverflowGuard(f"{name} = {value!r} is not finite")
    if value < 0.0:
        raise NonpositiveCuff(f"{name} = {value!r} is negative")
    if value > MAX_CUFF:
        raise OverflowGuard(f"{name} = {value!r} exceeds the supported {MAX_CUFF}")
    return value


@dataclass(frozen=True)
class PantsShape:
    """Cuff lengths of one pair of pants; zero means puncture."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        for name in ("l1", "l2", "l3"):
            _check_length(getattr(self, name), name)

    def cuffs(self) -> tuple[float, float, float]:
        return (self.l1, self.l2, self.l3)

    def violations(self, upper_bound: float | None = None) -> list[str]:
        """Upper-bound check used when the pants sits in a bounded
        decomposition; returns human-readable violations."""
        out = []
        if upper_bound is not None:
            for i, l in enumerate(self.cuffs(), start=1):
                if l > upper_bound:
                    out.append(f"cuff l{i} = {l} exceeds upper bound {upper_bound}")
        return out


def seam_length(p: PantsShape, i: int, j: int) -> float:
    """Orthogeodesic (seam) between cuffs i and j, 1-based indices.

    cosh d_ij = (cosh(l_k/2) + cosh(l_i/2) cosh(l_j/2)) / (sinh(l_i/2) sinh(l_j/2))
    """
    if i == j or not {i, j} <= {1, 2, 3}:
        raise ValueError(f"seam needs two distinct cuff indices in 1..3, got {(i, j)}")
    cuffs = p.cuffs()
    li, lj = cuffs[i - 1], cuffs[j - 1]
    (k,) = {1, 2, 3} - {i, j}
    lk = cuffs[k - 1]
    if li == 0.0 or lj == 0.0:
        raise PunctureSeam(f"seam ({i},{j}) ends on a puncture; distance is infinite")
    x = (math.cosh(0.5 * lk) + math.cosh(0.5 * li) * math.cosh(0.5 * lj)) / (
        math.sinh(0.5 * li) * math.sinh(0.5 * lj)
    )
    return acosh_stable(x)


def seam_lengths(p: PantsShape) -> dict[tuple[int, int], float]:
    """All defined seams of the pants, keyed by cuff-index pairs.

    Pairs touching a puncture are simply absent (their length is infinite).
    """
    out: dict[tuple[int, int], float] = {}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        try:
            out[(i, j)] = seam_length(p, i, j)
        except PunctureSeam:
            pass
    return out


def pentagon_perpendicular_length(a: float, l_adj: float) -> float:
    """Solve sinh(d) sinh(a) = cosh(l_adj/2) for the perpendicular d of a
    right-angled pentagon with side a on the cuff and half of the adjacent
    cuff (length l_adj) on its boundary."""
    if a <= 0.0:
        raise NonpositiveSide(f"pentagon side a = {a!r} must be positive")
    _check_length(l_adj, "l_adj")
    if a > MAX_CUFF:
        raise OverflowGuard(f"a = {a!r} exceeds the supported {MAX_CUFF}")
    return math.asinh(math.cosh(0.5 * l_adj) / math.sinh(a))


def handle_orthogeodesic_length(l_cuff: float, l_other: float) -> float:
    """Orthogeodesic from a cuff back to itself around a handle.

    The defining hexagon relation, with the cuff halved symmetrically:

        cosh(d) sinh^2(l_cuff/2) = cosh(l_other) + cosh^2(l_cuff/2)

    ``l_other`` is the hexagon side on the opposite boundary (half of the
    opposite cuff when the hexagon halves the pants).
    """
    if l_cuff <= 0.0:
        raise NonpositiveCuff(f"l_cuff = {l_cuff!r} must be positive")
    _check_length(l_cuff, "l_cuff")
    _check_length(l_other, "l_other")
    sh = math.sinh(0.5 * l_cuff)
    x = (math.cosh(l_other) + math.cosh(0.5 * l_cuff) ** 2) / (sh * sh)
    return acosh_stable(x)


def crossing_arc_length(l_cuff: float, l_nb1: float, l_nb2: float) -> float:
    """Length of the arc from a cuff back to itself inside one pants,
    meeting the cuff at right angles and separating the other two cuffs.

    Modeled with the symmetric hexagon split: each half-arc solves its
    pentagon relation with side a = l_cuff/4, so the arc is the sum of two
    pentagon perpendiculars (exact when the other two cuffs agree).
    """
    if l_cuff <= 0.0:
        raise NonpositiveCuff(f"l_cuff = {l_cuff!r} must be positive")
    a = 0.25 * l_cuff
    return pentagon_perpendicular_length(a, l_nb1) + pentagon_perpendicular_length(a, l_nb2)
