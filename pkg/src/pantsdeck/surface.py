"""Combinatorial pants decompositions carrying Fenchel-Nielsen coordinates.

A surface is a pants graph (pants, slot pairings, boundary and puncture
flags) plus one length per non-puncture curve and one twist per interior
curve.  Infinite families are represented by finite prefixes; the chain
("flute") and handle-chain ("ladder") builders below produce the stock
examples.

Curve indexing is deterministic: interior curves are numbered 1..P in the
order of the pairing list, boundary curves continue from P+1 in the order
of the boundary list.  Punctures carry no index, no length and no twist.

Holonomy convention
-------------------
Every curve word is realized as a matrix normalized so that the pants
curve it crosses lifts to the imaginary axis.  A pants curve itself maps
to diag(e^{l/2}, e^{-l/2}).  A crossing word is an alternating product of
translations along the axis and translations along perpendiculars through
i, with arc lengths from the symmetric hexagon split of each adjacent
pants (perpendicular feet spaced l/2 apart along the cuff).  Twist zero is
the marking in which the crossing feet of the two sides line up, so the
twice-crossing curve at twist 0, wrap 0 is exactly the union of the two
perpendicular arcs.  Positive twist slides the far side toward the
attracting end of the axis; only twist *differences* matter downstream,
and the convention is frozen by a golden test.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Callable, Sequence, Union

from .errors import BadParameter, PunctureCrossing, UnsupportedWord
from .hyp import Isometry, compose
from .pants import crossing_arc_length, handle_orthogeodesic_length

__all__ = [
    "Crossing",
    "CurveWord",
    "FNCoordinates",
    "MarkedSurface",
    "PantsCurve",
    "PantsGraph",
    "curve_holonomy",
    "flute_family",
    "scale_lengths",
    "shift_twists",
    "surface_from_dict",
    "surface_from_json",
    "surface_to_dict",
    "surface_to_json",
    "validate",
]

Slot = tuple[int, int]


@dataclass(frozen=True)
class PantsGraph:
    """Pants with three slots each; paired slots are interior curves."""

    num_pants: int
    pairings: tuple[tuple[Slot, Slot], ...]
    boundary: tuple[Slot, ...] = ()
    punctures: tuple[Slot, ...] = ()

    @cached_property
    def interior_curves(self) -> dict[int, tuple[Slot, Slot]]:
        return {i + 1: pair for i, pair in enumerate(self.pairings)}

    @cached_property
    def boundary_curves(self) -> dict[int, Slot]:
        base = len(self.pairings)
        return {base + 1 + j: slot for j, slot in enumerate(self.boundary)}

    @cached_property
    def curve_at_slot(self) -> dict[Slot, int]:
        out: dict[Slot, int] = {}
        for n, (a, b) in self.interior_curves.items():
            out[a] = n
            out[b] = n
        for n, slot in self.boundary_curves.items():
            out[slot] = n
        return out

    def curve_indices(self) -> list[int]:
        return sorted(self.interior_curves) + sorted(self.boundary_curves)

    def is_interior(self, n: int) -> bool:
        return n in self.interior_curves

    def is_boundary(self, n: int) -> bool:
        return n in self.boundary_curves

    def is_handle_curve(self, n: int) -> bool:
        """True when both sides of curve n are the same pants."""
        pair = self.interior_curves.get(n)
        return pair is not None and pair[0][0] == pair[1][0]

    def pants_of(self, n: int) -> tuple[int, ...]:
        if n in self.interior_curves:
            a, b = self.interior_curves[n]
            return (a[0], b[0])
        if n in self.boundary_curves:
            return (self.boundary_curves[n][0],)
        raise KeyError(n)


@dataclass(frozen=True)
class FNCoordinates:
    """Lengths for every non-puncture curve, twists for interior curves."""

    lengths: dict[int, float]
    twists: dict[int, float]


@dataclass(frozen=True)
class MarkedSurface:
    graph: PantsGraph
    coords: FNCoordinates
    upper_bound: float | None = None

    def length(self, n: int) -> float:
        return self.coords.lengths[n]

    def twist(self, n: int) -> float:
        return self.coords.twists[n]

    def interior_curve_indices(self) -> list[int]:
        return sorted(self.graph.interior_curves)


@dataclass(frozen=True)
class PantsCurve:
    """The pants curve with the given index, traversed once."""

    curve: int


@dataclass(frozen=True)
class Crossing:
    """Closed curve crossing pants curve ``curve`` and staying inside the
    adjacent pants; ``wrap`` counts extra windings picked up along the
    curve (one full twist shifts it by one)."""

    curve: int
    arc_type: int = 0
    wrap: int = 0


CurveWord = Union[PantsCurve, Crossing]


# -- validation ---------------------------------------------------------------

def validate(s: MarkedSurface) -> list[str]:
    """Structural and coordinate checks; returns violations (empty = ok)."""
    g = s.graph
    out: list[str] = []

    def slot_ok(slot) -> bool:
        return (
            isinstance(slot, tuple)
            and len(slot) == 2
            and 0 <= slot[0] < g.num_pants
            and slot[1] in (0, 1, 2)
        )

    usage: dict[Slot, int] = {}
    for idx, pair in enumerate(g.pairings):
        a, b = pair
        for slot in (a, b):
            if not slot_ok(slot):
                out.append(f"pairing {idx} refers to invalid slot {slot}")
            else:
                usage[slot] = usage.get(slot, 0) + 1
        if a == b:
            out.append(f"pairing {idx} glues slot {a} to itself")
    for slot in g.boundary:
        if not slot_ok(slot):
            out.append(f"boundary refers to invalid slot {slot}")
        else:
            usage[slot] = usage.get(slot, 0) + 1
    for slot in g.punctures:
        if not slot_ok(slot):
            out.append(f"puncture refers to invalid slot {slot}")
        else:
            usage[slot] = usage.get(slot, 0) + 1

    for p in range(g.num_pants):
        for j in (0, 1, 2):
            c = usage.get((p, j), 0)
            if c == 0:
                out.append(f"slot ({p},{j}) is unassigned")
            elif c > 1:
                out.append(f"slot ({p},{j}) assigned {c} times")

    indexed = set(g.interior_curves) | set(g.boundary_curves)
    for n in sorted(indexed):
        if n not in s.coords.lengths:
            out.append(f"missing length for curve {n}")
        elif not (s.coords.lengths[n] > 0.0) or not math.isfinite(s.coords.lengths[n]):
            out.append(f"nonpositive length at curve {n}")
    for n in sorted(g.interior_curves):
        if n not in s.coords.twists:
            out.append(f"missing twist for curve {n}")
    for n in sorted(s.coords.lengths):
        if n not in indexed:
            out.append(f"length entry for unknown curve {n}")
    for n in sorted(s.coords.twists):
        if n not in g.interior_curves:
            if n in g.boundary_curves:
                out.append(f"twist defined for boundary curve {n}")
            else:
                out.append(f"twist entry for unknown curve {n}")

    if s.upper_bound is not None:
        if not (s.upper_bound > 0.0):
            out.append(f"upper bound {s.upper_bound} is not positive")
        else:
            for n in sorted(s.coords.lengths):
                l = s.coords.lengths[n]
                if n in indexed and l > s.upper_bound:
                    out.append(
                        f"upper bound exceeded at curve {n}: {l} > {s.upper_bound}"
                    )
    return out


# -- families -----------------------------------------------------------------

Generator = Union[Callable[[int], float], Sequence[float]]


def _gen(gen: Generator | None, n: int, default: float = 0.0) -> float:
    if gen is None:
        return default
    if callable(gen):
        return float(gen(n))
    return float(gen[n - 1])


def flute_family(
    size: int,
    lengths: Generator,
    twists: Generator | None = None,
    *,
    handles: bool = False,
    punctures: bool = False,
    boundary_length: float = 1.0,
    upper_bound: float | None = None,
) -> MarkedSurface:
    """Finite prefix of the standard infinite chain.

    Plain mode: ``size`` pants in a row, pants i glued to pants i+1 along
    curve i+1 (curves 1..size-1).  Each pants' third slot is a boundary
    geodesic of length ``boundary_length``, or a puncture when
    ``punctures`` is set; the two chain-end slots stay boundary geodesics
    either way (they are truncation artifacts, not features).

    Handle mode (``handles=True``): ``size`` units, each a spine pants
    plus a handle pants whose remaining two slots are glued to each other.
    The measured sequence drives the handle curves, which get indices
    1..size; stems, spine curves and boundary all use ``boundary_length``
    with twist 0.
    """
    if size < 2:
        raise BadParameter(f"family needs size >= 2, got {size}")
    if boundary_length <= 0.0 or not math.isfinite(boundary_length):
        raise BadParameter(f"boundary_length must be positive, got {boundary_length}")
    if handles and punctures:
        raise BadParameter("handle mode has no free third cuffs to puncture")

    def measured(n: int) -> float:
        v = _gen(lengths, n)
        if not math.isfinite(v) or v <= 0.0:
            raise BadParameter(f"generated length for curve {n} is {v!r}")
        return v

    pairings: list[tuple[Slot, Slot]] = []
    boundary: list[Slot] = []
    puncture_slots: list[Slot] = []
    length_map: dict[int, float] = {}
    twist_map: dict[int, float] = {}

    if not handles:
        num_pants = size
        for i in range(size - 1):
            pairings.append(((i, 1), (i + 1, 0)))
        n_interior = len(pairings)
        for n in range(1, n_interior + 1):
            length_map[n] = measured(n)
            twist_map[n] = _gen(twists, n)
        boundary.append((0, 0))
        boundary.append((size - 1, 1))
        for i in range(size):
            if punctures:
                puncture_slots.append((i, 2))
            else:
                boundary.append((i, 2))
    else:
        num_pants = 2 * size
        # handle curves first so they take indices 1..size
        for i in range(size):
            pairings.append(((size + i, 1), (size + i, 2)))
        for i in range(size):
            pairings.append(((i, 2), (size + i, 0)))  # stems
        for i in range(size - 1):
            pairings.append(((i, 1), (i + 1, 0)))  # spine
        for n in range(1, size + 1):
            length_map[n] = measured(n)
            twist_map[n] = _gen(twists, n)
        for n in range(size + 1, len(pairings) + 1):
            length_map[n] = boundary_length
            twist_map[n] = 0.0
        boundary.append((0, 0))
        boundary.append((size - 1, 1))

    graph = PantsGraph(
        num_pants=num_pants,
        pairings=tuple(pairings),
        boundary=tuple(boundary),
        punctures=tuple(puncture_slots),
    )
    for n in graph.boundary_curves:
        length_map[n] = boundary_length
    return MarkedSurface(
        graph=graph,
        coords=FNCoordinates(lengths=length_map, twists=twist_map),
        upper_bound=upper_bound,
    )


def scale_lengths(s: MarkedSurface, factor: float) -> MarkedSurface:
    """Multiply every curve length (interior and boundary) by ``factor``."""
    if factor <= 0.0 or not math.isfinite(factor):
        raise BadParameter(f"scale factor must be positive, got {factor}")
    lengths = {n: l * factor for n, l in s.coords.lengths.items()}
    return replace(s, coords=FNCoordinates(lengths=lengths, twists=dict(s.coords.twists)))


def shift_twists(s: MarkedSurface, delta: float) -> MarkedSurface:
    """Add ``delta`` to every interior twist."""
    if not math.isfinite(delta):
        raise BadParameter(f"twist shift must be finite, got {delta}")
    twists = {n: t + delta for n, t in s.coords.twists.items()}
    return replace(s, coords=FNCoordinates(lengths=dict(s.coords.lengths), twists=twists))


# -- holonomy -----------------------------------------------------------------

def _slot_cuff_length(s: MarkedSurface, slot: Slot) -> float:
    """Length of whatever sits in a slot; punctures count as 0."""
    n = s.graph.curve_at_slot.get(slot)
    return 0.0 if n is None else s.coords.lengths[n]


def _other_cuffs(s: MarkedSurface, pants: int, skip: Slot) -> tuple[float, float]:
    vals = [
        _slot_cuff_length(s, (pants, j)) for j in (0, 1, 2) if (pants, j) != skip
    ]
    return (vals[0], vals[1])


def curve_holonomy(s: MarkedSurface, w: CurveWord) -> Isometry:
    """Holonomy matrix of a supported curve word, normalized so the pants
    curve it references lifts to the imaginary axis."""
    if isinstance(w, PantsCurve):
        l = s.coords.lengths.get(w.curve)
        if l is None:
            raise UnsupportedWord(f"no curve with index {w.curve}")
        return Isometry.axis_translation(l)

    if not isinstance(w, Crossing):
        raise UnsupportedWord(f"unsupported word kind {type(w).__name__}")

    n = w.curve
    if not s.graph.is_interior(n):
        raise UnsupportedWord(f"crossing needs an interior curve, got {n}")
    if w.arc_type != 0:
        raise UnsupportedWord(f"arc_type {w.arc_type} outside supported vocabulary")
    l = s.coords.lengths.get(n)
    if l is None or l <= 0.0:
        raise PunctureCrossing(f"curve {n} has no positive length to cross")
    t = s.coords.twists.get(n, 0.0)
    slot_a, slot_b = s.graph.interior_curves[n]
    t_hat = t + w.wrap * l

    if slot_a[0] == slot_b[0]:
        # handle: single orthogeodesic, feet l/2 apart along the curve
        pants = slot_a[0]
        (third,) = [
            (pants, j) for j in (0, 1, 2) if (pants, j) not in (slot_a, slot_b)
        ]
        l_other = _slot_cuff_length(s, third)
        d = handle_orthogeodesic_length(l, 0.5 * l_other)
        return compose(
            Isometry.axis_translation(t_hat + 0.5 * l),
            Isometry.perpendicular_translation(d),
        )

    left, right = sorted((slot_a, slot_b))
    nb_l = _other_cuffs(s, left[0], left)
    nb_r = _other_cuffs(s, right[0], right)
    d_left = crossing_arc_length(l, nb_l[0], nb_l[1])
    d_right = crossing_arc_length(l, nb_r[0], nb_r[1])
    g = compose(
        Isometry.axis_translation(t_hat),
        Isometry.perpendicular_translation(d_left),
    )
    g = compose(g, Isometry.axis_translation(-t_hat))
    return compose(g, Isometry.perpendicular_translation(d_right))


# -- JSON schema --------------------------------------------------------------

def surface_to_dict(s: MarkedSurface) -> dict:
    g = s.graph
    return {
        "pants": [[[i, 0], [i, 1], [i, 2]] for i in range(g.num_pants)],
        "pairings": [[list(a), list(b)] for a, b in g.pairings],
        "boundary": [list(x) for x in g.boundary],
        "punctures": [list(x) for x in g.punctures],
        "lengths": {str(n): s.coords.lengths[n] for n in sorted(s.coords.lengths)},
        "twists": {str(n): s.coords.twists[n] for n in sorted(s.coords.twists)},
        "upper_bound": s.upper_bound,
    }


def _parse_slot(obj) -> Slot:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(v, int) for v in obj)
    ):
        raise BadParameter(f"malformed slot reference {obj!r}")
    return (obj[0], obj[1])


def surface_from_dict(data: dict) -> MarkedSurface:
    try:
        pants = data["pants"]
        pairings = tuple(
            (_parse_slot(a), _parse_slot(b)) for a, b in data["pairings"]
        )
        boundary = tuple(_parse_slot(x) for x in data.get("boundary", []))
        punctures = tuple(_parse_slot(x) for x in data.get("punctures", []))
        lengths = {int(k): float(v) for k, v in data.get("lengths", {}).items()}
        twists = {int(k): float(v) for k, v in data.get("twists", {}).items()}
        ub = data.get("upper_bound")
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParameter(f"malformed surface data: {exc}") from exc
    graph = PantsGraph(
        num_pants=len(pants),
        pairings=pairings,
        boundary=boundary,
        punctures=punctures,
    )
    return MarkedSurface(
        graph=graph,
        coords=FNCoordinates(lengths=lengths, twists=twists),
        upper_bound=None if ub is None else float(ub),
    )


def surface_to_json(s: MarkedSurface) -> str:
    return json.dumps(surface_to_dict(s), indent=2, sort_keys=True)


def surface_from_json(text: str) -> MarkedSurface:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameter(f"surface file is not valid JSON: {exc}") from exc
    return surface_from_dict(data)
