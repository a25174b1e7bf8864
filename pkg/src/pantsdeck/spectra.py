"""Curve-length computations and the quantitative length laws.

The central objects are the shortest crossing curves: for an interior
pants curve alpha_n, the shortest closed geodesic staying in the adjacent
pants and crossing alpha_n once (handle side) or twice (distinct pants).
Their lengths grow like c |log l_n| with c = 4 for distinct pants and
c = 2 for handles, up to additive constants; the reports below measure
those deviations, compare two marked surfaces, and check the
multiplicative length bound a K-quasiconformal map would have to obey.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadParameter, EmptyFamily, GraphMismatch, UnsupportedWord, WrapRangeExhausted
from .hyp import translation_length
from .surface import Crossing, CurveWord, MarkedSurface, PantsCurve, curve_holonomy

__all__ = [
    "Prop1Row",
    "Prop1Summary",
    "WolpertReport",
    "WolpertRow",
    "curve_length",
    "default_word_family",
    "dls_lower_bound",
    "prop1_report",
    "prop1_rows_to_csv",
    "shortest_crossing_curve",
    "wolpert_check",
    "word_label",
]

PROP1_CSV_HEADER = "n,l_alpha_X,l_alpha_Y,l_gamma_X,l_gamma_Y,deviation_X,diff"


def curve_length(s: MarkedSurface, w: CurveWord) -> float:
    """Geodesic length of the word's free homotopy class.

    A pants curve is its own coordinate and is returned exactly; the
    holonomy realizes the same number only up to roundoff and degenerates
    below cuff lengths around 1e-6, where trace - 2 leaves double
    precision.  Everything else goes through the holonomy matrix.
    """
    if isinstance(w, PantsCurve):
        l = s.coords.lengths.get(w.curve)
        if l is None:
            raise UnsupportedWord(f"no curve with index {w.curve}")
        return l
    return translation_length(curve_holonomy(s, w))


def word_label(w: CurveWord) -> str:
    if isinstance(w, PantsCurve):
        return f"alpha:{w.curve}"
    return f"cross:{w.curve}:{w.arc_type}:{w.wrap}"


def shortest_crossing_curve(
    s: MarkedSurface, n: int, k_range: int = 3
) -> tuple[CurveWord, float]:
    """Minimize curve length over supported crossing words for curve n.

    Scans wraps k in [-k_range, k_range]; ties go to the smallest |k|
    (preferring k >= 0), then the smallest arc type.  Raises
    WrapRangeExhausted when the chosen minimizer sits on the edge of the
    scan, since the true minimum may lie outside.
    """
    if k_range < 0:
        raise BadParameter(f"k_range must be >= 0, got {k_range}")
    best: tuple[tuple, CurveWord, float] | None = None
    for arc in (0,):
        for k in range(-k_range, k_range + 1):
            w = Crossing(n, arc, k)
            length = curve_length(s, w)
            key = (length, abs(k), 0 if k >= 0 else 1, arc)
            if best is None or key < best[0]:
                best = (key, w, length)
    assert best is not None
    word = best[1]
    assert isinstance(word, Crossing)
    if abs(word.wrap) == k_range:
        raise WrapRangeExhausted(
            f"minimizer for curve {n} sits at wrap {word.wrap} on the edge of "
            f"[-{k_range}, {k_range}]"
        )
    return word, best[2]


@dataclass(frozen=True)
class Prop1Row:
    n: int
    l_alpha_X: float
    l_alpha_Y: float
    l_gamma_X: float
    l_gamma_Y: float
    deviation_X: float
    diff: float


@dataclass(frozen=True)
class Prop1Summary:
    sup_abs_diff: float
    deviation_min: float
    deviation_max: float


def _require_same_graph(x: MarkedSurface, y: MarkedSurface) -> None:
    if x.graph != y.graph:
        raise GraphMismatch("surfaces do not share a pants graph")


def prop1_report(
    x: MarkedSurface,
    y: MarkedSurface,
    curve_range: list[int] | None = None,
    k_range: int = 3,
) -> tuple[list[Prop1Row], Prop1Summary]:
    """Per-curve crossing lengths on X and Y with the |log l| deviation.

    The crossing curve for each index is chosen shortest on X and then
    measured on both surfaces, so ``diff`` compares the same homotopy
    class.  ``deviation_X`` is l_gamma(X) - c |log l_alpha(X)| with c = 4
    for distinct adjacent pants and c = 2 for handles.
    """
    _require_same_graph(x, y)
    indices = sorted(x.graph.interior_curves) if curve_range is None else sorted(curve_range)
    rows = []
    for n in indices:
        if not x.graph.is_interior(n):
            raise BadParameter(f"curve {n} is not interior")
        word, lg_x = shortest_crossing_curve(x, n, k_range)
        lg_y = curve_length(y, word)
        la_x = x.length(n)
        la_y = y.length(n)
        c = 2.0 if x.graph.is_handle_curve(n) else 4.0
        rows.append(
            Prop1Row(
                n=n,
                l_alpha_X=la_x,
                l_alpha_Y=la_y,
                l_gamma_X=lg_x,
                l_gamma_Y=lg_y,
                deviation_X=lg_x - c * abs(math.log(la_x)),
                diff=lg_y - lg_x,
            )
        )
    if rows:
        summary = Prop1Summary(
            sup_abs_diff=max(abs(r.diff) for r in rows),
            deviation_min=min(r.deviation_X for r in rows),
            deviation_max=max(r.deviation_X for r in rows),
        )
    else:
        summary = Prop1Summary(0.0, 0.0, 0.0)
    return rows, summary


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def prop1_rows_to_csv(rows: list[Prop1Row]) -> str:
    lines = [PROP1_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    _fmt(r.l_alpha_X),
                    _fmt(r.l_alpha_Y),
                    _fmt(r.l_gamma_X),
                    _fmt(r.l_gamma_Y),
                    _fmt(r.deviation_X),
                    _fmt(r.diff),
                ]
            )
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WolpertRow:
    label: str
    l_X: float
    l_Y: float
    ratio: float
    violation: bool


@dataclass(frozen=True)
class WolpertReport:
    K: float
    rows: list[WolpertRow]
    max_ratio_deviation: float

    @property
    def violations(self) -> list[WolpertRow]:
        return [r for r in self.rows if r.violation]


def wolpert_check(
    x: MarkedSurface, y: MarkedSurface, words: list[CurveWord], K: float
) -> WolpertReport:
    """Check l(Y)/l(X) in [1/K, K] for every word of the family."""
    _require_same_graph(x, y)
    if K < 1.0:
        raise BadParameter(f"K must be >= 1, got {K}")
    rows = []
    max_dev = 1.0
    for w in words:
        lx = curve_length(x, w)
        ly = curve_length(y, w)
        ratio = ly / lx
        max_dev = max(max_dev, ratio, 1.0 / ratio)
        rows.append(
            WolpertRow(
                label=word_label(w),
                l_X=lx,
                l_Y=ly,
                ratio=ratio,
                violation=ratio > K or ratio < 1.0 / K,
            )
        )
    return WolpertReport(K=K, rows=rows, max_ratio_deviation=max_dev)


def dls_lower_bound(
    x: MarkedSurface, y: MarkedSurface, words: list[CurveWord]
) -> float:
    """(1/2) log of the worst max-ratio over the given family.

    A lower bound for the length-spectrum distance: the true distance
    takes the supremum over *all* simple closed curves, this one only over
    the family it is handed.  Symmetric in its arguments.
    """
    _require_same_graph(x, y)
    if not words:
        raise EmptyFamily("need at least one curve word")
    worst = 1.0
    for w in words:
        lx = curve_length(x, w)
        ly = curve_length(y, w)
        worst = max(worst, lx / ly, ly / lx)
    return 0.5 * math.log(worst)


def default_word_family(s: MarkedSurface, k_range: int = 3) -> list[CurveWord]:
    """Every pants curve plus the shortest crossing curve of every
    interior curve; the family that drives all the estimates here."""
    words: list[CurveWord] = [PantsCurve(n) for n in s.graph.curve_indices()]
    for n in sorted(s.graph.interior_curves):
        word, _ = shortest_crossing_curve(s, n, k_range)
        words.append(word)
    return words
