"""Sequence-level membership criteria for the five deformation spaces.

A candidate coordinate sequence (l_n, t_n) is compared against the base
surface's (l_n(X), t_n(X)) through three per-index deviations:

    dlog_n = |log(l_n / l_n(X))|
    dt_n   = |t_n - t_n(X)|
    ndt_n  = dt_n / max(1, |log l_n(X)|)

The five spaces check these in different ways:

    T_qc          sup dlog <= M           and sup dt <= M
    T_0           dlog < eps on the tail  and dt < eps on the tail
    T_ls          sup dlog <= M           and sup ndt <= M
    closure T_qc  sup dlog <= M, ndt < eps on tail indices with
                  |log l_n(X)| >= 1, and dt <= M on indices with
                  |log l_n(X)| < 1 (where normalizing means nothing)
    closure T_0   dlog < eps on the tail  and ndt < eps on the tail

Finite data cannot decide a limit, so decisions read "consistent" or
"inconsistent" with membership on the given window, and every verdict
carries the deviation it actually measured.

Lengths are held as logs internally: the criteria only ever consume
log l_n(X) and log-ratios, and log storage keeps steeply decaying
families (l_n(X) = e^{-n} for n in the thousands) exactly representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BadCutoff, BadParameter, BadWindow

__all__ = [
    "SPACES",
    "SequencePair",
    "Verdict",
    "approximating_sequence",
    "approximation_distance",
    "classify",
    "normalized_fn_distance",
    "pair_from_dict",
    "quotient_seminorm",
    "verdicts_to_dict",
]

SPACES = ("T_qc", "T_0", "T_ls", "closure_T_qc", "closure_T_0")

_FORMULAS = {
    "T_qc": "sup_n max(|log(l_n/l_n(X))|, |t_n - t_n(X)|) <= M",
    "T_0": "max(|log(l_n/l_n(X))|, |t_n - t_n(X)|) < eps for all n >= tail_start",
    "T_ls": "sup_n max(|log(l_n/l_n(X))|, |t_n - t_n(X)|/max(1,|log l_n(X)|)) <= M",
    "closure_T_qc": (
        "sup_n |log(l_n/l_n(X))| <= M; |t_n - t_n(X)|/max(1,|log l_n(X)|) < eps "
        "for n >= tail_start with |log l_n(X)| >= 1; |t_n - t_n(X)| <= M "
        "where |log l_n(X)| < 1"
    ),
    "closure_T_0": (
        "max(|log(l_n/l_n(X))|, |t_n - t_n(X)|/max(1,|log l_n(X)|)) < eps "
        "for all n >= tail_start"
    ),
}


@dataclass(frozen=True)
class SequencePair:
    """Base vs candidate coordinate sequences over a finite window.

    Lengths are stored as natural logs; positions are 0-based and the
    tail consists of positions >= tail_start.
    """

    base_log_lengths: tuple[float, ...]
    base_twists: tuple[float, ...]
    log_lengths: tuple[float, ...]
    twists: tuple[float, ...]
    tail_start: int

    def __post_init__(self):
        n = len(self.base_log_lengths)
        if not (
            len(self.base_twists) == len(self.log_lengths) == len(self.twists) == n
        ):
            raise BadParameter("sequence pair arrays must share one length")
        if n == 0:
            raise BadParameter("sequence pair needs a nonempty window")

    @property
    def window(self) -> int:
        return len(self.base_log_lengths)

    @classmethod
    def from_lengths(
        cls,
        base_lengths: Sequence[float],
        base_twists: Sequence[float],
        lengths: Sequence[float],
        twists: Sequence[float],
        tail_start: int,
    ) -> "SequencePair":
        for name, seq in (("base", base_lengths), ("candidate", lengths)):
            for i, v in enumerate(seq):
                if not (v > 0.0) or not math.isfinite(v):
                    raise BadParameter(f"{name} length at position {i} is {v!r}")
        return cls(
            base_log_lengths=tuple(math.log(v) for v in base_lengths),
            base_twists=tuple(float(v) for v in base_twists),
            log_lengths=tuple(math.log(v) for v in lengths),
            twists=tuple(float(v) for v in twists),
            tail_start=tail_start,
        )

    @classmethod
    def from_log_lengths(
        cls,
        base_log_lengths: Sequence[float],
        base_twists: Sequence[float],
        log_lengths: Sequence[float],
        twists: Sequence[float],
        tail_start: int,
    ) -> "SequencePair":
        return cls(
            base_log_lengths=tuple(float(v) for v in base_log_lengths),
            base_twists=tuple(float(v) for v in base_twists),
            log_lengths=tuple(float(v) for v in log_lengths),
            twists=tuple(float(v) for v in twists),
            tail_start=tail_start,
        )

    def deviations(self) -> tuple[list[float], list[float], list[float]]:
        """Per-index (dlog, dt, ndt)."""
        dlog = [
            abs(a - b) for a, b in zip(self.log_lengths, self.base_log_lengths)
        ]
        dt = [abs(a - b) for a, b in zip(self.twists, self.base_twists)]
        ndt = [
            d / max(1.0, abs(bl))
            for d, bl in zip(dt, self.base_log_lengths)
        ]
        return dlog, dt, ndt


@dataclass(frozen=True)
class Verdict:
    space: str
    decision: str  # "consistent" | "inconsistent"
    max_deviation: float
    argmax_index: int
    tail_statistic: float
    formula: str

    @property
    def consistent(self) -> bool:
        return self.decision == "consistent"


def _max_with_argmax(values: Sequence[float]) -> tuple[float, int]:
    best = values[0]
    arg = 0
    for i, v in enumerate(values):
        if v > best:
            best = v
            arg = i
    return best, arg


def _verdict(space: str, stream: Sequence[float], tail: int, ok: bool) -> Verdict:
    m, arg = _max_with_argmax(stream)
    tail_stat = max(stream[tail:])
    return Verdict(
        space=space,
        decision="consistent" if ok else "inconsistent",
        max_deviation=m,
        argmax_index=arg,
        tail_statistic=tail_stat,
        formula=_FORMULAS[space],
    )


def classify(p: SequencePair, M: float, eps: float) -> dict[str, Verdict]:
    """Window-relative verdicts for all five spaces.

    Boundedness criteria compare the full-window sup against M;
    convergence criteria require the deviation below eps on the whole
    tail.  The little-o criterion of closure(T_qc) is checked as a
    normalized deviation below eps on tail indices where the base length
    is small enough for the normalization to mean anything
    (|log l_n(X)| >= 1), with plain boundedness everywhere else.
    """
    if M <= 0.0 or eps <= 0.0:
        raise BadParameter(f"M and eps must be positive, got M={M}, eps={eps}")
    if not (0 <= p.tail_start < p.window):
        raise BadWindow(
            f"tail_start {p.tail_start} outside window of size {p.window}"
        )
    tail = p.tail_start
    dlog, dt, ndt = p.deviations()
    raw = [max(a, b) for a, b in zip(dlog, dt)]
    norm = [max(a, b) for a, b in zip(dlog, ndt)]

    out: dict[str, Verdict] = {}
    out["T_qc"] = _verdict("T_qc", raw, tail, max(raw) <= M)
    out["T_0"] = _verdict("T_0", raw, tail, max(raw[tail:]) < eps)
    out["T_ls"] = _verdict("T_ls", norm, tail, max(norm) <= M)

    # closure(T_qc): the little-o condition constrains the tail where the
    # base length decays (|log l_n(X)| >= 1); indices where it does not
    # decay keep the plain quasiconformal twist bound instead.
    little_o_ok = True
    elsewhere_ok = True
    stream_cqc = []
    for i in range(p.window):
        if abs(p.base_log_lengths[i]) >= 1.0:
            stream_cqc.append(ndt[i])
            if i >= tail and not (ndt[i] < eps):
                little_o_ok = False
        else:
            stream_cqc.append(dt[i])
            if not (dt[i] <= M):
                elsewhere_ok = False
    cqc_ok = max(dlog) <= M and little_o_ok and elsewhere_ok
    out["closure_T_qc"] = _verdict("closure_T_qc", stream_cqc, tail, cqc_ok)

    out["closure_T_0"] = _verdict(
        "closure_T_0", norm, tail, max(norm[tail:]) < eps
    )
    return out


def normalized_fn_distance(p: SequencePair) -> float:
    """Sup-norm distance between the normalized coordinate images:

    sup_n max(|log(l_n/l_n(X))|, |t_n - t_n(X)| / max(1, |log l_n(X)|)).
    """
    dlog, _, ndt = p.deviations()
    return max(max(a, b) for a, b in zip(dlog, ndt))


def approximating_sequence(
    p: SequencePair, k: int
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Coordinates (log-lengths, twists) of the k-th approximant Y_k:
    candidate values on the first k positions, base values after."""
    if not (0 <= k <= p.window):
        raise BadCutoff(f"cutoff {k} outside window of size {p.window}")
    log_l = p.log_lengths[:k] + p.base_log_lengths[k:]
    tw = p.twists[:k] + p.base_twists[k:]
    return log_l, tw


def approximation_distance(p: SequencePair, k: int) -> float:
    """Normalized coordinate distance between Y_k and the candidate.

    Positions <= k agree, and past k the approximant carries the base
    coordinates, so the normalizing lengths there are the base's own;
    the value is the tail sup of the candidate's normalized deviation.
    """
    log_l, tw = approximating_sequence(p, k)
    probe = SequencePair(
        base_log_lengths=log_l,
        base_twists=tw,
        log_lengths=p.log_lengths,
        twists=p.twists,
        tail_start=p.tail_start,
    )
    return normalized_fn_distance(probe)


def quotient_seminorm(deviations: Sequence[float], tail_start: int) -> float:
    """Window estimate of the distance from a bounded sequence to the
    sequences vanishing at infinity: the tail sup of |deviations|."""
    n = len(deviations)
    if not (0 <= tail_start < n):
        raise BadWindow(f"tail_start {tail_start} outside window of size {n}")
    return max(abs(v) for v in deviations[tail_start:])


# -- JSON schema --------------------------------------------------------------

def pair_from_dict(data: dict) -> tuple[SequencePair, float, float]:
    """Parse the classifier input schema; returns (pair, M, eps)."""
    try:
        base = data["base"]
        cand = data["candidate"]
        pair = SequencePair.from_lengths(
            base["lengths"],
            base["twists"],
            cand["lengths"],
            cand["twists"],
            int(data["tail_start"]),
        )
        M = float(data["M"])
        eps = float(data["eps"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParameter(f"malformed classifier input: {exc}") from exc
    return pair, M, eps


def verdicts_to_dict(verdicts: dict[str, Verdict]) -> dict:
    return {
        space: {
            "decision": v.decision,
            "max_deviation": v.max_deviation,
            "argmax_index": v.argmax_index,
            "tail_statistic": v.tail_statistic,
            "formula": v.formula,
        }
        for space, v in verdicts.items()
    }
