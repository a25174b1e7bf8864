import math
import random

import pytest

from pantsdeck.classify import (
    SPACES,
    SequencePair,
    approximating_sequence,
    approximation_distance,
    classify,
    normalized_fn_distance,
    pair_from_dict,
    quotient_seminorm,
    verdicts_to_dict,
)
from pantsdeck.errors import BadCutoff, BadParameter, BadWindow


def steep_pair(twists, log_drift=None, window=10**4, tail=5000):
    """Base l_n(X) = e^{-n} (held as logs), zero base twists."""
    base_log = tuple(-(i + 1.0) for i in range(window))
    zeros = (0.0,) * window
    cand_log = (
        base_log
        if log_drift is None
        else tuple(b + log_drift(i + 1) for i, b in enumerate(base_log))
    )
    cand_tw = tuple(twists(i + 1) for i in range(window))
    return SequencePair(base_log, zeros, cand_log, cand_tw, tail)


def pattern(verdicts):
    return "".join("C" if verdicts[s].consistent else "I" for s in SPACES)


class TestClassify:
    def test_identity_all_consistent(self):
        p = steep_pair(lambda n: 0.0)
        v = classify(p, M=5.0, eps=1e-3)
        assert pattern(v) == "CCCCC"
        for verdict in v.values():
            assert verdict.max_deviation == 0.0
            assert verdict.tail_statistic == 0.0
            assert verdict.argmax_index == 0

    def test_one_over_n_drift_all_consistent(self):
        p = steep_pair(lambda n: 1.0 / n, log_drift=lambda n: 1.0 / n)
        v = classify(p, M=5.0, eps=1e-3)
        assert pattern(v) == "CCCCC"

    def test_sqrt_twist_example(self):
        # unbounded twists that are o(|log l_n(X)|): outside T_qc, inside
        # the closure and T_ls (eps must sit above 1/sqrt(tail))
        p = steep_pair(lambda n: math.sqrt(n))
        v = classify(p, M=5.0, eps=0.05)
        assert not v["T_qc"].consistent
        assert not v["T_0"].consistent
        assert v["T_ls"].consistent
        assert v["closure_T_qc"].consistent
        assert v["closure_T_0"].consistent

    def test_linear_twist_stays_in_T_ls_only(self):
        p = steep_pair(lambda n: float(n))
        v = classify(p, M=5.0, eps=0.05)
        assert pattern(v) == "IICII"
        assert v["T_ls"].max_deviation == pytest.approx(1.0)

    def test_verdict_carries_witness(self):
        p = steep_pair(lambda n: 2.0 if n == 7 else 0.0)
        v = classify(p, M=5.0, eps=1e-3)
        assert v["T_qc"].max_deviation == 2.0
        assert v["T_qc"].argmax_index == 6
        assert v["T_qc"].tail_statistic == 0.0
        assert "M" in v["T_qc"].formula

    def test_bad_window(self):
        p = steep_pair(lambda n: 0.0, window=100, tail=100)
        with pytest.raises(BadWindow):
            classify(p, M=1.0, eps=1e-3)
        with pytest.raises(BadParameter):
            classify(steep_pair(lambda n: 0.0, window=10, tail=5), M=0.0, eps=1e-3)

    def test_reindex_invariance(self, rng):
        window, tail = 400, 200
        base_log = tuple(-(i + 1.0) for i in range(window))
        zeros = (0.0,) * window
        tw = tuple(math.sqrt(i + 1.0) for i in range(window))
        p = SequencePair(base_log, zeros, base_log, tw, tail)
        head = list(range(tail))
        back = list(range(tail, window))
        rng.shuffle(head)
        rng.shuffle(back)
        perm = head + back
        q = SequencePair(
            tuple(base_log[i] for i in perm),
            zeros,
            tuple(base_log[i] for i in perm),
            tuple(tw[i] for i in perm),
            tail,
        )
        a = classify(p, M=5.0, eps=0.05)
        b = classify(q, M=5.0, eps=0.05)
        for space in SPACES:
            assert a[space].decision == b[space].decision
            assert a[space].max_deviation == b[space].max_deviation
            assert a[space].tail_statistic == b[space].tail_statistic


class TestNormalizedDistance:
    def test_zero_on_identity(self):
        assert normalized_fn_distance(steep_pair(lambda n: 0.0, window=50, tail=10)) == 0.0

    def test_plain_constant_when_lengths_moderate(self):
        # all |log l_n(X)| <= 1: the twist denominator is exactly 1
        base_log = tuple(((-1.0) ** i) * 0.9 for i in range(40))
        zeros = (0.0,) * 40
        p = SequencePair(base_log, zeros, base_log, (0.37,) * 40, 20)
        assert normalized_fn_distance(p) == pytest.approx(0.37, abs=0.0)

    def test_linear_twist_over_steep_base(self):
        p = steep_pair(lambda n: float(n), window=200, tail=100)
        assert normalized_fn_distance(p) == pytest.approx(1.0)


class TestApproximatingSequence:
    def test_endpoints(self):
        p = steep_pair(lambda n: math.sqrt(n), window=500, tail=250)
        log_l, tw = approximating_sequence(p, 0)
        assert log_l == p.base_log_lengths and tw == p.base_twists
        log_l, tw = approximating_sequence(p, p.window)
        assert log_l == p.log_lengths and tw == p.twists
        with pytest.raises(BadCutoff):
            approximating_sequence(p, p.window + 1)

    def test_sqrt_family_distance_formula(self):
        p = steep_pair(lambda n: math.sqrt(n), window=500, tail=250)
        for k in range(1, 101):
            assert abs(
                approximation_distance(p, k) - 1.0 / math.sqrt(k + 1.0)
            ) < 1e-12

    def test_distances_nonincreasing_to_zero(self):
        p = steep_pair(lambda n: math.sqrt(n), window=300, tail=150)
        values = [approximation_distance(p, k) for k in range(0, p.window + 1, 10)]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert approximation_distance(p, p.window) == 0.0


class TestQuotientSeminorm:
    def test_constant(self):
        assert quotient_seminorm([-0.5] * 100, 50) == 0.5

    def test_vanishing_tail(self):
        n = 10**4
        devs = [1.0 / (i + 1.0) for i in range(n)]
        assert quotient_seminorm(devs, n // 2) <= 2e-4

    def test_constant_plus_vanishing(self):
        n = 10**4
        c = 0.8
        devs = [c + 1.0 / (i + 1.0) for i in range(n)]
        assert abs(quotient_seminorm(devs, n // 2) - c) <= 2e-4

    def test_bad_window(self):
        with pytest.raises(BadWindow):
            quotient_seminorm([1.0, 2.0], 2)


# decaying/bounded shapes are normalized to peak at 1 so that an
# amplitude below M keeps the whole drift below M (the discipline the
# implication chain needs); the growing shapes exercise the unbounded side
SHAPES = [
    ("const", lambda n: 1.0),
    ("inv", lambda n: 1.0 / n),
    ("inv_sqrt", lambda n: 1.0 / math.sqrt(n)),
    ("inv_log", lambda n: math.log(2.0) / math.log(n + 1.0)),
    ("geometric", lambda n: 0.97 ** (n - 1)),
    ("sqrt", lambda n: math.sqrt(n)),
    ("linear", lambda n: float(n)),
]


class TestNesting:
    def test_implication_chain_on_random_parametric_pairs(self):
        """T_0 => T_qc => closure(T_qc) => T_ls and T_0 => closure(T_0).

        Pairs are drawn with drift amplitudes below M and base lengths
        decaying like e^{-slope n}; under that discipline the finite-window
        verdicts must reproduce the analytic inclusions with no
        counterexample pattern.
        """
        rng = random.Random(1202)
        window, tail, M, eps = 600, 300, 5.0, 0.03
        failures = []
        for trial in range(1000):
            slope = rng.uniform(0.6, 2.0)
            base_log = tuple(-slope * (i + 1.0) for i in range(window))
            zeros = (0.0,) * window
            _, tw_shape = SHAPES[rng.randrange(len(SHAPES))]
            _, ll_shape = SHAPES[rng.randrange(len(SHAPES))]
            c_t = rng.uniform(0.0, 4.9)
            c_l = rng.uniform(0.0, 4.9)
            tw = tuple(c_t * tw_shape(i + 1.0) for i in range(window))
            ll = tuple(
                b + c_l * ll_shape(i + 1.0) * (1.0 if i % 2 else -1.0)
                for i, b in enumerate(base_log)
            )
            p = SequencePair(base_log, zeros, ll, tw, tail)
            v = classify(p, M=M, eps=eps)
            ok = (
                (not v["T_0"].consistent or v["T_qc"].consistent)
                and (not v["T_qc"].consistent or v["closure_T_qc"].consistent)
                and (not v["closure_T_qc"].consistent or v["T_ls"].consistent)
                and (not v["T_0"].consistent or v["closure_T_0"].consistent)
            )
            if not ok:
                failures.append((trial, pattern(v)))
        assert failures == []


class TestJsonSchema:
    def test_roundtrip(self):
        data = {
            "base": {"lengths": [1.0, 0.5, 0.25], "twists": [0.0, 0.0, 0.0]},
            "candidate": {"lengths": [1.0, 0.5, 0.25], "twists": [0.1, 0.1, 0.1]},
            "tail_start": 1,
            "M": 5.0,
            "eps": 0.001,
        }
        pair, M, eps = pair_from_dict(data)
        assert pair.window == 3 and M == 5.0 and eps == 0.001
        v = classify(pair, M, eps)
        d = verdicts_to_dict(v)
        assert set(d) == set(SPACES)
        for space in SPACES:
            assert set(d[space]) == {
                "decision",
                "max_deviation",
                "argmax_index",
                "tail_statistic",
                "formula",
            }

    def test_malformed(self):
        with pytest.raises(BadParameter):
            pair_from_dict({"base": {}})
        with pytest.raises(BadParameter):
            pair_from_dict(
                {
                    "base": {"lengths": [0.0], "twists": [0.0]},
                    "candidate": {"lengths": [1.0], "twists": [0.0]},
                    "tail_start": 0,
                    "M": 1,
                    "eps": 0.1,
                }
            )
