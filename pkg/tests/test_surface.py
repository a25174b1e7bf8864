import math

import mpmath as mp
import pytest

from pantsdeck.errors import BadParameter, PunctureCrossing, UnsupportedWord
from pantsdeck.hyp import compose, translation_length
from pantsdeck.pants import handle_orthogeodesic_length
from pantsdeck.surface import (
    Crossing,
    FNCoordinates,
    MarkedSurface,
    PantsCurve,
    PantsGraph,
    curve_holonomy,
    flute_family,
    scale_lengths,
    shift_twists,
    surface_from_dict,
    surface_from_json,
    surface_to_json,
    validate,
)

mp.mp.dps = 40


def decaying_flute(size=32, rate=-1.0, **kw):
    return flute_family(size, lambda n: math.exp(rate * n), **kw)


class TestFamilies:
    def test_small_flute_validates(self):
        s = flute_family(3, lambda n: 1.0)
        assert validate(s) == []
        assert sorted(s.graph.interior_curves) == [1, 2]

    def test_bounded_flute_validates(self):
        s = flute_family(40, lambda n: math.exp(-n / 4.0), upper_bound=1.0)
        assert validate(s) == []
        assert max(s.coords.lengths.values()) <= 1.0

    def test_handle_mode_validates(self):
        s = flute_family(3, lambda n: 0.5, handles=True)
        assert validate(s) == []
        assert all(s.graph.is_handle_curve(n) for n in (1, 2, 3))
        assert s.graph.num_pants == 6

    def test_punctured_flute_validates(self):
        s = flute_family(5, lambda n: 1.0, punctures=True)
        assert validate(s) == []
        assert len(s.graph.punctures) == 5

    def test_rejects_bad_parameters(self):
        with pytest.raises(BadParameter):
            flute_family(1, lambda n: 1.0)
        with pytest.raises(BadParameter):
            flute_family(4, lambda n: -1.0)
        with pytest.raises(BadParameter):
            flute_family(4, lambda n: 1.0, handles=True, punctures=True)

    def test_sequence_generators_accepted(self):
        s = flute_family(4, [0.5, 0.25, 0.125], [0.1, 0.2, 0.3])
        assert s.length(3) == 0.125
        assert s.twist(2) == 0.2


class TestValidate:
    def test_zero_length_reported(self):
        s = flute_family(8, lambda n: 1.0)
        lengths = dict(s.coords.lengths)
        lengths[5] = 0.0
        bad = MarkedSurface(s.graph, FNCoordinates(lengths, dict(s.coords.twists)))
        assert any("nonpositive length at curve 5" in v for v in validate(bad))

    def test_upper_bound_reported(self):
        s = flute_family(4, lambda n: 2.0, upper_bound=1.0)
        assert any("upper bound exceeded" in v for v in validate(s))

    def test_twist_on_boundary_reported(self):
        s = flute_family(3, lambda n: 1.0)
        bd = min(s.graph.boundary_curves)
        twists = dict(s.coords.twists)
        twists[bd] = 0.5
        bad = MarkedSurface(s.graph, FNCoordinates(dict(s.coords.lengths), twists))
        assert any(f"twist defined for boundary curve {bd}" in v for v in validate(bad))

    def test_unassigned_slot_reported(self):
        g = PantsGraph(2, pairings=(((0, 1), (1, 0)),), boundary=((0, 0), (1, 1), (1, 2)))
        s = MarkedSurface(g, FNCoordinates({1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0}, {1: 0.0}))
        assert "slot (0,2) is unassigned" in validate(s)

    def test_self_glued_slot_reported(self):
        g = PantsGraph(1, pairings=(((0, 0), (0, 0)),), boundary=((0, 1), (0, 2)))
        s = MarkedSurface(g, FNCoordinates({1: 1.0, 2: 1.0, 3: 1.0}, {1: 0.0}))
        assert any("glues slot" in v for v in validate(s))


class TestHolonomy:
    def test_pants_curve_roundtrip(self, rng):
        s = flute_family(12, lambda n: 0.05 + 0.15 * n, lambda n: 0.1 * n)
        for n in s.graph.curve_indices():
            got = translation_length(curve_holonomy(s, PantsCurve(n)))
            assert abs(got - s.length(n)) < 1e-12

    def test_crossing_times_inverse_is_identity(self):
        s = flute_family(5, lambda n: 0.8, lambda n: 0.37)
        g = curve_holonomy(s, Crossing(2, 0, 1))
        i = compose(g, g.inverse())
        for got, want in zip(
            (i.m11, i.m12, i.m21, i.m22), (1.0, 0.0, 0.0, 1.0)
        ):
            assert abs(got - want) < 1e-10

    def test_twist_periodicity_with_reindexing(self, rng):
        for _ in range(60):
            size = rng.randint(3, 8)
            lengths = [rng.uniform(0.05, 2.0) for _ in range(size)]
            twists = [rng.uniform(-2.0, 2.0) for _ in range(size)]
            handles = rng.random() < 0.5
            s = flute_family(size, lengths, twists, handles=handles)
            shifted = MarkedSurface(
                s.graph,
                FNCoordinates(
                    dict(s.coords.lengths),
                    {
                        n: t + (s.coords.lengths[n] if n <= 2 else 0.0)
                        for n, t in s.coords.twists.items()
                    },
                ),
            )
            k = rng.randint(-2, 1)
            for n in (1, 2):
                a = translation_length(curve_holonomy(shifted, Crossing(n, 0, k)))
                b = translation_length(curve_holonomy(s, Crossing(n, 0, k + 1)))
                assert abs(a - b) < 1e-9

    def test_left_right_relabel_symmetry(self):
        # two-pants surface and the same surface with pants renumbered
        p, q, r, u, l, t = 0.7, 1.3, 1.9, 0.4, 1.0, 0.0
        g1 = PantsGraph(
            2,
            pairings=(((0, 1), (1, 0)),),
            boundary=((0, 0), (0, 2), (1, 1), (1, 2)),
        )
        s1 = MarkedSurface(
            g1, FNCoordinates({1: l, 2: p, 3: q, 4: r, 5: u}, {1: t})
        )
        g2 = PantsGraph(
            2,
            pairings=(((1, 1), (0, 0)),),
            boundary=((1, 0), (1, 2), (0, 1), (0, 2)),
        )
        s2 = MarkedSurface(
            g2, FNCoordinates({1: l, 2: p, 3: q, 4: r, 5: u}, {1: t})
        )
        a = translation_length(curve_holonomy(s1, Crossing(1, 0, 0)))
        b = translation_length(curve_holonomy(s2, Crossing(1, 0, 0)))
        assert abs(a - b) < 1e-10

    def test_handle_crossing_against_orthogeodesic(self):
        for l in (0.1, 0.5, 1.5):
            s = flute_family(3, lambda n: l, handles=True)
            length = translation_length(curve_holonomy(s, Crossing(2, 0, 0)))
            d_star = handle_orthogeodesic_length(l, 0.5)
            # sub-arc contribution along the crossed curve is at most l/2 < l
            assert 0.0 <= length - d_star <= 0.5 * l + 1e-12
            assert length - 2.0 * d_star < l

    def test_word_errors(self):
        s = flute_family(4, lambda n: 1.0)
        bd = min(s.graph.boundary_curves)
        with pytest.raises(UnsupportedWord):
            curve_holonomy(s, Crossing(bd))
        with pytest.raises(UnsupportedWord):
            curve_holonomy(s, Crossing(2, arc_type=1))
        with pytest.raises(UnsupportedWord):
            curve_holonomy(s, PantsCurve(999))
        lengths = dict(s.coords.lengths)
        lengths[2] = 0.0
        broken = MarkedSurface(s.graph, FNCoordinates(lengths, dict(s.coords.twists)))
        with pytest.raises(PunctureCrossing):
            curve_holonomy(broken, Crossing(2))


class TestGoldenConvention:
    """Freezes the twist sign/origin convention.

    Twist zero aligns the crossing feet of the two sides, each pants
    places its feet l/2 apart, and a handle closes up with an l/2 offset.
    The values below must never change without bumping the data format.
    """

    def test_flute_crossing_values(self):
        s = flute_family(4, lambda n: 1.0, lambda n: 0.3)
        got0 = translation_length(curve_holonomy(s, Crossing(2, 0, 0)))
        got1 = translation_length(curve_holonomy(s, Crossing(2, 0, 1)))
        assert got0 == pytest.approx(8.849670160364907, abs=1e-12)
        assert got1 == pytest.approx(9.581453519461887, abs=1e-12)
        # independent evaluation of the closed-form trace
        d = 2 * mp.asinh(mp.cosh(0.5) / mp.sinh(0.25))
        tr_half = mp.cosh(d / 2) ** 2 + mp.sinh(d / 2) ** 2 * mp.cosh(0.3)
        assert got0 == pytest.approx(float(2 * mp.acosh(tr_half)), abs=1e-12)

    def test_handle_crossing_value(self):
        s = flute_family(3, lambda n: 0.8, lambda n: 0.25, handles=True)
        got = translation_length(curve_holonomy(s, Crossing(2, 0, 0)))
        assert got == pytest.approx(3.4139476238459334, abs=1e-12)
        d = mp.acosh((mp.cosh(0.5) + mp.cosh(0.4) ** 2) / mp.sinh(0.4) ** 2)
        tr_half = mp.cosh((0.25 + 0.4) / 2) * mp.cosh(d / 2)
        assert got == pytest.approx(float(2 * mp.acosh(tr_half)), abs=1e-12)


class TestJson:
    def test_roundtrip_exact(self):
        s = decaying_flute(9, upper_bound=1.0)
        back = surface_from_json(surface_to_json(s))
        assert back.graph == s.graph
        assert back.coords.lengths == s.coords.lengths
        assert back.coords.twists == s.coords.twists
        assert back.upper_bound == s.upper_bound

    def test_roundtrip_handle_mode(self):
        s = flute_family(4, lambda n: 0.3, lambda n: -0.7, handles=True)
        back = surface_from_json(surface_to_json(s))
        assert back == s

    def test_malformed_rejected(self):
        with pytest.raises(BadParameter):
            surface_from_dict({"pants": [], "pairings": [[["a", 0], [1, 0]]]})
        with pytest.raises(BadParameter):
            surface_from_json("{not json")


class TestDeformations:
    def test_scale_and_shift(self):
        s = flute_family(4, lambda n: 0.5, lambda n: 0.1)
        y = shift_twists(scale_lengths(s, 2.0), 1.0)
        assert y.length(2) == 1.0
        assert y.twist(2) == 1.1
        assert y.graph == s.graph

    def test_rejects_bad_values(self):
        s = flute_family(3, lambda n: 1.0)
        with pytest.raises(BadParameter):
            scale_lengths(s, 0.0)
        with pytest.raises(BadParameter):
            shift_twists(s, math.inf)
