import math
import random

import pytest

from pantsdeck.hyp import Isometry, compose


def random_hyperbolic(rng: random.Random) -> Isometry:
    """Random hyperbolic isometry: a conjugated axis translation."""
    a = Isometry.axis_translation(rng.uniform(0.1, 4.0))
    c = random_unit(rng)
    return compose(compose(c, a), c.inverse())


def random_unit(rng: random.Random) -> Isometry:
    """Random unit-determinant matrix built from the three generator types."""
    g = Isometry.rotation(rng.uniform(0.0, 2.0 * math.pi))
    g = compose(g, Isometry.axis_translation(rng.uniform(-2.0, 2.0)))
    g = compose(g, Isometry.perpendicular_translation(rng.uniform(-2.0, 2.0)))
    return g


@pytest.fixture
def rng():
    return random.Random(20260809)
