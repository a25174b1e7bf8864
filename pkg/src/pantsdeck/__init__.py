"""pantsdeck: desk-scale numerics for infinite hyperbolic surfaces.

Surfaces are described by pants decompositions with Fenchel-Nielsen
coordinates; the package realizes coordinate data as holonomy matrices,
measures pants curves and shortest crossing curves, verifies the
asymptotic length laws, and classifies coordinate deformations into the
five standard deformation spaces.
"""

from .classify import (
    SPACES,
    SequencePair,
    Verdict,
    approximating_sequence,
    approximation_distance,
    classify,
    normalized_fn_distance,
    quotient_seminorm,
)
from .hyp import (
    INFINITY,
    Isometry,
    compose,
    cross_ratio,
    log_cross_ratio,
    mobius_apply,
    translation_length,
)
from .pants import (
    PantsShape,
    crossing_arc_length,
    handle_orthogeodesic_length,
    pentagon_perpendicular_length,
    seam_length,
    seam_lengths,
)
from .spectra import (
    curve_length,
    default_word_family,
    dls_lower_bound,
    prop1_report,
    shortest_crossing_curve,
    wolpert_check,
)
from .surface import (
    Crossing,
    CurveWord,
    FNCoordinates,
    MarkedSurface,
    PantsCurve,
    PantsGraph,
    curve_holonomy,
    flute_family,
    scale_lengths,
    shift_twists,
    surface_from_json,
    surface_to_json,
    validate,
)

__version__ = "0.1.0"
