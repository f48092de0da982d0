"""Split-quaternionic harmonic analysis.

Biquaternion algebra, matrix coefficients of SU(1,1) with exact symbolic
closed forms, reproducing-kernel expansions, Cayley transforms to Minkowski
space, and the regularized integral operators that separate the discrete
and continuous series, including the closed-form Plancherel identity.
"""

from ._core import BACKEND
from .algebra import (
    Biquaternion,
    E0,
    E1,
    E2,
    E3,
    MobiusElement,
    TE0,
    TE1,
    TE2,
    TE3,
    deform,
    from_minkowski_coords,
    from_split_coords,
)
from .coeffs import (
    CoeffIndex,
    SeriesLabel,
    coeff_contour_oracle,
    coeff_eval,
    coeff_poly,
    degree_recursion_solve,
    ladder_apply,
    lie_action,
    regular_builder,
    verify_relations,
)
from .geometry import (
    KAKPoint,
    MHyperPoint,
    cayley,
    kak_factorize,
    mhyper_density,
    mhyper_point,
    pullback_gamma,
    semigroup_classify,
    sgnx,
    su11_density,
    su11_point,
    tube_classify,
)
from .halfint import HalfInt
from .laurent import LaurentPoly, QQi
from .specfun import (
    frakP,
    hyp2f1,
    legendre_p,
    legendre_q,
    legendre_q_tilde,
    plancherel_density,
    spherical_y,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Biquaternion",
    "MobiusElement",
    "E0",
    "E1",
    "E2",
    "E3",
    "TE0",
    "TE1",
    "TE2",
    "TE3",
    "deform",
    "from_split_coords",
    "from_minkowski_coords",
    "HalfInt",
    "LaurentPoly",
    "QQi",
    "CoeffIndex",
    "SeriesLabel",
    "coeff_poly",
    "coeff_eval",
    "coeff_contour_oracle",
    "ladder_apply",
    "lie_action",
    "regular_builder",
    "verify_relations",
    "degree_recursion_solve",
    "KAKPoint",
    "MHyperPoint",
    "su11_point",
    "su11_density",
    "mhyper_point",
    "mhyper_density",
    "kak_factorize",
    "cayley",
    "pullback_gamma",
    "sgnx",
    "semigroup_classify",
    "tube_classify",
    "legendre_p",
    "legendre_q",
    "legendre_q_tilde",
    "spherical_y",
    "hyp2f1",
    "frakP",
    "plancherel_density",
]
