"""Relativistic EPR correlations.

Wigner rotations of boosted spin-singlet pairs, the correlations they show
to moving observers, CHSH values, and the compensated measurement axes that
restore them. Thin Python surface over the C++ core.
"""

from ._core import (
    boost_x,
    boost_z,
    boosted_amplitudes,
    compensated_directions,
    correlation,
    entanglement_entropy_bits,
    evaluate_point,
    singlet_amplitudes,
    singlet_weight,
    standard_boost,
    su2_about,
    wigner_angle,
    wigner_angle_matrix,
)

__all__ = [
    "boost_x",
    "boost_z",
    "boosted_amplitudes",
    "compensated_directions",
    "correlation",
    "entanglement_entropy_bits",
    "evaluate_point",
    "singlet_amplitudes",
    "singlet_weight",
    "standard_boost",
    "su2_about",
    "wigner_angle",
    "wigner_angle_matrix",
]

__version__ = "1.0.0"
