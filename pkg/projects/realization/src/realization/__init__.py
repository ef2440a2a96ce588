"""Peripheral pairs of marked Gauss diagrams and realization of C_1-presentations."""

from realization.chains import (
    CyclicPresentation,
    RealizablePresentation,
    RealizationError,
    as_cyclic,
    compose_origin,
    is_realizable,
    link_shape,
    realizability_problems,
)
from realization.construct import RealizationResult, realize, realize_presentation
from realization.cyclic import Chain, check_c1, to_cyclic
from realization.homomorphs import (
    Homomorph,
    HomomorphError,
    connected_sum_images,
    longitude_image,
    realize_homomorph,
    relator_failures,
    reverse_homomorph,
    reversed_images,
    sum_homomorph,
)
from realization.peripheral import (
    PERIPHERAL_QUOTIENTS,
    PeripheralHypothesisError,
    PeripheralPair,
    PeripheralReport,
    check_peripheral,
    commutes_in_quotients,
    meridian_longitude,
    peripheral_pairs,
    realize_with_peripheral,
)
from realization.realizable import to_realizable

__all__ = [
    "PERIPHERAL_QUOTIENTS",
    "Chain",
    "CyclicPresentation",
    "Homomorph",
    "HomomorphError",
    "PeripheralHypothesisError",
    "PeripheralPair",
    "PeripheralReport",
    "RealizablePresentation",
    "RealizationError",
    "RealizationResult",
    "as_cyclic",
    "check_c1",
    "check_peripheral",
    "commutes_in_quotients",
    "compose_origin",
    "connected_sum_images",
    "is_realizable",
    "link_shape",
    "longitude_image",
    "meridian_longitude",
    "peripheral_pairs",
    "realizability_problems",
    "realize",
    "realize_homomorph",
    "realize_presentation",
    "realize_with_peripheral",
    "relator_failures",
    "reverse_homomorph",
    "reversed_images",
    "sum_homomorph",
    "to_cyclic",
    "to_realizable",
]
