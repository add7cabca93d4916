"""Smashing frames, smashing spectra and Balmer spectra of finite-dimensional
valuation domains, computed from the idempotence pattern of their primes."""

from .errors import SmashFrameError
from .frame import (
    EMPTY,
    Chain,
    Frame,
    count_all,
    count_by_size,
    covers_rule,
    enumerate_frame,
    epi_label,
    is_compactly_generated,
    join,
    leq,
    meet,
)
from .ring import Interval, NextProfile, RingSpec, admissible_intervals, next_profile, validate
from .spectra import (
    ComparisonMap,
    SpectralSpace,
    TelescopeVerdict,
    balmer_dual,
    comparison_map,
    embed_subframe,
    point_count_formula,
    smashing_spectrum,
    spectrum_dimension,
    telescope_holds,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "Chain",
    "ComparisonMap",
    "Frame",
    "Interval",
    "NextProfile",
    "RingSpec",
    "SmashFrameError",
    "SpectralSpace",
    "TelescopeVerdict",
    "admissible_intervals",
    "balmer_dual",
    "comparison_map",
    "count_all",
    "count_by_size",
    "covers_rule",
    "embed_subframe",
    "enumerate_frame",
    "epi_label",
    "is_compactly_generated",
    "join",
    "leq",
    "meet",
    "next_profile",
    "point_count_formula",
    "smashing_spectrum",
    "spectrum_dimension",
    "telescope_holds",
    "validate",
]
