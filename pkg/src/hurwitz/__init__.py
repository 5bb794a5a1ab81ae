"""Exact Hurwitz numbers of the sphere from symmetric-group character theory.

Disconnected counts via the Frobenius sum, connected counts via tuple-count
inversion, spectral coefficient extraction with structure verification, and
three-term large-genus asymptotics.  All arithmetic is exact.
"""

from ._kernels import backend as kernel_backend
from .characters import (
    CacheError,
    CharacterTable,
    StaleCacheError,
    central_character,
    chi,
    dimension,
    load_or_build,
    register_table,
    transposition_class,
    transposition_content,
)
from .counting import (
    BruteForceBoundError,
    HurwitzQuery,
    connected,
    connected_from_transpositions,
    connected_value,
    disconnected,
    disconnected_direct,
    disconnected_value,
    genus_to_transpositions,
    oracle_connected,
    oracle_disconnected,
)
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    l_star,
    multiplicity,
    parse_partition,
    parse_profiles,
    sub_multisets,
    z_order,
)
from .spectrum import (
    SpectralDecomposition,
    VerificationReport,
    asymptotic_error,
    connected_spectrum,
    disconnected_spectrum,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceBoundError",
    "CacheError",
    "CharacterTable",
    "HurwitzQuery",
    "Partition",
    "SpectralDecomposition",
    "StaleCacheError",
    "VerificationReport",
    "asymptotic_error",
    "central_character",
    "chi",
    "conjugate",
    "connected",
    "connected_from_transpositions",
    "connected_spectrum",
    "connected_value",
    "dimension",
    "disconnected",
    "disconnected_direct",
    "disconnected_spectrum",
    "disconnected_value",
    "enumerate_partitions",
    "genus_to_transpositions",
    "kernel_backend",
    "l_star",
    "load_or_build",
    "multiplicity",
    "oracle_connected",
    "oracle_disconnected",
    "parse_partition",
    "parse_profiles",
    "register_table",
    "sub_multisets",
    "transposition_class",
    "transposition_content",
    "verify_theorem",
    "z_order",
]
