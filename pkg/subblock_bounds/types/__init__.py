"""
Exports for domain types.
"""

from .errors import (
    CertificateIndexError,
    DeskCapExceededError,
    DomainError,
    ExitCode,
    InvalidParameterError,
    LPError,
    LPInfeasibleError,
    LPSolverError,
    ProfileMismatchError,
    SubblockBoundsError,
)
from .instances import CsccInstance, RateBoundRow, RateParams, SeccInstance
from .lp import Certificate, CoveringProgram, LPSolution, ReducedLP, Verdict
from .profiles import (
    OrbitIndexSet,
    Partition,
    PartitionPair,
    ProfileKind,
    WeightProfile,
)

__all__ = [
    "Certificate",
    "CertificateIndexError",
    "CoveringProgram",
    "CsccInstance",
    "DeskCapExceededError",
    "DomainError",
    "ExitCode",
    "InvalidParameterError",
    "LPError",
    "LPInfeasibleError",
    "LPSolution",
    "LPSolverError",
    "OrbitIndexSet",
    "Partition",
    "PartitionPair",
    "ProfileKind",
    "ProfileMismatchError",
    "RateBoundRow",
    "RateParams",
    "ReducedLP",
    "SeccInstance",
    "SubblockBoundsError",
    "Verdict",
    "WeightProfile",
]
