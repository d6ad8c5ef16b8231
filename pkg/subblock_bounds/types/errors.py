"""Exception hierarchy and CLI exit codes."""

from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    """Process exit codes used by the command-line surface."""

    OK = 0
    INTERNAL = 1
    USAGE = 2
    DOMAIN = 3
    CERTIFICATE_FAILURE = 4
    ORACLE_MISMATCH = 5


class SubblockBoundsError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(SubblockBoundsError, ValueError):
    """A malformed instance or argument (bad ranges, unparsable input)."""


class ProfileMismatchError(InvalidParameterError):
    """Two weight profiles do not live over the same (m, L)."""


class DeskCapExceededError(InvalidParameterError):
    """A brute-force computation would exceed its configured desk-scale cap."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"{what} of {requested} exceeds the desk-scale cap of {cap} "
            "(raise it with SUBBLOCK_BOUNDS_MAX_DESK)"
        )


class DomainError(SubblockBoundsError, ValueError):
    """A formula was evaluated outside the parameter range where it holds."""


class LPError(SubblockBoundsError):
    """Base class for linear-program failures."""


class LPInfeasibleError(LPError):
    """The covering program has no feasible point."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        super().__init__(message)


class LPSolverError(LPError):
    """The solver produced a primal/dual pair that failed re-verification."""


class CertificateIndexError(SubblockBoundsError, KeyError):
    """A certificate references profiles the program does not index."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
