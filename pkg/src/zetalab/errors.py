"""Exception taxonomy. Everything raised on purpose derives from ZetalabError."""


class ZetalabError(Exception):
    """Base class for every deliberate error in this package."""


class DomainError(ZetalabError):
    """Argument outside the validity region of an asymptotic evaluation."""


class IndexTooSmallError(ZetalabError):
    """Grid index below the smallest admissible value for its kind."""


class SolverError(ZetalabError):
    """Root refinement missed the residual tolerance; treated as a bug signal."""


class TableTooSmallError(ZetalabError):
    """Divisor table does not cover the requested range."""


class PhaseVectorTooShortError(ZetalabError):
    """Phase vector shorter than the cutoff of the requested sum."""


class CapacityError(ZetalabError):
    """Sieve request exceeds the memory budget; points at the blocked route."""


class SpecError(ZetalabError):
    """Invalid correlation specification (shift bound, kind, or constraint)."""


class CostGuardError(ZetalabError):
    """Refused a computation whose cost grows quadratically past the cap."""


class EdgeError(ZetalabError):
    """Interpolation point too close to the sample window boundary."""


class ConfigError(ZetalabError):
    """Bad experiment configuration; message names the field and the reason."""
