"""Exception hierarchy shared by every service and by the command line."""

from typing import Any, List, Optional


class LieBarError(Exception):
    """Base class for all library errors."""


class ConfigError(LieBarError):
    pass


class InvalidInputError(LieBarError, ValueError):
    pass


class NotALieElementError(LieBarError):
    """A word polynomial left a nonzero remainder outside the Lyndon span."""


class ConsistencyError(LieBarError):
    """Two independent computations of the same table disagree."""


class NotACoLieError(ConsistencyError):
    """The cobar differential of a coalgebra does not square to zero."""


class TableInconsistencyError(ConsistencyError):
    pass


class InvalidElementError(LieBarError):
    pass


class InvalidMorphismError(LieBarError):
    pass


class InfeasibleError(LieBarError):
    """An exact linear system has no solution."""


class IdentityViolationError(LieBarError):
    def __init__(self, message: str, checks: Optional[List[Any]] = None):
        super().__init__(message)
        self.checks = checks or []
