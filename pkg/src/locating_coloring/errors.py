"""Exception types shared across the package."""

from __future__ import annotations


class LocatingColoringError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(LocatingColoringError, ValueError):
    """A value violates a documented precondition (bad size, bad range, mismatch)."""


class SpecSyntaxError(ParameterError):
    """A graph spec string does not parse."""


class DisconnectedGraphError(LocatingColoringError, ValueError):
    """A locating-mode operation was applied to a disconnected graph."""


class ImproperColoringError(LocatingColoringError, ValueError):
    """A coloring assigns equal colors to adjacent vertices.

    `edge` carries the first offending edge (0-based endpoints) when known.
    """

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


class NoClosedFormError(LocatingColoringError, ValueError):
    """No closed-form value is implemented for the requested graph."""


class ConstructionError(LocatingColoringError, RuntimeError):
    """A generated coloring failed its own validity check; indicates an internal fault."""


class SearchInconclusive(LocatingColoringError):
    """The exact search hit its node budget before certifying presence or absence."""

    def __init__(self, message: str, nodes_explored: int):
        super().__init__(message)
        self.nodes_explored = nodes_explored
