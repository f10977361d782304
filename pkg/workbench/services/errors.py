"""
Exception hierarchy shared by the services and the command line.

Every expected failure is a WorkbenchError; the command line maps the
subclasses onto exit codes in one place.
"""
from typing import Optional, Sequence, Union


class WorkbenchError(Exception):
    """Base class for all expected workbench failures."""


class GraphError(WorkbenchError):
    """Invalid graph operation (unknown id, self-loop, finalized builder)."""


class GraphParseError(GraphError):
    """Malformed serialized graph; `path` locates the offending value inside a document."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 path: Sequence[Union[str, int]] = ()):
        self.line = line
        self.column = column
        self.path = tuple(path)
        self.reason = message
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class ParameterError(WorkbenchError, ValueError):
    """Builder or verb parameter outside its allowed range."""


class PinError(WorkbenchError):
    """Pins are not injective or not consistent with the pattern's edges."""


class CapacityError(WorkbenchError):
    """A tower cannot supply the requested number of spread vertices."""

    def __init__(self, requested: int, achieved: int, detail: str = ""):
        self.requested = requested
        self.achieved = achieved
        message = f"requested {requested} spread vertices, achieved {achieved}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class DecodeError(WorkbenchError):
    """Structural decoding failed; `step` names the stage that rejected the input."""

    def __init__(self, step: str, message: str):
        self.step = step
        super().__init__(f"decode failed at {step}: {message}")


class NotBridgeFreeError(WorkbenchError):
    """The graph handed to a rigidity sweep already contains the bridge pattern."""

    def __init__(self, n: int, witness: Sequence[int]):
        self.n = n
        self.witness = list(witness)
        super().__init__(f"graph already contains a {n}-bridge at {self.witness}")


class GirthPreconditionError(WorkbenchError):
    """Host girth does not exceed the required bound."""

    def __init__(self, girth: Optional[int], bound: int):
        self.girth = girth
        self.bound = bound
        super().__init__(f"host girth {girth} does not exceed {bound}")
