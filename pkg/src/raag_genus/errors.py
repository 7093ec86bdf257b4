"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (the class name) and an
optional ``location`` pointing into the offending input. The CLI maps the three
families below onto exit codes 1, 2 and 3.
"""

from __future__ import annotations


class RaagGenusError(Exception):
    exit_code = 1

    def __init__(self, message: str = "", location: str | None = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.location = location

    @property
    def code(self) -> str:
        return self.__class__.__name__

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "location": self.location}


class InvalidInput(RaagGenusError):
    """User-supplied data violates a documented precondition."""


class BudgetExceeded(RaagGenusError):
    exit_code = 2


class InternalInvariantError(RaagGenusError):
    """A proven mathematical fact failed to hold; always a bug."""

    exit_code = 3


# graphs
class DuplicateVertex(InvalidInput):
    pass


class LoopEdge(InvalidInput):
    pass


class DuplicateEdge(InvalidInput):
    pass


class UnknownEndpoint(InvalidInput):
    pass


class UnknownVertex(InvalidInput):
    pass


class InvalidOrientation(InvalidInput):
    pass


class SizeLimitExceeded(BudgetExceeded):
    pass


# linear algebra
class NotSquare(InvalidInput):
    pass


class NotSkewSymmetric(InvalidInput):
    pass


class MalformedMatrix(InvalidInput):
    pass


# homology classes
class UnknownEdge(InvalidInput):
    pass


class DuplicateLabel(InvalidInput):
    pass


class AmbientMismatch(InvalidInput):
    pass


class NotAComponent(InvalidInput):
    pass


class ZeroClass(InvalidInput):
    pass


# solver
class NotComplete(InvalidInput):
    pass


class NotBipartiteCoverable(InvalidInput):
    pass


class RankNotTwo(InvalidInput):
    pass


class SupportNotMultipartite(InternalInvariantError):
    pass


class DependenceFailure(InternalInvariantError):
    pass


# van kampen diagrams
class OppositeSideMismatch(InvalidInput):
    pass


class NonCommutingLabels(InvalidInput):
    pass


class IncompleteMatching(InvalidInput):
    pass


class GeneratorMismatchAtGluing(InvalidInput):
    pass


class OrientationIncompatibleGluing(InvalidInput):
    pass


class UnknownGenerator(InvalidInput):
    pass


class OddEulerCharacteristic(InternalInvariantError):
    pass


class MalformedInput(InvalidInput):
    """JSON document does not follow the expected schema."""
