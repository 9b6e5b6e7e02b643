"""
Exception hierarchy of the fibre_invariants package.

Two families are distinguished and mapped to exit codes by `main`:

- PreconditionError (exit code 2): the input does not satisfy the hypotheses
  of the requested computation.
- InvariantViolation (exit code 3): a proven identity failed on the input.
  This is always a bug or a falsifying instance and is reported loudly.
"""
from typing import Optional


class FibreError(Exception):
    """Base class of all errors raised on purpose by the package."""

    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class PreconditionError(FibreError):
    exit_code = 2


class InvariantViolation(FibreError):
    exit_code = 3


class InvalidInstance(PreconditionError):
    """Malformed configuration or panel input."""


class DimensionMismatch(PreconditionError):
    pass


class NotNilpotent(PreconditionError):
    pass


class ConfigMismatch(PreconditionError):
    pass


class SigmaVanishes(PreconditionError):
    def __init__(self, point: str):
        super().__init__(f"Designated section vanishes at point {point}")
        self.point = point


class UnitVanishes(PreconditionError):
    def __init__(self, point: str):
        super().__init__(f"1 + s vanishes at point {point}")
        self.point = point


class DegenerateRestriction(PreconditionError):
    """The trace form restricted to the filtration step of index `index` is degenerate."""

    def __init__(self, index: int):
        super().__init__(f"Quadratic form is degenerate on filtration step {index}")
        self.index = index

    def to_dict(self) -> dict:
        return {**super().to_dict(), "index": self.index}


class NotGeneralPosition(PreconditionError):
    pass


class HypothesisDPlusHFails(PreconditionError):
    def __init__(self, i: int):
        super().__init__(f"Raising part of multiplication by x_{i} is not an isomorphism H -> H^1")
        self.i = i


class NotGeneralEnough(PreconditionError):
    pass


class WeightMismatch(PreconditionError):
    pass


class NonConstantRequired(PreconditionError):
    pass


class CenterNotDiagonal(InvariantViolation):
    pass


class DegreeGap(InvariantViolation):
    def __init__(self, chain: int, levels: Optional[tuple] = None):
        super().__init__(f"Chain {chain} has non contiguous levels {levels}")
        self.chain = chain


class CertificateFailure(InvariantViolation):
    pass


class NotInPanel(PreconditionError):
    """The operator function t has to be a panel element."""


class SingularMatrix(PreconditionError):
    """A matrix that has to be invertible on the input is singular."""
