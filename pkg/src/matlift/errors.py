"""Exception hierarchy.

Every failure the library can report has its own class so that the CLI can
surface the class name as a stable, machine-readable diagnostic.
"""


class MatliftError(Exception):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# ring
class SpecMismatch(MatliftError, ValueError):
    pass


class NonUnit(MatliftError, ArithmeticError):
    pass


class InsufficientValuation(MatliftError, ArithmeticError):
    pass


class BadTarget(MatliftError, ValueError):
    pass


# matrix
class ShapeMismatch(MatliftError, ValueError):
    pass


class NotInvertible(MatliftError, ArithmeticError):
    pass


# polynomial
class NonCommutingTuple(MatliftError, ValueError):
    def __init__(self, i: int, j: int, message: str = ""):
        self.pair = (i, j)
        super().__init__(message or f"arguments {i} and {j} do not commute")


# centralizer
class NotCyclic(MatliftError, ValueError):
    pass


class FrameSearchExhausted(MatliftError, RuntimeError):
    pass


class NotInCentralizer(MatliftError, ValueError):
    pass


class ReconstructionFailure(MatliftError, RuntimeError):
    pass


class BudgetExceeded(MatliftError, ValueError):
    pass


# lift
class SeedNotCommuting(MatliftError, ValueError):
    pass


class SeedNotASolution(MatliftError, ValueError):
    pass


class PartialNeitherUnitNorZero(MatliftError, ValueError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(
            message or f"partial derivative {index} is neither invertible nor zero at the seed"
        )


class NoInvertiblePartial(MatliftError, ValueError):
    pass


class NotMonic(MatliftError, ValueError):
    pass


class StepVerificationFailed(MatliftError, RuntimeError):
    pass


class NonUnitCorrectionDivisor(MatliftError, ArithmeticError):
    pass


# search
class MismatchDetected(MatliftError, RuntimeError):
    pass


# cli / io
class ParseError(MatliftError, ValueError):
    pass


class VerificationFailed(MatliftError, ValueError):
    def __init__(self, message: str, location=None):
        self.location = location
        super().__init__(message)


class TowerMismatch(VerificationFailed):
    pass


class UnknownDemo(MatliftError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""
