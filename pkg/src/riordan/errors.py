"""Exception hierarchy.

Every error carries the process exit code the CLI maps it to:
2 usage/parse, 3 hypothesis not met, 4 internal-consistency fatal.
"""


class RiordanError(Exception):
    exit_code = 2


# -- series and expressions -------------------------------------------------

class ExprSyntaxError(RiordanError, ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at byte offset {offset}")


class UnknownIdentifier(ExprSyntaxError):
    pass


class DivisorNotUnit(RiordanError, ArithmeticError):
    pass


class ZeroConstantTerm(RiordanError, ArithmeticError):
    pass


class NonzeroLowTerm(RiordanError, ValueError):
    exit_code = 3


class TruncationExceeded(RiordanError, ValueError):
    exit_code = 3


# -- hypotheses ------------------------------------------------------------

class HypothesisNotMet(RiordanError):
    exit_code = 3


class DecompositionHypothesisFailed(HypothesisNotMet):
    pass


class SizeCapExceeded(HypothesisNotMet):
    pass


class UnknownFamily(RiordanError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown family"


class EmptyOrFullSubset(RiordanError, ValueError):
    pass


class ZeroVector(RiordanError, ValueError):
    pass


# -- internal consistency (two independent routes disagree) ----------------

class InternalConsistencyError(RiordanError):
    exit_code = 4


class FormulaMismatch(InternalConsistencyError):
    pass


class RouteMismatch(InternalConsistencyError):
    pass


class SigmaMismatch(InternalConsistencyError):
    pass


class ClassificationMismatch(InternalConsistencyError):
    pass


class PartitionNotIndependent(InternalConsistencyError):
    pass


class NullityTransformFailure(InternalConsistencyError):
    pass


class NoConvergence(InternalConsistencyError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (off-diagonal residual {residual:.3e})")
