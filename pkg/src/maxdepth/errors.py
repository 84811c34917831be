"""Exception hierarchy shared by the whole engine.

Exit-code mapping used by the CLI: malformed input -> 2, cap exceeded -> 3,
precondition violation -> 4.
"""


class EngineError(Exception):
    kind = "error"
    exit_code = 1


class MalformedInputError(EngineError):
    kind = "malformed-input"
    exit_code = 2


class CapExceededError(EngineError):
    kind = "cap-exceeded"
    exit_code = 3


class PreconditionError(EngineError):
    kind = "precondition-violation"
    exit_code = 4


class UndefinedModuleError(PreconditionError):
    """Raised when a module-level operation receives the unit ideal."""

    kind = "undefined-module"


class RingMismatchError(PreconditionError):
    kind = "ring-mismatch"


class SquarefreeRequiredError(PreconditionError):
    kind = "squarefree-required"


class RegularityViolationError(PreconditionError):
    """A variable that was assumed regular sits inside an associated prime."""

    kind = "regularity-violation"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInSupportError(PreconditionError):
    kind = "not-in-support"


class InternalCheckError(EngineError):
    """An always-on consistency oracle failed; indicates an engine bug."""

    kind = "internal-check"
