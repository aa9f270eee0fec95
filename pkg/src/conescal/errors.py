"""Exception types shared across the package."""


class ConescalError(Exception):
    """Base class for every package-specific error."""


class UnsupportedRepresentation(ConescalError):
    """The requested operation is not defined for this cone representation."""


class InteriorUnsupported(ConescalError):
    """Interior classification was requested for a representation that cannot certify it."""


class DegenerateSeminorm(ConescalError):
    """The seminorm vanishes on a direction that needs a unit-level representative."""


class DegenerateDirection(ConescalError):
    """A direction parameter lies outside the set where the operation is well defined."""


class CoveringViolated(ConescalError):
    """The supplied parameter grids cannot reproduce the required target point."""


class PreconditionViolated(ConescalError):
    """An argument violates a documented precondition of the operation."""


class NoFiniteValue(ConescalError):
    """The quantity being computed has no finite value on this input."""


class HypothesisFailed(ConescalError):
    """A theorem pipeline's hypothesis fails; names the condition and carries a witness."""

    def __init__(self, condition: str, witness=None):
        msg = f"hypothesis failed: {condition}"
        if witness is not None:
            msg += f" (witness: {witness})"
        super().__init__(msg)
        self.condition = condition
        self.witness = witness


class LPFailure(ConescalError):
    """A linear program that was expected to solve cleanly did not.

    Carries the solver status ("infeasible", "unbounded" or "maxiter") in
    ``status`` when available.
    """

    def __init__(self, message: str, status: str | None = None):
        super().__init__(message)
        self.status = status


class SchemaError(ConescalError):
    """A problem file failed validation.

    ``pointer`` is the JSON-pointer path of the offending element and
    ``reason`` the bare message without the pointer prefix.
    """

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"
        self.reason = message


# --- expression language errors -------------------------------------------

class ExprError(ConescalError):
    """Base class for expression parsing/evaluation errors."""


class ExprSyntaxError(ExprError):
    """Malformed expression text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownIdentifier(ExprError):
    """An identifier that is neither a variable of the problem nor a known function."""

    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown identifier '{name}' (at offset {offset})")
        self.name = name
        self.offset = offset


class ArityError(ExprError):
    """A function call with the wrong number of arguments."""

    def __init__(self, name: str, expected: str, got: int, offset: int):
        super().__init__(
            f"{name} expects {expected} argument(s), got {got} (at offset {offset})"
        )
        self.name = name
        self.offset = offset


class EvalError(ExprError):
    """Evaluation hit a domain error (division by zero, 0**negative, overflow).

    ``where`` describes the AST node at which evaluation failed.
    """

    def __init__(self, message: str, where: str):
        super().__init__(f"{message} (in {where})")
        self.where = where
