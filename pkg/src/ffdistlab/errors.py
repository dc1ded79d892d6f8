"""Exception hierarchy for ffdistlab.

Every error raised on purpose by the library derives from `FFDistLabError`
and also from the builtin exception a caller would naturally catch
(`ValueError`, `MemoryError`, ...). Messages state what failed first and,
when there is a known fix, add an indented ``Hint:`` paragraph.
"""

from typing import Any


def with_hint(message: str, hint: str | None = None) -> str:
    """Append a hint paragraph to an error message."""
    if not hint:
        return message
    return f"{message}\n\n  Hint: {hint}"


class FFDistLabError(Exception):
    """Base class for all library errors."""

    exit_code: int = 2


class ContractViolation(FFDistLabError, ValueError):
    """An operation was called outside its precondition."""


class UnsupportedOperation(FFDistLabError, NotImplementedError):
    """The request is well-formed but beyond what the library implements."""


class ResourceBudgetExceeded(FFDistLabError, MemoryError):
    """A rank space or enumeration is larger than the configured budget."""

    exit_code = 3

    def __init__(self, what: str, size: int, budget: int) -> None:
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(
            with_hint(
                f"{what} has size {size}, above the budget of {budget}.",
                "Shrink q or d, or raise the limit with the FFDISTLAB_BUDGET "
                "environment variable.",
            )
        )


class NumericalFailure(FFDistLabError, ArithmeticError):
    """A floating-point result could not be rounded within tolerance."""

    exit_code = 1


class HypothesisViolation(FFDistLabError, ValueError):
    """A theorem or lemma hypothesis does not hold for the given input."""

    def __init__(self, target: str, hypothesis: str, hint: str | None = None) -> None:
        self.target = target
        self.hypothesis = hypothesis
        super().__init__(with_hint(f"'{target}' requires {hypothesis}.", hint))


class IdentityViolation(FFDistLabError, AssertionError):
    """An exact identity failed; `witness` describes the offending instance."""

    exit_code = 1

    def __init__(self, identity: str, witness: dict[str, Any]) -> None:
        self.identity = identity
        self.witness = witness
        super().__init__(f"Identity '{identity}' violated. Witness: {witness}")
