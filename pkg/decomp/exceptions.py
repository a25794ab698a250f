from typing import TYPE_CHECKING, Optional

from django.core.exceptions import ValidationError

if TYPE_CHECKING:
    from .types import DependencyReport


class DecompError(Exception):
    """Base class of everything the decomposition library raises on purpose."""


class SchemaError(DecompError, KeyError):
    """Unknown attribute, value outside a domain, mismatched domains or a name collision."""

    def __str__(self):
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ''


class UniverseMismatch(DecompError, ValueError):
    pass


class UnsupportedInput(DecompError, ValueError):
    """The chosen algorithm cannot handle this table or attribute split."""


class MergeConflict(DecompError):
    """Two concrete output values would end up in one chart cell."""


class SearchBoundExceeded(DecompError):
    pass


class InconsistentResult(DecompError, AssertionError):
    """Two independent decision procedures disagree. Always a bug."""


class VerificationFailed(DecompError):
    def __init__(self, message: str, report: Optional['DependencyReport'] = None) -> None:
        super().__init__(message)
        self.report = report


class TruthTableError(ValidationError):
    """The truth table text could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, code='truth_table')
        self.line = line

    def __str__(self):
        return '; '.join(self.messages)
