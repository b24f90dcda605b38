"""Exception types raised across the toolkit.

Every error carries a human-readable message; parser errors additionally
carry the 1-based line number of the offending input line.
"""


class LexshiftError(Exception):
    """Base class for all toolkit errors."""


class EmptyInput(LexshiftError):
    """Document text produced no word tokens."""


class InvalidEncoding(LexshiftError):
    """Input bytes are not valid UTF-8."""


class FormatError(LexshiftError):
    """Malformed line in a structured input file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownCategory(LexshiftError):
    """A category id or name is not declared in the dictionary."""


class DuplicatePattern(LexshiftError):
    """The same (stem, wildcard) entry appears twice in a dictionary."""


class CycleDetected(LexshiftError):
    """The category hierarchy contains a cycle."""


class LanguageMismatch(LexshiftError):
    """Corpus and dictionary language tags differ."""


class LabelMismatch(LexshiftError):
    """Two frequency tables do not cover the same ordered labels."""


class EmptySample(LexshiftError):
    """A sample with no values was passed to a descriptive statistic."""


class SampleTooSmall(LexshiftError):
    """Sample size is below the minimum for the requested test."""


class DegenerateSample(LexshiftError):
    """Sample has zero variance where the test requires spread."""


class DanglingReference(LexshiftError):
    """An alignment row references a sentence that does not exist."""


class DoubleAssignment(LexshiftError):
    """A sentence is claimed by more than one alignment group."""


class NonMonotonic(LexshiftError):
    """Alignment groups are not ordered consistently with the text."""


class IncompleteAlignment(LexshiftError):
    """Some sentences are not covered by any alignment group."""


class EmptyDocument(LexshiftError):
    """A document with no sentences was passed to the aligner."""
