"""Exception types shared across the package."""


class AffectixError(Exception):
    """Base class for every error this package raises deliberately."""


class ArgumentError(AffectixError, ValueError):
    """An argument violates a documented precondition."""


class LexiconParseError(AffectixError):
    """A lexicon or rules file line could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class LexiconTooSmallError(AffectixError):
    """The lexicon has too few entries to carve percentile tails from."""


class EmptyDocumentError(AffectixError):
    """The document contains nothing scorable."""


class DegenerateTestError(AffectixError):
    """The test statistic is undefined for the given samples."""


class UndefinedMetricError(AffectixError):
    """The metric is undefined for the given inputs."""


class NumericalError(AffectixError):
    """An iterative numerical routine exhausted its iteration budget."""


class ClassifierNotImplementedError(AffectixError):
    """A recognised classifier id that this package deliberately leaves out."""


class ManifestError(AffectixError):
    """A corpus manifest failed validation."""


class DuplicateDocIdError(ManifestError):
    pass


class PathTraversalError(ManifestError):
    pass


class EmptyRunError(AffectixError):
    """Every document in a corpus run was skipped."""
