"""Exception types shared across the package."""


class NimspecError(Exception):
    pass


class InvalidParameterError(NimspecError, ValueError):
    """A constructor argument is outside its documented range."""


class UnsupportedConstructionError(NimspecError):
    """The object exists mathematically but has no adjacency construction here."""


class DataUnavailableError(NimspecError, KeyError):
    """No tabulated eigendata / closed form for the requested graph."""


class TruncationError(NimspecError):
    """A moment was requested beyond the safe depth of a truncated graph."""


class NoClosedFormError(NimspecError):
    """The graph has no root-of-unity closed-form measure."""


class GeneratorTranscriptionError(NimspecError):
    """Group closure ran away; the generator matrices are suspect."""


class DataIntegrityError(NimspecError):
    """Enumerated class data disagrees with the shipped character table."""


class FailedIdentityError(NimspecError):
    """A series identity that should hold exactly failed."""


class SymmetryError(NimspecError):
    """A permutation claimed as a graph symmetry does not commute with the adjacency."""
