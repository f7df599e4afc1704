"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``ValidationError`` -> 2,
``ResourceError`` -> 3, any other ``TropInvError`` -> 4.
"""


class TropInvError(Exception):
    """Base class for all library errors."""


class ValidationError(TropInvError):
    """Malformed input: bad JSON shape, non-bijective permutation, ..."""


class DimensionError(TropInvError, ValueError):
    """Arity or dimension mismatch between operands."""


class DomainError(TropInvError, ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(TropInvError):
    """A configured size guard was exceeded."""


class NotFinitelyGenerated(TropInvError):
    """The invariant semiring of the group is not finitely generated."""


class SamplingError(TropInvError):
    """Random sampling produced no usable data."""
