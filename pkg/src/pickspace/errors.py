"""Exception hierarchy.

Validation problems (malformed input, out-of-range indices, points outside the
ball) derive from :class:`ValidationError`; failures that come from the numbers
themselves (singular or degenerate Grams, failed witnesses) derive from
:class:`NumericalError`.  The CLI maps the two families to distinct exit codes.
"""


class PickSpaceError(Exception):
    pass


class ValidationError(PickSpaceError, ValueError):
    pass


class NumericalError(PickSpaceError, ArithmeticError):
    pass


class DimensionMismatch(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class IndexOverlap(ValidationError):
    pass


class BoundaryPoint(ValidationError):
    pass


class SingularGram(NumericalError):
    pass


class DegenerateGram(NumericalError):
    """A Gram matrix has a zero entry, i.e. two orthogonal kernels."""


class DuplicatePoints(SingularGram):
    pass


class NotCompletePick(NumericalError):
    pass


class NotInF(NotCompletePick):
    pass


class ZeroPivot(NumericalError):
    pass


class InvalidWitness(NumericalError):
    pass


class NotOrthogonal(NumericalError):
    pass
