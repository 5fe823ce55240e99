"""Exception hierarchy shared by all greyalloc modules.

Every domain failure raises a subclass of :class:`GreyAllocError`; the CLI
maps these to exit code 1 and the HTTP service to status 400. The ``code``
attribute is the stable machine-readable identifier used in error payloads.
"""


class GreyAllocError(Exception):
    """Base class for all domain errors."""

    code = "DomainError"


# -- series / forecasting ------------------------------------------------

class SeriesTooShort(GreyAllocError):
    code = "SeriesTooShort"


class NonPositiveData(GreyAllocError):
    code = "NonPositiveData"


class SingularSystem(GreyAllocError):
    code = "SingularSystem"


class NumericOverflow(GreyAllocError):
    code = "NumericOverflow"


class NoSaturation(GreyAllocError):
    code = "NoSaturation"


class DivergedFit(GreyAllocError):
    code = "DivergedFit"


# -- pairwise matrices ---------------------------------------------------

class MissingJudgment(GreyAllocError):
    code = "MissingJudgment"


class OutOfScale(GreyAllocError):
    code = "OutOfScale"


class NoConvergence(GreyAllocError):
    code = "NoConvergence"


# -- allocation ----------------------------------------------------------

class DegenerateCriterion(GreyAllocError):
    code = "DegenerateCriterion"


class LabelMismatch(GreyAllocError):
    code = "LabelMismatch"


class AllNonPositive(GreyAllocError):
    code = "AllNonPositive"


class SharesDontSum(GreyAllocError):
    code = "SharesDontSum"


# -- sensitivity ---------------------------------------------------------

class TargetNotFound(GreyAllocError):
    code = "TargetNotFound"


# -- file loading --------------------------------------------------------

class ParseError(GreyAllocError):
    code = "ParseError"


class NonPositiveValue(GreyAllocError):
    code = "NonPositiveValue"


class NotSquare(GreyAllocError):
    code = "NotSquare"


class ReciprocityViolation(GreyAllocError):
    code = "ReciprocityViolation"


class MissingCell(GreyAllocError):
    code = "MissingCell"


class UnknownCriterion(GreyAllocError):
    code = "UnknownCriterion"
