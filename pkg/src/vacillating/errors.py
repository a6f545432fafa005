"""Exception hierarchy.

Every rejection raised by the library derives from ``VacillatingError`` (itself
a ``ValueError``), so callers can catch one type and still branch on the
concrete class when they care about the reason.
"""


class VacillatingError(ValueError):
    pass


class RejectNotDecreasing(VacillatingError):
    pass


class RejectNonPositive(VacillatingError):
    pass


class RejectShape(VacillatingError):
    pass


class RejectEntries(VacillatingError):
    pass


class RejectNotStandard(VacillatingError):
    pass


class RejectBelowAxis(VacillatingError):
    pass


class RejectFlatOnAxis(VacillatingError):
    pass


class RejectShapeTooLong(VacillatingError):
    pass


class RejectInvalidResult(VacillatingError):
    pass


class RejectCaseConstraint(VacillatingError):
    pass


class RejectSemistandard(VacillatingError):
    pass


class RejectGapRule(VacillatingError):
    pass


class RejectAmbiguous(VacillatingError):
    pass


class RejectNotLR(VacillatingError):
    pass


class RejectShapeMismatch(VacillatingError):
    pass


class RejectRowParity(VacillatingError):
    pass


class RejectSuffixShape(VacillatingError):
    pass


class RejectNotZero(VacillatingError):
    pass


class RejectInvalidWord(VacillatingError):
    pass


class RejectTripleShape(VacillatingError):
    pass


class RejectStripShape(VacillatingError):
    pass


class RejectNoParityFix(VacillatingError):
    pass
