"""Exception hierarchy.

ValidationError marks a violated precondition (bad input), DomainError marks
a well-formed request with no physical answer (below cutoff, pole, ...).
"""


class ValidationError(ValueError):
    pass


class DomainError(Exception):
    pass


class ZeroAdmittance(DomainError):
    pass


class InvalidGeometry(ValidationError):
    pass


class Degenerate(DomainError):
    pass


class BranchAmbiguity(ValidationError):
    pass


class NoSolution(DomainError):
    pass


class DegenerateStub(DomainError):
    pass


class NotApplicable(DomainError):
    pass


class ZeroField(ValidationError):
    pass


class SupersonicSource(DomainError):
    pass


class NotTransverse(ValidationError):
    pass


class InvalidMode(ValidationError):
    pass


class BelowCutoff(DomainError):
    pass


class UnknownMode(DomainError):
    pass


class Unsupported(DomainError):
    pass


class Pole(DomainError):
    pass
