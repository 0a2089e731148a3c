"""Exception hierarchy shared by all palincf modules."""


class PalinCFError(ValueError):
    """Base class for every error raised by palincf."""


class DSquare(PalinCFError):
    """The radicand is a perfect square, so the surd is rational."""


class ZeroDenominator(PalinCFError):
    pass


class EmptyWord(PalinCFError):
    pass


class RationalRoot(PalinCFError):
    """A monic quadratic has a perfect-square discriminant."""


class KTooSmall(PalinCFError):
    pass


class NotAdmissible(PalinCFError):
    """No square root has a period built on the given palindrome."""


class NotPalindrome(PalinCFError):
    pass


class DomainError(PalinCFError):
    pass


class PreconditionViolated(PalinCFError):
    pass


class ParityViolated(PalinCFError):
    pass
