"""
    Exceptions raised by ultranev. Every error is a ValueError so callers
    that only know about bad input keep working.
"""


class UltranevError(ValueError):
    """
        Base class of all ultranev errors.
    """


class OutOfDomain(UltranevError):
    pass


class DomainMismatch(UltranevError):
    pass


class ZeroPolynomial(UltranevError):
    pass


class ZeroDenominator(UltranevError):
    pass


class PoleAtPoint(UltranevError):
    pass


class NeedsExtension(UltranevError):
    """
        The roots of a polynomial are not in the declared field.

        :param discriminant: the element whose square root is missing, when
            known
    """

    def __init__(self, message, discriminant=None):
        super().__init__(message)
        self.discriminant = discriminant


class PrecisionExhausted(UltranevError):
    pass


class NotAChiPower(UltranevError):
    """
        A coefficient has no chi-th root in the represented field.

        :param index int: position of the offending coefficient
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class AllZeroUpToOrder(UltranevError):
    pass


class BeyondCertifiedRadius(UltranevError):
    pass


class NonUnitReciprocal(UltranevError):
    pass


class DegenerateComposition(UltranevError):
    pass


class UncertifiedDivisor(UltranevError):
    pass


class HypothesisViolated(UltranevError):
    """
        An input does not meet the hypotheses of the inequality being checked.

        :param which str: short name of the violated hypothesis
    """

    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class NotASolutionPair(UltranevError):
    """
        P(f) and Q(g) differ as truncated series.

        :param index int: first coefficient where they differ
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class FactorizationMismatch(UltranevError):
    pass


class UncoveredDegreePattern(UltranevError):
    pass


class ParseError(UltranevError):
    """
        Text input could not be parsed.

        :param position int: zero-based offset of the first bad character
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else f'{message} (at position {position})')
        self.position = position


class FieldError(UltranevError):
    pass
