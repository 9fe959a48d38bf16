"""
    Finite-precision p-adic approximations used when roots only exist in the
    completion.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ultranev.errors import PrecisionExhausted, ZeroDenominator
from ultranev.util import p_adic_valuation, to_fraction


@dataclass(frozen=True)
class PadicApprox:
    """
        A p-adic number known modulo p^absprec; absprec None means exact.
    """
    value: Fraction
    absprec: Optional[int]
    prime: int

    @classmethod
    def exact(cls, value, prime):
        return cls(to_fraction(value), None, prime)

    def valuation(self):
        """
            Valuation when certified, None when the value is indistinguishable
            from zero at this precision.
        """
        if self.value == 0:
            return None
        val = p_adic_valuation(self.value, self.prime)
        if self.absprec is not None and val >= self.absprec:
            return None
        return val

    def certainly_nonzero(self):
        return self.valuation() is not None

    def _other(self, other):
        if isinstance(other, PadicApprox):
            return other
        return PadicApprox.exact(other, self.prime)

    @staticmethod
    def _min_prec(*precs):
        finite = [prec for prec in precs if prec is not None]
        return min(finite) if finite else None

    def _val_or_prec(self):
        val = self.valuation()
        if val is not None:
            return val
        return self.absprec if self.absprec is not None else 0

    def __add__(self, other):
        other = self._other(other)
        return PadicApprox(self.value + other.value,
                           self._min_prec(self.absprec, other.absprec),
                           self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return PadicApprox(self.value - other.value,
                           self._min_prec(self.absprec, other.absprec),
                           self.prime)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return PadicApprox(-self.value, self.absprec, self.prime)

    def __mul__(self, other):
        other = self._other(other)
        left = None if self.absprec is None else self.absprec + other._val_or_prec()
        right = None if other.absprec is None else other.absprec + self._val_or_prec()
        return PadicApprox(self.value * other.value,
                           self._min_prec(left, right), self.prime)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        val = other.valuation()
        if val is None:
            if other.value == 0 and other.absprec is None:
                raise ZeroDenominator('ultranev.algebra.PadicApprox: division '
                                      'by zero')
            raise PrecisionExhausted('ultranev.algebra.PadicApprox: divisor '
                                     'is zero at working precision')
        own = self._val_or_prec()
        if self.absprec is None and other.absprec is None:
            prec = None
        else:
            candidates = []
            if self.absprec is not None:
                candidates.append(self.absprec - val)
            if other.absprec is not None:
                candidates.append(other.absprec + own - 2 * val)
            prec = min(candidates)
        return PadicApprox(self.value / other.value, prec, self.prime)

    def __rtruediv__(self, other):
        return self._other(other) / self

    def differs_from(self, other):
        """
            True when self - other is certified nonzero, None when the
            difference vanishes at working precision, False when both are
            exact and equal.
        """
        diff = self - other
        if diff.value == 0 and diff.absprec is None:
            return False
        return True if diff.certainly_nonzero() else None

    def digits(self):
        """
            Base-p digits of the unit part, lowest first.
        """
        val = self.valuation()
        if val is None or self.absprec is None:
            return []
        unit = self.value / Fraction(self.prime) ** val
        modulus = self.prime ** (self.absprec - val)
        residue = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
        result = []
        for _ in range(self.absprec - val):
            residue, digit = divmod(residue, self.prime)
            result.append(digit)
        return result

    def __str__(self):
        if self.absprec is None:
            return str(self.value)
        val = self.valuation()
        if val is None:
            return f'O({self.prime}^{self.absprec})'
        terms = [f'{d}*{self.prime}^{val + i}' for i, d in
                 enumerate(self.digits()) if d]
        return ' + '.join(terms + [f'O({self.prime}^{self.absprec})'])


@dataclass(frozen=True)
class ApproxRoot:
    """
        Root known as p^valuation * unit with unit modulo p^precision.
    """
    unit: int
    valuation: int
    precision: int
    multiplicity: int
    prime: int

    def as_padic(self):
        scale = Fraction(self.prime) ** self.valuation
        return PadicApprox(self.unit * scale, self.precision + self.valuation,
                           self.prime)

    def digits(self):
        residue, result = self.unit, []
        for _ in range(self.precision):
            residue, digit = divmod(residue, self.prime)
            result.append(digit)
        return result

    def __str__(self):
        return str(self.as_padic())


@dataclass(frozen=True)
class UnramifiedRoots:
    """
        The conjugate roots p^valuation * zeta, zeta running over the roots
        of a monic integer polynomial known modulo p^precision (coefficients
        lowest first) whose reduction is irreducible. They live in the
        unramified extension of Q_p of degree residue_degree, each with the
        given multiplicity.
    """
    factor: tuple
    valuation: int
    precision: int
    multiplicity: int
    prime: int

    @property
    def residue_degree(self):
        return len(self.factor) - 1

    def __str__(self):
        terms = [f'{c}*z^{i}' if i else str(c)
                 for i, c in enumerate(self.factor) if c]
        scale = f'{self.prime}^{self.valuation}*' if self.valuation else ''
        return (f'{scale}z, z root of {" + ".join(reversed(terms))} '
                f'mod {self.prime}^{self.precision}')
