"""Terminating generalized hypergeometric series in exact rational arithmetic.

A series pFq(a1..ap; b1..bq; z) terminates when some numerator parameter is
a non-positive integer; only such series are evaluated here, so every value
is an exact ``Fraction``.  Gamma functions never appear: the right-hand side
of Dougall's very-well-poised 5F4 summation is pre-reduced to the Pochhammer
quotient

    (a+1)_(b) (a+b+c+1)_(d) / ( (a+c+1)_(d) (a+d+1)_(b) )    (rising factorials)

which is valid verbatim for non-negative integers b, c, d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


def rising(a, n: int) -> Fraction:
    """Pochhammer a (a+1) ... (a+n-1); empty product is 1."""
    a = Fraction(a)
    out = Fraction(1)
    for t in range(n):
        out *= a + t
        if not out:
            break
    return out


def falling(a, n: int) -> Fraction:
    """a (a-1) ... (a-n+1); empty product is 1."""
    a = Fraction(a)
    out = Fraction(1)
    for t in range(n):
        out *= a - t
        if not out:
            break
    return out


def _is_nonpositive_int(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


@dataclass(frozen=True)
class HypParams:
    """Parameters of a terminating pFq at a rational argument."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    argument: Fraction = field(default_factory=lambda: Fraction(1))

    @classmethod
    def of(cls, numerator: Sequence, denominator: Sequence, argument=1) -> "HypParams":
        return cls(
            numerator=tuple(Fraction(a) for a in numerator),
            denominator=tuple(Fraction(b) for b in denominator),
            argument=Fraction(argument),
        )

    def termination_index(self) -> int:
        """Smallest |a| over non-positive-integer numerator parameters."""
        stops = [-int(a) for a in self.numerator if _is_nonpositive_int(a)]
        if not stops:
            raise ValueError("series does not terminate: no non-positive integer upstairs")
        return min(stops)

    def validate(self) -> int:
        n_max = self.termination_index()
        for b in self.denominator:
            if _is_nonpositive_int(b) and -int(b) < n_max:
                raise ValueError(
                    f"denominator parameter {b} vanishes within the summation range"
                )
        return n_max


def pfq_terminating(params: HypParams) -> Fraction:
    """Exact finite sum of the terminating series."""
    n_max = params.validate()
    total = Fraction(1)
    term = Fraction(1)
    for n in range(n_max):
        for a in params.numerator:
            term *= a + n
        for b in params.denominator:
            term /= b + n
        term *= params.argument
        term /= n + 1
        total += term
    return total


@dataclass(frozen=True)
class DougallResult:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def dougall_check(a, b: int, c: int, d: int) -> DougallResult:
    """Both sides of Dougall's 5F4 summation at unit argument.

    lhs = 5F4(a/2+1, a, -b, -c, -d; a/2, a+b+1, a+c+1, a+d+1; 1), summed
    exactly; rhs is the Pochhammer form of the Gamma quotient.  Requires
    a + b + c + d + 1 > 0, a != 0, and non-negative integers b, c, d.
    """
    a = Fraction(a)
    if min(b, c, d) < 0:
        raise ValueError("b, c, d must be non-negative integers")
    if a + b + c + d + 1 <= 0:
        raise ValueError("requires a + b + c + d + 1 > 0")
    if not a:
        raise ValueError("a = 0 puts a zero in the denominator parameters")
    params = HypParams.of(
        numerator=(a / 2 + 1, a, -b, -c, -d),
        denominator=(a / 2, a + b + 1, a + c + 1, a + d + 1),
        argument=1,
    )
    lhs = pfq_terminating(params)
    rhs = (rising(a + 1, b) * rising(a + b + c + 1, d)) / (
        rising(a + c + 1, d) * rising(a + d + 1, b)
    )
    return DougallResult(lhs=lhs, rhs=rhs)
