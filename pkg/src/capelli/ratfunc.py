"""Exact univariate polynomials and rational functions over the rationals.

Everything in this package is computed over Q or over the rational function
field Q(kappa) in one formal parameter; there is no floating point anywhere.
This module provides the two scalar-level building blocks:

* ``UniPoly``  -- dense univariate polynomial with ``Fraction`` coefficients,
* ``RatFunc``  -- quotient of two ``UniPoly`` kept in a canonical form
  (gcd-reduced, monic denominator), so that structural equality is semantic
  equality.

``RatFunc`` knows about its local behaviour at a rational point: valuation,
simple-pole residue and regular value.  Poles of order two or more are
treated as hard errors (``PoleError``); the objects this package builds are
guaranteed to have simple poles only, so a higher-order pole always signals
a bug upstream.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction

Scalar = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Evaluation or residue extraction hit a pole.

    ``order`` is the pole order at ``point`` (positive integer).
    """

    def __init__(self, point: Fraction, order: int, message: str | None = None):
        self.point = point
        self.order = order
        super().__init__(message or f"pole of order {order} at {point}")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Univariate polynomial over Q, coefficients stored lowest degree first.

    The zero polynomial is the empty tuple; otherwise the trailing
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def product(cls, factors: Iterable["UniPoly"]) -> "UniPoly":
        out = cls.one()
        for f in factors:
            out = out * f
        return out

    @classmethod
    def falling(cls, base: "UniPoly", steps: int) -> "UniPoly":
        """base * (base - 1) * ... * (base - steps + 1); empty product is 1."""
        out = cls.one()
        for t in range(steps):
            out = out * (base - cls.const(t))
        return out

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1 by convention."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "UniPoly | Scalar") -> "UniPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly | Scalar") -> "UniPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "UniPoly | Scalar") -> "UniPoly":
        return _as_poly(other) - self

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = UniPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Scalar) -> "UniPoly":
        c = Fraction(c)
        return UniPoly([a * c for a in self.coeffs])

    # -- division ------------------------------------------------------

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.leading()
        dn = len(other.coeffs)
        while len(rem) >= dn and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) < dn:
                break
            q = rem[-1] / dlead
            shift = len(rem) - dn
            quot[shift] = q
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= q * b
            rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd via the Euclidean algorithm (gcd(0, 0) = 0)."""
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic() if a else a

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading()
        return self if lead == 1 else self.scale(Fraction(1) / lead)

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, a: Scalar) -> Fraction:
        a = Fraction(a)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Substitute ``inner`` for the variable."""
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c)
        return acc

    def multiplicity(self, a: Scalar) -> int:
        """Order of vanishing at the point ``a`` (0 if p(a) != 0)."""
        if not self.coeffs:
            raise ValueError("multiplicity undefined for the zero polynomial")
        a = Fraction(a)
        m, p = 0, self
        factor = UniPoly((-a, 1))
        while not p(a):
            p = p.divexact(factor)
            m += 1
        return m

    # -- protocol -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render_unipoly(self)


def _as_poly(v: "UniPoly | Scalar") -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UniPoly.const(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to UniPoly")


class RatFunc:
    """Quotient of two ``UniPoly`` in canonical form.

    Canonical form: numerator and denominator coprime, denominator monic,
    zero represented as 0/1.  All arithmetic re-normalizes, so ``==`` on the
    stored pair decides equality in Q(kappa); this is the workhorse identity
    check for the whole package.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: "UniPoly | Scalar", den: "UniPoly | Scalar" = 1):
        num, den = _as_poly(num), _as_poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = UniPoly.one()
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.divexact(g), den.divexact(g)
            lead = den.leading()
            if lead != 1:
                inv = Fraction(1) / lead
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RatFunc is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls(UniPoly.const(c))

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(UniPoly.zero())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(UniPoly.one())

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(UniPoly.x())

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def as_constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0]

    # -- field operations ----------------------------------------------------

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(self.den**(-n), self.num**(-n))
        return RatFunc(self.num**n, self.den**n)

    # -- local analysis at a point ---------------------------------------------

    def eval(self, a: Scalar) -> Fraction:
        """Exact value at ``a``; raises ``PoleError`` (with the order) at a pole."""
        a = Fraction(a)
        d = self.den(a)
        if d:
            return self.num(a) / d
        raise PoleError(a, self.den.multiplicity(a))

    def valuation(self, a: Scalar) -> int:
        """Order of vanishing at ``a``; negative values are pole orders."""
        if not self:
            raise ValueError("valuation of the zero function is undefined")
        a = Fraction(a)
        # canonical form: at most one of num, den vanishes at a
        m = self.den.multiplicity(a)
        if m:
            return -m
        return self.num.multiplicity(a)

    def residue(self, a: Scalar) -> Fraction:
        """lim (x - a) * f; zero when f is regular at ``a``.

        Requires the pole (if any) to be simple; a double pole raises.
        """
        a = Fraction(a)
        if not self:
            return Fraction(0)
        v = self.valuation(a)
        if v >= 0:
            return Fraction(0)
        if v < -1:
            raise PoleError(a, -v)
        reduced = self.den.divexact(UniPoly((-a, 1)))
        return self.num(a) / reduced(a)

    def regular_value(self, a: Scalar) -> Fraction:
        """lim (f - residue/(x - a)); plain evaluation at regular points."""
        a = Fraction(a)
        if not self:
            return Fraction(0)
        v = self.valuation(a)
        if v >= 0:
            return self.eval(a)
        if v < -1:
            raise PoleError(a, -v)
        res = self.residue(a)
        return (self - RatFunc(UniPoly.const(res), UniPoly((-a, 1)))).eval(a)

    # -- calculus and substitution ---------------------------------------------

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def substitute(self, inner: UniPoly) -> "RatFunc":
        """Substitute the polynomial ``inner`` for the variable."""
        den = self.den.compose(inner)
        if not den:
            raise ZeroDivisionError("substitution annihilates the denominator")
        return RatFunc(self.num.compose(inner), den)

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return render_ratfunc(self)


def _as_ratfunc(v) -> "RatFunc":
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction, UniPoly)):
        return RatFunc(_as_poly(v))
    return NotImplemented


# -- rendering -----------------------------------------------------------------
#
# Deterministic plain-text forms used by the CLI and by reports: descending
# powers, no whitespace inside a polynomial, rationals always as p or p/q.


def render_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_unipoly(p: UniPoly, var: str = "κ") -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for i in range(p.degree(), -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if not mono:
            body = render_frac(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = render_frac(abs(c)) + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


def _paren(s: str) -> str:
    return s if s.isalnum() else f"({s})"


def render_ratfunc(f: RatFunc, var: str = "κ") -> str:
    num = render_unipoly(f.num, var)
    if f.den.degree() == 0:
        return num
    den = render_unipoly(f.den, var)
    num_s = num if ("+" not in num[1:] and "-" not in num[1:]) else f"({num})"
    den_s = den if ("+" not in den[1:] and "-" not in den[1:] and "/" not in den) else f"({den})"
    return f"{num_s}/{den_s}"
