"""Sparse bivariate polynomials over a generic exact coefficient field.

Coefficients may be ``Fraction`` or ``RatFunc`` (anything with exact ring
arithmetic and a truthiness test for zero).  The canonical internal form is
the ordinary monomial basis; the falling-factorial basis

    x_(m) = x (x-1) ... (x-m+1)

exists only at construction / extraction boundaries, where its triangularity
against the monomial basis makes both directions cheap and exact.

The module also houses the first-order symmetry operator

    sq(f) = (df/dx - df/dy) / (4 (x - y)),

computed by exact polynomial division: for symmetric ``f`` the numerator is
antisymmetric, hence exactly divisible by ``x - y``.  A nonzero remainder is
an internal error, never truncated away.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Tuple

from .ratfunc import RatFunc, render_frac, render_ratfunc

Key = Tuple[int, int]


class BiPoly:
    """Sparse polynomial in x, y; ``terms`` maps (i, j) to nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, object] | Iterable[tuple[Key, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent pair ({i}, {j})")
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("BiPoly is immutable")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def term(cls, c, i: int, j: int) -> "BiPoly":
        return cls({(i, j): c})

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Maximum of i + j over stored terms; -1 for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    def is_symmetric(self) -> bool:
        for (i, j), c in self.terms.items():
            if i != j and self.terms.get((j, i)) != c:
                return False
        return True

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[Key, object] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                p = c1 * c2
                s = out.get(k)
                s = p if s is None else s + p
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return BiPoly(out)

    def scale(self, c) -> "BiPoly":
        if not c:
            return BiPoly.zero()
        return BiPoly({k: v * c for k, v in self.terms.items()})

    # -- calculus -------------------------------------------------------------

    def partials(self) -> tuple["BiPoly", "BiPoly"]:
        """Exact pair (df/dx, df/dy)."""
        fx: dict[Key, object] = {}
        fy: dict[Key, object] = {}
        for (i, j), c in self.terms.items():
            if i:
                fx[(i - 1, j)] = c * i
            if j:
                fy[(i, j - 1)] = c * j
        return BiPoly(fx), BiPoly(fy)

    # -- evaluation ----------------------------------------------------------

    def eval2(self, a, b):
        """Exact substitution x = a, y = b (arguments in any exact ring)."""
        if not self.terms:
            return Fraction(0)
        imax = max(i for i, _ in self.terms)
        jmax = max(j for _, j in self.terms)
        apow = _powers(a, imax)
        bpow = _powers(b, jmax)
        acc = None
        for (i, j), c in self.terms.items():
            t = c * apow[i] * bpow[j]
            acc = t if acc is None else acc + t
        return acc

    def map_coeffs(self, transform: Callable) -> "BiPoly":
        """Apply ``transform`` to every coefficient, dropping resulting zeros."""
        return BiPoly({k: transform(c) for k, c in self.terms.items()})

    # -- protocol --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset((k, _hashable(c)) for k, c in self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"

    def __str__(self) -> str:
        return render_bipoly(self)


def _hashable(c):
    return c


def _powers(a, n: int) -> list:
    out = [Fraction(1)]
    for _ in range(n):
        out.append(out[-1] * a)
    return out


# -- falling-factorial basis ---------------------------------------------------


@lru_cache(maxsize=None)
def falling_coeffs(m: int) -> tuple[Fraction, ...]:
    """Monomial coefficients of x_(m), lowest degree first.

    These are the signed Stirling numbers of the first kind; computed by the
    product recurrence x_(m) = x_(m-1) * (x - m + 1).
    """
    if m < 0:
        raise ValueError("falling factorial needs a non-negative exponent")
    coeffs = [Fraction(1)]
    for t in range(m):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * t
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def falling_term(m: int, n: int) -> BiPoly:
    """x_(m) * y_(n) expanded into the monomial basis (unit coefficient)."""
    xs = falling_coeffs(m)
    ys = falling_coeffs(n)
    out = {}
    for i, a in enumerate(xs):
        if not a:
            continue
        for j, b in enumerate(ys):
            if b:
                out[(i, j)] = a * b
    return BiPoly(out)


def from_falling(terms: Iterable[tuple[object, int, int]]) -> BiPoly:
    """Sum of coeff * x_(m) * y_(n) terms, in canonical monomial form."""
    acc = BiPoly.zero()
    for coeff, m, n in terms:
        if coeff:
            acc = acc + falling_term(m, n).scale(coeff)
    return acc


def falling_expansion(f: BiPoly) -> dict[Key, object]:
    """Coefficients of ``f`` in the (unique) falling-factorial basis.

    Peels from the top: x_(m) y_(n) = x^m y^n + componentwise-smaller
    monomials, so repeatedly removing the currently largest monomial
    terminates and is exact.
    """
    out: dict[Key, object] = {}
    rem = f
    while rem.terms:
        m, n = max(rem.terms, key=lambda k: (k[0] + k[1], k[0]))
        c = rem.terms[(m, n)]
        out[(m, n)] = c
        rem = rem - falling_term(m, n).scale(c)
    return out


def to_falling_coeff(f: BiPoly, m: int, n: int):
    """Single coefficient of x_(m) y_(n) in the falling-basis expansion."""
    return falling_expansion(f).get((m, n), Fraction(0))


# -- the symmetry operator ----------------------------------------------------


def divide_x_minus_y(g: BiPoly) -> BiPoly:
    """Exact quotient g / (x - y); raises if the division leaves a remainder."""
    quot: dict[Key, object] = {}
    rem = dict(g.terms)

    def _sub(k: Key, c) -> None:
        s = rem.get(k)
        s = -c if s is None else s - c
        if s:
            rem[k] = s
        elif k in rem:
            del rem[k]

    while rem:
        i, j = max(rem, key=lambda k: (k[0], k[1]))
        if i == 0:
            raise ArithmeticError("polynomial is not divisible by x - y")
        c = rem[(i, j)]
        quot[(i - 1, j)] = quot.get((i - 1, j), Fraction(0)) + c
        # subtract c * (x - y) * x^(i-1) y^j
        _sub((i, j), c)
        _sub((i - 1, j + 1), -c)
    return BiPoly(quot)


def square_op(f: BiPoly) -> BiPoly:
    """(df/dx - df/dy) / (4 (x - y)) for symmetric ``f``.

    The divisibility is exact for symmetric input; asserting it doubles as a
    free correctness check on the caller.
    """
    if not f.is_symmetric():
        raise ValueError("square_op requires a symmetric polynomial")
    fx, fy = f.partials()
    quot = divide_x_minus_y(fx - fy)
    return quot.map_coeffs(lambda c: c * Fraction(1, 4))


# -- rendering ------------------------------------------------------------------


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return render_frac(c)
    if isinstance(c, RatFunc):
        return render_ratfunc(c)
    return str(c)


def _is_atom(s: str) -> bool:
    if s.startswith("-"):
        return False
    return all(ch not in s for ch in "+-/ ")


def render_bipoly(f: BiPoly, falling: bool = False) -> str:
    """Deterministic graded-lex rendering, e.g. ``x^2y + 2xy - (1/2)x``."""
    if falling:
        terms = falling_expansion(f)
        fmt = lambda v, e: f"{v}_({e})"
    else:
        terms = f.terms
        fmt = lambda v, e: v if e == 1 else f"{v}^{e}"
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
    parts: list[str] = []
    for i, j in keys:
        c = terms[(i, j)]
        mono = (fmt("x", i) if i else "") + (fmt("y", j) if j else "")
        s = _coeff_str(c)
        # strip a leading minus only when the rest is a single term
        neg = s.startswith("-") and "+" not in s[1:] and "-" not in s[1:]
        if neg:
            s = s[1:]
        if mono:
            if s == "1":
                body = mono
            else:
                body = (s if _is_atom(s) else f"({s})") + mono
        else:
            body = s if _is_atom(s) else f"({s})"
        if not parts:
            parts.append(body if not neg else "-" + body)
        else:
            parts.append(f" {'-' if neg else '+'} {body}")
    return "".join(parts)
