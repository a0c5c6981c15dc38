"""Exact verification of the falling-factorial derivative identity and the
two-variable chain that reduces it to Dougall's summation.

The headline identity expresses

    d/dx ( x_(N-i) x_(N-j) / x_(N) )

as an explicit double sum of rational functions; it is checked here as an
equality of canonical rational functions, no sampling involved.  The
supporting chain (psi_L, psi_R, psi_1, psi_2, F(s), H(s)) lives in two
variables; those identities are verified by exact evaluation on
deterministic tensor grids whose sizes exceed the degree bounds obtained by
clearing the (explicit, y-only or small) denominators, which suffices for a
polynomial identity.

Empty products are 1 and empty sums are 0 throughout; these conventions are
load-bearing at the q = 0, j = 0 and s = 0 boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hypergeom import HypParams, falling, pfq_terminating
from .ratfunc import RatFunc, UniPoly, render_frac, render_ratfunc

X = UniPoly.x()


@dataclass(frozen=True)
class Witness:
    point: str
    lhs: str
    rhs: str


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: tuple[tuple[str, object], ...]
    status: str  # "pass" or "fail"
    witness: Witness | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("failing report requires a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _report(name: str, params, ok: bool, witness: Witness | None = None) -> IdentityReport:
    return IdentityReport(
        name=name,
        params=tuple(params),
        status="pass" if ok else "fail",
        witness=None if ok else witness,
    )


# -- the derivative identity, in canonical rational-function form -------------------


def _falling_x(m: int) -> UniPoly:
    return UniPoly.falling(X, m)


def lhs_derivative_identity(i: int, j: int, n: int) -> RatFunc:
    """d/dx of x_(N-i) x_(N-j) / x_(N), canonical in Q(x)."""
    _check_ijn(i, j, n)
    return RatFunc(_falling_x(n - i) * _falling_x(n - j), _falling_x(n)).derivative()


def rhs_derivative_identity(i: int, j: int, n: int) -> RatFunc:
    """The double sum over (q, p); terms with q > min(i, j) vanish because of
    the i_(q) j_(q) prefactor and are skipped before any falling factorial
    with a negative step could be formed."""
    _check_ijn(i, j, n)
    total = RatFunc.zero()
    for q in range(0, j + 1):
        if q > i:
            continue
        for p in range(i + j - q, min(n - q, n - 1) + 1):
            const = (
                Fraction((-1) ** (n + p + q + 1))
                * falling(n - p, q)
                * falling(i, q)
                * falling(j, q)
                * falling(n - i - j, n - p - q)
            )
            if not const:
                continue
            num = (_falling_x(p - i) * _falling_x(p - j) * UniPoly((-(p - q), 1))).scale(const)
            den = (_falling_x(p + 1) * UniPoly.falling(X - (n - q), q)).scale(
                (n - p) * math.factorial(q)
            )
            total = total + RatFunc(num, den)
    return total


def _check_ijn(i: int, j: int, n: int) -> None:
    if min(i, j, n) < 0 or i + j > n:
        raise ValueError(f"need 0 <= i, j and i + j <= N; got ({i}, {j}, {n})")


def derivative_identity_check(i: int, j: int, n: int) -> IdentityReport:
    lhs = lhs_derivative_identity(i, j, n)
    rhs = rhs_derivative_identity(i, j, n)
    return _report(
        "derivative-identity",
        (("i", i), ("j", j), ("N", n)),
        lhs == rhs,
        Witness(point="-", lhs=render_ratfunc(lhs, "x"), rhs=render_ratfunc(rhs, "x")),
    )


def verify_derivative_identity(n_max: int) -> list[IdentityReport]:
    """All triples 0 <= i + j <= N <= n_max, in deterministic order."""
    out = []
    for n in range(n_max + 1):
        for i in range(n + 1):
            for j in range(n + 1 - i):
                out.append(derivative_identity_check(i, j, n))
    return out


def logderiv_check(n: int) -> IdentityReport:
    """d/dx x_(N) = sum_{t=1}^{N} (-1)^(t+1)/t * N_(t) x_(N-t), as polynomials."""
    lhs = _falling_x(n).derivative()
    rhs = UniPoly.zero()
    for t in range(1, n + 1):
        rhs = rhs + _falling_x(n - t).scale(Fraction((-1) ** (t + 1), t) * falling(n, t))
    return _report(
        "falling-log-derivative",
        (("N", n),),
        lhs == rhs,
        Witness(point="-", lhs=render_ratfunc(RatFunc(lhs), "x"), rhs=render_ratfunc(RatFunc(rhs), "x")),
    )


# -- the two-variable chain -----------------------------------------------------------


class SamplePoleError(ArithmeticError):
    """A sample point hit a vanishing factor; carries the factor description."""

    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"sample point lies on a pole of {factor}")


def _nonzero(value: Fraction, factor: str) -> Fraction:
    if not value:
        raise SamplePoleError(factor)
    return value


def e_term(q: int, r: int, x: Fraction, y: Fraction, d: int, j: int) -> Fraction:
    """One summand E(q, r) of psi_1 at an exact point."""
    num = (
        Fraction((-1) ** (r + q + 1))
        * falling(r, q)
        * falling(x - y - d, q)
        * falling(j, q)
        * falling(d - j, r - q)
        * falling(x, d - r)
        * (y + r + q)
        * falling(y + r - 1, r - q)
    )
    den = (
        r
        * math.factorial(q)
        * _nonzero(falling(y + r + j, j + r), f"(y+{r}+{j})_({j + r})")
        * _nonzero(y + q, f"y+{q}")
    )
    return num / den


def psi1(x: Fraction, y: Fraction, d: int, j: int) -> Fraction:
    total = Fraction(0)
    for q in range(0, j + 1):
        for r in range(max(1, q), d - j + q + 1):
            total += e_term(q, r, x, y, d, j)
    return total


def psi2(x: Fraction, y: Fraction, d: int, j: int) -> Fraction:
    """Leibniz expansion of d/dx psi_L with the pole variable renamed to y."""
    prod = Fraction(1)
    for t in range(1, j + 1):
        prod *= _nonzero(y + t, f"y+{t}")
    harm = sum(Fraction(1) / (y + t) for t in range(1, j + 1))
    dfall = _falling_x(d).derivative()
    return -falling(x, d) / prod * harm + Fraction(dfall(x)) / prod


def psi_l(n: int, d: int, j: int) -> RatFunc:
    """x_(d) / ((x-N+1) ... (x-N+j)) as a rational function of x."""
    return RatFunc(_falling_x(d), UniPoly.product(UniPoly((t - n, 1)) for t in range(1, j + 1)))


def chain_bound(i: int, j: int, n: int) -> int:
    """Degree bound for the psi_1 = psi_2 comparison.

    After clearing the y-only denominators, both sides are polynomials with
    deg_x <= d and deg_y <= 2(d + j + 1); the bound is the max of the two
    plus margin, and a (bound+1) x (bound+1) tensor grid of exact equalities
    then settles the identity.
    """
    d = n - i
    return max(d + 2, 2 * (d + j + 2))


def chain_grid(i: int, j: int, n: int) -> list[tuple[Fraction, Fraction]]:
    """Deterministic tensor grid: x runs over integers above N (clear of
    every x_(p+1) factor); y runs over thirds, never an integer, so no
    y + c factor vanishes."""
    bound = chain_bound(i, j, n)
    xs = [Fraction(n + 1 + u) for u in range(bound + 1)]
    ys = [Fraction(1, 3) + v for v in range(bound + 1)]
    return [(xv, yv) for xv in xs for yv in ys]


def psi_chain_check(
    i: int, j: int, n: int, sample_points: Sequence[tuple[Fraction, Fraction]] | None = None
) -> IdentityReport:
    """The full chain at exact sample points:

    psi_1 = psi_2 on the two-variable grid, and on the diagonal y = x - N,
    psi_R(x) = psi_1(x, x-N) and d/dx psi_L(x) = psi_2(x, x-N).
    """
    _check_ijn(i, j, n)
    d = n - i
    if sample_points is None:
        pts = chain_grid(i, j, n)
        params = (("i", i), ("j", j), ("N", n), ("points", len(pts)),
                  ("degree_bound", chain_bound(i, j, n)))
    else:
        pts = list(sample_points)
        params = (("i", i), ("j", j), ("N", n), ("points", len(pts)))
    for x, y in pts:
        a, b = psi1(x, y, d, j), psi2(x, y, d, j)
        if a != b:
            return _report(
                "psi-chain", params, False,
                Witness(point=f"({render_frac(x)},{render_frac(y)})", lhs=render_frac(a), rhs=render_frac(b)),
            )
    psi_r = rhs_derivative_identity(i, j, n)
    dpsi_l = psi_l(n, d, j).derivative()
    for x in sorted({x for x, _ in pts}):
        y = x - n
        lhs_r, on_diag = psi_r.eval(x), psi1(x, y, d, j)
        if lhs_r != on_diag:
            return _report(
                "psi-chain", params, False,
                Witness(point=f"x={render_frac(x)}", lhs=render_frac(lhs_r), rhs=render_frac(on_diag)),
            )
        lhs_d, rhs_d = dpsi_l.eval(x), psi2(x, y, d, j)
        if lhs_d != rhs_d:
            return _report(
                "psi-chain", params, False,
                Witness(point=f"x={render_frac(x)}", lhs=render_frac(lhs_d), rhs=render_frac(rhs_d)),
            )
    return _report("psi-chain", params, True)


# -- F(s) and H(s) ---------------------------------------------------------------------


def f_sum(s: int, j: int, l: int, x: Fraction, y: Fraction) -> Fraction:
    """Defining sum for F(s); the q = 0 term exists only for s >= 1."""
    total = Fraction(0)
    for q in range(1 if s == 0 else 0, j + 1):
        total += (
            (y + 2 * q + s)
            * math.comb(j, q)
            * math.comb(l, s)
            * Fraction(math.factorial(q + s - 1), math.factorial(j + l))
            * falling(y + j, j - q)
            / _nonzero(falling(y + q + s + j, j + 1), f"(y+{q + s + j})_({j + 1})")
            * falling(x - y, q)
            * falling(x + j + l, j + l - q - s)
        )
    return total


def f_closed(s: int, j: int, l: int, x: Fraction, y: Fraction) -> Fraction:
    """Closed forms: a falling-factorial quotient for 1 <= s <= l, a harmonic
    difference times x_(j+l)-type product for s = 0."""
    if s >= 1:
        return (
            falling(x + j + l, l - s)
            * falling(x + j, j)
            / (s * math.factorial(l - s) * _nonzero(falling(j + l, j), f"({j + l})_({j})"))
        )
    harm = sum(
        Fraction(1) / _nonzero(y + t, f"y+{t}") - Fraction(1) / _nonzero(x + t, f"x+{t}")
        for t in range(1, j + 1)
    )
    return falling(x + j + l, j + l) / math.factorial(j + l) * harm


def f_grid(j: int, l: int) -> tuple[list[Fraction], list[Fraction]]:
    """Pole-free samples with x - y - j > 0; sizes exceed the cleared degree
    bounds (x-degree <= j + l, y-degree <= 3j + 4 with margin)."""
    bx = j + l + 3
    by = 3 * j + 6
    ys = [Fraction(1, 3) + v for v in range(by + 1)]
    x0 = int(max(ys)) + j + 2
    xs = [Fraction(x0 + u) for u in range(bx + 1)]
    return xs, ys


def f_closed_form_check(
    j: int, l: int, sample_x: Sequence[Fraction] | None = None, sample_y: Sequence[Fraction] | None = None
) -> IdentityReport:
    """Defining sum vs closed form for every integer s in [0, l]."""
    if j < 0 or l < 0:
        raise ValueError("j and l must be non-negative")
    gx, gy = f_grid(j, l)
    xs = list(sample_x) if sample_x is not None else gx
    ys = list(sample_y) if sample_y is not None else gy
    params = (("j", j), ("l", l), ("points", len(xs) * len(ys)))
    for s in range(0, l + 1):
        for x in xs:
            for y in ys:
                a, b = f_sum(s, j, l, x, y), f_closed(s, j, l, x, y)
                if a != b:
                    return _report(
                        "f-closed-form", params, False,
                        Witness(
                            point=f"s={s},({render_frac(x)},{render_frac(y)})",
                            lhs=render_frac(a),
                            rhs=render_frac(b),
                        ),
                    )
    return _report("f-closed-form", params, True)


def e1_term(q: int, s: int, x: Fraction, y: Fraction, j: int) -> Fraction:
    return (
        Fraction(math.factorial(q + s - 1), math.factorial(s))
        * math.comb(j, q)
        * (y + 2 * q + s)
        * falling(y + j, j - q)
        / _nonzero(falling(y + q + s + j, j + 1), f"(y+{q + s + j})_({j + 1})")
        * falling(x - y, q)
        * falling(x + j + s, s)
        / _nonzero(falling(x + q + s, q + s), f"(x+{q + s})_({q + s})")
    )


def h_sum(s: int, j: int, x: Fraction, y: Fraction) -> Fraction:
    return sum(e1_term(q, s, x, y, j) for q in range(1 if s == 0 else 0, j + 1))


def h_hypergeometric(s: int, j: int, x: Fraction, y: Fraction) -> Fraction:
    """H(s) through its very-well-poised 5F4 representation (s >= 1); only
    the first j + 1 terms of the series are nonzero."""
    if s < 1:
        raise ValueError("the 5F4 form is used for s >= 1")
    params = HypParams.of(
        numerator=(y / 2 + Fraction(s, 2) + 1, y + s, -j, s, y - x),
        denominator=(y / 2 + Fraction(s, 2), y + s + j + 1, y + 1, x + s + 1),
        argument=1,
    )
    return e1_term(0, s, x, y, j) * pfq_terminating(params)


def h_function_check(j: int, s: int, x: Fraction, y: Fraction) -> IdentityReport:
    """H(s) = 1/s for integer s >= 1 (also matching the 5F4 route), and
    H(0) = sum 1/(y+t) - sum 1/(x+t); requires x, y, x - y - j > 0."""
    x, y = Fraction(x), Fraction(y)
    if not (x > 0 and y > 0 and x - y - j > 0):
        raise ValueError("need x > 0, y > 0 and x - y - j > 0")
    params = (("j", j), ("s", s), ("x", render_frac(x)), ("y", render_frac(y)))
    got = h_sum(s, j, x, y)
    if s >= 1:
        expected = Fraction(1, s)
        via_5f4 = h_hypergeometric(s, j, x, y)
        ok = got == expected == via_5f4
        return _report(
            "h-function", params, ok,
            Witness(point=f"s={s}", lhs=render_frac(got), rhs=f"{render_frac(expected)} (5F4: {render_frac(via_5f4)})"),
        )
    expected = sum(Fraction(1) / (y + t) for t in range(1, j + 1)) - sum(
        Fraction(1) / (x + t) for t in range(1, j + 1)
    )
    return _report(
        "h-function", params, got == expected,
        Witness(point="s=0", lhs=render_frac(got), rhs=render_frac(expected)),
    )
