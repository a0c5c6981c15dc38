"""Eigenvalue polynomials of the Capelli basis, by independent routes.

For each partition lam and parameter k there is a unique symmetric
polynomial f_lam of degree |lam| whose generalized values on all partitions
of size <= |lam| are Kronecker deltas.  Depending on the class of lam it has
a closed form:

* regular:       f_lam = P_lam^k / H_lam(k)                         (route A)
* singular:      f_lam = 4 (l1 - l2 - k - 1) / H'_{lam+}(k) P_{lam+}^k  (route B)
* quasiregular:  f_lam = lim_{kappa->k} (P_lam/H_lam + P_{lam+}/H_{lam+})   (route C)
* quasiregular:  explicit combination of regularized polynomials with
  rational coefficients M_{lam,mu}                                  (route D)

Independently of all of these, the interpolation oracle solves the defining
linear system exactly in the symmetric falling-factorial basis (route
ORACLE).  The oracle rests only on unique solvability, so when a closed form
disagrees it is the closed form that is reported as wrong.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .bipoly import BiPoly, falling_term, square_op
from .knopsahi import (
    eval_point,
    is_integer_parameter,
    ks_poly,
    q_poly,
    r_coeff,
    reg_part,
)
from .partitions import (
    PClass,
    Pair2,
    check_partition,
    classify,
    dagger,
    ell,
    h_poly,
    nu,
    size,
    upto,
)
from .ratfunc import PoleError, RatFunc, UniPoly


class Route(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    ORACLE = "oracle"


@dataclass(frozen=True)
class EigenPoly:
    lam: Pair2
    k: int
    body: BiPoly
    route: Route


class SingularSystemError(ArithmeticError):
    """The interpolation linear system lost rank; contradicts uniqueness."""


# -- exact linear algebra -------------------------------------------------------


def gauss_solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square exact system by Gaussian elimination with pivoting."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


# -- the interpolation oracle -----------------------------------------------------


def sym_falling_basis(d: int) -> tuple[Pair2, ...]:
    """Exponent pairs (a, b), a >= b, a + b <= d, in graded-lex order.

    Pair (a, b) stands for x_(a) y_(b) + x_(b) y_(a) when a > b and for
    x_(a) y_(a) when a = b; falling factorials keep the evaluation matrix
    integral at the shifted integer points.
    """
    return upto(d)


def _basis_poly(a: int, b: int) -> BiPoly:
    if a == b:
        return falling_term(a, a)
    return falling_term(a, b) + falling_term(b, a)


@dataclass(frozen=True)
class _EvSystem:
    basis: tuple[Pair2, ...]
    mus: tuple[Pair2, ...]
    matrix: tuple[tuple[Fraction, ...], ...]


_SYSTEMS: dict[tuple[Fraction, int], _EvSystem] = {}


def _ev_system(k, d: int) -> _EvSystem:
    key = (Fraction(k), d)
    cached = _SYSTEMS.get(key)
    if cached is not None:
        return cached
    basis = sym_falling_basis(d)
    mus = upto(d)
    columns = []
    for a, b in basis:
        g = _basis_poly(a, b)
        sq = square_op(g)
        col = []
        for mu in mus:
            pt = eval_point(mu, k)
            if is_integer_parameter(k) and classify(mu, int(Fraction(k))) is PClass.SINGULAR:
                col.append(sq.eval2(*pt))
            else:
                col.append(g.eval2(*pt))
        columns.append(col)
    matrix = tuple(
        tuple(columns[c][r] for c in range(len(basis))) for r in range(len(mus))
    )
    system = _EvSystem(basis=basis, mus=mus, matrix=matrix)
    _SYSTEMS[key] = system
    return system


def interpolate_ev(values: Mapping[Pair2, Fraction], d: int, k) -> BiPoly:
    """Unique symmetric polynomial of degree <= d with the given generalized
    values on all partitions of size <= d.

    Solves the exact linear system in the symmetric falling basis; a rank
    drop raises ``SingularSystemError`` (it cannot happen legitimately).
    """
    system = _ev_system(k, d)
    rhs = [Fraction(values.get(mu, Fraction(0))) for mu in system.mus]
    coeffs = gauss_solve([list(row) for row in system.matrix], rhs)
    body = BiPoly.zero()
    for c, (a, b) in zip(coeffs, system.basis):
        if c:
            body = body + _basis_poly(a, b).scale(c)
    return body


def eig_oracle(lam: Pair2, k: int) -> EigenPoly:
    """Route ORACLE: solve gen_eval(f, mu) = delta_{lam,mu} directly."""
    check_partition(lam)
    body = interpolate_ev({lam: Fraction(1)}, size(lam), k)
    return EigenPoly(lam=lam, k=k, body=body, route=Route.ORACLE)


# -- closed-form routes ------------------------------------------------------------


def eig_regular(lam: Pair2, k: int) -> EigenPoly:
    """Route A (k-regular lam): P_lam^k scaled by 1 / H_lam(k)."""
    if classify(lam, k) is not PClass.REGULAR:
        raise ValueError(f"{lam} is not {k}-regular; route a requires regular")
    h = Fraction(h_poly(lam)(k))
    if not h:
        raise AssertionError(f"H_{lam}({k}) = 0 on a regular partition")
    body = reg_part(lam, k).scale(1 / h)
    return EigenPoly(lam=lam, k=k, body=body, route=Route.A)


def eig_singular(lam: Pair2, k: int) -> EigenPoly:
    """Route B (k-singular lam): rescaled specialization of P at the dagger."""
    if classify(lam, k) is not PClass.SINGULAR:
        raise ValueError(f"{lam} is not {k}-singular; route b requires singular")
    lamd = dagger(lam, k)
    assert lamd is not None
    scale = Fraction(4 * (lam[0] - lam[1] - k - 1)) / h_poly(lamd).derivative()(k)
    body = reg_part(lamd, k).scale(scale)
    return EigenPoly(lam=lam, k=k, body=body, route=Route.B)


def eig_qreg_limit(lam: Pair2, k: int) -> EigenPoly:
    """Route C (k-quasiregular lam): pole-cancelling limit of the H-normalized
    sum P_lam/H_lam + P_{lam+}/H_{lam+} at kappa = k."""
    if classify(lam, k) is not PClass.QUASIREGULAR:
        raise ValueError(f"{lam} is not {k}-quasiregular; route c requires quasiregular")
    lamd = dagger(lam, k)
    assert lamd is not None
    combined = ks_poly(lam).body.scale(RatFunc(1, h_poly(lam))) + ks_poly(lamd).body.scale(
        RatFunc(1, h_poly(lamd))
    )
    try:
        body = combined.map_coeffs(lambda c: c.eval(k))
    except PoleError as exc:  # the poles must cancel in the sum
        raise AssertionError(f"residual pole in route c for {lam}, k={k}: {exc}") from exc
    return EigenPoly(lam=lam, k=k, body=body, route=Route.C)


def m_coeff(lam: Pair2, mu: Pair2, k: int) -> Fraction:
    """Expansion coefficient M_{lam,mu} of route D.

    For |mu| > 0:

        (-1)^(l+m1+m2) C(m1, m2) (l+m1)!
        --------------------------------------------------,   l = ell(lam)
        (k-l-m1-m2)! l! (l+m2+1)! (l+m1+m2)! m1

    and for mu = (0,0) the harmonic-sum expression
    (-1)^(l+1) / ((k-l)! (l+1)!^2) * (1 - sum_{j=l1-k}^{l1+l-k} (l+1)/j).
    """
    l = ell(lam, k)
    m1, m2 = check_partition(mu)
    if m1 + m2 > k - l:
        raise ValueError(f"{mu} exceeds the admissible size {k - l}")
    if m1 + m2 == 0:
        harm = sum(Fraction(l + 1, j) for j in range(lam[0] - k, lam[0] + l - k + 1))
        return Fraction((-1) ** (l + 1), math.factorial(k - l) * math.factorial(l + 1) ** 2) * (
            1 - harm
        )
    return Fraction(
        (-1) ** (l + m1 + m2) * math.comb(m1, m2) * math.factorial(l + m1),
        math.factorial(k - l - m1 - m2)
        * math.factorial(l)
        * math.factorial(l + m2 + 1)
        * math.factorial(l + m1 + m2)
        * m1,
    )


def eig_qreg_explicit(lam: Pair2, k: int) -> EigenPoly:
    """Route D (k-quasiregular lam): explicit combination in the regularized
    basis,

        f_lam = (l+1)! / ((l1-k-1)! (l1+l-k)!) *
                ( R_{lam+} / (2k+2-l1+l2)!  +  sum_mu M_{lam,mu} R_{nu(lam,mu)} ).
    """
    if classify(lam, k) is not PClass.QUASIREGULAR:
        raise ValueError(f"{lam} is not {k}-quasiregular; route d requires quasiregular")
    l = ell(lam, k)
    l1, l2 = lam
    lamd = dagger(lam, k)
    assert lamd is not None
    pre = Fraction(
        math.factorial(l + 1), math.factorial(l1 - k - 1) * math.factorial(l1 + l - k)
    )
    acc = reg_part(lamd, k).scale(Fraction(1, math.factorial(2 * k + 2 - l1 + l2)))
    for mu in upto(k - l):
        c = m_coeff(lam, mu, k)
        if c:
            acc = acc + reg_part(nu(lam, mu, k), k).scale(c)
    return EigenPoly(lam=lam, k=k, body=acc.scale(pre), route=Route.D)


def qreg_variation_body(lam: Pair2, k: int) -> BiPoly:
    """Fifth, assembly-level expression for the quasiregular case:

        f_lam = ( Q_{lam+} + (beta'(k) - alpha'(k)) / H'_lam(k) * R_lam ) / H_{lam+}(k)

    with alpha(kappa) = -r_{lam+}/(kappa-k) * H_lam(kappa) and
    beta = H_{lam+}.  Built entirely from the depolarization primitives, so
    it cross-checks them against the eigenvalue routes.
    """
    if classify(lam, k) is not PClass.QUASIREGULAR:
        raise ValueError(f"{lam} is not {k}-quasiregular")
    lamd = dagger(lam, k)
    assert lamd is not None
    r = r_coeff(lamd, k)
    alpha = RatFunc(h_poly(lam).scale(-r), UniPoly((-k, 1)))
    beta = RatFunc(h_poly(lamd))
    coeff = (beta.derivative().eval(k) - alpha.derivative().eval(k)) / h_poly(lam).derivative()(k)
    body = q_poly(lamd, k) + reg_part(lam, k).scale(coeff)
    return body.scale(Fraction(1) / h_poly(lamd)(k))


# -- dispatch ---------------------------------------------------------------------


def applicable_routes(lam: Pair2, k: int) -> tuple[Route, ...]:
    cls = classify(lam, k)
    if cls is PClass.REGULAR:
        return (Route.A, Route.ORACLE)
    if cls is PClass.SINGULAR:
        return (Route.B, Route.ORACLE)
    return (Route.C, Route.D, Route.ORACLE)


_ROUTE_FN = {
    Route.A: eig_regular,
    Route.B: eig_singular,
    Route.C: eig_qreg_limit,
    Route.D: eig_qreg_explicit,
    Route.ORACLE: eig_oracle,
}


def eigen(lam: Pair2, k: int, route: Route | None = None) -> EigenPoly:
    """f_lam via the requested route, or the class-appropriate closed form."""
    if route is None:
        route = applicable_routes(lam, k)[0]
    return _ROUTE_FN[route](lam, k)


def restriction_pair(lam: Pair2, mu: Pair2, k: int) -> tuple[Fraction, Fraction]:
    """Jordan pair (semisimple, nilpotent) of the lam-th operator on block mu.

    The semisimple part is f_lam at the shifted point of mu, the nilpotent
    coefficient is square_op(f_lam) there.  Only regular/quasiregular mu
    index a block.
    """
    if classify(mu, k) is PClass.SINGULAR:
        raise ValueError(f"no block exists for {k}-singular {mu}")
    f = eigen(lam, k).body
    pt = eval_point(mu, k)
    return f.eval2(*pt), square_op(f).eval2(*pt)
