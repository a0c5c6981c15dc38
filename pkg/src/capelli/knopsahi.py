"""Two-variable Knop-Sahi interpolation polynomials over Q(kappa).

For a partition lam = (l1, l2) with r = l1 - l2, the polynomial is the
explicit double sum

    P_lam(x, y) = sum_{i+j <= r}  r! (kappa+1)_(r-i) (kappa+1)_(r-j)
                  ------------------------------------------------  x_(l2+i) y_(l2+j)
                    i! j! (r-i-j)! (kappa+1)_(r)

in the falling-factorial basis, with coefficients in Q(kappa).  It is the
unique symmetric polynomial of degree <= |lam| that vanishes at the shifted
points (m1 - kappa - 1, m2) for every other partition mu = (m1, m2) of size
<= |lam| and takes the value H_lam(kappa) at lam itself.

Some coefficients have simple poles at non-negative integers kappa = k,
exactly when lam is k-singular.  This module extracts the residue and
finite part coefficient-wise (``sing_part`` / ``reg_part``), computes the
residue scale r_lam by two independent formulas, builds the depolarized
polynomial Q_lam by two independent routes, and provides the generalized
evaluation functional used to characterize eigenvalue polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bipoly import BiPoly, falling_expansion, from_falling, square_op
from .partitions import PClass, Pair2, check_partition, classify, dagger, h_poly, size, upto
from .ratfunc import PoleError, RatFunc, UniPoly

KAPPA = UniPoly.x()


@dataclass(frozen=True)
class KsPoly:
    """One interpolation polynomial: falling-basis terms plus monomial form.

    ``cleared`` stores (numerator, m, n) with the shared denominator ``den``
    = (kappa+1)_(r); coefficient (m, n) is ``numerator / den`` in lowest
    terms.  Keeping the cleared form makes evaluation at shifted points a
    single rational-function normalization instead of one per term.
    """

    lam: Pair2
    den: UniPoly
    cleared: tuple[tuple[UniPoly, int, int], ...]
    body: BiPoly

    def falling_terms(self) -> tuple[tuple[RatFunc, int, int], ...]:
        return tuple((RatFunc(num, self.den), m, n) for num, m, n in self.cleared)

    def coeff(self, m: int, n: int) -> RatFunc:
        for num, mm, nn in self.cleared:
            if (mm, nn) == (m, n):
                return RatFunc(num, self.den)
        return RatFunc.zero()


@lru_cache(maxsize=None)
def ks_poly(lam: Pair2) -> KsPoly:
    """Construct P_lam by expanding the defining double sum."""
    l1, l2 = check_partition(lam)
    r = l1 - l2
    den = UniPoly.falling(KAPPA + 1, r)
    cleared: list[tuple[UniPoly, int, int]] = []
    for i in range(r + 1):
        for j in range(r + 1 - i):
            scale = Fraction(
                math.factorial(r),
                math.factorial(i) * math.factorial(j) * math.factorial(r - i - j),
            )
            num = (
                UniPoly.falling(KAPPA + 1, r - i)
                * UniPoly.falling(KAPPA + 1, r - j)
            ).scale(scale)
            cleared.append((num, l2 + i, l2 + j))
    body = from_falling((RatFunc(num, den), m, n) for num, m, n in cleared)
    return KsPoly(lam=lam, den=den, cleared=tuple(cleared), body=body)


def shifted_eval(lam: Pair2, mu: Pair2) -> RatFunc:
    """P_lam(m1 - kappa - 1, m2) as an element of Q(kappa).

    The x-argument is linear in kappa and the y-argument is the integer m2,
    so each falling factorial is a small polynomial product; everything is
    accumulated over the shared denominator and normalized once.
    """
    p = ks_poly(lam)
    m1, m2 = check_partition(mu)
    xarg = UniPoly((m1 - 1, -1))
    # falling powers of the x-argument, built incrementally
    max_m = max(m for _, m, _ in p.cleared)
    xfall = [UniPoly.one()]
    for t in range(max_m):
        xfall.append(xfall[-1] * (xarg - t))
    acc = UniPoly.zero()
    for num, m, n in p.cleared:
        yv = _falling_int(m2, n)
        if not yv:
            continue
        acc = acc + (num * xfall[m]).scale(yv)
    return RatFunc(acc, p.den)


def _falling_int(a: int, n: int) -> Fraction:
    out = Fraction(1)
    for t in range(n):
        out *= a - t
        if not out:
            break
    return out


def characterization_holds(lam: Pair2) -> bool:
    """Vanishing at all other shifted points of size <= |lam|, value H_lam at lam."""
    target_h = RatFunc(h_poly(lam))
    for mu in upto(size(lam)):
        val = shifted_eval(lam, mu)
        if mu == lam:
            if val != target_h:
                return False
        elif val:
            return False
    return True


# -- pole structure ----------------------------------------------------------------


def ks_pole_set(lam: Pair2, k_max: int) -> set[int]:
    """Integer points k <= k_max where some coefficient has a pole.

    Every pole must be simple and must occur exactly when lam is k-singular;
    both facts are asserted here rather than trusted.
    """
    p = ks_poly(lam)
    poles: set[int] = set()
    for num, m, n in p.cleared:
        f = RatFunc(num, p.den)
        if not f:
            continue
        for k0 in range(k_max + 1):
            mult = f.den.multiplicity(k0)
            if mult > 1:
                raise PoleError(Fraction(k0), mult, f"coefficient at ({m},{n}) has a pole of order {mult}")
            if mult == 1:
                poles.add(k0)
    expected = {k0 for k0 in range(k_max + 1) if classify(lam, k0) is PClass.SINGULAR}
    if poles != expected:
        raise AssertionError(
            f"pole set {sorted(poles)} of P_{lam} differs from singular set {sorted(expected)}"
        )
    return poles


def sing_part(lam: Pair2, k: int) -> BiPoly:
    """Coefficient-wise residue at kappa = k (zero unless lam is k-singular)."""
    return ks_poly(lam).body.map_coeffs(lambda c: c.residue(k))


def reg_part(lam: Pair2, k: int) -> BiPoly:
    """Coefficient-wise finite part at kappa = k.

    Equals the plain specialization P_lam^k whenever lam is not k-singular.
    """
    return ks_poly(lam).body.map_coeffs(lambda c: c.regular_value(k))


def r_coeff(lam: Pair2, k: int) -> Fraction:
    """Residue scale r_lam for k-singular lam.

    Computed both as -H_lam(k) / H'_{lam+}(k) and by the closed product
    formula; the two must agree exactly.
    """
    if classify(lam, k) is not PClass.SINGULAR:
        raise ValueError(f"{lam} is not {k}-singular")
    lamd = dagger(lam, k)
    assert lamd is not None
    via_h = -Fraction(h_poly(lam)(k)) / h_poly(lamd).derivative()(k)
    l1, l2 = lam
    diff = l1 - l2
    closed = Fraction(
        (-1) ** (k + l1 + l2) * math.prod(range(diff - k, diff + 1)),
        math.factorial(2 * k + 2 - diff) * math.factorial(diff - k - 2),
    )
    if via_h != closed:
        raise AssertionError(f"r_{lam} mismatch: {via_h} vs {closed}")
    return via_h


def q_poly(lam: Pair2, k: int) -> BiPoly:
    """Depolarized polynomial Q_lam for k-singular lam, by two routes.

    Route 1: finite part of P_lam minus r_lam times the kappa-derivative of
    P_{lam+} at k.  Route 2: coefficient-wise limit of
    P_lam - r_lam/(kappa-k) * P_{lam+}.  Exact agreement is asserted.
    """
    if classify(lam, k) is not PClass.SINGULAR:
        raise ValueError(f"{lam} is not {k}-singular")
    lamd = dagger(lam, k)
    assert lamd is not None
    r = r_coeff(lam, k)

    dual_body = ks_poly(lamd).body
    route1 = reg_part(lam, k) - dual_body.map_coeffs(lambda c: c.derivative().eval(k)).scale(r)

    pole = RatFunc(UniPoly.const(r), UniPoly((-k, 1)))
    combo = ks_poly(lam).body - dual_body.scale(pole)
    route2 = combo.map_coeffs(lambda c: c.eval(k))

    if route1 != route2:
        raise AssertionError(f"Q_{lam} routes disagree at k={k}")
    return route1


# -- generalized evaluation ---------------------------------------------------------


def eval_point(mu: Pair2, k) -> tuple[Fraction, Fraction]:
    """The shifted evaluation point (m1 - k - 1, m2)."""
    m1, m2 = check_partition(mu)
    return (Fraction(m1) - Fraction(k) - 1, Fraction(m2))


def is_integer_parameter(k) -> bool:
    k = Fraction(k)
    return k.denominator == 1 and k >= 0


def gen_eval(f: BiPoly, mu: Pair2, k) -> Fraction:
    """Generalized value of a symmetric polynomial at mu.

    Plain evaluation at the shifted point for regular/quasiregular mu; the
    square_op value there when mu is k-singular.  For non-integer k there
    are no singular partitions and the plain branch always applies.

    Takes rational-coefficient polynomials only; parameter-dependent input
    must be specialized first.
    """
    if not f.is_symmetric():
        raise ValueError("generalized evaluation requires a symmetric polynomial")
    if any(not isinstance(c, Fraction) for c in f.terms.values()):
        raise TypeError("generalized evaluation needs rational coefficients; specialize first")
    a, b = eval_point(mu, k)
    if is_integer_parameter(k) and classify(mu, int(Fraction(k))) is PClass.SINGULAR:
        return square_op(f).eval2(a, b)
    return f.eval2(a, b)


def tcheck_values(lam: Pair2, k: int) -> tuple[Fraction, Fraction]:
    """The pair (t1, t2) of generalized values of Q_lam at lam-dagger and lam.

    t1 = H_lam(k); t2 is assembled from the derivatives of
    alpha(kappa) = -r_lam/(kappa-k) * H_{lam+}(kappa) and beta = H_lam.
    """
    if classify(lam, k) is not PClass.SINGULAR:
        raise ValueError(f"{lam} is not {k}-singular")
    lamd = dagger(lam, k)
    assert lamd is not None
    r = r_coeff(lam, k)
    alpha = RatFunc(h_poly(lamd).scale(-r), UniPoly((-k, 1)))
    beta = RatFunc(h_poly(lam))
    t1 = beta.eval(k)
    denom = 4 * (k + 1 - lam[0] + lam[1])
    t2 = (beta.derivative().eval(k) - alpha.derivative().eval(k)) / denom
    return t1, t2


# -- basis of regularized polynomials ------------------------------------------------


def reg_basis_triangular(k: int, d: int) -> bool:
    """Check that {reg_part(mu, k) : |mu| <= d} is unitriangular in the
    symmetric falling basis under graded-lex order."""
    parts = upto(d)
    index = {p: i for i, p in enumerate(parts)}
    for mu in parts:
        expansion = falling_expansion(reg_part(mu, k))
        for (a, b), c in expansion.items():
            key = (a, b) if a >= b else (b, a)
            row = index.get(key)
            if row is None or row > index[mu]:
                return False
            if row == index[mu] and c != 1:
                return False
    return True
