"""Closed-form generating functions for hooks in self-conjugate partitions.

Every function returns a :class:`~hooklab.qseries.QSeries` truncated at
``N``. Sums over ``n`` stop at the first term whose leading q-power exceeds
``N``, and infinite products stop at the first factor ``1 - a*q**e`` with
``e > N``.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .partitions import count_distinct_odd
from .qseries import QSeries, X, XPoly

__all__ = [
    "pochhammer",
    "sc_series",
    "partition_count_series",
    "euler_expand",
    "han_rhs",
    "thm11_even_rhs",
    "thm11_odd_rhs",
    "thm11_rhs",
    "gks_core_genfun",
    "gen1_series",
    "d_type_series",
    "F_sum",
    "G_sum",
    "FG_product_rhs",
    "h_star",
    "h_star_at",
    "thm31_formula1_at",
    "thm31_formula2",
    "rational_point",
    "a_star_series_even",
    "a_star_series_odd",
    "a_star_series",
    "a_star_formula",
]

ONE_MINUS_X2 = XPoly({0: 1, 2: -1})


def pochhammer(a, m: int, k: int, count, N: int, sign: int = 1) -> QSeries:
    """``prod_{j < count} (1 - a * (sign*q)**(m + j*k))`` truncated at ``q**N``.

    ``count`` may be ``math.inf`` (or ``None``) for the infinite product.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if m < 0 or k < 0:
        raise ValueError("exponents must be non-negative")
    a = XPoly.coerce(a)
    infinite = count is None or count == inf
    if infinite and k == 0:
        raise ValueError("an infinite product needs k >= 1")
    result = QSeries.one(N)
    j = 0
    while infinite or j < count:
        e = m + j * k
        if e > N:
            # exponents never decrease, so every later factor is 1 mod q^(N+1)
            break
        result = result.mul_binomial(a * sign**e, e)
        j += 1
    return result


def sc_series(N: int) -> QSeries:
    """``(-q; q^2)_inf``, the self-conjugate partition counts."""
    return pochhammer(-1, 1, 2, inf, N)


def partition_count_series(N: int) -> QSeries:
    return pochhammer(1, 1, 1, inf, N).inverse()


def euler_expand(z, N: int, shifted: bool = False) -> QSeries:
    """Sum side of Euler's expansion ``sum_n q^{n(n-1)/2} z^n / (q; q)_n``.

    This equals ``(-z; q)_inf``. With ``shifted=True`` the exponent is
    ``n(n+1)/2`` and the sum equals ``(-zq; q)_inf`` instead.
    """
    z = XPoly.coerce(z)
    total = QSeries.zero(N)
    n = 0
    while True:
        e = n * (n + 1) // 2 if shifted else n * (n - 1) // 2
        if e > N:
            break
        term = pochhammer(1, 1, 1, n, N).inverse().shift(e)
        total = total + term * z**n
        n += 1
    return total


def han_rhs(t: int, N: int) -> QSeries:
    """Hook-length generating function over all partitions: x marks t-hooks."""
    _check_t(t)
    top = pochhammer(XPoly({0: 1, 1: -1}), t, t, inf, N) ** t
    return top * partition_count_series(N)


def thm11_even_rhs(t: int, N: int) -> QSeries:
    _check_t(t)
    if t % 2:
        raise ValueError(f"t={t} is odd")
    return sc_series(N) * pochhammer(ONE_MINUS_X2, 2 * t, 2 * t, inf, N) ** (t // 2)


def thm11_odd_rhs(t: int, N: int) -> QSeries:
    _check_t(t)
    if t % 2 == 0:
        raise ValueError(f"t={t} is even")
    paired = pochhammer(ONE_MINUS_X2, 2 * t, 2 * t, inf, N) ** ((t - 1) // 2)
    return sc_series(N) * h_star_at(t, N) * paired


def thm11_rhs(t: int, N: int) -> QSeries:
    return thm11_even_rhs(t, N) if t % 2 == 0 else thm11_odd_rhs(t, N)


def gks_core_genfun(t: int, N: int) -> QSeries:
    """Counts of self-conjugate ``t``-cores as a product."""
    _check_t(t)
    squares = pochhammer(1, 2 * t, 2 * t, inf, N)
    if t % 2 == 0:
        return sc_series(N) * squares ** (t // 2)
    return sc_series(N) * squares ** ((t - 1) // 2) * pochhammer(-1, t, 2 * t, inf, N).inverse()


def gen1_series(N: int) -> QSeries:
    """1-hook generating function over self-conjugate partitions, Durfee form."""
    total = QSeries.one(N)
    n = 1
    while n * n <= N:
        term = QSeries.monomial(N, n * n, X)
        term = term.mul_binomial(XPoly({0: 1, 1: -1}), 2 * n)
        term = term * pochhammer(ONE_MINUS_X2, 2, 2, n - 1, N)
        term = term * pochhammer(1, 2, 2, n, N).inverse()
        total = total + term
        n += 1
    return total


def _twin_block(j: int, N: int) -> QSeries:
    # 1 + x^2 q^{2j} + x^2 q^{4j} + ...: one distinct twin part of size j
    terms = {(0, 0): 1}
    e = 2 * j
    while e <= N:
        terms[(e, 2)] = 1
        e += 2 * j
    return QSeries.from_terms(N, terms)


def d_type_series(which: int, N: int) -> QSeries:
    """Generating function of Type-1 or Type-2 self-conjugate partitions.

    Built from the Durfee-square sum, one factor per possible twin part, without
    going through any Pochhammer identity.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    total = QSeries.zero(N)
    n = 1
    while n * n <= N:
        body = QSeries.monomial(N, n * n)
        for j in range(1, n):
            body = body * _twin_block(j, N)
        if which == 1:
            total = total + body.scale(X)
        else:
            total = total + body * (_twin_block(n, N) - 1)
        n += 1
    return total


def F_sum(A, N: int) -> QSeries:
    """``sum_n q^{n^2} (A; q^2)_n / (q^2; q^2)_n``."""
    return _fg_sum(A, N, offset=0)


def G_sum(A, N: int) -> QSeries:
    """``sum_n q^{n^2 + 2n} (A; q^2)_n / (q^2; q^2)_n``."""
    return _fg_sum(A, N, offset=2)


def _fg_sum(A, N: int, offset: int) -> QSeries:
    total = QSeries.zero(N)
    n = 0
    while n * n + offset * n <= N:
        term = pochhammer(A, 0, 2, n, N) * pochhammer(1, 2, 2, n, N).inverse()
        total = total + term.shift(n * n + offset * n)
        n += 1
    return total


def FG_product_rhs(sqrtA, which: str, N: int) -> QSeries:
    """Product side of the F/G identities at ``A = sqrtA**2``."""
    s = Fraction(sqrtA)
    plus = pochhammer(-s, 0, 1, inf, N, sign=-1)
    minus = pochhammer(s, 0, 1, inf, N, sign=-1)
    if which == "F":
        return sc_series(N) * (plus + minus) * Fraction(1, 2)
    if which == "G":
        if s == 0:
            raise ValueError("the G product has a 0/0 prefactor at sqrtA = 0")
        return sc_series(N) * (plus - minus) * (1 / (2 * s))
    raise ValueError("which must be 'F' or 'G'")


def h_star(N: int) -> QSeries:
    """The series that turns ``(-q; q^2)_inf`` into the 1-hook generating function.

    Both sums are weighted by ``1/x``, so they are built as Laurent series; the
    negative powers cancel once the two are added.
    """
    x2m1 = XPoly({0: -1, 2: 1})
    inv_x = XPoly.monomial(-1)
    first = QSeries.zero(N)
    second = QSeries.zero(N)
    n = 0
    while 2 * n * n - n <= N:
        squares = pochhammer(1, 2, 2, n, N)
        weight = x2m1**n
        if 2 * n * n + n <= N:
            den = squares * pochhammer(-1, 1, 2, n + 1, N)
            first = first + den.inverse().shift(2 * n * n + n).scale(weight)
        den = squares * pochhammer(-1, 1, 2, n, N)
        second = second + den.inverse().shift(2 * n * n - n).scale(weight)
        n += 1
    return first.scale(1 - inv_x) + second.scale(inv_x)


def h_star_at(t: int, N: int) -> QSeries:
    """``h_star`` with ``q`` replaced by ``q**t``, truncated at ``q**N``."""
    _check_t(t)
    return h_star(N // t).substitute_q_power(t, N)


def rational_point(r) -> tuple[Fraction, Fraction]:
    """``x = (1 - r^2)/(1 + r^2)`` and ``sqrt(1 - x^2) = 2r/(1 + r^2)`` for ``r >= 0``.

    With this choice ``sqrt((1 - x)/(1 + x)) = r``, so every radical is rational.
    """
    r = Fraction(r)
    if r < 0:
        raise ValueError("use r >= 0; the radicals are principal roots")
    if r == 1:
        raise ValueError("r = 1 gives x = 0, where the 1/x prefactor is undefined")
    return (1 - r * r) / (1 + r * r), 2 * r / (1 + r * r)


def thm31_formula1_at(r, N: int) -> QSeries:
    """Radical form of the 1-hook generating function, evaluated at ``x(r)``."""
    r = Fraction(r)
    x, root = rational_point(r)
    plus = pochhammer(-root, 0, 1, inf, N, sign=-1)
    minus = pochhammer(root, 0, 1, inf, N, sign=-1)
    bracket = plus * (1 - r) + minus * (1 + r)
    return sc_series(N) * bracket * (1 / (2 * x))


def thm31_formula2(N: int) -> QSeries:
    return sc_series(N) * h_star(N)


def _geometric_prefactor(numerator: dict[int, int], denominator: QSeries, N: int) -> QSeries:
    num = QSeries.from_terms(N, {(e, 0): c for e, c in numerator.items()})
    return num * denominator.inverse()


def a_star_series_even(t: int, N: int) -> QSeries:
    """``t q^{2t} (-q; q^2)_inf / (1 - q^{2t})``."""
    _check_t(t)
    if t % 2:
        raise ValueError(f"t={t} is odd")
    den = QSeries.one(N).mul_binomial(1, 2 * t)
    return _geometric_prefactor({2 * t: t}, den, N) * sc_series(N)


def a_star_series_odd(t: int, N: int) -> QSeries:
    """``q^t (1 + (t-1) q^t + t q^{2t}) (-q; q^2)_inf / ((1 - q^{2t})(1 + q^t))``."""
    _check_t(t)
    if t % 2 == 0:
        raise ValueError(f"t={t} is even")
    den = QSeries.one(N).mul_binomial(1, 2 * t).mul_binomial(-1, t)
    num: dict[int, int] = {}
    for e, c in ((t, 1), (2 * t, t - 1), (3 * t, t)):
        num[e] = num.get(e, 0) + c
    return _geometric_prefactor(num, den, N) * sc_series(N)


def a_star_series(t: int, N: int) -> QSeries:
    return a_star_series_even(t, N) if t % 2 == 0 else a_star_series_odd(t, N)


def a_star_formula(t: int, n: int) -> int:
    """Convolution formula for the number of t-hooks in self-conjugate partitions of n."""
    _check_t(t)
    if n < 0:
        raise ValueError("n must be non-negative")
    total = t * sum(count_distinct_odd(n - 2 * t * j) for j in range(1, n // (2 * t) + 1))
    if t % 2:
        total += sum((-1) ** (j - 1) * j * count_distinct_odd(n - t * j)
                     for j in range(1, n // t + 1))
    return total


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"t must be a positive integer, got {t!r}")
