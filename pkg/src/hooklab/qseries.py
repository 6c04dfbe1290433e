"""Truncated power series in q whose coefficients are Laurent polynomials in x.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing is ever
converted to floating point. A :class:`QSeries` with truncation ``N`` stores
the coefficients of ``q**0 .. q**N`` and is exact modulo ``q**(N+1)``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

__all__ = ["XPoly", "QSeries", "X", "Scalar"]

Scalar = Union[int, Fraction]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_scalar(v) -> bool:
    return isinstance(v, Rational) and not isinstance(v, bool)


class XPoly:
    """Laurent polynomial in ``x``: a sparse map ``exponent -> coefficient``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        self.terms = {e: _norm(c) for e, c in (terms or {}).items() if c != 0}
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "XPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: Scalar = 1) -> "XPoly":
        return cls({exp: c})

    @classmethod
    def coerce(cls, v) -> "XPoly":
        if isinstance(v, XPoly):
            return v
        if _is_scalar(v):
            return cls.const(v)
        raise TypeError(f"cannot use {type(v).__name__} as a coefficient")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            other = XPoly.const(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            if not _is_scalar(other):
                return NotImplemented
            other = XPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            if not _is_scalar(other):
                return NotImplemented
            other = XPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return XPoly.coerce(other) - self

    def __mul__(self, other) -> "XPoly":
        if _is_scalar(other):
            return XPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, XPoly):
            return NotImplemented
        out: dict[int, Scalar] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            return XPoly({e * n: Fraction(1) / c ** -n})
        result, base = XPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "XPoly":
        """Multiply by ``x**k``."""
        return XPoly({e + k: c for e, c in self.terms.items()})

    @property
    def min_exp(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def max_exp(self) -> int | None:
        return max(self.terms) if self.terms else None

    def is_constant(self) -> bool:
        return all(e == 0 for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} depends on x")
        return self.terms.get(0, 0)

    def __call__(self, x: Scalar) -> Scalar:
        total: Scalar = 0
        for e, c in self.terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x**e)
        return _norm(total)

    def derivative_at_one(self) -> Scalar:
        return sum((e * c for e, c in self.terms.items()), 0)

    def __repr__(self) -> str:
        return f"XPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}" if e == 0 else f"{c} * x^{e}" for e, c in sorted(self.terms.items())
        )


X = XPoly.monomial(1)
_ZERO = XPoly()
_ONE = XPoly.const(1)


class QSeries:
    """Power series in ``q`` truncated after ``q**N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs: tuple[XPoly, ...] = tuple(XPoly.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the q^0 coefficient")

    # constructors

    @classmethod
    def zero(cls, N: int) -> "QSeries":
        return cls([_ZERO] * (N + 1))

    @classmethod
    def one(cls, N: int) -> "QSeries":
        return cls.monomial(N, 0)

    @classmethod
    def constant(cls, N: int, c) -> "QSeries":
        return cls([XPoly.coerce(c)] + [_ZERO] * N)

    @classmethod
    def monomial(cls, N: int, qexp: int, c=1) -> "QSeries":
        coeffs = [_ZERO] * (N + 1)
        if 0 <= qexp <= N:
            coeffs[qexp] = XPoly.coerce(c)
        return cls(coeffs)

    @classmethod
    def from_terms(cls, N: int, terms: Mapping[tuple[int, int], Scalar]) -> "QSeries":
        """Build from ``{(q_exp, x_exp): coeff}``; terms beyond ``q**N`` are dropped."""
        rows: list[dict[int, Scalar]] = [{} for _ in range(N + 1)]
        for (qe, xe), c in terms.items():
            if 0 <= qe <= N:
                rows[qe][xe] = rows[qe].get(xe, 0) + c
        return cls(XPoly(r) for r in rows)

    @classmethod
    def from_univariate(cls, N: int, values: Iterable[Scalar]) -> "QSeries":
        values = list(values)[: N + 1]
        values += [0] * (N + 1 - len(values))
        return cls(XPoly.const(v) for v in values)

    # basic access

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, qexp: int) -> XPoly:
        return self.coeffs[qexp]

    def coefficient(self, qexp: int, xexp: int = 0) -> Scalar:
        return self.coeffs[qexp].terms.get(xexp, 0)

    def terms(self) -> Iterator[tuple[int, int, Scalar]]:
        """Non-zero ``(q_exp, x_exp, coeff)`` triples, sorted by q then x."""
        for qe, poly in enumerate(self.coeffs):
            for xe in sorted(poly.terms):
                yield qe, xe, poly.terms[xe]

    def to_json(self) -> list[dict]:
        return [{"q": qe, "x": xe, "coeff": str(c)} for qe, xe, c in self.terms()]

    def univariate(self) -> list[Scalar]:
        return [c.constant_value() for c in self.coeffs]

    def min_x_exp(self) -> int | None:
        exps = [c.min_exp for c in self.coeffs if c]
        return min(exps) if exps else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries(N={self.N}, {self})"

    def __str__(self) -> str:
        parts = []
        for qe, xe, c in self.terms():
            parts.append(f"{c} * x^{xe} q^{qe}")
        return " + ".join(parts) if parts else "0"

    # arithmetic

    def _check(self, other: "QSeries") -> None:
        if other.N != self.N:
            raise ValueError(f"truncation mismatch: {self.N} vs {other.N}")

    def __add__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            try:
                other = QSeries.constant(self.N, other)
            except TypeError:
                return NotImplemented
        self._check(other)
        return QSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> "QSeries":
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self.mul(other)
        if isinstance(other, XPoly) or _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> "QSeries":
        c = XPoly.coerce(c)
        return QSeries(a * c for a in self.coeffs)

    def mul(self, other: "QSeries") -> "QSeries":
        self._check(other)
        N = self.N
        rows: list[dict[int, Scalar]] = [{} for _ in range(N + 1)]
        left = [(i, c.terms) for i, c in enumerate(self.coeffs) if c]
        right = [(j, c.terms) for j, c in enumerate(other.coeffs) if c]
        for i, ta in left:
            for j, tb in right:
                if i + j > N:
                    break
                acc = rows[i + j]
                for ea, ca in ta.items():
                    for eb, cb in tb.items():
                        e = ea + eb
                        acc[e] = acc.get(e, 0) + ca * cb
        return QSeries(XPoly(r) for r in rows)

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QSeries.one(self.N), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.inverse()
        if _is_scalar(other):
            return self.scale(Fraction(1) / other)
        if isinstance(other, XPoly):
            return self.scale(other ** -1)
        return NotImplemented

    def shift(self, m: int) -> "QSeries":
        """Multiply by ``q**m`` (``m >= 0``)."""
        if m < 0:
            raise ValueError("negative q shifts leave the power-series ring")
        return QSeries(([_ZERO] * m + list(self.coeffs))[: self.N + 1])

    def mul_binomial(self, c, e: int) -> "QSeries":
        """Multiply by the single factor ``1 - c*q**e``."""
        c = XPoly.coerce(c)
        if e == 0:
            return self.scale(_ONE - c)
        out = list(self.coeffs)
        for i in range(e, self.N + 1):
            if self.coeffs[i - e]:
                out[i] = out[i] - c * self.coeffs[i - e]
        return QSeries(out)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse by Newton iteration ``g <- g*(2 - f*g)``.

        The constant term must be a single monomial ``c*x**k`` with ``c != 0``.
        """
        c0 = self.coeffs[0]
        if len(c0.terms) != 1:
            raise ZeroDivisionError(f"constant term {c0} is not a unit")
        N = self.N
        g = QSeries.constant(0, c0 ** -1)
        prec = 1
        while prec < N + 1:
            prec = min(2 * prec, N + 1)
            f = self.truncate(prec - 1)
            g = g.truncate(prec - 1)
            g = g * (QSeries.constant(prec - 1, 2) - f * g)
        return g.truncate(N)

    def truncate(self, N: int) -> "QSeries":
        """Change the truncation order, padding with zeros when extending."""
        coeffs = list(self.coeffs[: N + 1])
        coeffs += [_ZERO] * (N + 1 - len(coeffs))
        return QSeries(coeffs)

    def substitute_q_power(self, t: int, N: int | None = None) -> "QSeries":
        """``q -> q**t``; the result is truncated at ``N`` (default ``t*self.N``).

        Only exact when ``N < t*(self.N + 1)``.
        """
        if t < 1:
            raise ValueError("t must be positive")
        N = t * self.N if N is None else N
        if N >= t * (self.N + 1):
            raise ValueError(f"q^{t} substitution of a series known to q^{self.N} "
                             f"is not exact through q^{N}")
        coeffs = [_ZERO] * (N + 1)
        for i, c in enumerate(self.coeffs):
            if t * i <= N:
                coeffs[t * i] = c
        return QSeries(coeffs)

    def evaluate_x(self, x: Scalar) -> "QSeries":
        return QSeries(XPoly.const(c(x)) for c in self.coeffs)

    def x_derivative_at_one(self) -> "QSeries":
        """Coefficient-wise ``d/dx`` followed by ``x = 1``."""
        low = self.min_x_exp()
        if low is not None and low < 0:
            raise ValueError("series has negative x-powers")
        return QSeries(XPoly.const(c.derivative_at_one()) for c in self.coeffs)
