"""Exact truncated power series in ``t``.

Coefficients live in a commutative ring: Fractions, or
:class:`~altperm.laurent.LaurentPolynomial` values in ``p`` and ``q``. The two
mix freely. A series knows its truncation order ``N`` and never reports a
coefficient beyond it; binary operations keep the smaller order.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Callable, Iterable, List, Sequence

from .laurent import LaurentPolynomial

DEFAULT_MAX_ORDER = 14


def max_order() -> int:
    """Series order cap, overridable through ``ALTPERM_MAX_ORDER``."""
    raw = os.environ.get("ALTPERM_MAX_ORDER")
    if raw is None or raw == "":
        return DEFAULT_MAX_ORDER
    value = int(raw)
    if value < 0:
        raise ValueError("ALTPERM_MAX_ORDER must be non-negative")
    return value


class SeriesDomainError(ValueError):
    """An operation's precondition on the constant term does not hold."""


class UnsupportedScaling(ValueError):
    """``f(c t)`` was requested with a non-monomial Laurent scale ``c``."""


def _coerce(c):
    if isinstance(c, LaurentPolynomial):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _is_zero(c) -> bool:
    return not c


def _is_unit(c) -> bool:
    if isinstance(c, LaurentPolynomial):
        return c.is_monomial()
    return c != 0


def _inverse(c):
    if isinstance(c, LaurentPolynomial):
        return c.inverse()
    return 1 / c


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.coeffs: tuple = tuple(cs)
        self.order: int = order

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient t^{n} is outside order {self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def map(self, fn: Callable) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    # -- ring operations --

    def _binary_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        if not isinstance(other, (TruncatedSeries, Rational, LaurentPolynomial)):
            return NotImplemented
        other = self._lift(other)
        n = self._binary_order(other)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        if not isinstance(other, (TruncatedSeries, Rational, LaurentPolynomial)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (Rational, LaurentPolynomial)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._binary_order(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                if _is_zero(a[i]) or _is_zero(b[k - i]):
                    continue
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def agrees_with(self, other: "TruncatedSeries", upto: int | None = None, start: int = 0) -> bool:
        """Coefficientwise equality on ``t^start .. t^upto``."""
        n = self._binary_order(other) if upto is None else upto
        if n > self._binary_order(other):
            raise ValueError(f"order {n} exceeds operand orders")
        return all(self.coeffs[i] == other.coeffs[i] for i in range(start, n + 1))

    def reciprocal(self) -> "TruncatedSeries":
        f0 = self.coeffs[0]
        if not _is_unit(f0):
            raise SeriesDomainError(f"constant term {f0} is not invertible")
        inv0 = _inverse(f0)
        g = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if not _is_zero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * g[n - k]
            g.append(-(acc * inv0))
        return TruncatedSeries(g, self.order)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        if isinstance(other, (Rational, LaurentPolynomial)):
            return TruncatedSeries([c / other for c in self.coeffs], self.order)
        return NotImplemented

    # -- calculus --

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise SeriesDomainError("derivative of an order-0 series carries no information")
        return TruncatedSeries([self.coeffs[n] * n for n in range(1, self.order + 1)], self.order - 1)

    def integrate(self, cap: int | None = None) -> "TruncatedSeries":
        """Antiderivative with zero constant term, order ``N + 1`` (at most ``cap``)."""
        order = self.order + 1 if cap is None else min(self.order + 1, cap)
        out = [Fraction(0)] + [self.coeffs[n] / (n + 1) for n in range(self.order + 1)]
        return TruncatedSeries(out[: order + 1], order)

    def scale(self, c) -> "TruncatedSeries":
        """``f(c t)``: the ``t^n`` coefficient is multiplied by ``c^n``."""
        if isinstance(c, LaurentPolynomial):
            if c.is_constant():
                c = c.constant_value()
            elif not c.is_monomial():
                raise UnsupportedScaling(f"scaling by non-monomial {c} is not supported")
        c = _coerce(c)
        out = []
        power = Fraction(1)
        for coeff in self.coeffs:
            out.append(coeff * power if not _is_zero(coeff) else coeff)
            power = power * c
        return TruncatedSeries(out, self.order)

    def exp(self) -> "TruncatedSeries":
        if not _is_zero(self.coeffs[0]):
            raise SeriesDomainError("exp needs a zero constant term")
        f = self.coeffs
        g = [Fraction(1)]
        # n g_n = sum_k k f_k g_{n-k}
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if not _is_zero(f[k]):
                    acc = acc + f[k] * g[n - k] * k
            g.append(acc / n)
        return TruncatedSeries(g, self.order)

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != 1:
            raise SeriesDomainError("log needs constant term 1")
        f = self.coeffs
        g = [Fraction(0)]
        # n f_n = n g_n + sum_{k=1}^{n-1} k g_k f_{n-k}
        for n in range(1, self.order + 1):
            acc = f[n] * n
            for k in range(1, n):
                if not _is_zero(g[k]) and not _is_zero(f[n - k]):
                    acc = acc - g[k] * f[n - k] * k
            g.append(acc / n)
        return TruncatedSeries(g, self.order)

    def pow(self, e) -> "TruncatedSeries":
        """``f^e = exp(e log f)`` for ``f(0) = 1`` and any ring element ``e``."""
        if self.coeffs[0] != 1:
            raise SeriesDomainError("pow needs constant term 1")
        return (self.log() * _coerce(e)).exp()

    def invert_vars(self) -> "TruncatedSeries":
        return self.map(invert_vars)

    def egf(self, n: int):
        return egf_coefficient(self, n)

    def egf_coefficients(self) -> list:
        return [egf_coefficient(self, n) for n in range(self.order + 1)]


def invert_vars(x):
    """Substitute ``p -> 1/p`` and ``q -> 1/q`` in a coefficient or a series."""
    if isinstance(x, TruncatedSeries):
        return x.invert_vars()
    if isinstance(x, LaurentPolynomial):
        return x.invert_vars()
    if isinstance(x, Rational):
        return x
    raise TypeError(f"cannot invert variables of {type(x).__name__}")


def egf_coefficient(f: TruncatedSeries, n: int):
    """``n!`` times the coefficient of ``t^n``."""
    if n < 0 or n > f.order:
        raise IndexError(f"EGF index {n} outside series order {f.order}")
    return f.coeffs[n] * factorial(n)


def series_arith(f: TruncatedSeries, g: TruncatedSeries, op: str) -> TruncatedSeries:
    ops = {"add": f.__add__, "sub": f.__sub__, "mul": f.__mul__}
    try:
        return ops[op](g)
    except KeyError:
        raise ValueError(f"unknown series operation {op!r}") from None


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    return f.reciprocal()


def substitute_scaled_var(f: TruncatedSeries, c) -> TruncatedSeries:
    return f.scale(c)


def pow_exponent(f: TruncatedSeries, e) -> TruncatedSeries:
    return f.pow(e)


# -- elementary series --


@lru_cache(maxsize=None)
def zigzag_numbers(n_max: int) -> tuple:
    """``E_0 .. E_{n_max}`` from the Seidel-Entringer boustrophedon triangle."""
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [0]
        for k in range(n):
            nxt.append(nxt[-1] + row[n - 1 - k])
        row = nxt
        out.append(row[-1])
    return tuple(out)


def _sin_cos(kind: str, order: int) -> List[Fraction]:
    start = 1 if kind == "sin" else 0
    out = [Fraction(0)] * (order + 1)
    for n in range(start, order + 1, 2):
        sign = -1 if (n // 2) % 2 else 1
        out[n] = Fraction(sign, factorial(n))
    return out


def trig(kind: str, order: int) -> TruncatedSeries:
    """Maclaurin series of sin, cos, sec or tan to ``t^order``.

    sec and tan come from the zigzag numbers, independently of series division.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if kind in ("sin", "cos"):
        return TruncatedSeries(_sin_cos(kind, order), order)
    if kind in ("sec", "tan"):
        e = zigzag_numbers(order)
        parity = 0 if kind == "sec" else 1
        return TruncatedSeries(
            [Fraction(e[n], factorial(n)) if n % 2 == parity else Fraction(0) for n in range(order + 1)],
            order,
        )
    raise ValueError(f"unknown trigonometric series {kind!r}")


def sin(order: int) -> TruncatedSeries:
    return trig("sin", order)


def cos(order: int) -> TruncatedSeries:
    return trig("cos", order)


def sec(order: int) -> TruncatedSeries:
    return trig("sec", order)


def tan(order: int) -> TruncatedSeries:
    return trig("tan", order)


def from_egf(values: Sequence, order: int | None = None) -> TruncatedSeries:
    """Series whose EGF coefficients are ``values``."""
    if order is None:
        order = len(values) - 1
    return TruncatedSeries([_coerce(v) / factorial(n) for n, v in enumerate(values)], order)
