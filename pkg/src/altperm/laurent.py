"""Sparse Laurent polynomials in two variables ``p`` and ``q`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


class PolynomialityError(ArithmeticError):
    """A value expected to be a genuine polynomial still has negative exponents."""


def _is_scalar(x) -> bool:
    return isinstance(x, Rational)


class LaurentPolynomial:
    """Finitely supported map ``(e_p, e_q) -> Fraction``.

    Instances are immutable and never store zero coefficients. Plain ints and
    Fractions coerce on either side of every arithmetic operator, so a
    LaurentPolynomial can sit next to rationals inside a power series.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[Tuple[Exponent, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Exponent, Fraction] = {}
        for (ep, eq), c in items:
            key = (int(ep), int(eq))
            value = clean.get(key, Fraction(0)) + Fraction(c)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, ep: int, eq: int, c: Scalar = 1) -> "LaurentPolynomial":
        return cls({(ep, eq): c})

    @classmethod
    def coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if _is_scalar(x):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPolynomial")

    # -- inspection --

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in lexicographic ``(e_p, e_q)`` order."""
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, ep: int, eq: int) -> Fraction:
        return self._terms.get((ep, eq), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient(0, 0)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (min(e[0] for e in self._terms), min(e[1] for e in self._terms))

    def is_polynomial(self) -> bool:
        return all(ep >= 0 and eq >= 0 for ep, eq in self._terms)

    def require_polynomial(self, what: str = "value") -> "LaurentPolynomial":
        if not self.is_polynomial():
            raise PolynomialityError(f"{what} has negative exponents: {self}")
        return self

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # -- arithmetic --

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPolynomial":
        return self

    def __add__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other):
            other = LaurentPolynomial.constant(other)
        elif not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other) or isinstance(other, LaurentPolynomial):
            return self + (-LaurentPolynomial.coerce(other))
        return NotImplemented

    def __rsub__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other):
            return LaurentPolynomial.constant(other) - self
        return NotImplemented

    def __mul__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other):
            if not other:
                return LaurentPolynomial._raw({})
            other = Fraction(other)
            return LaurentPolynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPolynomial":
        """Multiplicative inverse; only monomials are units of this ring."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not an invertible monomial")
        ((ep, eq), c), = self._terms.items()
        return LaurentPolynomial._raw({(-ep, -eq): 1 / c})

    def __truediv__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentPolynomial):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other) -> "LaurentPolynomial":
        if _is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions --

    def invert_vars(self) -> "LaurentPolynomial":
        """Substitute ``p -> 1/p`` and ``q -> 1/q``."""
        return LaurentPolynomial._raw({(-ep, -eq): c for (ep, eq), c in self._terms.items()})

    def swap(self) -> "LaurentPolynomial":
        """Exchange the roles of ``p`` and ``q``."""
        return LaurentPolynomial._raw({(eq, ep): c for (ep, eq), c in self._terms.items()})

    def specialize(self, p: Scalar | None = None, q: Scalar | None = None) -> "LaurentPolynomial":
        """Set ``p`` and/or ``q`` to a rational value."""
        out: Dict[Exponent, Fraction] = {}
        for (ep, eq), c in self._terms.items():
            if p is not None:
                c = c * Fraction(p) ** ep
                ep = 0
            if q is not None:
                c = c * Fraction(q) ** eq
                eq = 0
            out[(ep, eq)] = out.get((ep, eq), 0) + c
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    def shift(self, ep: int, eq: int) -> "LaurentPolynomial":
        """Multiply by the monomial ``p^ep q^eq``."""
        return LaurentPolynomial._raw({(a + ep, b + eq): c for (a, b), c in self._terms.items()})

    def __call__(self, p: Scalar = 1, q: Scalar = 1) -> Fraction:
        return self.specialize(p, q).coefficient(0, 0)

    # -- comparison --

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if _is_scalar(other):
            return self._terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.coefficient(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering --

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ep, eq), c in self.items():
            mono = []
            for name, e in (("p", ep), ("q", eq)):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            mag = abs(c)
            if mono:
                body = "*".join(mono) if mag == 1 else f"{mag}*" + "*".join(mono)
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


P = LaurentPolynomial.monomial(1, 0)
Q = LaurentPolynomial.monomial(0, 1)
ONE = LaurentPolynomial.constant(1)


def from_counts(counts: Mapping[Exponent, int]) -> LaurentPolynomial:
    return LaurentPolynomial({e: c for e, c in counts.items() if c})


def format_coefficient(c: Fraction) -> str:
    """Decimal integer or ``num/den``; never floating point."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_coefficient(s: str) -> Fraction:
    return Fraction(s)


def to_records(poly: LaurentPolynomial, variables: Tuple[str, ...] = ("p", "q")) -> list:
    """Canonical JSON-ready term list, ordered lexicographically by ``(e_p, e_q)``.

    Variables not listed must carry exponent zero in every term.
    """
    out = []
    for (ep, eq), c in poly.items():
        rec = {}
        if "p" in variables:
            rec["e_p"] = ep
        elif ep:
            raise ValueError(f"{poly} depends on p")
        if "q" in variables:
            rec["e_q"] = eq
        elif eq:
            raise ValueError(f"{poly} depends on q")
        rec["c"] = format_coefficient(c)
        out.append(rec)
    return out


def from_records(records: Iterable[Mapping]) -> LaurentPolynomial:
    return LaurentPolynomial(
        ((int(r.get("e_p", 0)), int(r.get("e_q", 0))), parse_coefficient(str(r["c"]))) for r in records
    )
