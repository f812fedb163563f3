"""Exact scalars: rationals, polynomials in ``t`` and reduced fractions of them.

Rationals are :class:`fractions.Fraction`.  A :class:`TPoly` wraps a FLINT
rational polynomial, and a :class:`TRational` is a ``num/den`` pair kept in lowest terms with the
lowest-degree coefficient of ``den`` pinned to 1, so structural equality is
value equality.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from flint import fmpq, fmpq_poly

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class TPoly:
    """Univariate polynomial in ``t`` with rational coefficients (immutable).

    Backed by FLINT's ``fmpq_poly``; :attr:`terms` exposes the nonzero
    coefficients as ``(exponent, Fraction)`` pairs with increasing exponents.
    """

    __slots__ = ("_p", "_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[int, Scalar]] | dict = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent")
            acc[e] = acc.get(e, 0) + _frac(c)
        dense = [0] * (max(acc, default=-1) + 1)
        for e, c in acc.items():
            dense[e] = fmpq(c.numerator, c.denominator)
        self._p = fmpq_poly(dense)
        self._terms = None
        self._hash = None

    @classmethod
    def _wrap(cls, p: fmpq_poly) -> "TPoly":
        obj = cls.__new__(cls)
        obj._p = p
        obj._terms = None
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "TPoly":
        c = _frac(c)
        return cls._wrap(fmpq_poly([fmpq(c.numerator, c.denominator)]))

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "TPoly":
        return cls(((e, c),))

    @classmethod
    def from_dense(cls, coeffs: Iterable[Scalar]) -> "TPoly":
        """Build from ascending coefficients ``[c0, c1, ...]``."""
        return cls(enumerate(coeffs))

    # queries ----------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        if self._terms is None:
            self._terms = tuple(
                (e, Fraction(int(c.p), int(c.q))) for e, c in enumerate(self._p.coeffs()) if c
            )
        return self._terms

    def is_zero(self) -> bool:
        return self._p.degree() < 0

    def is_const(self) -> bool:
        return self._p.degree() <= 0

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        c = self._p[0]
        return Fraction(int(c.p), int(c.q))

    @property
    def degree(self) -> int:
        return self._p.degree()

    def leading(self) -> Fraction:
        return self.terms[-1][1]

    def lowest(self) -> Fraction:
        return self.terms[0][1]

    def coeff(self, e: int) -> Fraction:
        c = self._p[e] if 0 <= e <= self.degree else 0
        return Fraction(int(c.p), int(c.q)) if c else Fraction(0)

    def dense(self) -> list[Fraction]:
        return [Fraction(int(c.p), int(c.q)) for c in self._p.coeffs()]

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return TPoly._wrap(self._p + other._p)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._wrap(-self._p)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return TPoly._wrap(self._p - other._p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return TPoly._wrap(self._p * other._p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return TPoly._wrap(self._p ** n)

    def scale(self, c: Scalar) -> "TPoly":
        c = _frac(c)
        return TPoly._wrap(self._p * fmpq(c.numerator, c.denominator))

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("zero denominator")
        q, r = divmod(self._p, other._p)
        return TPoly._wrap(q), TPoly._wrap(r)

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def monic(self) -> "TPoly":
        return self.scale(1 / self.leading())

    def substitute_power(self, s: int) -> "TPoly":
        """Replace ``t`` by ``t**s``."""
        if s < 1:
            raise ValueError("s must be a positive integer")
        if s == 1 or self.is_const():
            return self
        dense = [0] * (s * self.degree + 1)
        for e, c in enumerate(self._p.coeffs()):
            dense[e * s] = c
        return TPoly._wrap(fmpq_poly(dense))

    def __call__(self, t0: Scalar) -> Fraction:
        t0 = _frac(t0)
        v = self._p(fmpq(t0.numerator, t0.denominator))
        return Fraction(int(v.p), int(v.q))

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self._p == other._p

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self):
        return self._p.degree() >= 0

    def render(self, ascending: bool = False) -> str:
        if not self.terms:
            return "0"
        items = self.terms if ascending else tuple(reversed(self.terms))
        out = []
        for e, c in items:
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"TPoly({self.render()!r})"


ZERO_POLY = TPoly()
ONE_POLY = TPoly.const(1)
_ONE_FLINT = fmpq_poly([1])


def _as_poly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly.const(x)
    return NotImplemented


def poly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd over Q (``gcd(0, 0) = 0``)."""
    if a.is_zero() and b.is_zero():
        return a
    return TPoly._wrap(a._p.gcd(b._p))


# --------------------------------------------------------------------------


class TRational:
    """Element of Q(t) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical: bool = False):
        if isinstance(num, TRational) and den == 1:
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        num = _as_poly(num) if not isinstance(num, TPoly) else num
        den = _as_poly(den) if not isinstance(den, TPoly) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("TRational expects TPoly or rational inputs")
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        if den.is_const():
            self.num, self.den = num.scale(1 / den.const_value()), ONE_POLY
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lo = den.lowest()
        if lo != 1:
            num, den = num.scale(1 / lo), den.scale(1 / lo)
        self.num, self.den = num, den

    @classmethod
    def _poly(cls, p: TPoly) -> "TRational":
        return cls(p, ONE_POLY, _canonical=True)

    def is_poly(self) -> bool:
        return self.den._p == _ONE_FLINT

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.is_poly() and self.num.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return self.num.const_value()

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        if self.is_poly() and other.is_poly():
            return TRational._poly(self.num + other.num)
        if self.den == other.den:
            return TRational(self.num + other.num, self.den)
        return TRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return TRational(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        if self.is_poly() and other.is_poly():
            return TRational._poly(self.num * other.num)
        if self.is_zero() or other.is_zero():
            return ZERO
        return TRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("zero denominator")
        return TRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if n >= 0:
            return TRational(self.num ** n, self.den ** n, _canonical=True)
        if self.is_zero():
            raise ZeroDivisionError("zero denominator")
        return TRational(self.den ** -n, self.num ** -n)

    def substitute_power(self, s: int) -> "TRational":
        return TRational(self.num.substitute_power(s), self.den.substitute_power(s))

    def __call__(self, t0: Scalar) -> Fraction:
        d = self.den(t0)
        if not d:
            raise ZeroDivisionError(f"pole at t={t0}")
        return self.num(t0) / d

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        other = _as_trat(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.is_poly():
            if self.num.is_const():
                return str(self.num.const_value())
            return f"({self.num.render()})"
        return f"({self.num.render()})/({self.den.render(ascending=True)})"

    def __repr__(self):
        return f"TRational({str(self)!r})"


def _as_trat(x):
    if isinstance(x, TRational):
        return x
    if isinstance(x, (int, Fraction)):
        return TRational._poly(TPoly.const(x))
    if isinstance(x, TPoly):
        return TRational._poly(x)
    return NotImplemented


def as_trational(x) -> TRational:
    r = _as_trat(x)
    if r is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to TRational")
    return r


ZERO = TRational._poly(ZERO_POLY)
ONE = TRational._poly(ONE_POLY)
T = TRational._poly(TPoly.monomial(1))


def tp_arith(a, b, kind: str) -> TRational:
    a, b = as_trational(a), as_trational(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def tp_eval(a, t0: Scalar) -> Fraction:
    return as_trational(a)(t0)


def tp_substitute_power(a, s: int) -> TRational:
    return as_trational(a).substitute_power(s)


def one_minus_t_power(n: int) -> TPoly:
    """The polynomial ``1 - t**n``."""
    if n == 0:
        return ZERO_POLY
    return TPoly(((0, 1), (n, -1)))
