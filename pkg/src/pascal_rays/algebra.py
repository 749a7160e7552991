"""Exact integer, rational and polynomial arithmetic.

Everything here works over Python ints and :class:`fractions.Fraction`;
nothing is ever rounded. Polynomials carry rational coefficients stored
lowest power first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import UsageError

Number = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that it vanishes unless 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def integer_sqrt_floor(n: int) -> int:
    """Largest m with m*m <= n."""
    if n < 0:
        raise UsageError("integer_sqrt_floor needs a nonnegative argument")
    return math.isqrt(n)


def _sign(x: Number) -> int:
    return (x > 0) - (x < 0)


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients.

    Instances are immutable; arithmetic returns new polynomials. The zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        c = [Fraction(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, a: Number) -> "RationalPolynomial":
        return cls((a,))

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "RationalPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self._c):
            return self._c[power]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPolynomial((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPolynomial({[str(a) for a in self._c]})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            elif i == 1:
                terms.append(f"{a}*x")
            else:
                terms.append(f"{a}*x^{i}")
        return " + ".join(terms)

    @staticmethod
    def _coerce(other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return RationalPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(a * other for a in self._c)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self._c or not other._c:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise UsageError("negative polynomial power")
        out = RationalPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * a for i, a in enumerate(self._c) if i > 0)

    def monic(self) -> "RationalPolynomial":
        if not self._c:
            return self
        return self * (1 / self.leading)

    def __divmod__(self, other: "RationalPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            factor = rem[shift + dq] / lc
            if factor == 0:
                continue
            quot[shift] = factor
            for j, b in enumerate(other._c):
                rem[shift + j] -= factor * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def poly_gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise UsageError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def square_free_decomposition(p: RationalPolynomial) -> list[RationalPolynomial]:
    """Yun's algorithm.

    Returns monic square-free factors ``[f1, f2, ...]`` with
    ``p = lc(p) * f1 * f2**2 * f3**3 * ...``; trailing unit factors are dropped.
    """
    if p.is_zero():
        raise UsageError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    factors = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        factors.append(a)
        b = b // a
        c = d // a
        d = c - b.derivative()
    while factors and factors[-1].degree == 0:
        factors.pop()
    return factors


def sturm_chain(p: RationalPolynomial) -> list[RationalPolynomial]:
    # each member is rescaled by a positive constant; signs are unaffected
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r * (1 / abs(r.leading)))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    s = [x for x in signs if x != 0]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def count_real_roots(p: RationalPolynomial) -> int:
    """Number of distinct real roots of ``p`` on the whole line.

    Signs of the Sturm chain at -inf and +inf follow from leading
    coefficients and degree parity alone, so no root bound is needed.
    """
    if p.is_zero():
        raise UsageError("the zero polynomial has no finite root count")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    at_pos = [_sign(f.leading) for f in chain]
    at_neg = [_sign(f.leading) * (-1) ** f.degree for f in chain]
    return _variations(at_neg) - _variations(at_pos)


def real_rooted(p: RationalPolynomial) -> bool:
    """True iff every complex root of ``p`` (with multiplicity) is real."""
    if p.is_zero():
        raise UsageError("real-rootedness of the zero polynomial is undefined")
    return all(count_real_roots(f) == f.degree for f in square_free_decomposition(p))
