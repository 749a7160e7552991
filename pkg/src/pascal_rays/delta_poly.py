"""Second differences of log-terms along a ray, as numbers and as polynomials.

``delta_value`` gives ``C_{i+1} C_{i-1} - C_i**2`` exactly. ``build_P`` expands
the polynomial whose sign matches it on steep rays, by multiplying out linear
factors one at a time. ``q_value`` and the interleaving helpers cover the
rays through the apex, ``C(i*d, i*delta)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .algebra import RationalPolynomial
from .errors import DomainError, UsageError
from .rays import RayParams


def delta_value(params: RayParams, i: int) -> int:
    if i < 1:
        raise DomainError("delta_value needs i >= 1")
    return params.term(i + 1) * params.term(i - 1) - params.term(i) ** 2


def first_positive_tail(params: RayParams, horizon: int) -> Optional[int]:
    """Smallest ``i*`` in ``1..horizon`` with Δ(i) > 0 for every i in ``i*..horizon``.

    ``None`` when Δ(horizon) itself is not positive. Says nothing past the horizon.
    """
    if horizon < 1:
        raise UsageError("horizon must be at least 1")
    star = None
    for i in range(horizon, 0, -1):
        if delta_value(params, i) > 0:
            star = i
        else:
            break
    return star


def _linear_product(shifts: Sequence[Fraction]) -> RationalPolynomial:
    p = RationalPolynomial((1,))
    for c in shifts:
        p = p * RationalPolynomial((c, 1))
    return p


def build_P(params: RayParams) -> RationalPolynomial:
    """Monic-difference polynomial P(i) of a steep ray (d > delta > 0).

    P(i) = prod(i + (n0+j)/d) prod(i + (n0-k0-d+delta+j)/(d-delta)) prod(i + (k0-delta+j)/delta)
         - prod(i + (n0-d+j)/d) prod(i + (n0-k0+j)/(d-delta)) prod(i + (k0+j)/delta)
    """
    n0, k0, d, delta = params.as_tuple()
    if not d > delta > 0:
        raise DomainError("build_P needs d > delta > 0")
    e = d - delta
    plus = (
        [Fraction(n0 + j, d) for j in range(1, d + 1)]
        + [Fraction(n0 - k0 - e + j, e) for j in range(1, e + 1)]
        + [Fraction(k0 - delta + j, delta) for j in range(1, delta + 1)]
    )
    minus = (
        [Fraction(n0 - d + j, d) for j in range(1, d + 1)]
        + [Fraction(n0 - k0 + j, e) for j in range(1, e + 1)]
        + [Fraction(k0 + j, delta) for j in range(1, delta + 1)]
    )
    return _linear_product(plus) - _linear_product(minus)


def _reduced(d: int, delta: int) -> tuple[int, int]:
    if not d > delta > 0:
        raise DomainError("need d > delta > 0")
    g = math.gcd(d, delta)
    return d // g, delta // g


def q_value(d: int, delta: int, i: int) -> Fraction:
    """Q(i) for the apex ray ``C(i*d, i*delta)``; the pair is first divided by its gcd."""
    if i < 1:
        raise DomainError("q_value needs i >= 1")
    d, delta = _reduced(d, delta)
    e = d - delta

    def prod(m):
        out = Fraction(1)
        for j in range(1, m + 1):
            out *= 1 - 1 / (i + Fraction(j, m))
        return out

    return prod(delta) * prod(e) - prod(d)


def alternates_left_of(alpha: Sequence, beta: Sequence) -> bool:
    """Sorted interleaving ``a1 <= b1 <= a2 <= b2 <= ... <= an <= bn``."""
    if len(alpha) != len(beta):
        raise UsageError("tuples must have equal length")
    a, b = sorted(alpha), sorted(beta)
    return all(x <= y for x, y in zip(a, b)) and all(y <= x for y, x in zip(b, a[1:]))


def apex_tuples(d: int, delta: int) -> tuple[list[Fraction], list[Fraction]]:
    """The two fraction tuples compared in the apex-ray argument (pair already coprime)."""
    e = d - delta
    alpha = [Fraction(j, d) for j in range(1, d)]
    beta = (
        [Fraction(j, delta) for j in range(1, delta)]
        + [Fraction(j, e) for j in range(1, e)]
        + [Fraction(1)]
    )
    return alpha, beta


def interleaving_check(d: int, delta: int) -> bool:
    d, delta = _reduced(d, delta)
    alpha, beta = apex_tuples(d, delta)
    return alternates_left_of(alpha, beta)


def fact1_check(f: Mapping, alpha: Sequence, beta: Sequence) -> bool:
    """Check ``prod f(a) <= prod f(b)`` for a nondecreasing ``f`` given as a table.

    ``f`` must be defined at every entry of both tuples. Violated hypotheses
    raise :class:`DomainError` rather than returning False.
    """
    if not alternates_left_of(alpha, beta):
        raise DomainError("alpha does not alternate left of beta")
    missing = [x for x in list(alpha) + list(beta) if x not in f]
    if missing:
        raise DomainError(f"f is not tabulated at {missing[0]}")
    keys = sorted(set(alpha) | set(beta))
    if any(f[x] > f[y] for x, y in zip(keys, keys[1:])):
        raise DomainError("f is not nondecreasing on the tabulated points")
    lhs = Fraction(1)
    rhs = Fraction(1)
    for x in alpha:
        lhs *= f[x]
    for y in beta:
        rhs *= f[y]
    return lhs <= rhs


def q_factor_table(i: int, points: Sequence[Fraction]) -> dict:
    """Tabulate ``x -> 1 - 1/(i + x)``, the factor inside Q(i)."""
    return {x: 1 - 1 / (i + Fraction(x)) for x in points}
