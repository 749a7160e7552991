"""Rays and transversals of the Pascal triangle.

A ray is the sequence ``C(n0 + i*d, k0 + i*delta)`` for ``i = 0, 1, ...``.
The canonical form has ``n0 >= k0 >= 0`` and both differences nonnegative;
:func:`normalize` reaches it from any integer parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .algebra import binomial
from .errors import DomainError, UsageError


@dataclass(frozen=True)
class RayParams:
    n0: int
    k0: int
    d: int
    delta: int

    def __post_init__(self):
        if self.d < 0 or self.delta < 0:
            raise DomainError(
                f"canonical ray needs d >= 0 and delta >= 0, got d={self.d}, delta={self.delta}"
            )
        if not 0 <= self.k0 <= self.n0:
            raise DomainError(f"ray origin needs 0 <= k0 <= n0, got n0={self.n0}, k0={self.k0}")

    def term(self, i: int) -> int:
        return binomial(self.n0 + i * self.d, self.k0 + i * self.delta)

    def point(self, i: int) -> tuple[int, int]:
        return self.n0 + i * self.d, self.k0 + i * self.delta

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.k0, self.d, self.delta)


@dataclass(frozen=True)
class RaySequence:
    params: RayParams
    start_index: int
    values: tuple[int, ...]

    def __len__(self):
        return len(self.values)

    @property
    def indices(self) -> range:
        return range(self.start_index, self.start_index + len(self.values))


class RegimeTag(enum.Enum):
    STABLE_OR_HORIZONTAL = "StableOrHorizontal"
    TRANSVERSAL = "Transversal"
    STEEP_RAY = "SteepRay"


_PREDICTIONS = {
    RegimeTag.STABLE_OR_HORIZONTAL: frozenset({"increasing", "convex", "log_concave"}),
    RegimeTag.TRANSVERSAL: frozenset({"log_concave", "unimodal"}),
    RegimeTag.STEEP_RAY: frozenset({"increasing", "convex", "asymptotically_log_convex"}),
}


@dataclass(frozen=True)
class Regime:
    tag: RegimeTag
    predicted: frozenset

    def __str__(self):
        return self.tag.value


def normalize(n0: int, k0: int, d: int, delta: int, window: Optional[int] = None) -> RayParams:
    """Canonical parameters for the ray ``C(n0 + i*d, k0 + i*delta)``.

    A negative ``d`` is handled by reading the finite window ``i < window``
    backwards, so ``window`` is mandatory in that case. A negative ``delta``
    left over afterwards is removed with ``C(n, k) = C(n, n - k)``. The
    multiset of values over the window is preserved.
    """
    if not 0 <= k0 <= n0:
        raise DomainError(f"ray origin needs 0 <= k0 <= n0, got n0={n0}, k0={k0}")
    if d < 0:
        if window is None:
            raise UsageError("a ray with d < 0 can only be normalized over a finite window")
        if window < 1:
            raise UsageError("window must be positive")
        last = window - 1
        n0, k0, d, delta = n0 + last * d, k0 + last * delta, -d, -delta
    if delta < 0:
        k0, delta = n0 - k0, d - delta
    if n0 < 0 or not 0 <= k0 <= n0:
        raise DomainError(
            "the reversed window starts outside the triangle; choose a shorter window"
        )
    return RayParams(n0, k0, d, delta)


def generate(params: RayParams, start_index: int = 0, length: int = 1) -> RaySequence:
    if length < 1:
        raise UsageError("length must be at least 1")
    if start_index < 0:
        raise UsageError("start_index must be nonnegative")
    values = tuple(params.term(i) for i in range(start_index, start_index + length))
    return RaySequence(params, start_index, values)


def regime(params: RayParams) -> Regime:
    d, delta = params.d, params.delta
    if delta == 0 or d == delta:
        tag = RegimeTag.STABLE_OR_HORIZONTAL
    elif d < delta:
        tag = RegimeTag.TRANSVERSAL
    else:
        tag = RegimeTag.STEEP_RAY
    return Regime(tag, _PREDICTIONS[tag])


def subsequence(seq: RaySequence, offset: int, stride: int) -> RaySequence:
    """The entries ``seq.values[offset::stride]`` as a ray of their own.

    The new ray is based at the original index ``r = absolute % stride``
    (where ``absolute`` is the ray index of the first kept entry), so that
    the composed differences are ``d*stride`` and ``delta*stride`` and the
    new start index is ``absolute // stride``.
    """
    if stride < 1:
        raise UsageError("stride must be positive")
    if not 0 <= offset < len(seq.values):
        raise UsageError("offset lies outside the sequence")
    values = seq.values[offset::stride]
    if not values:
        raise UsageError("empty subsequence")
    p = seq.params
    absolute = seq.start_index + offset
    r, start = absolute % stride, absolute // stride
    n0, k0 = p.point(r)
    sub = RayParams(n0, k0, p.d * stride, p.delta * stride)
    return RaySequence(sub, start, values)


def line_origin(params: RayParams) -> tuple[RayParams, int]:
    """Move the origin of a transversal back to the edge ``k0 < delta``.

    For ``delta > d`` the terms at negative indices stay positive until the
    lower index drops below zero, so the whole line through the triangle is
    ``generate(origin, 0, ...)``. Returns the new parameters and the number
    of steps moved back.
    """
    if params.delta <= params.d:
        raise DomainError("only transversals (delta > d) have a finite line")
    back = params.k0 // params.delta
    moved = RayParams(params.n0 - back * params.d, params.k0 - back * params.delta,
                      params.d, params.delta)
    return moved, back
