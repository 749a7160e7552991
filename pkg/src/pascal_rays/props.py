"""Classification of finite sequences by exact comparison.

Every property uses the weak inequalities of its definition. Log-concavity
and log-convexity only make sense on positive entries, so they are judged on
the positive support and reported as ``None`` when that support is not one
contiguous block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import binomial, integer_sqrt_floor
from .errors import DomainError, UsageError


@dataclass(frozen=True)
class PropertyReport:
    is_increasing: bool
    is_decreasing: bool
    is_concave: bool
    is_convex: bool
    is_log_concave: Optional[bool]
    is_log_convex: Optional[bool]
    is_unimodal: bool
    modes: Optional[tuple[int, int]]
    ratio_trough: Optional[int]

    def as_dict(self) -> dict:
        return {
            "increasing": self.is_increasing,
            "decreasing": self.is_decreasing,
            "concave": self.is_concave,
            "convex": self.is_convex,
            "log_concave": self.is_log_concave,
            "log_convex": self.is_log_convex,
            "unimodal": self.is_unimodal,
            "modes": list(self.modes) if self.modes else None,
            "ratio_trough": self.ratio_trough,
        }


def positive_support(values: Sequence[int]) -> Optional[tuple[int, int]]:
    """Half-open bounds ``(lo, hi)`` of the positive entries.

    ``None`` when there are no positive entries or they do not form a single
    contiguous block.
    """
    pos = [i for i, v in enumerate(values) if v > 0]
    if not pos:
        return None
    lo, hi = pos[0], pos[-1] + 1
    if hi - lo != len(pos):
        return None
    return lo, hi


def _is_log_concave(a: Sequence[int]) -> bool:
    return all(a[i - 1] * a[i + 1] <= a[i] * a[i] for i in range(1, len(a) - 1))


def _is_log_convex(a: Sequence[int]) -> bool:
    return all(a[i - 1] * a[i + 1] >= a[i] * a[i] for i in range(1, len(a) - 1))


def _unimodal_modes(a: Sequence[int]) -> Optional[tuple[int, int]]:
    # weakly rise, then weakly fall; the maxima then form one plateau
    n = len(a)
    i = 0
    while i + 1 < n and a[i] <= a[i + 1]:
        i += 1
    j = i
    while j + 1 < n and a[j] >= a[j + 1]:
        j += 1
    if j != n - 1:
        return None
    top = max(a)
    idx = [t for t, v in enumerate(a) if v == top]
    return idx[0], idx[-1]


def classify(values: Sequence[int]) -> PropertyReport:
    a = list(values)
    if not a:
        raise UsageError("cannot classify an empty sequence")
    n = len(a)
    inner = range(1, n - 1)
    support = positive_support(a)
    if support is None:
        log_cc = log_cx = None
    else:
        s = a[support[0]:support[1]]
        log_cc, log_cx = _is_log_concave(s), _is_log_convex(s)
    modes = _unimodal_modes(a)
    trough = None
    if n >= 3 and all(v > 0 for v in a):
        trough = turning_point(a)
    return PropertyReport(
        is_increasing=all(a[i] <= a[i + 1] for i in range(n - 1)),
        is_decreasing=all(a[i] >= a[i + 1] for i in range(n - 1)),
        is_concave=all(a[i - 1] + a[i + 1] <= 2 * a[i] for i in inner),
        is_convex=all(a[i - 1] + a[i + 1] >= 2 * a[i] for i in inner),
        is_log_concave=log_cc,
        is_log_convex=log_cx,
        is_unimodal=modes is not None,
        modes=modes,
        ratio_trough=trough,
    )


def check_logconcave_step(n: int, k: int, d: int, delta: int) -> bool:
    """Exact test of ``C(n+d, k+delta) * C(n-d, k-delta) <= C(n, k)**2``."""
    if n < k:
        raise DomainError("need n >= k")
    return binomial(n + d, k + delta) * binomial(n - d, k - delta) <= binomial(n, k) ** 2


def ratio_sequence(values: Sequence[int]) -> list[Fraction]:
    if any(v <= 0 for v in values):
        raise DomainError("ratios need strictly positive entries")
    return [Fraction(values[i + 1], values[i]) for i in range(len(values) - 1)]


def turning_point(values: Sequence[int]) -> Optional[int]:
    """Index ``m`` where the ratio sequence ``f`` bottoms out.

    Returns ``m`` with ``f(0) > ... > f(m-1)`` and ``f(m-1) < f(m) < ...``
    over the window. Strictly increasing ratios give 0 (log-convex from the
    start), strictly decreasing ones give ``len(values)``. Anything else (a
    tie, or more than one local extremum) gives ``None``.
    """
    if len(values) < 3:
        raise UsageError("turning_point needs at least three entries")
    f = ratio_sequence(values)
    j = 0
    while j + 1 < len(f) and f[j] > f[j + 1]:
        j += 1
    if j == len(f) - 1:
        return len(values)
    if not all(f[t] < f[t + 1] for t in range(j, len(f) - 1)):
        return None
    return 0 if j == 0 else j + 1


def weak_turning_point(values: Sequence[int]) -> Optional[int]:
    """Like :func:`turning_point` but with weak inequalities.

    Finds the least ``m`` such that ``C_0..C_m`` is log-concave and
    ``C_{m-1}, C_m, ...`` is log-convex, i.e. the ratios weakly fall up to
    index ``m-1`` and weakly rise from there. Ties in the ratio sequence are
    therefore allowed; ``None`` means no such ``m`` exists in the window.
    """
    if len(values) < 3:
        raise UsageError("weak_turning_point needs at least three entries")
    f = ratio_sequence(values)
    last = len(f) - 1
    fall_end = 0
    while fall_end < last and f[fall_end] >= f[fall_end + 1]:
        fall_end += 1
    rise_start = last
    while rise_start > 0 and f[rise_start - 1] <= f[rise_start]:
        rise_start -= 1
    if rise_start > fall_end:
        return None
    if rise_start == 0:
        return 0
    if rise_start == last:
        return len(values)
    return rise_start + 1


def predicted_turning_point_vertical(n0: int) -> int:
    """Turning index of ``C(n0 + 2i, i)``: ``n0**2 - ceil(n0/2)``, or 0 for n0 < 2."""
    if n0 < 0:
        raise DomainError("n0 must be nonnegative")
    if n0 < 2:
        return 0
    return n0 * n0 - (n0 + 1) // 2


def tanny_zuker_mode(n0: int) -> int:
    """``floor((5*n0 + 7 - sqrt(5*n0**2 + 10*n0 + 9)) / 10)`` without floats.

    The answer is the largest q with ``sqrt(D) <= 5*n0 + 7 - 10*q``, and the
    comparison is settled by squaring both (nonnegative) sides.
    """
    if n0 < 0:
        raise DomainError("n0 must be nonnegative")
    disc = 5 * n0 * n0 + 10 * n0 + 9
    base = 5 * n0 + 7
    q = (base - integer_sqrt_floor(disc)) // 10
    while True:
        rhs = base - 10 * q
        if rhs >= 0 and rhs * rhs >= disc:
            return q
        q -= 1


def argmax_scan(values: Sequence[int]) -> tuple[int, int]:
    """First and last index at which ``values`` attains its maximum."""
    if not values:
        raise UsageError("empty sequence")
    top = max(values)
    idx = [i for i, v in enumerate(values) if v == top]
    return idx[0], idx[-1]


def shallow_diagonal(n0: int, d: int = 1) -> list[int]:
    """``C(n0 - i*d, i)`` over its positive support."""
    if d < 0 or n0 < 0:
        raise DomainError("need n0 >= 0 and d >= 0")
    out = []
    i = 0
    while True:
        v = binomial(n0 - i * d, i)
        if v == 0:
            return out
        out.append(v)
        i += 1


def least_mode_index(n0: int, d: int = 1) -> int:
    """Least ``i`` maximizing ``C(n0 - i*d, i)``, found by exhaustive scan."""
    return argmax_scan(shallow_diagonal(n0, d))[0]
