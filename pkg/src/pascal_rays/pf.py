"""Polya frequency tests and exhaustive sweeps over families of rays.

A finite positive sequence is PF when its generating polynomial has only
real roots. The sweeps check the three conjectured patterns (ray
unimodality, transversal PF, single log-concave/log-convex turn on steep
rays) over finite parameter grids. All verdicts are exact but relative to
the finite windows examined; the outcome records say which windows.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .algebra import RationalPolynomial, real_rooted
from .errors import DomainError, UsageError
from .props import classify, positive_support, ratio_sequence, turning_point, weak_turning_point
from .rays import RayParams, generate, line_origin, normalize
from .records import dumps, enc_frac, enc_ints


def generating_polynomial(values: Sequence[int]) -> RationalPolynomial:
    if not values:
        raise UsageError("empty sequence has no generating polynomial")
    return RationalPolynomial(values)


def _support_block(values: Sequence[int]) -> list[int]:
    support = positive_support(values)
    if support is None:
        raise DomainError("positive support is empty or not contiguous")
    return list(values[support[0]:support[1]])


def is_pf(values: Sequence[int]) -> bool:
    """Real-rootedness of the generating polynomial of the positive support."""
    return real_rooted(generating_polynomial(_support_block(values)))


def newton_check(values: Sequence[int]) -> bool:
    """``a_i**2 >= a_{i-1} a_{i+1} (1 + 1/i)(1 + 1/(n-i))`` for ``1 <= i <= n-1``."""
    a = list(values)
    if len(a) < 3:
        raise UsageError("Newton's inequalities need at least three terms")
    if any(v <= 0 for v in a):
        raise DomainError("Newton's inequalities are stated for positive sequences")
    n = len(a) - 1
    return all(
        a[i] * a[i] >= a[i - 1] * a[i + 1] * (1 + Fraction(1, i)) * (1 + Fraction(1, n - i))
        for i in range(1, n)
    )


def darroch_mean(values: Sequence[int]) -> Fraction:
    """``P'(1) / P(1)`` for the generating polynomial ``P``."""
    total = sum(values)
    if total <= 0:
        raise DomainError("mean undefined for a sequence with nonpositive sum")
    return Fraction(sum(i * v for i, v in enumerate(values)), total)


def darroch_bounds(values: Sequence[int]) -> tuple[int, int]:
    """Floor and ceiling of the mean; every mode of a PF sequence lies between them."""
    if not is_pf(values):
        raise DomainError("Darroch's bound needs a PF sequence")
    mean = darroch_mean(values)
    return math.floor(mean), math.ceil(mean)


@dataclass(frozen=True)
class PFReport:
    is_pf: bool
    newton_holds: Optional[bool]
    darroch_interval: Optional[tuple[int, int]]
    darroch_mean: Optional[Fraction]
    empirical_modes: Optional[tuple[int, int]]

    def as_dict(self) -> dict:
        return {
            "is_pf": self.is_pf,
            "newton_holds": self.newton_holds,
            "darroch_interval": list(self.darroch_interval) if self.darroch_interval else None,
            "darroch_mean": enc_frac(self.darroch_mean) if self.darroch_mean is not None else None,
            "empirical_modes": list(self.empirical_modes) if self.empirical_modes else None,
        }


def pf_report(values: Sequence[int]) -> PFReport:
    # indices refer to the positive support block
    block = _support_block(values)
    pf = real_rooted(generating_polynomial(block))
    newton = newton_check(block) if len(block) >= 3 else None
    interval = mean = None
    if pf:
        mean = darroch_mean(block)
        interval = (math.floor(mean), math.ceil(mean))
    return PFReport(pf, newton, interval, mean, classify(block).modes)


@dataclass(frozen=True)
class Grid:
    """Inclusive parameter ranges; ``k0`` is additionally capped by ``n0``."""

    max_n0: int
    max_d: int
    max_k0: Optional[int] = None
    max_delta: Optional[int] = None
    min_n0: int = 0
    min_d: int = 0
    min_delta: int = 0

    def describe(self) -> dict:
        return {
            "n0": [self.min_n0, self.max_n0],
            "k0": [0, self.max_n0 if self.max_k0 is None else self.max_k0],
            "d": [self.min_d, self.max_d],
            "delta": [self.min_delta, self.max_d if self.max_delta is None else self.max_delta],
        }

    def points(self) -> Iterator[tuple[int, int, int, int]]:
        kmax = self.max_n0 if self.max_k0 is None else self.max_k0
        dmax = self.max_d if self.max_delta is None else self.max_delta
        for n0 in range(self.min_n0, self.max_n0 + 1):
            for k0 in range(0, min(n0, kmax) + 1):
                for d in range(self.min_d, self.max_d + 1):
                    for delta in range(self.min_delta, dmax + 1):
                        yield n0, k0, d, delta


@dataclass
class SweepOutcome:
    conjecture: str
    grid: dict
    window: Optional[int]
    checked_count: int = 0
    skipped_count: int = 0
    counterexamples: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "grid": self.grid,
            "window": self.window,
            "checked_count": self.checked_count,
            "skipped_count": self.skipped_count,
            "counterexamples": self.counterexamples,
            "observations": self.observations,
            "notes": self.notes,
            "holds_on_grid": self.holds,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _parallel_map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _grid_rays(grid, keep: Callable[[int, int], bool]) -> tuple[list[RayParams], dict]:
    if isinstance(grid, Grid):
        rays = [RayParams(*pt) for pt in grid.points() if keep(pt[2], pt[3])]
        return rays, grid.describe()
    rays = [r if isinstance(r, RayParams) else RayParams(*r) for r in grid]
    rays = [r for r in rays if keep(r.d, r.delta)]
    return rays, {"rays": [list(r.as_tuple()) for r in rays]}


# --- ray unimodality -------------------------------------------------------

def _unimodal_task(item):
    params, window = item
    values = generate(params, 0, window).values
    if classify(values).is_unimodal:
        return None
    return {"ray": list(params.as_tuple()), "window": [0, window],
            "violated": "unimodal", "values": enc_ints(values)}


def sweep_conjecture_ray_unimodal(
    grid: Union[Grid, Iterable], window: int = 50, signed: bool = False, jobs: int = 1
) -> SweepOutcome:
    """Unimodality of every ray in ``grid`` over ``i < window``.

    With ``signed=True`` every combination of signs of ``d`` and ``delta`` is
    also tried; those rays are normalized over the window first, and rays
    whose reversed window leaves the triangle are counted as skipped.
    """
    if window < 1:
        raise UsageError("window must be positive")
    rays, desc = _grid_rays(grid, lambda d, delta: True)
    out = SweepOutcome("ray_unimodal", desc, window)
    if signed:
        seen = []
        for r in rays:
            for sd in (1, -1) if r.d else (1,):
                for sdl in (1, -1) if r.delta else (1,):
                    try:
                        seen.append(normalize(r.n0, r.k0, sd * r.d, sdl * r.delta, window))
                    except DomainError:
                        out.skipped_count += 1
        rays = seen
        out.notes.append("signed differences normalized over the window")
    results = _parallel_map(_unimodal_task, [(r, window) for r in rays], jobs)
    out.checked_count = len(rays)
    out.counterexamples = [r for r in results if r is not None]
    return out


# --- transversal PF --------------------------------------------------------

def transversal_support_length(params: RayParams) -> int:
    """Number of positive terms of a transversal (delta > d), which is finite."""
    if params.delta <= params.d:
        raise DomainError("support is infinite unless delta > d")
    return (params.n0 - params.k0) // (params.delta - params.d) + 1


def _pf_task(item):
    params, window, whole_line = item
    origin = line_origin(params)[0] if whole_line else params
    length = transversal_support_length(origin)
    truncated = window is not None and length > window
    if truncated:
        length = window
    values = generate(origin, 0, length).values
    if is_pf(values):
        return None, truncated
    return ({"ray": list(params.as_tuple()), "origin": list(origin.as_tuple()),
             "window": [0, length], "violated": "real_rooted",
             "polynomial": [enc_frac(c) for c in generating_polynomial(values).coefficients]},
            truncated)


def sweep_conjecture_pf(
    grid: Union[Grid, Iterable], window: Optional[int] = None, whole_line: bool = True,
    jobs: int = 1,
) -> SweepOutcome:
    """PF property of every transversal (delta > d) in ``grid``.

    By default each grid ray stands for the whole line through its origin:
    the origin is moved back to the edge of the triangle and the full
    positive support is taken, both unit end terms included. With
    ``whole_line=False`` only the forward part ``i >= 0`` is used; that
    reading fails already for (5, 3, 1, 2), whose terms 10, 6, 1 give
    ``10 + 6x + x**2``. A ``window`` shorter than a support truncates it,
    and the outcome notes how many sequences were affected.
    """
    rays, desc = _grid_rays(grid, lambda d, delta: delta > d)
    out = SweepOutcome("transversal_pf", desc, window)
    results = _parallel_map(_pf_task, [(r, window, whole_line) for r in rays], jobs)
    out.checked_count = len(rays)
    out.counterexamples = [c for c, _ in results if c is not None]
    out.notes.append("whole line through each origin" if whole_line
                     else "forward part i >= 0 of each ray only")
    cut = sum(1 for _, t in results if t)
    if cut:
        out.notes.append(f"{cut} supports truncated to the window; verdicts are window-relative")
    else:
        out.notes.append("full positive supports examined")
    return out


# --- steep-ray turning point -----------------------------------------------

TAIL_RUN = 5
MAX_DOUBLINGS = 5


def _increasing_tail(f: Sequence[Fraction]) -> int:
    run = 0
    for t in range(len(f) - 1, 0, -1):
        if f[t - 1] < f[t]:
            run += 1
        else:
            break
    return run


def _turning_task(item):
    params, window = item
    ray = list(params.as_tuple())
    horizon = window
    doublings = 0
    retried = False
    while True:
        values = generate(params, 0, horizon).values
        f = ratio_sequence(values)
        m = turning_point(values)
        weak = m is None
        if weak:
            m = weak_turning_point(values)
        if m is None:
            if retried:
                return {"ray": ray, "window": [0, horizon], "violated": "single_turn",
                        "ratios": [enc_frac(x) for x in f]}, None
            retried = True
            horizon *= 2
            continue
        obs = {"ray": ray, "turning_point": m, "horizon": horizon}
        if weak:
            obs["weak"] = True
        if _increasing_tail(f) >= TAIL_RUN:
            return None, obs
        if doublings == MAX_DOUBLINGS:
            obs["tail_short"] = True
            return None, obs
        doublings += 1
        horizon *= 2


def sweep_conjecture_turning(grid: Union[Grid, Iterable], window: int = 60,
                             jobs: int = 1) -> SweepOutcome:
    """Single log-concave to log-convex turn on every steep ray (d > delta > 0).

    A ray passes when its ratio sequence has one strict trough, or failing
    that when the weak form of the pattern holds (ratio ties allowed, as in
    the weak definitions of log-concavity and log-convexity). A window
    whose increasing tail is shorter than ``TAIL_RUN`` steps is doubled (at
    most ``MAX_DOUBLINGS`` times); a failed ray is re-checked once at twice
    the window before it is recorded. A pass is a statement about the
    examined horizon only.
    """
    if window < 3:
        raise UsageError("window must be at least 3")
    rays, desc = _grid_rays(grid, lambda d, delta: d > delta > 0)
    out = SweepOutcome("steep_turning", desc, window)
    results = _parallel_map(_turning_task, [(r, window) for r in rays], jobs)
    out.checked_count = len(rays)
    out.counterexamples = [c for c, _ in results if c is not None]
    out.observations = [o for _, o in results if o is not None]
    short = sum(1 for o in out.observations if o.get("tail_short"))
    out.notes.append(f"passes are relative to the recorded horizons (tail run >= {TAIL_RUN})")
    if short:
        out.notes.append(f"{short} rays did not show a {TAIL_RUN}-step increasing tail")
    return out
