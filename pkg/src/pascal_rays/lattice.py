"""Southeastern lattice paths and the pair injection behind transversal log-concavity.

``P(n, k)`` is the set of paths from ``(0, n-k)`` to ``(k, 0)`` using unit
East and South steps; it has ``C(n, k)`` elements. For ``d < delta`` the map
:func:`injection_phi` sends ``P(n+d, k+delta) x P(n-d, k-delta)`` into
``P(n, k) x P(n, k)`` by cutting both paths at two points and swapping the
middle pieces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .algebra import binomial
from .errors import DomainError, InvariantViolation, UsageError

Point = tuple[int, int]

EAST = "E"
SOUTH = "S"


@dataclass(frozen=True)
class Path:
    n: int
    k: int
    steps: str

    def __post_init__(self):
        if len(self.steps) != self.n or self.steps.count(EAST) != self.k:
            raise DomainError(f"{self.steps!r} is not a path in P({self.n}, {self.k})")
        if set(self.steps) - {EAST, SOUTH}:
            raise DomainError("steps must be 'E' or 'S'")

    @property
    def start(self) -> Point:
        return (0, self.n - self.k)

    def points(self) -> list[Point]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == EAST:
                x += 1
            else:
                y -= 1
            pts.append((x, y))
        return pts

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class PathPair:
    first: Path
    second: Path


def enumerate_paths(n: int, k: int) -> list[Path]:
    if n < 0 or k < 0 or k > n:
        return []
    out = []
    for east in itertools.combinations(range(n), k):
        chosen = set(east)
        out.append(Path(n, k, "".join(EAST if t in chosen else SOUTH for t in range(n))))
    return out


def vertical_distance(p: Point, q: Point) -> int:
    if p[0] != q[0]:
        raise UsageError("vertical distance needs equal x-coordinates")
    return p[1] - q[1]


def horizontal_distance(p: Point, q: Point) -> int:
    if p[1] != q[1]:
        raise UsageError("horizontal distance needs equal y-coordinates")
    return p[0] - q[0]


def _steps_between(pts: list[Point]) -> str:
    return "".join(EAST if b[0] > a[0] else SOUTH for a, b in zip(pts, pts[1:]))


def _check_domain(n: int, k: int, d: int, delta: int):
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    if not 0 <= d < delta:
        raise DomainError("need 0 <= d < delta")
    if not (0 <= k - delta <= n - d and k + delta <= n + d):
        raise DomainError(
            f"P({n + d}, {k + delta}) x P({n - d}, {k - delta}) is empty"
        )


def injection_phi(p: Path, q: Path, n: int, k: int, d: int, delta: int) -> PathPair:
    """Image of ``(p, q)`` in ``P(n, k) x P(n, k)``.

    With ``e = delta - d``, ``p`` starts ``e`` below ``(0, n-k)`` and ``q``
    starts ``e`` above it. ``P1`` is the first point of ``p``, up to and
    including the first intersection ``I1``, whose point ``e`` units up lies
    on ``q`` (that point is ``Q1``). ``P2`` is the last point of ``p``, from the
    last intersection ``I2`` on, whose point ``delta`` units left lies on
    ``q`` (that point is ``Q2``). The images are
    ``p1 (lifted e) + q2 + p3 (moved delta west)`` and
    ``q1 (lowered e) + p2 + q3 (moved delta east)``.
    """
    _check_domain(n, k, d, delta)
    if (p.n, p.k) != (n + d, k + delta) or (q.n, q.k) != (n - d, k - delta):
        raise DomainError("paths do not belong to the stated families")
    e = delta - d
    pp, qp = p.points(), q.points()
    q_index = {pt: t for t, pt in enumerate(qp)}

    common = [t for t, pt in enumerate(pp) if pt in q_index]
    if not common:
        raise InvariantViolation(f"paths {p} and {q} never meet")
    i1, i2 = common[0], common[-1]

    a = next((t for t in range(i1 + 1) if (pp[t][0], pp[t][1] + e) in q_index), None)
    if a is None:
        raise InvariantViolation(f"no pair at vertical distance {e} up to I1 for {p}, {q}")
    b = next(
        (t for t in range(len(pp) - 1, i2 - 1, -1) if (pp[t][0] - delta, pp[t][1]) in q_index),
        None,
    )
    if b is None:
        raise InvariantViolation(f"no pair at horizontal distance {delta} from I2 on for {p}, {q}")
    qa = q_index[(pp[a][0], pp[a][1] + e)]
    qb = q_index[(pp[b][0] - delta, pp[b][1])]
    if not (a <= b and qa <= qb):
        raise InvariantViolation(f"cut points out of order for {p}, {q}")

    first = _steps_between(pp[: a + 1]) + _steps_between(qp[qa: qb + 1]) + _steps_between(pp[b:])
    second = _steps_between(qp[: qa + 1]) + _steps_between(pp[a: b + 1]) + _steps_between(qp[qb:])
    try:
        return PathPair(Path(n, k, first), Path(n, k, second))
    except DomainError as exc:
        raise InvariantViolation(f"image of {p}, {q} is not in P({n}, {k})^2") from exc


@dataclass
class InjectivityResult:
    ok: bool
    domain_size: int
    image_size: int
    codomain_size: int
    witness: Optional[tuple] = field(default=None)

    def __bool__(self):
        return self.ok


def verify_injectivity(n: int, k: int, d: int, delta: int) -> InjectivityResult:
    """Apply ``injection_phi`` to the whole domain and look for collisions.

    On failure ``witness`` holds two colliding domain pairs, or a single
    pair together with the error its image raised.
    """
    _check_domain(n, k, d, delta)
    seen = {}
    count = 0
    for p in enumerate_paths(n + d, k + delta):
        for q in enumerate_paths(n - d, k - delta):
            count += 1
            try:
                img = injection_phi(p, q, n, k, d, delta)
            except InvariantViolation as exc:
                return InjectivityResult(False, count, len(seen), binomial(n, k) ** 2,
                                         ((p.steps, q.steps), str(exc)))
            key = (img.first.steps, img.second.steps)
            if key in seen:
                return InjectivityResult(False, count, len(seen), binomial(n, k) ** 2,
                                         (seen[key], (p.steps, q.steps)))
            seen[key] = (p.steps, q.steps)
    return InjectivityResult(True, count, len(seen), binomial(n, k) ** 2)
