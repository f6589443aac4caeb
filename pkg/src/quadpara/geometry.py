"""Exact-sign planar primitives and convex-polygon validation.

All coordinates are binary64.  Every orientation decision is taken from the
sign of a 2x2 determinant with no epsilon.  On integer inputs with
|coordinate| <= 2**20 those determinants are computed exactly, so strict and
non-strict comparisons of triangle areas over a common base never disagree
with the true signs; tie cases (parallel edges) therefore branch correctly.
Tolerances appear only in containment/residual checks, where they are always
relative to the coordinate scale of the polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class TooFewVertices(GeometryError):
    pass


class NotConvex(GeometryError):
    pass


class Degenerate(GeometryError):
    """Collinear triple, duplicate point, or zero-length direction."""


class NonFinite(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class SweepOverrun(RuntimeError):
    """A rotating sweep exceeded its event budget (predicate-sign corruption)."""


class DegenerateSample(RuntimeError):
    """A random generator failed to produce a usable polygon."""


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Direction:
    """A nonzero vector modulo scaling: u and -u compare equal."""

    dx: float
    dy: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.dx) and math.isfinite(self.dy)):
            raise NonFinite(f"direction components must be finite: {(self.dx, self.dy)}")
        if self.dx == 0.0 and self.dy == 0.0:
            raise Degenerate("zero vector is not a direction")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Direction):
            return NotImplemented
        return self.dx * other.dy - self.dy * other.dx == 0.0

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def perp(self) -> "Direction":
        """Rotate a quarter turn counterclockwise."""
        return Direction(-self.dy, self.dx)

    def canonical(self) -> "Direction":
        """The representative with dy > 0, or dy == 0 and dx > 0."""
        if self.dy < 0.0 or (self.dy == 0.0 and self.dx < 0.0):
            return Direction(-self.dx, -self.dy)
        return self


class Segment(NamedTuple):
    a: Point
    b: Point

    def length(self) -> float:
        return math.hypot(self.b.x - self.a.x, self.b.y - self.a.y)


class Line(NamedTuple):
    base: Point
    dir: Direction


def _vec(v) -> tuple[float, float]:
    """Coerce a Direction, Point, or coordinate pair to an (x, y) tuple."""
    if isinstance(v, Direction):
        return v.dx, v.dy
    x, y = v
    return float(x), float(y)


def det(u, v) -> float:
    """x1*y2 - x2*y1; positive iff v lies counterclockwise from u."""
    x1, y1 = _vec(u)
    x2, y2 = _vec(v)
    return x1 * y2 - x2 * y1


def triangle_area_signed(p, q, r) -> float:
    """Half the determinant of (q-p, r-p); positive iff p,q,r are CCW."""
    px, py = _vec(p)
    qx, qy = _vec(q)
    rx, ry = _vec(r)
    return 0.5 * ((qx - px) * (ry - py) - (rx - px) * (qy - py))


def quad_area(a, b, c, d) -> float:
    """Area of the convex CCW quadrilateral abcd: half |det(c-a, d-b)|.

    Degenerate quadrilaterals (coinciding corners, collapsed to a triangle
    or segment) are fine.
    """
    ax, ay = _vec(a)
    bx, by = _vec(b)
    cx, cy = _vec(c)
    dx, dy = _vec(d)
    return 0.5 * abs((cx - ax) * (dy - by) - (dx - bx) * (cy - ay))


class ConvexPolygon:
    """A strictly convex, counterclockwise vertex ring.

    Every consecutive vertex triple turns strictly left: no collinear triples
    and no duplicate points.  Vertex indices wrap modulo n in `__getitem__`
    and `edge_vector`.  Instances are immutable and safe to share.
    """

    __slots__ = ("vertices", "n", "_xy", "_scale")

    def __init__(self, points: Iterable[Sequence[float]]):
        pts = [Point(float(x), float(y)) for x, y in points]
        if len(pts) < 3:
            raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
        xy = np.asarray(pts, dtype=np.float64)
        if not np.isfinite(xy).all():
            raise NonFinite("vertex coordinates must be finite")
        x, y = xy[:, 0], xy[:, 1]
        doubled = np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)
        if doubled == 0.0:
            raise Degenerate("vertex ring has zero signed area")
        if doubled < 0.0:
            pts.reverse()
            xy = xy[::-1].copy()
            x, y = xy[:, 0], xy[:, 1]
        ex = np.roll(x, -1) - x
        ey = np.roll(y, -1) - y
        cross = ex * np.roll(ey, -1) - ey * np.roll(ex, -1)
        if (cross == 0.0).any():
            i = int(np.flatnonzero(cross == 0.0)[0])
            raise Degenerate(f"collinear or duplicate vertices around index {i + 1}")
        if (cross < 0.0).any():
            i = int(np.flatnonzero(cross < 0.0)[0])
            raise NotConvex(f"clockwise turn at vertex index {i + 1}")
        upper = (ey > 0.0) | ((ey == 0.0) & (ex > 0.0))
        if int(np.sum(~upper & np.roll(upper, -1))) != 1:
            raise NotConvex("edge directions wind more than once")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.n: int = len(pts)
        self._xy = xy
        self._scale = float(np.abs(xy).max())

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({list(self.vertices)!r})"

    def edge_vector(self, i: int) -> tuple[float, float]:
        p = self.vertices[i % self.n]
        q = self.vertices[(i + 1) % self.n]
        return q.x - p.x, q.y - p.y

    def coords(self) -> np.ndarray:
        """The cached (n, 2) float64 vertex array.  Do not mutate."""
        return self._xy

    @property
    def scale(self) -> float:
        """Max absolute coordinate; the reference for relative tolerances."""
        return self._scale


def make_convex_polygon(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Validate a vertex ring (either orientation) into a ConvexPolygon.

    Raises TooFewVertices, NonFinite, Degenerate (collinear triple or
    duplicate point; see `canonicalize`), or NotConvex.
    """
    return ConvexPolygon(points)


def canonicalize(points: Iterable[Sequence[float]]) -> list[Point]:
    """Strip duplicate points and interior-of-edge vertices from a weakly
    convex ring, returning a strictly convex CCW ring.

    Raises Degenerate if fewer than 3 extreme points remain.
    """
    pts = [Point(float(x), float(y)) for x, y in points]
    dedup: list[Point] = []
    for p in pts:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    if len(dedup) < 3:
        raise Degenerate("fewer than 3 distinct points")
    area2 = 0.0
    m = len(dedup)
    for i in range(m):
        p, q = dedup[i], dedup[(i + 1) % m]
        area2 += p.x * q.y - q.x * p.y
    if area2 == 0.0:
        raise Degenerate("ring has zero area")
    if area2 < 0.0:
        dedup.reverse()
    out = []
    for i in range(m):
        prev, cur, nxt = dedup[i - 1], dedup[i], dedup[(i + 1) % m]
        turn = (cur.x - prev.x) * (nxt.y - cur.y) - (cur.y - prev.y) * (nxt.x - cur.x)
        if turn != 0.0:
            out.append(cur)
    if len(out) < 3:
        raise Degenerate("fewer than 3 extreme points remain")
    return out


def polygon_area(P: ConvexPolygon) -> float:
    """Positive area of the polygon (shoelace)."""
    xy = P.coords()
    x, y = xy[:, 0], xy[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def extreme_vertex(P: ConvexPolygon, d) -> int:
    """Index of the vertex maximizing the dot product with d.

    Ties (an edge perpendicular to d) break toward the vertex later in CCW
    order among the maximizers, so downstream output is deterministic.
    """
    dx, dy = _vec(d)
    if dx == 0.0 and dy == 0.0:
        raise Degenerate("zero vector is not a direction")
    xy = P.coords()
    dots = xy[:, 0] * dx + xy[:, 1] * dy
    best = dots.max()
    idx = np.flatnonzero(dots == best)
    if len(idx) == 1:
        return int(idx[0])
    members = set(int(i) for i in idx)
    for i in members:
        if (i - 1) % P.n in members:
            return i
    return int(idx[-1])


def width(P: ConvexPolygon, u) -> float:
    """Distance between the two supporting lines of P parallel to u."""
    ux, uy = _vec(u)
    if ux == 0.0 and uy == 0.0:
        raise Degenerate("zero vector is not a direction")
    xy = P.coords()
    proj = xy[:, 0] * (-uy) + xy[:, 1] * ux
    return float(proj.max() - proj.min()) / math.hypot(ux, uy)


def chord_through(P: ConvexPolygon, q, u) -> Segment:
    """The intersection of the line {q + t*u} with P, as a segment.

    q must lie inside P or on its boundary.  The segment endpoints are
    ordered by increasing t, and may coincide (tangent at a corner).
    """
    qx, qy = _vec(q)
    ux, uy = _vec(u)
    if ux == 0.0 and uy == 0.0:
        raise Degenerate("zero vector is not a direction")
    xy = P.coords()
    vx, vy = xy[:, 0], xy[:, 1]
    ex = np.roll(vx, -1) - vx
    ey = np.roll(vy, -1) - vy
    c = ex * (qy - vy) - ey * (qx - vx)  # inside margin of q for each edge
    d = ex * uy - ey * ux
    t = -c / np.where(d == 0.0, 1.0, d)
    lo = t[d > 0.0]
    hi = t[d < 0.0]
    t0 = float(lo.max()) if lo.size else -math.inf
    t1 = float(hi.min()) if hi.size else math.inf
    if not (math.isfinite(t0) and math.isfinite(t1)):
        raise Degenerate("line does not leave the polygon; invalid polygon?")
    if t0 > t1:
        # Rounding at a tangency; collapse to the midpoint parameter.
        t0 = t1 = 0.5 * (t0 + t1)
    return Segment(Point(qx + t0 * ux, qy + t0 * uy), Point(qx + t1 * ux, qy + t1 * uy))


def line_intersection(l1: Line, l2: Line) -> Point:
    """The unique intersection point of two lines.

    Raises ParallelLines when their direction vectors have zero determinant.
    """
    px, py = _vec(l1.base)
    ux, uy = _vec(l1.dir)
    qx, qy = _vec(l2.base)
    vx, vy = _vec(l2.dir)
    den = ux * vy - uy * vx
    if den == 0.0:
        raise ParallelLines("line directions are parallel")
    s = ((qx - px) * vy - (qy - py) * vx) / den
    return Point(px + s * ux, py + s * uy)


def contains_point(P: ConvexPolygon, x, tol: float = 0.0) -> bool:
    """True iff x is within signed distance tol of the inner side of every
    edge line.  tol == 0 is the exact test."""
    px, py = _vec(x)
    xy = P.coords()
    vx, vy = xy[:, 0], xy[:, 1]
    ex = np.roll(vx, -1) - vx
    ey = np.roll(vy, -1) - vy
    cross = ex * (py - vy) - ey * (px - vx)
    if tol == 0.0:
        return bool((cross >= 0.0).all())
    return bool((cross >= -tol * np.hypot(ex, ey)).all())
