"""Rotating-calipers machinery over a strictly convex polygon.

The central object is a half-turn sweep of an antipodal chord: two support
lines parallel to the chord are maintained at vertices b and d while the
chord endpoints walk the boundary, one of them sliding along a fixed edge
per interval.  Directions are kept as raw vectors and every ordering
decision is a determinant sign; angles never appear at runtime.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Union

from .geometry import ConvexPolygon, Direction, SweepOverrun, det


class AntipodalPair(NamedTuple):
    i: int
    j: int


class VerticalExtremes(NamedTuple):
    a0: int  # lowest vertex, leftmost among ties
    c0: int  # highest vertex, rightmost among ties


class DiagonalInterval(NamedTuple):
    """One structural interval of the antipodal chord: the stationary vertex
    q stays put while the other chord endpoint slides along edge e."""

    q: int
    e: int
    which_slides: str  # "A" or "C"
    dir_start: Direction
    dir_end: Direction


class SupportInterval(NamedTuple):
    """Directions in [dir_start, dir_end] all admit parallel supporting
    lines through vertices b and d."""

    b: int
    d: int
    dir_start: Direction
    dir_end: Direction


class SweepEvent(NamedTuple):
    """A snapshot of the merged sweep between two advances.

    next_ac says which chord endpoint slides ("A" on edge (a, a+1), "C" on
    edge (c, c+1)); u_ac is the chord direction at which that endpoint
    reaches the next vertex.  next_bd says which support side goes
    edge-flush next ("B" or "D"); u_bd is the direction at which it does.
    The sign of det(u_bd, u_ac) decides which event comes first.
    """

    a: int
    b: int
    c: int
    d: int
    next_ac: str
    next_bd: str
    u_ac: Direction
    u_bd: Direction


def vertical_extremes(P: ConvexPolygon) -> VerticalExtremes:
    """Lowest-leftmost and highest-rightmost vertex indices."""
    lo = hi = 0
    for i, p in enumerate(P.vertices):
        q = P.vertices[lo]
        if p.y < q.y or (p.y == q.y and p.x < q.x):
            lo = i
        r = P.vertices[hi]
        if p.y > r.y or (p.y == r.y and p.x > r.x):
            hi = i
    return VerticalExtremes(lo, hi)


def opposite_edge_start(P: ConvexPolygon) -> tuple[int, int]:
    """Start pair (0, c0): c0 is the vertex whose supporting line is
    parallel to edge (0, 1), found by walking while the triangle over that
    edge strictly grows."""
    n = P.n
    ex, ey = P.edge_vector(0)
    c = 1
    while c <= n:
        dx, dy = P.edge_vector(c)
        if ex * dy - ey * dx > 0.0:
            c += 1
        else:
            return 0, c % n
    raise SweepOverrun("support search around the polygon did not settle")


Start = Union[VerticalExtremes, tuple[int, int], None]


def merged_sweep(P: ConvexPolygon, start: Start = None) -> Iterator[SweepEvent]:
    """Drive the half-turn sweep from an antipodal vertex pair, yielding the
    initial state and then one state per single-index advance.

    The stream ends when the chord pair (a, c) returns swapped, i.e. equals
    (c0, a0).  Consecutive events differ in exactly one of a, b, c, d; a BD
    advance happens when det(u_bd, u_ac) >= 0 in the preceding event, an AC
    advance otherwise.  Raises SweepOverrun after 8n advances.
    """
    n = P.n
    pts = P.vertices

    def pt(i: int):
        return pts[i % n]

    def edge(i: int) -> tuple[float, float]:
        p = pts[i % n]
        q = pts[(i + 1) % n]
        return q.x - p.x, q.y - p.y

    if start is None:
        a0, c0 = opposite_edge_start(P)
    elif isinstance(start, VerticalExtremes):
        a0, c0 = start.a0, start.c0
    else:
        a0, c0 = start
    a0 %= n
    c0 %= n
    a, c = a0, c0

    guard = 8 * n + 16
    b = a
    pa, pc = pt(a), pt(c)
    rx, ry = pa.x - pc.x, pa.y - pc.y
    for _ in range(guard):
        ex, ey = edge(b)
        if rx * ey - ry * ex > 0.0:
            b += 1
        else:
            break
    else:
        raise SweepOverrun("support vertex b did not settle")
    d = c
    for _ in range(guard):
        ex, ey = edge(d)
        if -rx * ey + ry * ex > 0.0:
            d += 1
        else:
            break
    else:
        raise SweepOverrun("support vertex d did not settle")

    def ac_state(a: int, c: int) -> tuple[str, Direction]:
        eax, eay = edge(a)
        ecx, ecy = edge(c)
        if eax * ecy - eay * ecx <= 0.0:
            q, r = pt(c), pt(a + 1)
            return "A", Direction(q.x - r.x, q.y - r.y)
        q, r = pt(c + 1), pt(a)
        return "C", Direction(q.x - r.x, q.y - r.y)

    def bd_state(b: int, d: int) -> tuple[str, Direction]:
        ebx, eby = edge(b)
        edx, edy = edge(d)
        if ebx * edy - eby * edx <= 0.0:
            return "B", Direction(ebx, eby)
        q, r = pt(d), pt(d + 1)
        return "D", Direction(q.x - r.x, q.y - r.y)

    next_ac, u_ac = ac_state(a, c)
    next_bd, u_bd = bd_state(b, d)
    yield SweepEvent(a % n, b % n, c % n, d % n, next_ac, next_bd, u_ac, u_bd)

    steps = 0
    while not (a % n == c0 and c % n == a0):
        steps += 1
        if steps > guard:
            raise SweepOverrun(f"more than {guard} sweep events for n={n}")
        if det(u_bd, u_ac) >= 0.0:
            if next_bd == "B":
                b += 1
            else:
                d += 1
            next_bd, u_bd = bd_state(b, d)
        else:
            if next_ac == "A":
                a += 1
            else:
                c += 1
            next_ac, u_ac = ac_state(a, c)
        yield SweepEvent(a % n, b % n, c % n, d % n, next_ac, next_bd, u_ac, u_bd)


def support_intervals(P: ConvexPolygon) -> list[SupportInterval]:
    """The support-pair structure over a half turn of directions.

    Interval boundaries are exactly the edge directions of P reduced modulo
    a half turn, in CCW order starting from the lowest edge; parallel
    opposite edges merge into a single boundary.  On each closed interval
    the lines through vertices b and d parallel to the direction support P.
    """
    n = P.n
    a0, c0 = vertical_extremes(P)
    right = [(a0 + t) % n for t in range((c0 - a0) % n)]
    left = [(c0 + t) % n for t in range((a0 - c0) % n)]

    def canon(k: int) -> tuple[float, float]:
        ex, ey = P.edge_vector(k)
        if ey < 0.0 or (ey == 0.0 and ex < 0.0):
            return -ex, -ey
        return ex, ey

    i = j = 0
    b, d = a0, c0
    marks: list[tuple[float, float]] = []
    pairs: list[tuple[int, int]] = []
    while i < len(right) or j < len(left):
        if i < len(right) and j < len(left):
            u = canon(right[i])
            v = canon(left[j])
            cross = u[0] * v[1] - u[1] * v[0]
            take_r = cross >= 0.0
            take_l = cross <= 0.0
        else:
            take_r = i < len(right)
            take_l = not take_r
        if take_r:
            mark = canon(right[i])
            b = (right[i] + 1) % n
            i += 1
        if take_l:
            mark = canon(left[j])
            d = (left[j] + 1) % n
            j += 1
        marks.append(mark)
        pairs.append((b, d))
    out = []
    k = len(marks)
    for t in range(k):
        sx, sy = marks[t]
        ex, ey = marks[(t + 1) % k]
        out.append(SupportInterval(pairs[t][0], pairs[t][1], Direction(sx, sy), Direction(ex, ey)))
    return out


def antipodal_vertex_pairs(P: ConvexPolygon) -> list[AntipodalPair]:
    """Antipodal vertex pairs arising from the support-interval structure.

    Pairs supported only at the single direction of a parallel opposite
    edge pair are not produced.
    """
    seen: set[tuple[int, int]] = set()
    out: list[AntipodalPair] = []
    for iv in support_intervals(P):
        key = (iv.b, iv.d) if iv.b <= iv.d else (iv.d, iv.b)
        if key not in seen:
            seen.add(key)
            out.append(AntipodalPair(iv.b, iv.d))
    return out


def _raw_diagonal_walk(P: ConvexPolygon) -> list[tuple[int, int, str, Direction, Direction]]:
    """One half-turn walk of the antipodal chord from the vertical extremes:
    n structural intervals whose direction ranges chain continuously."""
    n = P.n
    pts = P.vertices

    def pt(i: int):
        return pts[i % n]

    def edge(i: int) -> tuple[float, float]:
        p, q = pts[i % n], pts[(i + 1) % n]
        return q.x - p.x, q.y - p.y

    a0, c0 = vertical_extremes(P)
    a, c = a0, c0
    pa, pc = pt(a), pt(c)
    cur = Direction(pc.x - pa.x, pc.y - pa.y)
    out = []
    for _ in range(8 * n + 16):
        if a % n == c0 and c % n == a0:
            return out
        eax, eay = edge(a)
        ecx, ecy = edge(c)
        if eax * ecy - eay * ecx <= 0.0:
            q, r = pt(c), pt(a + 1)
            nxt = Direction(q.x - r.x, q.y - r.y)
            out.append((c % n, a % n, "A", cur, nxt))
            a += 1
        else:
            q, r = pt(c + 1), pt(a)
            nxt = Direction(q.x - r.x, q.y - r.y)
            out.append((a % n, c % n, "C", cur, nxt))
            c += 1
        cur = nxt
    raise SweepOverrun("diagonal walk did not return to the swapped start")


def diagonal_intervals(P: ConvexPolygon) -> list[DiagonalInterval]:
    """The vertex-edge structure of the antipodal chord over the half turn
    of directions starting at (1, 0).

    Intervals partition the half turn and consecutive intervals share
    boundary directions.  When (1, 0) falls strictly inside a structural
    interval, that interval is listed twice (split head and tail), giving
    n + 1 entries; when (1, 0) is itself a breakpoint there are n entries.
    """
    raw = _raw_diagonal_walk(P)
    n = len(raw)
    start = Direction(1.0, 0.0)

    for i, (q, e, flag, s, _t) in enumerate(raw):
        if det(s, start) == 0.0:
            rolled = raw[i:] + raw[:i]
            out = []
            for k, (q2, e2, f2, s2, t2) in enumerate(rolled):
                if k >= n - i:  # wrapped past the half turn: negate representatives
                    s2, t2 = -s2, -t2
                out.append(DiagonalInterval(q2, e2, f2, s2, t2))
            return out

    for i, (q, e, flag, s, t) in enumerate(raw):
        for rep in (start, -start):
            if det(s, rep) > 0.0 and det(rep, t) > 0.0:
                head = DiagonalInterval(q, e, flag, rep, t)
                tail = DiagonalInterval(q, e, flag, -s, -rep)
                mid = []
                for k in range(1, n):
                    q2, e2, f2, s2, t2 = raw[(i + k) % n]
                    if i + k >= n:
                        s2, t2 = -s2, -t2
                    mid.append(DiagonalInterval(q2, e2, f2, s2, t2))
                return [head] + mid + [tail]
    raise SweepOverrun("direction (1, 0) not located in the chord structure")
