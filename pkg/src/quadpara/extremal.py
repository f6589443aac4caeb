"""Extremal quadrilaterals and parallelograms of a convex polygon.

Three routes to the same two numbers:

* `combined_extremes` runs one merged half-turn sweep and reports both the
  largest contained quadrilateral and the smallest enclosing parallelogram,
  each with a verified conjugate-pair certificate (a quadrilateral whose
  diagonal is parallel to the direction to which the parallelogram's sides
  are anchored, with each corner on the corresponding side; the sandwich
  F inside P inside G proves joint optimality, and area(G) = 2 area(F)).
* `largest_quadrilateral` is the specialized antipodal-pair walk for the
  quadrilateral alone.
* `smallest_parallelogram` is the specialized edge-flush scan for the
  parallelogram alone, sweeping a full turn with one flush side.

Largest-quadrilateral candidates are evaluated only when a diagonal
endpoint sits at a vertex; smallest-parallelogram candidates only when a
side is edge-flush.  Between those events the areas are linear in the
sliding corner, so the extremes happen at interval endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import (
    ConvexPolygon,
    Direction,
    GeometryError,
    Line,
    ParallelLines,
    Point,
    SweepOverrun,
    _vec,
    chord_through,
    contains_point,
    extreme_vertex,
    line_intersection,
    quad_area,
)


@dataclass(frozen=True)
class QuadResult:
    """A contained quadrilateral: CCW corners, their vertex indices where a
    corner coincides with a polygon vertex (None for a slid corner), area."""

    corners: tuple[Point, Point, Point, Point]
    vertex_indices: tuple[Optional[int], Optional[int], Optional[int], Optional[int]]
    area: float


@dataclass(frozen=True)
class ParaResult:
    """An enclosing parallelogram: CCW corners ordered (d^a, a^b, b^c, c^d),
    the two side directions, area, and the polygon vertex touched by each of
    the sides a, b, c, d (for a flush side, the earlier endpoint of the
    flush edge)."""

    corners: tuple[Point, Point, Point, Point]
    side_dir_bd: Direction
    side_dir_ac: Direction
    area: float
    touch_indices: tuple[int, int, int, int]


@dataclass(frozen=True)
class CertificateChecks:
    anchoring_d: bool
    anchoring_s: bool
    corner_on_side: tuple[bool, bool, bool, bool]
    quad_in_polygon: bool
    polygon_in_para: bool
    area_ratio: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.anchoring_d
            and self.anchoring_s
            and all(self.corner_on_side)
            and self.quad_in_polygon
            and self.polygon_in_para
            and self.area_ratio
        )


@dataclass(frozen=True)
class ConjugateCertificate:
    quad: QuadResult
    para: ParaResult
    anchor: Direction
    checks: CertificateChecks


@dataclass(frozen=True)
class ExtremesReport:
    max_quad: QuadResult
    min_para: ParaResult
    quad_certificate: ConjugateCertificate
    para_certificate: ConjugateCertificate
    predicate_count: int


def slide_corner(edge_from, edge_to, opposite, u_bd) -> Point:
    """Intersection of the edge line through (edge_from, edge_to) with the
    line through `opposite` in direction u_bd.

    Raises ParallelLines when the edge is parallel to u_bd.
    """
    fx, fy = _vec(edge_from)
    tx, ty = _vec(edge_to)
    ox, oy = _vec(opposite)
    ux, uy = _vec(u_bd)
    ex, ey = tx - fx, ty - fy
    den = ex * uy - ey * ux
    if den == 0.0:
        raise ParallelLines("sliding edge is parallel to the chord direction")
    s = ((ox - fx) * uy - (oy - fy) * ux) / den
    return Point(fx + s * ex, fy + s * ey)


def star_area(edge_from, edge_to, p_a_or_c, p_b, p_c_or_a, p_d, u_bd) -> float:
    """Area of the quadrilateral with one corner slid along the edge line so
    that the diagonal from p_c_or_a is parallel to u_bd, via the closed
    determinant-ratio form (no explicit intersection point).

    p_a_or_c is the quadrilateral's corner being slid (any point on the edge
    line gives the same value).  Raises ParallelLines when the edge is
    parallel to u_bd.
    """
    fx, fy = _vec(edge_from)
    tx, ty = _vec(edge_to)
    ax, ay = _vec(p_a_or_c)
    bx, by = _vec(p_b)
    cx, cy = _vec(p_c_or_a)
    dx, dy = _vec(p_d)
    ux, uy = _vec(u_bd)
    ex, ey = tx - fx, ty - fy
    den = ex * uy - ey * ux
    if den == 0.0:
        raise ParallelLines("sliding edge is parallel to the chord direction")
    num = (ex * (cy - ay) - ey * (cx - ax)) * (ux * (dy - by) - uy * (dx - bx))
    return 0.5 * abs(num / den)


def _supports(P: ConvexPolygon, base, v, eps_dist: float) -> bool:
    """Whether the line through `base` with direction v has all of P on one
    side, within a signed-distance slack of eps_dist."""
    bx, by = _vec(base)
    vx, vy = _vec(v)
    xy = P.coords()
    cr = vx * (xy[:, 1] - by) - vy * (xy[:, 0] - bx)
    slack = eps_dist * math.hypot(vx, vy)
    return not (bool((cr > slack).any()) and bool((cr < -slack).any()))


def _locate_on_boundary(P: ConvexPolygon, pt, tol_dist: float):
    """Classify a boundary point as ("vertex", i) or ("edge", k)."""
    px, py = _vec(pt)
    n = P.n
    for i, q in enumerate(P.vertices):
        if math.hypot(px - q.x, py - q.y) <= tol_dist:
            return ("vertex", i)
    best = None
    best_res = math.inf
    for k in range(n):
        q = P.vertices[k]
        ex, ey = P.edge_vector(k)
        res = abs(ex * (py - q.y) - ey * (px - q.x)) / math.hypot(ex, ey)
        t = ((px - q.x) * ex + (py - q.y) * ey) / (ex * ex + ey * ey)
        if -1e-9 <= t <= 1 + 1e-9 and res < best_res:
            best_res = res
            best = k
    if best is None or best_res > max(tol_dist, 1e-6 * (P.scale + 1.0)):
        raise GeometryError(f"point {(px, py)} does not lie on the polygon boundary")
    return ("edge", best)


def _side_direction(P: ConvexPolygon, a_pt, c_pt, loc_a, loc_c, eps_dist: float):
    """A direction v such that the lines through both chord endpoints
    parallel to v support P.  A mid-edge endpoint forces its edge direction;
    otherwise the incident edges of the two vertices are tried in order."""
    candidates: list[tuple[float, float]] = []
    for loc in (loc_a, loc_c):
        kind, idx = loc
        if kind == "edge":
            candidates.append(P.edge_vector(idx))
        else:
            candidates.append(P.edge_vector((idx - 1) % P.n))
            candidates.append(P.edge_vector(idx))
    for v in candidates:
        if _supports(P, a_pt, v, eps_dist) and _supports(P, c_pt, v, eps_dist):
            return v
    return candidates[0]


def _para_from_lines(
    a_line: Line,
    b_line: Line,
    c_line: Line,
    d_line: Line,
    touch: tuple[int, int, int, int],
    area: Optional[float] = None,
) -> ParaResult:
    g0 = line_intersection(d_line, a_line)
    g1 = line_intersection(a_line, b_line)
    g2 = line_intersection(b_line, c_line)
    g3 = line_intersection(c_line, d_line)
    if area is None:
        area = quad_area(g0, g1, g2, g3)
    return ParaResult((g0, g1, g2, g3), b_line.dir, a_line.dir, area, touch)


def anchored_conjugate_pair(P: ConvexPolygon, u) -> tuple[QuadResult, ParaResult]:
    """The largest contained quadrilateral whose diagonal is parallel to u,
    with the smallest enclosing parallelogram whose sides are parallel to u.

    The pair is conjugate: the quadrilateral's diagonal is the longest chord
    parallel to u, the other two corners touch the supporting lines parallel
    to u, and the parallelogram has exactly twice the quadrilateral's area.
    """
    uc = Direction(*_vec(u)).canonical()
    tol_dist = 1e-9 * (P.scale + 1.0)

    best_seg = None
    best_ext = -1.0
    for q in P.vertices:
        seg = chord_through(P, q, uc)
        ext = (seg.b.x - seg.a.x) * uc.dx + (seg.b.y - seg.a.y) * uc.dy
        if ext > best_ext:
            best_ext = ext
            best_seg = seg
    assert best_seg is not None
    a_pt, c_pt = best_seg.a, best_seg.b

    loc_a = _locate_on_boundary(P, a_pt, tol_dist)
    loc_c = _locate_on_boundary(P, c_pt, tol_dist)
    v = _side_direction(P, a_pt, c_pt, loc_a, loc_c, tol_dist)

    b_idx = extreme_vertex(P, (uc.dy, -uc.dx))
    d_idx = extreme_vertex(P, (-uc.dy, uc.dx))
    b_pt, d_pt = P.vertices[b_idx], P.vertices[d_idx]

    idx_a = loc_a[1] if loc_a[0] == "vertex" else None
    idx_c = loc_c[1] if loc_c[0] == "vertex" else None
    quad = QuadResult(
        (a_pt, b_pt, c_pt, d_pt),
        (idx_a, b_idx, idx_c, d_idx),
        quad_area(a_pt, b_pt, c_pt, d_pt),
    )

    vdir = Direction(*v)
    touch = (loc_a[1], b_idx, loc_c[1], d_idx)
    para = _para_from_lines(
        Line(a_pt, vdir), Line(b_pt, uc), Line(c_pt, vdir), Line(d_pt, uc), touch
    )
    return quad, para


def verify_conjugate_pair(
    F: QuadResult, G: ParaResult, u, P: ConvexPolygon, tol: float = 1e-9
) -> ConjugateCertificate:
    """Evaluate every conjugate-pair condition plus the sandwich containments
    and the factor-two area relation; failures are recorded, not raised.

    All distance-like comparisons use tol * scale, areas tol * scale**2,
    where scale is the polygon's max absolute coordinate.
    """
    ux, uy = _vec(u)
    udir = Direction(ux, uy)
    scale = P.scale + 1.0
    dist_tol = tol * scale
    ulen = math.hypot(ux, uy)

    A, B, C, D = F.corners
    anchoring_d = abs((C.x - A.x) * uy - (C.y - A.y) * ux) / ulen <= dist_tol

    sb = G.side_dir_bd
    anchoring_s = (
        abs(sb.dx * uy - sb.dy * ux) / (math.hypot(sb.dx, sb.dy) * ulen) <= tol
    )

    g = G.corners
    sides = ((g[0], g[1]), (g[1], g[2]), (g[2], g[3]), (g[3], g[0]))
    on_side = []
    for corner, (p, q) in zip((A, B, C, D), sides):
        ex, ey = q.x - p.x, q.y - p.y
        elen = math.hypot(ex, ey)
        if elen == 0.0:
            on_side.append(math.hypot(corner.x - p.x, corner.y - p.y) <= dist_tol)
        else:
            on_side.append(abs(ex * (corner.y - p.y) - ey * (corner.x - p.x)) / elen <= dist_tol)

    quad_in_polygon = all(contains_point(P, corner, dist_tol) for corner in F.corners)

    gx = np.array([p.x for p in g])
    gy = np.array([p.y for p in g])
    doubled = float(np.dot(gx, np.roll(gy, -1)) - np.dot(np.roll(gx, -1), gy))
    if doubled < 0.0:
        gx, gy = gx[::-1], gy[::-1]
    xy = P.coords()
    inside = True
    for k in range(4):
        ex = gx[(k + 1) % 4] - gx[k]
        ey = gy[(k + 1) % 4] - gy[k]
        cr = ex * (xy[:, 1] - gy[k]) - ey * (xy[:, 0] - gx[k])
        if not bool((cr >= -dist_tol * math.hypot(ex, ey)).all()):
            inside = False
            break

    area_ratio = abs(G.area - 2.0 * F.area) <= tol * scale * scale

    checks = CertificateChecks(
        anchoring_d=anchoring_d,
        anchoring_s=anchoring_s,
        corner_on_side=tuple(on_side),
        quad_in_polygon=quad_in_polygon,
        polygon_in_para=inside,
        area_ratio=area_ratio,
    )
    return ConjugateCertificate(F, G, udir, checks)


def _combined_sweep(pts):
    """The merged half-turn sweep over a CCW strictly convex vertex tuple.

    Returns (maxarea, max_state, minarea, min_state, predicate_count) where
    max_state is the vertex-index quadruple of the best contained
    quadrilateral and min_state is (a_slides, a, b, c, d, ubx, uby, slid)
    for the best enclosing parallelogram.  predicate_count counts every
    2x2 determinant sign evaluation the sweep performs.
    """
    n = len(pts)
    # Flat coordinate arrays with raw forward indices; no modulo in the loop.
    xs = [q[0] for q in pts] * 3
    ys = [q[1] for q in pts] * 3
    ndet = 0

    # Start: a0 = 0; c0 = the vertex whose supporting line is parallel to
    # edge (0, 1), reached while the triangle over that edge strictly grows.
    e0x = xs[1] - xs[0]
    e0y = ys[1] - ys[0]
    c = 1
    while c <= n:
        ndet += 1
        if e0x * (ys[c + 1] - ys[c]) - e0y * (xs[c + 1] - xs[c]) > 0.0:
            c += 1
        else:
            break
    else:
        raise SweepOverrun("initial support search did not settle")
    a0 = 0
    c0 = c
    a = 0

    # A slides on edge (a, a+1); u_ac is the chord direction at which it
    # arrives at the next vertex.
    ac_a = True
    u_acx = xs[c] - xs[a + 1]
    u_acy = ys[c] - ys[a + 1]

    b = a
    rx = xs[a] - xs[c]
    ry = ys[a] - ys[c]
    while b <= 2 * n:
        ndet += 1
        if rx * (ys[b + 1] - ys[b]) - ry * (xs[b + 1] - xs[b]) > 0.0:
            b += 1
        else:
            break
    else:
        raise SweepOverrun("support vertex b did not settle")
    d = c
    while d <= 2 * n:
        ndet += 1
        if -rx * (ys[d + 1] - ys[d]) + ry * (xs[d + 1] - xs[d]) > 0.0:
            d += 1
        else:
            break
    else:
        raise SweepOverrun("support vertex d did not settle")

    ndet += 1
    ebx = xs[b + 1] - xs[b]
    eby = ys[b + 1] - ys[b]
    edx = xs[d + 1] - xs[d]
    edy = ys[d + 1] - ys[d]
    if ebx * edy - eby * edx <= 0.0:
        bd_b = True
        u_bdx, u_bdy = ebx, eby
    else:
        bd_b = False
        u_bdx = xs[d] - xs[d + 1]
        u_bdy = ys[d] - ys[d + 1]

    maxarea = 0.0
    max_state = None
    minarea = math.inf
    min_state = None
    guard = 8 * n + 16
    steps = 0

    while True:
        steps += 1
        if steps > guard:
            raise SweepOverrun(f"more than {guard} sweep events for n={n}")
        ndet += 1
        if u_bdx * u_acy - u_bdy * u_acx >= 0.0:
            # A support side goes edge-flush: enclosing-parallelogram
            # candidate with the sliding diagonal endpoint mid-edge.
            if ac_a:
                fx = xs[a]
                fy = ys[a]
                ex = xs[a + 1] - fx
                ey = ys[a + 1] - fy
                sx = xs[c]
                sy = ys[c]
            else:
                fx = xs[c]
                fy = ys[c]
                ex = xs[c + 1] - fx
                ey = ys[c + 1] - fy
                sx = xs[a]
                sy = ys[a]
            ndet += 3
            den = ex * u_bdy - ey * u_bdx
            if den != 0.0:
                num = (ex * (sy - fy) - ey * (sx - fx)) * (
                    u_bdx * (ys[d] - ys[b]) - u_bdy * (xs[d] - xs[b])
                )
                cand = abs(num / den)
                if cand < minarea:
                    minarea = cand
                    s = ((sx - fx) * u_bdy - (sy - fy) * u_bdx) / den
                    min_state = (
                        ac_a,
                        a % n,
                        b % n,
                        c % n,
                        d % n,
                        u_bdx,
                        u_bdy,
                        (fx + s * ex, fy + s * ey),
                    )
            else:
                ndet += 1
                if u_bdx * (sy - fy) - u_bdy * (sx - fx) == 0.0:
                    # Chord lies along the sliding edge itself; the corner
                    # sits at the edge's base vertex.
                    cand = abs(
                        (xs[c] - xs[a]) * (ys[d] - ys[b])
                        - (ys[c] - ys[a]) * (xs[d] - xs[b])
                    )
                    if cand < minarea:
                        minarea = cand
                        min_state = (ac_a, a % n, b % n, c % n, d % n, u_bdx, u_bdy, (fx, fy))
                # Otherwise the flush direction cannot meet the sliding edge:
                # a stale event at a parallel-edge tie; skip the candidate.
            if bd_b:
                b += 1
            else:
                d += 1
            ndet += 1
            ebx = xs[b + 1] - xs[b]
            eby = ys[b + 1] - ys[b]
            edx = xs[d + 1] - xs[d]
            edy = ys[d + 1] - ys[d]
            if ebx * edy - eby * edx <= 0.0:
                bd_b = True
                u_bdx, u_bdy = ebx, eby
            else:
                bd_b = False
                u_bdx = xs[d] - xs[d + 1]
                u_bdy = ys[d] - ys[d + 1]
        else:
            # The sliding diagonal endpoint reaches a vertex: contained-
            # quadrilateral candidate with all corners at vertices.
            if ac_a:
                a += 1
            else:
                c += 1
            ndet += 1
            ar = (xs[c] - xs[a]) * (ys[d] - ys[b]) - (ys[c] - ys[a]) * (xs[d] - xs[b])
            if ar < 0.0:
                ar = -ar
            ar *= 0.5
            if ar > maxarea:
                maxarea = ar
                max_state = (a % n, b % n, c % n, d % n)
            ndet += 1
            eax = xs[a + 1] - xs[a]
            eay = ys[a + 1] - ys[a]
            ecx = xs[c + 1] - xs[c]
            ecy = ys[c + 1] - ys[c]
            if eax * ecy - eay * ecx <= 0.0:
                ac_a = True
                u_acx = xs[c] - xs[a + 1]
                u_acy = ys[c] - ys[a + 1]
            else:
                ac_a = False
                u_acx = xs[c + 1] - xs[a]
                u_acy = ys[c + 1] - ys[a]
            if a % n == c0 % n and c % n == a0:
                break

    if max_state is None or min_state is None:
        raise SweepOverrun("sweep finished without candidates; invalid polygon?")
    return maxarea, max_state, minarea, min_state, ndet


def combined_extremes(P: ConvexPolygon, tol: float = 1e-9) -> ExtremesReport:
    """Both extremal figures from one merged sweep, with verified
    conjugate-pair certificates and the sweep's predicate count."""
    pts = P.vertices
    n = P.n
    maxarea, (ma, mb, mc, md), minarea, mstate, ndet = _combined_sweep(pts)
    tol_dist = tol * (P.scale + 1.0)

    qa, qb, qc, qd = pts[ma], pts[mb], pts[mc], pts[md]
    max_quad = QuadResult((qa, qb, qc, qd), (ma, mb, mc, md), maxarea)
    u_max = Direction(qc.x - qa.x, qc.y - qa.y)
    v_max = Direction(*_side_direction(P, qa, qc, ("vertex", ma), ("vertex", mc), tol_dist))
    g_max = _para_from_lines(
        Line(qa, v_max),
        Line(qb, u_max),
        Line(qc, v_max),
        Line(qd, u_max),
        (ma, mb, mc, md),
    )
    quad_cert = verify_conjugate_pair(max_quad, g_max, u_max, P, tol)

    a_slides, sa, sb_, sc, sd, ubx, uby, slid_xy = mstate
    slid = Point(*slid_xy)
    pa, pb, pc, pd = pts[sa], pts[sb_], pts[sc], pts[sd]
    if a_slides:
        f_corners = (slid, pb, pc, pd)
        f_indices = (None, sb_, sc, sd)
        edge_dir = Direction(*P.edge_vector(sa))
        a_line = Line(slid, edge_dir)
        c_line = Line(pc, edge_dir)
    else:
        f_corners = (pa, pb, slid, pd)
        f_indices = (sa, sb_, None, sd)
        edge_dir = Direction(*P.edge_vector(sc))
        a_line = Line(pa, edge_dir)
        c_line = Line(slid, edge_dir)
    min_f = QuadResult(f_corners, f_indices, quad_area(*f_corners))
    u_min = Direction(ubx, uby)
    min_para = _para_from_lines(
        a_line,
        Line(pb, u_min),
        c_line,
        Line(pd, u_min),
        (sa, sb_, sc, sd),
        area=minarea,
    )
    para_cert = verify_conjugate_pair(min_f, min_para, u_min, P, tol)

    return ExtremesReport(max_quad, min_para, quad_cert, para_cert, ndet)


def largest_quadrilateral(P: ConvexPolygon) -> QuadResult:
    """Largest contained quadrilateral via the antipodal-pair walk alone.

    Starts from the vertical extreme vertices, advances the diagonal pair
    (a, c) one vertex per step, and keeps the two far support vertices b, d
    updated; all corners of the result are polygon vertices.
    """
    from .calipers import vertical_extremes

    n = P.n
    pts = P.vertices

    def pt(i):
        return pts[i % n]

    a0, c0 = vertical_extremes(P)
    a, c = a0, c0
    b, d = a, c
    maxarea = -1.0
    best = None
    guard = 8 * n + 16
    steps = 0
    while True:
        steps += 1
        if steps > guard:
            raise SweepOverrun(f"more than {guard} antipodal steps for n={n}")
        pa, pc = pt(a), pt(c)
        rx, ry = pa.x - pc.x, pa.y - pc.y
        while True:
            steps += 1
            if steps > guard:
                raise SweepOverrun("support vertex b did not settle")
            q, r = pt(b), pt(b + 1)
            if rx * (r.y - q.y) - ry * (r.x - q.x) > 0.0:
                b += 1
            else:
                break
        while True:
            steps += 1
            if steps > guard:
                raise SweepOverrun("support vertex d did not settle")
            q, r = pt(d), pt(d + 1)
            if -rx * (r.y - q.y) + ry * (r.x - q.x) > 0.0:
                d += 1
            else:
                break
        ar = quad_area(pa, pt(b), pc, pt(d))
        if ar > maxarea:
            maxarea = ar
            best = (a % n, b % n, c % n, d % n)
        eax, eay = pt(a + 1).x - pa.x, pt(a + 1).y - pa.y
        ecx, ecy = pt(c + 1).x - pc.x, pt(c + 1).y - pc.y
        if eax * ecy - eay * ecx <= 0.0:
            a += 1
        else:
            c += 1
        if a % n == c0 and c % n == a0:
            break
    assert best is not None
    ia, ib, ic, id_ = best
    return QuadResult((pts[ia], pts[ib], pts[ic], pts[id_]), best, maxarea)


def smallest_parallelogram(P: ConvexPolygon) -> ParaResult:
    """Smallest enclosing parallelogram via the edge-flush full-turn scan.

    For each edge of P, one parallelogram side is flush with it; the
    opposite support vertex and the antipodal chord parallel to the edge
    are carried along and updated on the fly.
    """
    n = P.n
    pts = P.vertices

    def pt(i):
        return pts[i % n]

    def edge(i):
        p, q = pt(i), pt(i + 1)
        return q.x - p.x, q.y - p.y

    c, d, a = 1, 1, 2
    guard = 16 * n + 32
    steps = 0
    while True:
        steps += 1
        if steps > guard:
            raise SweepOverrun("initial opposite-vertex search did not settle")
        ecx, ecy = edge(c)
        eax, eay = edge(a)
        if ecx * eay - ecy * eax > 0.0:
            a += 1
        else:
            break

    minarea = math.inf
    best = None
    for b in range(n):
        ux, uy = edge(b)
        while True:
            steps += 1
            if steps > guard:
                raise SweepOverrun("opposite vertex d did not settle")
            edx, edy = edge(d)
            if ux * edy - uy * edx > 0.0:
                d += 1
            else:
                break

        def settle_a():
            # Advance a to the vertex opposite edge (c, c+1); on a parallel-
            # edge tie, cross the flat stretch only while p_{a+1} still
            # reaches at least as far as p_c for the current direction u.
            nonlocal a, steps
            while True:
                steps += 1
                if steps > guard:
                    raise SweepOverrun("opposite vertex a did not settle")
                ecx, ecy = edge(c)
                eax, eay = edge(a)
                cross = ecx * eay - ecy * eax
                if cross > 0.0:
                    a += 1
                    continue
                if cross == 0.0:
                    s = pt(a + 1)
                    t = pt(c)
                    if ux * (s.y - t.y) - uy * (s.x - t.x) >= 0.0:
                        a += 1
                        continue
                break

        settle_a()
        while True:
            steps += 1
            if steps > guard:
                raise SweepOverrun("chord edge c did not settle")
            q = pt(a)
            r = pt(c + 1)
            if ux * (q.y - r.y) - uy * (q.x - r.x) > 0.0:
                c += 1
                settle_a()
            else:
                break
        pa, pc = pt(a), pt(c)
        if ux * (pa.y - pc.y) - uy * (pa.x - pc.x) >= 0.0:
            ecx, ecy = edge(c)
            den = ecx * uy - ecy * ux
            if den != 0.0:
                s = ((pa.x - pc.x) * uy - (pa.y - pc.y) * ux) / den
                c_slid = Point(pc.x + s * ecx, pc.y + s * ecy)
            else:
                # Chord through p_a runs along the flush-parallel edge line.
                c_slid = pc
            cand = 2.0 * quad_area(pa, pt(b), c_slid, pt(d))
            if cand < minarea:
                minarea = cand
                best = (a % n, b % n, c % n, d % n, c_slid)
    if best is None:
        raise SweepOverrun("no edge-flush candidate found; invalid polygon?")
    ia, ib, ic, id_, c_slid = best
    u = Direction(*P.edge_vector(ib))
    v = Direction(*P.edge_vector(ic))
    return _para_from_lines(
        Line(pts[ia], v),
        Line(pts[ib], u),
        Line(c_slid, v),
        Line(pts[id_], u),
        (ia, ib, ic, id_),
        area=minarea,
    )
