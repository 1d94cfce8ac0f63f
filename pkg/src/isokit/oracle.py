"""Brute force, independent of the closed-form candidate analysis: minimum
enclosing isosceles triangle by supporting-line optimization over (apex
angle, orientation), and the slide-based covering decision for one triangle
over another.

The key reduction: a minimal container touches the inner triangle on every
side, so for a fixed isosceles shape (apex angle) and orientation (axis
direction) the best container is the triangle bounded by the three
supporting lines of the input at the shape's outward side normals.  That
removes translation and scale analytically and leaves a 2D search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geo import (
    DEFAULT_TOLERANCES,
    CanonicalTriangle,
    DegenerateTriangle,
    NotScalene,
    Point,
    ShapeClass,
    Tolerances,
    Triangle,
    area,
)
from .minimize import MinimizerResult, minimum_isosceles_container

__all__ = [
    "UnboundedShape",
    "ShapeParams",
    "OracleResult",
    "VerificationReport",
    "min_triangle_for_shape",
    "brute_force_min_isosceles",
    "can_cover",
    "verify_triangle",
    "DEFAULT_COARSE_STEP",
    "DEFAULT_REFINE_ITERS",
]

DEFAULT_COARSE_STEP = math.radians(0.5)
DEFAULT_REFINE_ITERS = 8

_APEX_MARGIN = 1e-9  # radians; apex angles this close to 0 or pi are invalid
_TWO_PI = 2.0 * math.pi


class UnboundedShape(ValueError):
    """The three side normals fail to positively span the plane (impossible
    for a valid apex angle; defensive)."""


@dataclass(frozen=True)
class ShapeParams:
    """Isosceles container shape: apex angle in (0, pi) and the direction of
    the symmetry axis, pointing from the base midpoint toward the apex."""

    apex_angle: float
    rotation: float

    def __post_init__(self) -> None:
        if not _APEX_MARGIN < self.apex_angle < math.pi - _APEX_MARGIN:
            raise UnboundedShape(f"apex angle {self.apex_angle} outside (0, pi)")
        object.__setattr__(self, "rotation", self.rotation % _TWO_PI)


@dataclass(frozen=True)
class OracleResult:
    min_area: float
    witness: Triangle
    params: ShapeParams
    grid_resolution: float
    refined: bool


@dataclass(frozen=True)
class VerificationReport:
    """Closed form vs oracle for one triangle, with the boundary-structure
    checks every true minimizer must satisfy: all input vertices on the
    witness boundary, each witness side touching the input, one vertex per
    midpoint arc, a shared vertex, and a shared side plus endpoint angle."""

    input: CanonicalTriangle
    closed_form_area: float
    oracle_area: float
    relative_gap: float
    boundary_invariants_ok: bool
    shares_side_and_angle: bool
    min_result: MinimizerResult
    oracle_result: OracleResult
    flags: dict[str, bool] = field(default_factory=dict)


def _check_nondegenerate(t: Triangle, tol: Tolerances) -> None:
    if area(t) <= tol.eps_area(*t.vertices):
        raise DegenerateTriangle("oracle operations need a non-degenerate triangle")


def min_triangle_for_shape(
    t: Triangle, sp: ShapeParams, tol: Tolerances = DEFAULT_TOLERANCES
) -> Triangle:
    """Smallest isosceles triangle of the given shape/orientation containing
    `t`: the triangle bounded by the three supporting lines of `t` at the
    shape's outward side normals.  Every side touches `t`.
    """
    _check_nondegenerate(t, tol)
    half = 0.5 * sp.apex_angle
    sh, ch = math.sin(half), math.cos(half)
    if sh <= 0.0 or ch <= 0.0:
        raise UnboundedShape(f"apex angle {sp.apex_angle} does not bound a triangle")
    psi = sp.rotation
    ux, uy = math.cos(psi), math.sin(psi)  # axis: base midpoint -> apex
    px, py = -uy, ux

    def support(nx: float, ny: float) -> float:
        return max(v.x * nx + v.y * ny for v in t.vertices)

    # leg normals at psi +/- (pi/2 - half); base normal is -axis
    h1 = support(ux * sh - px * ch, uy * sh - py * ch)
    h2 = support(ux * sh + px * ch, uy * sh + py * ch)
    hb = support(-ux, -uy)

    xi_apex = (h1 + h2) / (2.0 * sh)
    eta_apex = (h2 - h1) / (2.0 * ch)
    xi_base = -hb
    eta_1 = -(h1 + hb * sh) / ch
    eta_2 = (h2 + hb * sh) / ch

    def to_point(xi: float, eta: float) -> Point:
        return Point(xi * ux + eta * px, xi * uy + eta * py)

    return Triangle(to_point(xi_apex, eta_apex), to_point(xi_base, eta_1), to_point(xi_base, eta_2))


def _support_area_grid(
    vx: np.ndarray, vy: np.ndarray, deltas: np.ndarray, psis: np.ndarray
) -> np.ndarray:
    """Areas of the supporting-line containers on the (apex, rotation) grid.

    Uses area = tan(delta/2) * H^2 with H the apex-to-base height assembled
    from three support values; everything broadcasts as (len(deltas),
    len(psis)).
    """
    half = 0.5 * deltas[:, None]
    sh, ch = np.sin(half), np.cos(half)
    cp, sp = np.cos(psis)[None, :], np.sin(psis)[None, :]
    o1 = sh * cp
    o2 = ch * sp
    o3 = sh * sp
    o4 = ch * cp
    c1 = o1 - o2  # cos of leg normal at psi + (pi/2 - half)
    s1 = o3 + o4
    c2 = o1 + o2  # cos of leg normal at psi - (pi/2 - half)
    s2 = o3 - o4
    h1 = np.maximum(
        np.maximum(vx[0] * c1 + vy[0] * s1, vx[1] * c1 + vy[1] * s1),
        vx[2] * c1 + vy[2] * s1,
    )
    h2 = np.maximum(
        np.maximum(vx[0] * c2 + vy[0] * s2, vx[1] * c2 + vy[1] * s2),
        vx[2] * c2 + vy[2] * s2,
    )
    hb = np.maximum(
        np.maximum(-(vx[0] * cp + vy[0] * sp), -(vx[1] * cp + vy[1] * sp)),
        -(vx[2] * cp + vy[2] * sp),
    )
    height = (h1 + h2) / (2.0 * sh) + hb
    return np.tan(half) * height * height


_MAX_REFINE_SEEDS = 16
_SEED_VALUE_CUTOFF = 1.25  # keep basins whose coarse floor is within 25% of the best
_MAX_WALKS_PER_LEVEL = 16


def _coarse_local_minima(areas: np.ndarray) -> list[tuple[int, int]]:
    """Nodes not exceeded by any of their 8 grid neighbors; rotation wraps,
    apex edges are padded.  Sorted by (value, apex index, rotation index) so
    downstream choices stay deterministic.

    A steep crease basin's coarse floor overestimates its true minimum by at
    most a few percent at the allowed step sizes, so basins more than 25%
    above the best coarse floor can never hold the global optimum and are
    dropped.
    """
    n_delta, _ = areas.shape
    padded = np.pad(areas, ((1, 1), (0, 0)), constant_values=np.inf)
    is_min = np.ones(areas.shape, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            neighbor = np.roll(padded[1 + di : 1 + di + n_delta, :], -dj, axis=1)
            is_min &= areas <= neighbor
    ks, ms = np.nonzero(is_min)
    order = sorted(range(len(ks)), key=lambda i: (areas[ks[i], ms[i]], ks[i], ms[i]))
    floor = areas[ks[order[0]], ms[order[0]]]
    kept = [i for i in order if areas[ks[i], ms[i]] <= floor * _SEED_VALUE_CUTOFF]
    return [(int(ks[i]), int(ms[i])) for i in kept[:_MAX_REFINE_SEEDS]]


def brute_force_min_isosceles(
    t: Triangle,
    coarse_step: float = DEFAULT_COARSE_STEP,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> OracleResult:
    """Grid the shape space at `coarse_step`, then shrink a local grid by a
    factor of 4 per iteration around each coarse local minimum.

    Refining every coarse basin (not just the best node) matters: optima of
    the crease type can sit in valleys so steep that their nearest coarse
    nodes evaluate above a flatter competing basin's floor.

    Deterministic for fixed inputs: grid nodes are fixed and ties break
    lexicographically in (apex, rotation).
    """
    _check_nondegenerate(t, tol)
    if not 0.0 < coarse_step <= math.radians(2.0) + 1e-15:
        raise ValueError(f"coarse_step must be in (0, 2deg], got {coarse_step} rad")
    if refine_iters < 0:
        raise ValueError("refine_iters must be >= 0")

    vx = np.array([v.x for v in t.vertices])
    vy = np.array([v.y for v in t.vertices])

    n_delta = int(round(math.pi / coarse_step)) - 1
    n_psi = int(round(_TWO_PI / coarse_step))
    deltas = coarse_step * np.arange(1, n_delta + 1)
    psis = coarse_step * np.arange(n_psi)
    # the coarse pass only selects basins, so single precision is plenty;
    # refinement re-evaluates everything in double
    areas = _support_area_grid(
        vx.astype(np.float32),
        vy.astype(np.float32),
        deltas.astype(np.float32),
        psis.astype(np.float32),
    )
    seeds = _coarse_local_minima(areas)

    best_area = math.inf
    best_delta = best_psi = 0.0
    resolution = coarse_step
    for k, m in seeds:
        d0, p0 = float(deltas[k]), float(psis[m])
        a0 = float(_support_area_grid(vx, vy, np.array([d0]), np.array([p0]))[0, 0])
        half_width = coarse_step
        for _ in range(refine_iters):
            # walk the box at this width until the optimum is interior;
            # shrinking while the argmin still sits on the box edge strands
            # the search short of crease minima (the travel budget of pure
            # factor-4 shrinking is only 4/3 of the starting width)
            for _walk in range(_MAX_WALKS_PER_LEVEL):
                dd = np.clip(
                    np.linspace(d0 - half_width, d0 + half_width, 9),
                    _APEX_MARGIN,
                    math.pi - _APEX_MARGIN,
                )
                pp = np.linspace(p0 - half_width, p0 + half_width, 9)
                local = _support_area_grid(vx, vy, dd, pp)
                i, j = np.unravel_index(np.argmin(local), local.shape)
                if not float(local[i, j]) < a0:
                    break
                d0, p0, a0 = float(dd[i]), float(pp[j]), float(local[i, j])
                if 0 < i < 8 and 0 < j < 8:
                    break
            resolution = half_width / 4.0
            half_width /= 4.0
        if a0 < best_area:
            best_area, best_delta, best_psi = a0, d0, p0

    params = ShapeParams(apex_angle=best_delta, rotation=best_psi)
    witness = min_triangle_for_shape(t, params, tol)
    return OracleResult(
        min_area=area(witness),
        witness=witness,
        params=params,
        grid_resolution=resolution,
        refined=refine_iters > 0,
    )


# ---------------------------------------------------------------------------
# Covering decision
# ---------------------------------------------------------------------------


def _ccw_vertices(t: Triangle) -> list[tuple[float, float]]:
    pts = [(v.x, v.y) for v in t.vertices]
    twice = (pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) - (
        pts[1][1] - pts[0][1]
    ) * (pts[2][0] - pts[0][0])
    if twice < 0.0:
        pts[1], pts[2] = pts[2], pts[1]
    return pts


def _side_frame(pts: list[tuple[float, float]], i: int) -> list[tuple[float, float]]:
    """Rotate+translate so side i runs from the origin along +x; for CCW
    input the interior lands in the upper half-plane."""
    x0, y0 = pts[i]
    x1, y1 = pts[(i + 1) % 3]
    ex, ey = x1 - x0, y1 - y0
    ln = math.hypot(ex, ey)
    cx, sx = ex / ln, ey / ln
    out = []
    for x, y in pts:
        dx, dy = x - x0, y - y0
        out.append((dx * cx + dy * sx, -dx * sx + dy * cx))
    return out


def can_cover(
    mover: Triangle, target: Triangle, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """Can some rigid motion (rotations, translations, and reflections) of
    `mover` place it over `target`?

    If any covering exists, one exists with a side of the mover containing a
    side of the target, so it suffices to try each (mover side, target side,
    mirror) configuration with the two side lines identified and the mover
    free to slide along the line.  Each "target vertex inside mover"
    condition is linear in the slide offset, so feasibility is an interval
    intersection, decided in closed form.
    """
    _check_nondegenerate(mover, tol)
    _check_nondegenerate(target, tol)

    sides = []
    for tri in (mover, target):
        vs = tri.vertices
        sides.extend(
            math.hypot(vs[i].x - vs[(i + 1) % 3].x, vs[i].y - vs[(i + 1) % 3].y)
            for i in range(3)
        )
    scale = max(sides)
    slack = tol.eps_num * scale * scale  # cross products have area units
    eps_u = tol.eps_num * scale
    tiny = 1e-15 * scale

    target_ccw = _ccw_vertices(target)
    mover_ccw = _ccw_vertices(mover)
    mover_mirror = _ccw_vertices(
        Triangle(*(Point(v.x, -v.y) for v in mover.vertices))
    )

    for mv in (mover_ccw, mover_mirror):
        for i in range(3):
            placed = _side_frame(mv, i)
            edges = []
            for k in range(3):
                xk, yk = placed[k]
                xk1, yk1 = placed[(k + 1) % 3]
                edges.append((xk, yk, xk1 - xk, yk1 - yk))
            for j in range(3):
                tgt = _side_frame(target_ccw, j)
                lo, hi = -math.inf, math.inf
                feasible = True
                for xk, yk, ex, ey in edges:
                    for qx, qy in tgt:
                        # inside (left of edge) for slide u: cr + u*ey >= -slack
                        cr = ex * (qy - yk) - ey * (qx - xk)
                        if ey > tiny:
                            lo = max(lo, (-slack - cr) / ey)
                        elif ey < -tiny:
                            hi = min(hi, (-slack - cr) / ey)
                        elif cr < -slack:
                            feasible = False
                            break
                    if not feasible:
                        break
                if feasible and lo <= hi + eps_u:
                    return True
    return False


# ---------------------------------------------------------------------------
# Witness structure checks
# ---------------------------------------------------------------------------


def _seg_distance(p: tuple[float, float], q0: tuple[float, float], q1: tuple[float, float]) -> float:
    ex, ey = q1[0] - q0[0], q1[1] - q0[1]
    dx, dy = p[0] - q0[0], p[1] - q0[1]
    denom = ex * ex + ey * ey
    s = 0.0 if denom == 0.0 else max(0.0, min(1.0, (dx * ex + dy * ey) / denom))
    return math.hypot(dx - s * ex, dy - s * ey)


def _witness_flags(
    ct: CanonicalTriangle, witness: Triangle, eps_geom: float
) -> dict[str, bool]:
    w = [(v.x, v.y) for v in witness.vertices]
    ins = [(v.x, v.y) for v in ct.tri.vertices]
    scale = max(
        math.hypot(w[i][0] - w[(i + 1) % 3][0], w[i][1] - w[(i + 1) % 3][1])
        for i in range(3)
    )
    eps = eps_geom * scale

    segs = [(w[i], w[(i + 1) % 3]) for i in range(3)]
    vertices_on_boundary = all(
        min(_seg_distance(p, *seg) for seg in segs) <= eps for p in ins
    )
    sides_touch = all(min(_seg_distance(p, *seg) for p in ins) <= eps for seg in segs)

    # midpoint arcs: arc_j bends around witness vertex j, from the midpoint
    # of the preceding side to the midpoint of the following side
    mids = [
        ((w[i][0] + w[(i + 1) % 3][0]) / 2.0, (w[i][1] + w[(i + 1) % 3][1]) / 2.0)
        for i in range(3)
    ]
    arcs = [
        ((mids[(j + 2) % 3], w[j]), (w[j], mids[j]))
        for j in range(3)
    ]
    membership = [
        [min(_seg_distance(p, *piece) for piece in arc) <= eps for arc in arcs]
        for p in ins
    ]
    one_per_arc = any(
        membership[0][p0] and membership[1][p1] and membership[2][p2]
        for p0, p1, p2 in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    )

    shared_pairs = [
        (vi, wj)
        for vi in range(3)
        for wj in range(3)
        if math.hypot(ins[vi][0] - w[wj][0], ins[vi][1] - w[wj][1]) <= eps
    ]
    shared_vertex = bool(shared_pairs)

    # shared side + endpoint angle: at a shared vertex, one input side must
    # run along a witness side and the opening angles must agree
    def rays(pts, k):
        out = []
        for other in (pts[(k + 1) % 3], pts[(k + 2) % 3]):
            dx, dy = other[0] - pts[k][0], other[1] - pts[k][1]
            ln = math.hypot(dx, dy)
            out.append((dx / ln, dy / ln))
        return out

    shares = False
    for vi, wj in shared_pairs:
        r_in = rays(ins, vi)
        r_w = rays(w, wj)
        angle_in = math.acos(max(-1.0, min(1.0, r_in[0][0] * r_in[1][0] + r_in[0][1] * r_in[1][1])))
        angle_w = math.acos(max(-1.0, min(1.0, r_w[0][0] * r_w[1][0] + r_w[0][1] * r_w[1][1])))
        if abs(angle_in - angle_w) > eps_geom:
            continue
        aligned = any(
            ri[0] * rw[0] + ri[1] * rw[1] >= math.cos(eps_geom)
            for ri in r_in
            for rw in r_w
        )
        if aligned:
            shares = True
            break

    return {
        "vertices_on_boundary": vertices_on_boundary,
        "sides_touch": sides_touch,
        "one_per_arc": one_per_arc,
        "shared_vertex": shared_vertex,
        "shares_side_and_angle": shares,
    }


def verify_triangle(
    ct: CanonicalTriangle,
    coarse_step: float = DEFAULT_COARSE_STEP,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    tol: Tolerances = DEFAULT_TOLERANCES,
    eps_geom: float = 1e-5,
) -> VerificationReport:
    """Compare the closed-form minimum against the brute-force oracle and
    check the boundary structure of the oracle's witness."""
    if ct.shape_class is not ShapeClass.SCALENE:
        raise NotScalene("verification runs on scalene triangles only")
    closed = minimum_isosceles_container(ct, tol)
    oracle = brute_force_min_isosceles(ct.tri, coarse_step, refine_iters, tol)
    gap = (oracle.min_area - closed.min_area) / closed.min_area
    flags = _witness_flags(ct, oracle.witness, eps_geom)
    boundary_ok = (
        flags["vertices_on_boundary"]
        and flags["sides_touch"]
        and flags["one_per_arc"]
        and flags["shared_vertex"]
    )
    return VerificationReport(
        input=ct,
        closed_form_area=closed.min_area,
        oracle_area=oracle.min_area,
        relative_gap=gap,
        boundary_invariants_ok=boundary_ok,
        shares_side_and_angle=flags["shares_side_and_angle"],
        min_result=closed,
        oracle_result=oracle,
        flags=flags,
    )
