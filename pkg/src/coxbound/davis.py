"""Finite balls of the Davis-Moussong 2-complex and triangle tessellations.

Valid for 1-dimensional nerves only: the complex is then 2-dimensional, with
one regular 2m_st-gon per coset of each finite dihedral pair <s,t>.  A face
is attached only when its full vertex cycle lies inside the ball, so the
frontier never carries partial polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .nerve import NerveComplex, build_nerve
from .system import INF, CoxeterSystem, geometric_representation, reciprocal_sum
from .words import CayleyBall, cayley_ball, word_context

Vertex = tuple[str, ...]     # ShortLex normal form


@dataclass(frozen=True)
class DavisBall:
    system: CoxeterSystem
    radius: int
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[Vertex, Vertex, str], ...]
    # one face per fully-contained <s,t>-coset: (s, t, boundary cycle of 2m vertices)
    faces: tuple[tuple[str, str, tuple[Vertex, ...]], ...]

    @property
    def cayley_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class LinkGraph:
    vertices: tuple[str, ...]                       # generator directions
    edges: tuple[tuple[str, str], ...]              # polygon corners at the vertex
    angles: dict[tuple[str, str], Fraction]         # corner angle / pi


def build_davis_ball(sys: CoxeterSystem, radius: int) -> DavisBall:
    """Combinatorial ball: Cayley 1-skeleton plus all fully-contained polygons."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    nerve = build_nerve(sys, max_dim=2)
    if nerve.dimension >= 2:
        raise ValueError("Davis ball requires a nerve of dimension <= 1 (2-complex regime)")
    ball = cayley_ball(sys, radius)
    ctx = word_context(sys)
    in_ball = set(ball.vertices)

    faces = []
    seen_cosets: set[tuple[str, str, Vertex]] = set()
    for g in ball.vertices:
        for s, t in sys.pairs():
            m = sys.m(s, t)
            if m == INF:
                continue
            cycle = _dihedral_coset_cycle(ctx, g, s, t, int(m))
            if cycle is None:
                continue
            rep = min(cycle)
            key = (s, t, rep)
            if key in seen_cosets:
                continue
            seen_cosets.add(key)
            if all(v in in_ball for v in cycle):
                # canonical orientation: start at the ShortLex-least coset element
                k = cycle.index(rep)
                faces.append((s, t, tuple(cycle[k:] + cycle[:k])))
    faces.sort()
    return DavisBall(sys, radius, ball.vertices, ball.edges, tuple(faces))


def _dihedral_coset_cycle(ctx, g: Vertex, s: str, t: str, m: int):
    """Boundary cycle (length 2m) of the <s,t>-coset through g, or None if a
    member exceeds the word-length bound."""
    si, ti = ctx.encode((s,))[0], ctx.encode((t,))[0]
    cycle = []
    cur = ctx.encode(g)
    for k in range(2 * m):
        cycle.append(ctx.decode(cur))
        cur = ctx.multiply(cur, si if k % 2 == 0 else ti)
    return cycle


def euler_characteristic(ball: DavisBall) -> int:
    return len(ball.vertices) - len(ball.edges) + len(ball.faces)


def vertex_link(ball: DavisBall, v: Vertex) -> LinkGraph:
    """Link graph at an interior vertex: one node per generator direction, one
    edge per polygon corner, carrying the angle (1 - 1/m_st) * pi."""
    sys = ball.system
    max_m = max((int(m) for m in (sys.m(s, t) for s, t in sys.pairs()) if m != INF),
                default=2)
    ctx = word_context(sys)
    depth = len(v)
    if depth > ball.radius - max_m:
        raise ValueError(
            f"vertex at distance {depth} is too close to the frontier "
            f"(interior requires distance <= radius - max m_st = {ball.radius - max_m})")
    corners = set()
    for s, t, cycle in ball.faces:
        if v in cycle:
            corners.add((s, t))
    directions = tuple(sys.generators)
    angles = {e: Fraction(int(sys.m(*e)) - 1, int(sys.m(*e))) for e in corners}
    return LinkGraph(directions, tuple(sorted(corners)), angles)


def link_matches_nerve(link: LinkGraph, nerve: NerveComplex) -> bool:
    """Labeled isomorphism check; directions are canonical so identity suffices."""
    if set(link.vertices) != set(nerve.vertices):
        return False
    nerve_edges = {tuple(e) for e in nerve.edges()}
    if set(link.edges) != nerve_edges:
        return False
    return all(link.angles[e] == nerve.edge_lengths[e] for e in link.edges)


def ball_to_json(ball: DavisBall) -> str:
    import json

    return json.dumps({
        "radius": ball.radius,
        "vertices": [" ".join(v) for v in ball.vertices],
        "edges": [[" ".join(a), " ".join(b), s] for a, b, s in ball.edges],
        "faces": [
            {"pair": [s, t], "cycle": [" ".join(v) for v in cyc]}
            for s, t, cyc in ball.faces
        ],
        "euler_characteristic": euler_characteristic(ball),
    }, indent=2)


# --- triangle-group tessellations ---------------------------------------------

def _triangle_kind(sys: CoxeterSystem) -> str:
    a, b, c = sys.generators
    total = reciprocal_sum((sys.m(a, b), sys.m(b, c), sys.m(a, c)))
    if total > 1:
        return "spherical"
    if total == 1:
        return "euclidean"
    return "hyperbolic"


def _fundamental_triangle(sys: CoxeterSystem) -> tuple[np.ndarray, list[np.ndarray], str]:
    """Vertices of the fundamental chamber and reflection matrices, mapped to a
    standard model: unit sphere (spherical), plane z=1 (euclidean, via a null
    direction), or the Klein disk slice z=1 of the negative cone (hyperbolic)."""
    kind = _triangle_kind(sys)
    from .system import cosine_matrix

    B = cosine_matrix(sys)
    rhos = geometric_representation(sys)
    # chamber vertex opposite generator i: direction v with B(v, e_j) = 0, j != i
    verts = []
    for i in range(3):
        rows = [j for j in range(3) if j != i]
        M = B[rows, :]
        # 1-dimensional nullspace of the 2x3 system
        _, _, vh = np.linalg.svd(M)
        v = vh[-1]
        verts.append(v)
    return np.array(verts), rhos, kind


def tessellation_svg(sys: CoxeterSystem, depth: int) -> str:
    """Render the reflection tessellation of a triangle group to SVG.

    Euclidean and hyperbolic cases render in the plane / projective disk via
    the geometric representation; spherical groups render their finite orbit
    (orthographic projection).  Output bytes are deterministic for fixed input.
    """
    tris, kind = tessellation_triangles(sys, depth)
    return _svg_document(tris, kind)


def tessellation_triangles(sys: CoxeterSystem, depth: int):
    """Planar triangle orbit backing tessellation_svg: (2d triangles, kind)."""
    if sys.rank != 3:
        raise ValueError("tessellation requires exactly 3 generators")
    if any(sys.m(s, t) == INF for s, t in sys.pairs()):
        raise ValueError("tessellation requires a complete K_3 nerve (all m_st finite)")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if _triangle_kind(sys) == "euclidean":
        # affine case: the Tits chamber degenerates (vertices hit the form's
        # kernel), so build the Euclidean triangle directly and unfold it
        return _euclidean_triangles(sys, depth), "euclidean"
    verts, rhos, kind = _fundamental_triangle(sys)
    from .system import cosine_matrix

    B = cosine_matrix(sys)

    # normalize chamber vertices against the form
    v_rows = []
    for v in verts:
        q = float(v @ B @ v)
        if kind == "hyperbolic":
            # chamber vertices of a compact hyperbolic triangle lie in the negative cone
            v = v / math.sqrt(-q) if q < 0 else v / max(math.sqrt(abs(q)), 1e-12)
            v_rows.append(v if v[2] == 0 else v)
        elif kind == "spherical":
            v_rows.append(v / math.sqrt(q))
        else:
            v_rows.append(v)
    verts = np.array(v_rows)

    # orbit of the fundamental triangle under words of length <= depth (BFS)
    tris = [verts]
    seen = {_tri_key(verts)}
    frontier = [verts]
    for _ in range(depth):
        nxt = []
        for tri in frontier:
            for rho in rhos:
                img = tri @ rho.T
                key = _tri_key(img)
                if key not in seen:
                    seen.add(key)
                    nxt.append(img)
                    tris.append(img)
        frontier = nxt

    if kind == "hyperbolic":
        # Klein-type projective disk: diagonalize B to diag(1,1,-1), then (x,y) = (u1/u3, u2/u3)
        evals, evecs = np.linalg.eigh(B)
        order = np.argsort(evals)[::-1]          # positive, positive, negative
        evals, evecs = evals[order], evecs[:, order]
        scale = np.diag(np.sqrt(np.abs(evals)))
        to_std = scale @ evecs.T
        pts2d = []
        for tri in tris:
            std = (to_std @ tri.T).T
            std = std * np.sign(std[:, 2:3])     # pick the upper sheet
            pts2d.append(std[:, :2] / std[:, 2:3])
    else:
        pts2d = [tri[:, :2] for tri in tris]     # orthographic

    return pts2d, kind


def _euclidean_triangles(sys: CoxeterSystem, depth: int) -> list[np.ndarray]:
    """Unfold the Euclidean fundamental triangle by edge reflections (BFS to
    gallery distance `depth`).  Angle at the wall-pair vertex {s,t} is pi/m_st."""
    a, b, c = sys.generators
    alpha = math.pi / float(sys.m(a, b))
    beta = math.pi / float(sys.m(a, c))
    # vertices: P_ab at origin, P_ac at (1,0), P_bc above
    x = math.tan(beta) / (math.tan(alpha) + math.tan(beta))
    tri0 = np.array([[0.0, 0.0], [1.0, 0.0], [x, x * math.tan(alpha)]])
    tris = [tri0]
    seen = {_tri_key(tri0)}
    frontier = [tri0]
    for _ in range(depth):
        nxt = []
        for tri in frontier:
            for i in range(3):
                p, q = tri[i], tri[(i + 1) % 3]
                img = _reflect_across(tri, p, q)
                key = _tri_key(img)
                if key not in seen:
                    seen.add(key)
                    nxt.append(img)
                    tris.append(img)
        frontier = nxt
    return tris


def _reflect_across(pts: np.ndarray, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    d = q - p
    d = d / np.linalg.norm(d)
    rel = pts - p
    proj = rel @ d
    return p + 2.0 * np.outer(proj, d) - rel


def _tri_key(tri: np.ndarray) -> tuple:
    return tuple(sorted(tuple(round(float(x), 9) for x in row) for row in tri))


def _svg_document(triangles, kind: str) -> str:
    xs = [p[0] for tri in triangles for p in tri]
    ys = [p[1] for tri in triangles for p in tri]
    pad = 0.1
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    if kind == "hyperbolic":
        x0, x1, y0, y1 = -1.05, 1.05, -1.05, 1.05
    w = 800.0
    h = w * (y1 - y0) / (x1 - x0)
    sc = w / (x1 - x0)

    def px(p):
        return f"{(p[0] - x0) * sc:.3f},{(h - (p[1] - y0) * sc):.3f}"

    body = []
    if kind == "hyperbolic":
        cx, cy = (0 - x0) * sc, h - (0 - y0) * sc
        body.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{sc:.3f}" '
                    'fill="none" stroke="#888" stroke-width="1"/>')
    for i, tri in enumerate(triangles):
        fill = "#d0e0f8" if i % 2 == 0 else "#f8e8d0"
        pts = " ".join(px(p) for p in tri)
        body.append(f'<polygon points="{pts}" fill="{fill}" stroke="#334" stroke-width="0.7"/>')
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}" '
        f'viewBox="0 0 {w:.3f} {h:.3f}">\n' + "\n".join(body) + "\n</svg>\n"
    )
