import pytest

from coxbound.davis import (build_davis_ball, ball_to_json,
                            euler_characteristic, link_matches_nerve,
                            tessellation_svg, tessellation_triangles,
                            vertex_link)
from coxbound.nerve import build_nerve
from coxbound.system import complete_graph_system, make_system


def triangle(a, b, c):
    return make_system("xyz", {("x", "y"): a, ("y", "z"): b, ("x", "z"): c})


def test_dihedral_ball_is_one_polygon():
    sysm = make_system("ab", {("a", "b"): 3})
    ball = build_davis_ball(sysm, 3)
    assert len(ball.vertices) == 6
    assert len(ball.edges) == 6
    assert len(ball.faces) == 1
    s, t, cycle = ball.faces[0]
    assert (s, t) == ("a", "b") and len(cycle) == 6
    assert euler_characteristic(ball) == 1   # a disk


def test_face_cycles_close():
    sysm = complete_graph_system(3)
    ball = build_davis_ball(sysm, 4)
    edge_set = {frozenset((a, b)) for a, b, _ in ball.edges}
    for s, t, cycle in ball.faces:
        m = int(sysm.m(s, t))
        assert len(cycle) == 2 * m
        assert len(set(cycle)) == 2 * m
        for i in range(2 * m):
            assert frozenset((cycle[i], cycle[(i + 1) % (2 * m)])) in edge_set


def test_interior_link_matches_nerve():
    sysm = complete_graph_system(3)
    nerve = build_nerve(sysm)
    ball = build_davis_ball(sysm, 5)
    link = vertex_link(ball, ())
    assert link_matches_nerve(link, nerve)
    # the identity sits in one hexagon per generator pair
    assert len(link.edges) == 3


def test_link_rejects_frontier_vertex():
    sysm = complete_graph_system(3)
    ball = build_davis_ball(sysm, 4)
    deep = max(ball.vertices, key=len)
    with pytest.raises(ValueError):
        vertex_link(ball, deep)


def test_ball_requires_1d_nerve():
    sysm = triangle(2, 3, 3)   # spherical: nerve is a 2-simplex
    with pytest.raises(ValueError):
        build_davis_ball(sysm, 2)


def test_ball_json_deterministic():
    sysm = complete_graph_system(3)
    assert ball_to_json(build_davis_ball(sysm, 3)) == ball_to_json(build_davis_ball(sysm, 3))


# --- tessellations --------------------------------------------------------------

def test_tessellation_kinds():
    tris, kind = tessellation_triangles(triangle(2, 3, 5), 4)
    assert kind == "spherical"
    tris, kind = tessellation_triangles(triangle(3, 3, 3), 4)
    assert kind == "euclidean"
    tris, kind = tessellation_triangles(triangle(2, 3, 7), 4)
    assert kind == "hyperbolic"


def test_euclidean_tessellation_grows():
    t3, _ = tessellation_triangles(triangle(3, 3, 3), 3)
    t5, _ = tessellation_triangles(triangle(3, 3, 3), 5)
    assert len(t5) > len(t3) > 1


def test_hyperbolic_triangles_inside_disk():
    tris, kind = tessellation_triangles(triangle(2, 3, 7), 5)
    assert kind == "hyperbolic"
    shallow, _ = tessellation_triangles(triangle(2, 3, 7), 3)
    assert len(tris) > len(shallow) >= 5
    for tri in tris:
        for x, y in tri:
            assert x * x + y * y < 1.0 + 1e-9


def test_tessellation_svg_deterministic():
    svg1 = tessellation_svg(triangle(2, 4, 5), 4)
    svg2 = tessellation_svg(triangle(2, 4, 5), 4)
    assert svg1 == svg2
    assert svg1.startswith("<svg") or "<svg" in svg1
    assert "</svg>" in svg1


def test_tessellation_requires_rank_3():
    with pytest.raises(ValueError):
        tessellation_svg(complete_graph_system(4), 3)
