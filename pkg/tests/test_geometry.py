from fractions import Fraction as F

from coxbound.geometry import (DISJOINT, OVERLAP, POINT, on_segment, orient,
                               segment_common, segment_in_box)


def P(x, y):
    return (F(x), F(y))


def test_orient_sign():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) > 0
    assert orient(P(0, 0), P(0, 1), P(1, 0)) < 0
    assert orient(P(0, 0), P(1, 1), P(2, 2)) == 0


def test_on_segment():
    assert on_segment(P(1, 1), P(0, 0), P(2, 2))
    assert not on_segment(P(3, 3), P(0, 0), P(2, 2))
    assert not on_segment(P(1, 0), P(0, 0), P(2, 2))
    assert on_segment(P(0, 0), P(0, 0), P(2, 2))   # endpoint counts


def test_proper_crossing():
    kind, p = segment_common(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert kind == POINT and p == P(1, 1)


def test_touch_at_endpoint():
    kind, p = segment_common(P(0, 0), P(1, 1), P(1, 1), P(2, 0))
    assert kind == POINT and p == P(1, 1)


def test_t_junction():
    kind, p = segment_common(P(0, 0), P(2, 0), P(1, 0), P(1, 5))
    assert kind == POINT and p == P(1, 0)


def test_disjoint_parallel_and_skew():
    assert segment_common(P(0, 0), P(1, 0), P(0, 1), P(1, 1))[0] == DISJOINT
    assert segment_common(P(0, 0), P(1, 0), P(2, 1), P(3, 5))[0] == DISJOINT
    # collinear but separated
    assert segment_common(P(0, 0), P(1, 0), P(2, 0), P(3, 0))[0] == DISJOINT


def test_collinear_overlap():
    kind, seg = segment_common(P(0, 0), P(2, 0), P(1, 0), P(3, 0))
    assert kind == OVERLAP and seg is None
    # collinear meeting at one point is a POINT, not an overlap
    kind, p = segment_common(P(0, 0), P(1, 0), P(1, 0), P(2, 0))
    assert kind == POINT and p == P(1, 0)


def test_exactness_with_tiny_fractions():
    eps = F(1, 10**40)
    kind, _ = segment_common(P(0, 0), P(1, eps), P(0, eps), P(1, 0))
    assert kind == POINT   # float arithmetic would likely miss this


def test_segment_in_box():
    box = (F(0), F(0), F(1), F(1))
    # fully inside
    assert segment_in_box(P(F(1, 4), F(1, 4)), P(F(3, 4), F(1, 2)), *box) == (F(0), F(1))
    # fully outside
    assert segment_in_box(P(2, 2), P(3, 3), *box) is None
    # crossing: clip parameters at the walls
    t = segment_in_box(P(F(-1), F(1, 2)), P(F(2), F(1, 2)), *box)
    assert t == (F(1, 3), F(2, 3))
    # grazing a corner yields a degenerate interval
    t = segment_in_box(P(-1, 1), P(1, -1), *box)
    assert t == (F(1, 2), F(1, 2))
