"""Acceptance gate: one test per acceptance criterion, each ending in a single
pass/fail line.  Criterion 5a (whole-star pairwise disjointness) is implemented
faithfully against its stated semantics and FAILS: distinct stars of the
family always cross (legs toward different marked points intersect).  See
test_carpet.test_whole_stars_always_cross for the exact counterexample; the
per-leg disjointness that the countability argument needs is criterion 5b's
select_t_avoiding path plus verify_leg_family_disjointness, which pass.
"""

import random
import time
from fractions import Fraction as F
from itertools import combinations, combinations_with_replacement

import pytest

from coxbound.carpet import (HOLED_DISK, StarEmbedding, build_carpet_approx,
                             build_k5_scaffold, null_family_check,
                             scaffold_to_json, select_t_avoiding,
                             verify_k5_graph, verify_star_disjointness)
from coxbound.classify import classify_boundary, euclidean_triple_scan
from coxbound.davis import build_davis_ball, link_matches_nerve, vertex_link
from coxbound.geometry import POINT, segment_common
from coxbound.nerve import build_nerve
from coxbound.system import complete_graph_system, is_finite_type, make_system
from coxbound.words import (tits_normal_form, todd_coxeter_enumerate,
                            spherical_triangle_order, cayley_ball)

EXPECTED_BY_RANK = {3: "Circle", 4: "SierpinskiCarpet",
                    5: "MengerCurve", 6: "MengerCurve"}


def verdict_line(num, name, ok):
    print(f"[criterion {num}] {name}: {'PASS' if ok else 'FAIL'}")


def test_criterion_1_classification_table():
    rng = random.Random(101)
    start = time.perf_counter()
    count, ok = 0, True
    for n in (3, 4, 5, 6):
        pairs = list(combinations(range(1, n + 1), 2))
        assignments = [{p: m for p in pairs} for m in (3, 4, 5, 6)]
        while len(assignments) < 54:
            assignments.append({p: rng.choice([3, 4, 5, 6]) for p in pairs})
        for assignment in assignments:
            labels = {(f"s{a}", f"s{b}"): m for (a, b), m in assignment.items()}
            report = classify_boundary(complete_graph_system(n, labels=labels))
            count += 1
            if report.boundary.tag != EXPECTED_BY_RANK[n]:
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and count >= 200 and elapsed < 10.0
    verdict_line(1, f"classification table ({count} systems, {elapsed:.2f}s)", ok)
    assert ok


def test_criterion_2_finite_type_oracle():
    start = time.perf_counter()
    checked, ok = 0, True
    for a, b, c in combinations_with_replacement(range(2, 9), 3):
        sysm = make_system("xyz", {("x", "y"): a, ("y", "z"): b, ("x", "z"): c})
        for size in (1, 2, 3):
            for subset in combinations("xyz", size):
                table = todd_coxeter_enumerate(sysm, subset, cap=100_000)
                verdict = is_finite_type(sysm, subset)
                checked += 1
                if verdict.finite != table.complete:
                    ok = False
                if size == 3 and table.complete:
                    if table.order != spherical_triangle_order(a, b, c):
                        ok = False
    elapsed = time.perf_counter() - start
    ok = ok and checked >= 200 and elapsed < 30.0
    verdict_line(2, f"finite-type oracle ({checked} subsets, {elapsed:.2f}s)", ok)
    assert ok


def test_criterion_3_link_equals_nerve():
    ok, checked = True, 0
    for n in (3, 4, 5):
        sysm = complete_graph_system(n)
        max_m = 3
        radius = max_m + 2
        ball = build_davis_ball(sysm, radius)
        nerve = build_nerve(sysm)
        for v in ball.vertices:
            if len(v) > radius - max_m:
                continue
            checked += 1
            if not link_matches_nerve(vertex_link(ball, v), nerve):
                ok = False
    verdict_line(3, f"link = nerve ({checked} interior vertices)", ok)
    assert ok


def test_criterion_4_word_problem():
    rng = random.Random(202)
    ok = True
    systems = [
        complete_graph_system(3),
        complete_graph_system(4),
        make_system("xyz", {("x", "y"): 2, ("y", "z"): 3, ("x", "z"): 4}),  # B3
        make_system("ab", {("a", "b"): 6}),
    ]
    for sysm in systems:
        gens = sysm.generators
        finite_pairs = [(s, t) for s, t in sysm.pairs() if sysm.m(s, t) != 1]
        for _ in range(10_000):
            w = [rng.choice(gens) for _ in range(rng.randrange(13))]
            nf = tits_normal_form(sysm, w).word
            if tits_normal_form(sysm, nf).word != nf:
                ok = False
            s = rng.choice(gens)
            if tits_normal_form(sysm, list(w) + [s, s]).word != nf:
                ok = False
            s, t = rng.choice(finite_pairs)
            m = int(sysm.m(s, t))
            braid1 = [s if i % 2 == 0 else t for i in range(m)]
            braid2 = [t if i % 2 == 0 else s for i in range(m)]
            if (tits_normal_form(sysm, list(w) + braid1).word
                    != tits_normal_form(sysm, list(w) + braid2).word):
                ok = False
    # finite systems: number of distinct normal forms equals the group order
    for sysm, subset in ((systems[2], "xyz"), (systems[3], "ab")):
        order = todd_coxeter_enumerate(sysm, subset).order
        if cayley_ball(sysm, 20).size != order:
            ok = False
    verdict_line(4, "word-problem consistency (4 x 10,000 words)", ok)
    assert ok


def test_criterion_5a_star_disjointness():
    rng = random.Random(303)
    failures = 0
    for _ in range(1000):
        t = F(rng.randrange(-1000, 1001), 8000)
        t2 = F(rng.randrange(-1000, 1001), 8000)
        if t == t2:
            continue
        if not verify_star_disjointness(t, t2):
            failures += 1
    ok = failures == 0
    verdict_line("5a", f"whole-star disjointness ({failures} crossing pairs of 1000)", ok)
    assert ok, (
        "distinct stars always intersect: legs toward different marked points "
        "cross near the line y = -x; the claim holds only leg-family-wise "
        "(see verify_leg_family_disjointness)")


def test_criterion_5b_select_t_avoiding():
    rng = random.Random(404)
    ok = True
    for _ in range(100):
        pts = [(F(rng.randrange(-99, 100), 200), F(rng.randrange(-99, 100), 200))
               for _ in range(100)]
        t, cert = select_t_avoiding(pts)
        if not F(-1, 8) <= t <= F(1, 8) or set(cert) != set(pts):
            ok = False
        star = StarEmbedding(t)
        for q in pts:
            for i in (1, 2, 3, 4):
                kind, p = segment_common(*star.leg(i), q, q)
                if kind == POINT and p == q and q != HOLED_DISK.marked[i - 1]:
                    ok = False
    verdict_line("5b", "select_t_avoiding (100 sets x 100 points)", ok)
    assert ok


def test_criterion_6_k5_certificate():
    start = time.perf_counter()
    scaffold = build_k5_scaffold(level=2)
    ok = verify_k5_graph(scaffold)
    adj = scaffold.adjacency()
    ok = ok and all(adj[i][j] == (0 if i == j else 1)
                    for i in range(5) for j in range(5))
    ok = ok and scaffold_to_json(scaffold) == scaffold_to_json(build_k5_scaffold(level=2))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    verdict_line(6, f"K5 certificate ({elapsed:.2f}s)", ok)
    assert ok


def test_criterion_7_euclidean_triples():
    ok = True
    for n in range(3, 8):
        found = euclidean_triple_scan(complete_graph_system(n, label=3))
        expected = n * (n - 1) * (n - 2) // 6
        if len(found) != expected:
            ok = False
        if euclidean_triple_scan(complete_graph_system(n, label=4)):
            ok = False
    verdict_line(7, "euclidean triple scan (all-3 vs all-4, n = 3..7)", ok)
    assert ok


def test_criterion_8_null_family():
    counts = [null_family_check(build_carpet_approx(k), F(1, 5)) for k in range(2, 7)]
    ok = counts == [1] * 5
    verdict_line(8, f"null-family stability (counts {counts})", ok)
    assert ok
