import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from coxbound.nerve import (build_nerve, edge_length_fraction,
                            is_complete_1d_nerve, is_planar, nerve_dimension,
                            nerve_to_json)
from coxbound.system import complete_graph_system, make_system


# --- independent planarity oracle: Wagner's theorem by brute-force minors ------

def _edgeset(g: nx.Graph) -> frozenset:
    return frozenset(frozenset(e) for e in g.edges())


def _contains_k5(g: nx.Graph) -> bool:
    return any(all(g.has_edge(u, v) for u, v in combinations(vs, 2))
               for vs in combinations(g.nodes(), 5))


def _contains_k33(g: nx.Graph) -> bool:
    nodes = list(g.nodes())
    for left in combinations(nodes, 3):
        rest = [v for v in nodes if v not in left]
        for right in combinations(rest, 3):
            if all(g.has_edge(u, v) for u in left for v in right):
                return True
    return False


def _has_forbidden_minor(g: nx.Graph, memo=None) -> bool:
    """K5 or K3,3 minor by exhaustive edge contraction; fine for <= 8 vertices."""
    if memo is None:
        memo = {}
    key = _edgeset(g)
    if key in memo:
        return memo[key]
    ans = _contains_k5(g) or _contains_k33(g)
    if not ans:
        for u, v in list(g.edges()):
            h = nx.contracted_nodes(g, u, v, self_loops=False)
            if _has_forbidden_minor(h, memo):
                ans = True
                break
    memo[key] = ans
    return ans


def planar_oracle(g: nx.Graph) -> bool:
    return not _has_forbidden_minor(g)


def test_oracle_on_known_graphs():
    assert planar_oracle(nx.complete_graph(4))
    assert not planar_oracle(nx.complete_graph(5))
    assert not planar_oracle(nx.complete_bipartite_graph(3, 3))
    assert planar_oracle(nx.cycle_graph(8))
    assert planar_oracle(nx.wheel_graph(7))


def test_oracle_agrees_with_library_on_random_graphs():
    rng = random.Random(11)
    for trial in range(40):
        n = rng.randrange(4, 8)
        p = rng.uniform(0.3, 0.8)
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(10**6))
        assert planar_oracle(g) == nx.check_planarity(g)[0], f"trial {trial}"


# --- nerve construction ---------------------------------------------------------

def test_complete_graph_nerve():
    for n in (3, 4, 5):
        nerve = build_nerve(complete_graph_system(n))
        assert nerve.dimension == 1
        assert len(nerve.edges()) == n * (n - 1) // 2
        ok, size = is_complete_1d_nerve(nerve)
        assert ok and size == n


def test_edge_lengths():
    sysm = complete_graph_system(3, labels={("s1", "s2"): 5})
    nerve = build_nerve(sysm)
    assert nerve.edge_lengths[("s1", "s2")] == Fraction(4, 5)
    assert nerve.edge_lengths[("s1", "s3")] == Fraction(2, 3)
    assert edge_length_fraction(2) == Fraction(1, 2)


def test_nerve_with_spherical_triple_has_triangle():
    # (2,3,3) is finite, so {x,y,z} spans a 2-simplex
    sysm = make_system("xyz", {("x", "y"): 2, ("y", "z"): 3, ("x", "z"): 3})
    nerve = build_nerve(sysm)
    assert nerve.dimension == 2
    assert ("x", "y", "z") in nerve.simplices


def test_downward_closure():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randrange(3, 6)
        labels = {}
        gens = [f"s{i+1}" for i in range(n)]
        for a, b in combinations(gens, 2):
            labels[(a, b)] = rng.choice([2, 3, 4, 5])
        nerve = build_nerve(make_system(gens, labels))
        simplices = set(nerve.simplices)
        for simp in simplices:
            for face in combinations(simp, len(simp) - 1):
                if len(face) >= 2:
                    assert face in simplices


def test_infinite_pair_omitted():
    sysm = make_system("abc", {("a", "b"): 3, ("b", "c"): 3})  # a,c infinite
    nerve = build_nerve(sysm)
    assert ("a", "c") not in nerve.edges()
    assert nerve_dimension(nerve) == 1


def test_planarity_of_nerves():
    assert is_planar(build_nerve(complete_graph_system(3)))
    assert is_planar(build_nerve(complete_graph_system(4)))
    assert not is_planar(build_nerve(complete_graph_system(5)))
    assert not is_planar(build_nerve(complete_graph_system(6)))
    # cross-check against the independent oracle
    for n in (3, 4, 5, 6):
        nerve = build_nerve(complete_graph_system(n))
        assert is_planar(nerve) == planar_oracle(nerve.graph())


def test_is_planar_requires_dimension_1():
    sysm = make_system("xyz", {("x", "y"): 2, ("y", "z"): 3, ("x", "z"): 3})
    with pytest.raises(ValueError):
        is_planar(build_nerve(sysm))


def test_nerve_json_deterministic():
    sysm = complete_graph_system(4)
    j1 = nerve_to_json(sysm, build_nerve(sysm))
    j2 = nerve_to_json(sysm, build_nerve(sysm))
    assert j1 == j2
    assert '"dimension": 1' in j1
