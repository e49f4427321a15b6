"""Coxeter systems: presentation parsing, diagram combinatorics, finiteness.

A system is a finite generating set S together with a symmetric order matrix
m_st taking values in {2, 3, ...} or infinity (m_ss = 1 implicitly).  All
finiteness decisions are made exactly, by matching irreducible diagram
components against the classified finite types; no floating point is involved
anywhere except in `geometric_representation`, which exists for rendering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

INF = math.inf


class PresentationError(ValueError):
    """Raised for malformed presentation text or order matrices."""


@dataclass(frozen=True)
class CoxeterSystem:
    """Generators plus symmetric order matrix; immutable after construction."""

    generators: tuple[str, ...]
    orders: dict[tuple[str, str], float] = field(hash=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator")
        for (s, t), m in self.orders.items():
            if s == t:
                raise PresentationError(f"diagonal entry for {s} not allowed")
            if s not in self.generators or t not in self.generators:
                raise PresentationError(f"unknown generator in pair ({s},{t})")
            if m != INF and (int(m) != m or m < 2):
                raise PresentationError(f"label m({s},{t}) = {m} out of range (>= 2 or inf)")
            if self.orders.get((t, s), m) != m:
                raise PresentationError(f"asymmetric labels for pair ({s},{t})")
        # normalize: infinity is the default, so explicit entries are dropped
        if any(m == INF for m in self.orders.values()):
            object.__setattr__(self, "orders",
                               {k: v for k, v in self.orders.items() if v != INF})

    def m(self, s: str, t: str) -> float:
        """Order of st; 1 on the diagonal, infinity for unspecified pairs."""
        if s == t:
            return 1
        return self.orders.get((s, t), INF)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, s: str) -> int:
        return self.generators.index(s)

    def pairs(self):
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                yield gens[i], gens[j]


def make_system(generators: Iterable[str], labels: dict[tuple[str, str], float]) -> CoxeterSystem:
    """Build a system from one-sided labels, symmetrizing automatically."""
    orders = {}
    for (s, t), m in labels.items():
        orders[(s, t)] = m
        orders[(t, s)] = m
    return CoxeterSystem(tuple(generators), orders)


def complete_graph_system(n: int, label: int = 3, labels: Optional[dict] = None) -> CoxeterSystem:
    """K_n system: every pair finite.  `labels` may override individual pairs."""
    gens = [f"s{i+1}" for i in range(n)]
    lab = {}
    for i in range(n):
        for j in range(i + 1, n):
            lab[(gens[i], gens[j])] = label
    if labels:
        lab.update({k: v for k, v in labels.items()})
    return make_system(gens, lab)


def parse_system(text: str) -> CoxeterSystem:
    """Parse the presentation file format.

    Line 1 (after comments): "gens a b c ...". Subsequent lines "a b 3" or
    "a b inf". "#" starts a comment. Unspecified pairs default to infinity.
    """
    gens: Optional[tuple[str, ...]] = None
    labels: dict[tuple[str, str], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if gens is None:
            if parts[0] != "gens":
                raise PresentationError(f"line {lineno}: expected 'gens' line first")
            gens = tuple(parts[1:])
            if not gens:
                raise PresentationError(f"line {lineno}: no generators")
            if len(set(gens)) != len(gens):
                raise PresentationError(f"line {lineno}: duplicate generator")
            continue
        if len(parts) != 3:
            raise PresentationError(f"line {lineno}: expected '<id> <id> <label>'")
        s, t, lab = parts
        if s not in gens or t not in gens:
            raise PresentationError(f"line {lineno}: unknown generator")
        if s == t:
            raise PresentationError(f"line {lineno}: diagonal pair {s} {s}")
        if lab == "inf":
            m: float = INF
        else:
            try:
                m = int(lab)
            except ValueError:
                raise PresentationError(f"line {lineno}: bad label {lab!r}") from None
            if m < 2:
                raise PresentationError(f"line {lineno}: off-diagonal label {m} forbidden (must be >= 2)")
        prev = labels.get((s, t))
        if prev is not None and prev != m:
            raise PresentationError(f"line {lineno}: conflicting label for pair ({s},{t})")
        labels[(s, t)] = m
        labels[(t, s)] = m
    if gens is None:
        raise PresentationError("empty presentation: no 'gens' line")
    return CoxeterSystem(gens, labels)


def format_system(sys: CoxeterSystem) -> str:
    """Serialize back to the presentation file format (finite labels only)."""
    lines = ["gens " + " ".join(sys.generators)]
    for s, t in sys.pairs():
        m = sys.m(s, t)
        if m != INF:
            lines.append(f"{s} {t} {int(m)}")
    return "\n".join(lines) + "\n"


# --- triangle types ---------------------------------------------------------

SPHERICAL = "Spherical"
EUCLIDEAN = "Euclidean"
HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class TriangleType:
    kind: str
    triple: tuple[float, float, float]


def _recip(m: float) -> Fraction:
    # infinity contributes 0 to the reciprocal sum
    return Fraction(0) if m == INF else Fraction(1, int(m))


def reciprocal_sum(ms: Iterable[float]) -> Fraction:
    return sum((_recip(m) for m in ms), Fraction(0))


def triangle_type(sys: CoxeterSystem, triple: Iterable[str]) -> TriangleType:
    """Spherical / Euclidean / Hyperbolic by exact reciprocal-sum comparison."""
    trip = tuple(triple)
    if len(set(trip)) != 3:
        raise ValueError("triangle_type needs exactly 3 distinct generators")
    r, s, t = trip
    ms = (sys.m(r, s), sys.m(s, t), sys.m(r, t))
    total = reciprocal_sum(ms)
    if total > 1:
        kind = SPHERICAL
    elif total == 1:
        kind = EUCLIDEAN
    else:
        kind = HYPERBOLIC
    return TriangleType(kind, ms)


# --- irreducible components and finite-type recognition ---------------------

def irreducible_components(sys: CoxeterSystem, subset: Iterable[str]) -> list[tuple[str, ...]]:
    """Connected components of the Coxeter diagram restricted to `subset`.

    Diagram edges are the pairs with m_st >= 3 (including infinity); m_st = 2
    means the generators commute and live in different components.
    """
    sub = [g for g in sys.generators if g in set(subset)]
    seen: set[str] = set()
    comps = []
    for g in sub:
        if g in seen:
            continue
        comp = [g]
        seen.add(g)
        stack = [g]
        while stack:
            u = stack.pop()
            for v in sub:
                if v not in seen and sys.m(u, v) >= 3:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(tuple(sorted(comp, key=sys.index)))
    return comps


@dataclass(frozen=True)
class FiniteTypeVerdict:
    finite: bool
    # finite: list of component diagram names; infinite: description of one
    # infinite component (its generators and why it fails).
    witness: tuple[str, ...]


def _component_diagram_name(sys: CoxeterSystem, comp: tuple[str, ...]) -> Optional[str]:
    """Name of the finite-type diagram for an irreducible component, or None.

    Recognizes A_n, B_n, D_n, E6/E7/E8, F4, H3/H4, I2(m).  The component is
    connected with every edge labeled >= 3 (or infinity).
    """
    n = len(comp)
    if n == 1:
        return "A1"
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = sys.m(comp[i], comp[j])
            if m >= 3:
                edges.append((comp[i], comp[j], m))
    if any(m == INF for _, _, m in edges):
        return None
    if n == 2:
        m = int(edges[0][2])
        if m == 3:
            return "A2"
        if m == 4:
            return "B2"
        if m == 6:
            return "G2"
        return f"I2({m})"
    # rank >= 3: finite-type diagrams are trees
    if len(edges) != n - 1:
        return None
    deg = {g: 0 for g in comp}
    for s, t, _ in edges:
        deg[s] += 1
        deg[t] += 1
    branch = [g for g in comp if deg[g] >= 3]
    labels = sorted(int(m) for _, _, m in edges)
    if len(branch) > 1 or any(deg[g] > 3 for g in comp):
        return None
    if len(branch) == 1:
        # D_n / E6 / E7 / E8: all labels 3, branch arm lengths (1,1,k) or (1,2,k)
        if labels != [3] * (n - 1):
            return None
        arms = sorted(_arm_lengths(comp, edges, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return {2: "E6", 3: "E7", 4: "E8"}[arms[2]]
        return None
    # path: locate the non-3 labels
    ends = [g for g in comp if deg[g] == 1]
    order = _path_order(comp, edges, ends[0])
    path_labels = [int(sys.m(order[i], order[i + 1])) for i in range(n - 1)]
    big = [(i, m) for i, m in enumerate(path_labels) if m != 3]
    if not big:
        return f"A{n}"
    if len(big) > 1:
        return None
    i, m = big[0]
    at_end = i == 0 or i == n - 2
    if m == 4 and at_end:
        return f"B{n}"
    if m == 4 and n == 4 and i == 1:
        return "F4"
    if m == 5 and at_end and n in (3, 4):
        return {3: "H3", 4: "H4"}[n]
    return None


def _arm_lengths(comp, edges, center):
    adj = {g: [] for g in comp}
    for s, t, _ in edges:
        adj[s].append(t)
        adj[t].append(s)
    lengths = []
    for start in adj[center]:
        ln = 1
        prev, cur = center, start
        while True:
            nxt = [v for v in adj[cur] if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    return lengths


def _path_order(comp, edges, end):
    adj = {g: [] for g in comp}
    for s, t, _ in edges:
        adj[s].append(t)
        adj[t].append(s)
    order = [end]
    prev = None
    cur = end
    while len(order) < len(comp):
        nxt = [v for v in adj[cur] if v != prev][0]
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def is_finite_type(sys: CoxeterSystem, subset: Iterable[str]) -> FiniteTypeVerdict:
    """Decide whether the special subgroup generated by `subset` is finite.

    Exact, integer-only: each irreducible component is matched against the
    classified finite diagrams.  Cross-checked in the test suite against
    Todd-Coxeter enumeration.
    """
    names = []
    for comp in irreducible_components(sys, subset):
        name = _component_diagram_name(sys, comp)
        if name is None:
            return FiniteTypeVerdict(False, ("infinite component: " + " ".join(comp),))
        names.append(name)
    return FiniteTypeVerdict(True, tuple(names))


def finite_coxeter_order(name: str) -> int:
    """Order of the finite Coxeter group with the given diagram name."""
    if name.startswith("I2("):
        return 2 * int(name[3:-1])
    fixed = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "F4": 1152,
             "H3": 120, "H4": 14400, "E6": 51840, "E7": 2903040, "E8": 696729600}
    if name in fixed:
        return fixed[name]
    family, n = name[0], int(name[1:])
    if family == "A":
        return math.factorial(n + 1)
    if family == "B":
        return (2 ** n) * math.factorial(n)
    if family == "D":
        return (2 ** (n - 1)) * math.factorial(n)
    raise ValueError(f"unknown diagram {name}")


def subgroup_order(sys: CoxeterSystem, subset: Iterable[str]) -> Optional[int]:
    """Order of a finite special subgroup, or None if infinite."""
    verdict = is_finite_type(sys, subset)
    if not verdict.finite:
        return None
    order = 1
    for name in verdict.witness:
        order *= finite_coxeter_order(name)
    return order


# --- Tits geometric representation ------------------------------------------

def cosine_matrix(sys: CoxeterSystem) -> np.ndarray:
    """Bilinear form B with B[s][t] = -cos(pi/m_st), B[s][s] = 1."""
    n = sys.rank
    B = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = sys.m(sys.generators[i], sys.generators[j])
            B[i, j] = -1.0 if m == INF else -math.cos(math.pi / m)
    return B


def geometric_representation(sys: CoxeterSystem) -> list[np.ndarray]:
    """Reflection matrices of the Tits representation, one per generator.

    rho(s) x = x - 2 B(e_s, x) e_s; each matrix is an involution preserving
    the cosine form, and rho(s) rho(t) has order m_st when finite.
    """
    B = cosine_matrix(sys)
    n = sys.rank
    mats = []
    for i in range(n):
        M = np.eye(n)
        M[i, :] -= 2.0 * B[i, :]
        mats.append(M)
    return mats
