"""Boundary classification for Coxeter groups with complete-graph nerves.

The decision pipeline: finite groups are EmptyOrFinite; groups whose nerve is
the 1-dimensional complete graph K_n get the n-trichotomy verdict (circle,
Sierpinski carpet, Menger curve); anything outside those hypotheses is
refused with a machine-readable OutOfScope reason rather than guessed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .nerve import NerveComplex, build_nerve, is_complete_1d_nerve
from .system import (EUCLIDEAN, INF, CoxeterSystem, TriangleType, is_finite_type,
                     reciprocal_sum, triangle_type)

CIRCLE = "Circle"
SIERPINSKI_CARPET = "SierpinskiCarpet"
MENGER_CURVE = "MengerCurve"
EMPTY_OR_FINITE = "EmptyOrFinite"
OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class BoundaryClass:
    tag: str
    reason: Optional[str] = None   # populated for OutOfScope only

    def __str__(self) -> str:
        return self.tag if self.reason is None else f"{self.tag}({self.reason})"


@dataclass(frozen=True)
class ClassificationReport:
    system: CoxeterSystem
    boundary: BoundaryClass
    n: int
    serre_fa: bool
    has_euclidean_triple: bool
    hyperbolic: bool
    isolated_flats: bool
    triangle_census: tuple[tuple[tuple[str, str, str], TriangleType], ...]
    citations: tuple[str, ...]


def serre_fa_criterion(sys: CoxeterSystem) -> bool:
    """Serre's sufficient criterion for Property FA: every pairwise product
    has finite order.  True on the criterion, not on Property FA itself."""
    return all(sys.m(s, t) != INF for s, t in sys.pairs())


def euclidean_triple_scan(sys: CoxeterSystem) -> list[tuple[str, str, str]]:
    """All 3-subsets whose reciprocal label sum is exactly 1 (flat sources)."""
    out = []
    for trip in combinations(sys.generators, 3):
        ms = (sys.m(trip[0], trip[1]), sys.m(trip[1], trip[2]), sys.m(trip[0], trip[2]))
        if reciprocal_sum(ms) == 1:
            out.append(trip)
    return out


def isolated_flats_check(sys: CoxeterSystem, nerve: NerveComplex) -> bool:
    """Isolated flats hold for complete-graph nerves; asserts the mechanism
    (no two adjacent nerve edges are both labeled 2)."""
    complete, _ = is_complete_1d_nerve(nerve)
    if not complete:
        raise ValueError("isolated_flats_check requires a complete 1-dimensional nerve")
    for v in nerve.vertices:
        twos = [e for e in nerve.edges() if v in e and sys.m(*e) == 2]
        if len(twos) >= 2:
            # would contradict 1-dimensionality: a (2,2,m) triple is finite
            raise AssertionError(
                f"nerve inconsistency: vertex {v} has two incident edges labeled 2")
    return True


def classify_boundary(sys: CoxeterSystem) -> ClassificationReport:
    """Three-way visual-boundary verdict with audit trail."""
    n = sys.rank
    citations: list[str] = []
    census = tuple(
        (trip, triangle_type(sys, trip)) for trip in combinations(sys.generators, 3)
    )
    fa = serre_fa_criterion(sys)
    euclidean = euclidean_triple_scan(sys)
    has_euc = bool(euclidean)
    hyperbolic = not has_euc

    nerve = build_nerve(sys, max_dim=2)
    complete1d, nverts = is_complete_1d_nerve(nerve)
    flats = isolated_flats_check(sys, nerve) if complete1d else False

    def report(boundary: BoundaryClass) -> ClassificationReport:
        return ClassificationReport(sys, boundary, n, fa, has_euc, hyperbolic,
                                    flats, census, tuple(citations))

    if is_finite_type(sys, sys.generators).finite:
        citations.append("whole generating set is finite type: finite group, empty or finite boundary")
        return report(BoundaryClass(EMPTY_OR_FINITE))
    if not complete1d:
        if nerve.dimension != 1:
            reason = f"nerve dimension {nerve.dimension} != 1"
        else:
            reason = "nerve not complete (some m_st = inf)"
        citations.append("hypotheses of the complete-graph trichotomy not met: " + reason)
        return report(BoundaryClass(OUT_OF_SCOPE, reason))

    citations.append(f"nerve is the 1-dimensional complete graph K_{nverts}")
    citations.append("Serre criterion holds: all pairwise products have finite order"
                     if fa else "Serre criterion fails")
    citations.append("isolated flats: complete-graph nerve, no vertex with two label-2 edges")
    if has_euc:
        citations.append(f"{len(euclidean)} Euclidean triple(s) found: flats exist, group not hyperbolic")
    else:
        citations.append("no Euclidean triple: no flat sources in the 2-dimensional regime")

    if n == 3:
        kind = census[0][1].kind
        citations.append(f"n=3: infinite triangle group ({kind}): circle boundary")
        return report(BoundaryClass(CIRCLE))
    if n == 4:
        citations.append("n=4: planar nerve, boundary is the Sierpinski carpet")
        return report(BoundaryClass(SIERPINSKI_CARPET))
    citations.append(f"n={n} >= 5: K_5 embeds in the boundary, boundary is the Menger curve")
    return report(BoundaryClass(MENGER_CURVE))


def report_to_dict(r: ClassificationReport) -> dict:
    """JSON-stable view: fixed field names, deterministic ordering."""
    return {
        "system": {
            "generators": list(r.system.generators),
            "labels": [
                [s, t, "inf" if r.system.m(s, t) == INF else int(r.system.m(s, t))]
                for s, t in r.system.pairs()
            ],
        },
        "n": r.n,
        "boundary": str(r.boundary),
        "serre_fa": r.serre_fa,
        "euclidean_triples": [list(t) for t, tt in r.triangle_census if tt.kind == EUCLIDEAN],
        "hyperbolic": r.hyperbolic,
        "isolated_flats": r.isolated_flats,
        "citations": list(r.citations),
    }


def report_to_json(r: ClassificationReport) -> str:
    return json.dumps(report_to_dict(r), indent=2)
