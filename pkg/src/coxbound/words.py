"""Word problem kernel: Tits normal forms, equality, coset enumeration, balls.

Normal forms use braid-move closure: by Tits' solution to the word problem,
a word is non-reduced iff some sequence of braid moves exposes an adjacent
equal pair, and all reduced expressions of an element are connected by braid
moves (Matsumoto).  The ShortLex-least reduced expression is therefore the
minimum of the braid closure of any reduced representative.  Closures are
memoized per system.

The Todd-Coxeter oracle dispatches to a compiled HLT kernel when the
extension built; set COXBOUND_PURE_PYTHON=1 to force the pure-Python twin.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .system import INF, CoxeterSystem

from . import _coset_py

if os.environ.get("COXBOUND_PURE_PYTHON"):
    _kernel = _coset_py
    COSET_BACKEND = "python"
else:
    try:
        from . import _coset as _kernel  # type: ignore[attr-defined]

        COSET_BACKEND = "cython"
    except ImportError:
        _kernel = _coset_py
        COSET_BACKEND = "python"

DEFAULT_MAX_WORD_LENGTH = 20


class WordLengthError(ValueError):
    """Word exceeds the configured length bound."""


class WordContext:
    """Per-system memo tables for normal-form computation.

    Deterministic and observationally pure: results never depend on call
    order.  Concurrent users should hold independent instances.
    """

    def __init__(self, sys: CoxeterSystem, max_length: int = DEFAULT_MAX_WORD_LENGTH):
        self.system = sys
        self.max_length = max_length
        self.gens = sys.generators
        self._index = {g: i for i, g in enumerate(self.gens)}
        n = sys.rank
        self._m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j:
                    m = sys.m(self.gens[i], self.gens[j])
                    self._m[i][j] = 0 if m == INF else int(m)
        self._nf_memo: dict[tuple[int, ...], tuple[int, ...]] = {(): ()}
        self._mul_memo: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}

    def encode(self, word: Iterable[str]) -> tuple[int, ...]:
        try:
            return tuple(self._index[g] for g in word)
        except KeyError as e:
            raise ValueError(f"letter {e.args[0]!r} is not a generator") from None

    def decode(self, word: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.gens[i] for i in word)

    def _braid_closure(self, word: tuple[int, ...]) -> set[tuple[int, ...]]:
        """All words reachable from `word` by braid moves (same length)."""
        seen = {word}
        stack = [word]
        L = len(word)
        while stack:
            w = stack.pop()
            for i in range(L - 1):
                a, b = w[i], w[i + 1]
                if a == b:
                    continue
                m = self._m[a][b]
                if m == 0 or i + m > L:
                    continue
                ok = True
                for k in range(2, m):
                    if w[i + k] != (a if k % 2 == 0 else b):
                        ok = False
                        break
                if ok:
                    repl = tuple(b if k % 2 == 0 else a for k in range(m))
                    w2 = w[:i] + repl + w[i + m:]
                    if w2 not in seen:
                        seen.add(w2)
                        stack.append(w2)
        return seen

    def normal_form(self, word: Sequence[int]) -> tuple[int, ...]:
        """ShortLex normal form of a word in generator indices."""
        w = tuple(word)
        if len(w) > self.max_length:
            raise WordLengthError(f"word length {len(w)} exceeds bound {self.max_length}")
        if w in self._nf_memo:
            return self._nf_memo[w]
        cur = w
        while True:
            cls = self._braid_closure(cur)
            shorter = None
            for u in cls:
                for i in range(len(u) - 1):
                    if u[i] == u[i + 1]:
                        shorter = u[:i] + u[i + 2:]
                        break
                if shorter is not None:
                    break
            if shorter is None:
                nf = min(cls) if cls else ()
                break
            cur = shorter
        self._nf_memo[w] = nf
        return nf

    def multiply(self, nf: tuple[int, ...], s: int) -> tuple[int, ...]:
        """Normal form of (element of nf) * s, for nf already in normal form."""
        key = (nf, s)
        cached = self._mul_memo.get(key)
        if cached is None:
            cached = self.normal_form(nf + (s,))
            self._mul_memo[key] = cached
        return cached


_contexts: dict[CoxeterSystem, WordContext] = {}


def word_context(sys: CoxeterSystem) -> WordContext:
    ctx = _contexts.get(sys)
    if ctx is None:
        ctx = WordContext(sys)
        _contexts[sys] = ctx
    return ctx


@dataclass(frozen=True)
class NormalForm:
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)


def tits_normal_form(sys: CoxeterSystem, word: Iterable[str]) -> NormalForm:
    ctx = word_context(sys)
    return NormalForm(ctx.decode(ctx.normal_form(ctx.encode(word))))


def words_equal(sys: CoxeterSystem, w1: Iterable[str], w2: Iterable[str]) -> bool:
    return tits_normal_form(sys, w1) == tits_normal_form(sys, w2)


# --- Todd-Coxeter oracle ------------------------------------------------------

@dataclass(frozen=True)
class CosetTable:
    subset: tuple[str, ...]
    complete: bool
    order: Optional[int]       # group order when complete
    cosets_defined: int        # total rows ever defined (live + dead)
    cap: int


def coxeter_relators(sys: CoxeterSystem, subset: Sequence[str]) -> list[list[int]]:
    """Relators s^2 and (st)^m_st in subset-local generator indices."""
    idx = {g: i for i, g in enumerate(subset)}
    rels = [[i, i] for i in range(len(subset))]
    for a in range(len(subset)):
        for b in range(a + 1, len(subset)):
            m = sys.m(subset[a], subset[b])
            if m != INF:
                rels.append([idx[subset[a]], idx[subset[b]]] * int(m))
    return rels


def todd_coxeter_enumerate(sys: CoxeterSystem, subset: Iterable[str],
                           cap: int = 100_000) -> CosetTable:
    """Enumerate the special subgroup generated by `subset` over the trivial
    subgroup.  A full table within `cap` cosets certifies finiteness and gives
    the order; hitting the cap yields Incomplete (no infiniteness claim)."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    sub = tuple(g for g in sys.generators if g in set(subset))
    if not sub:
        return CosetTable(sub, True, 1, 1, cap)
    relators = coxeter_relators(sys, sub)
    complete, order, defined = _kernel.enumerate_cosets(len(sub), relators, cap)
    return CosetTable(sub, complete, order if complete else None, defined, cap)


def spherical_triangle_order(a: int, b: int, c: int) -> Optional[int]:
    """Order 4/(1/a+1/b+1/c - 1) of a spherical triangle group, else None."""
    from fractions import Fraction

    s = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) - 1
    if s <= 0:
        return None
    order = 4 / s
    return int(order)


# --- Cayley balls -------------------------------------------------------------

@dataclass(frozen=True)
class CayleyBall:
    radius: int
    vertices: tuple[tuple[str, ...], ...]          # normal forms, BFS/ShortLex order
    edges: tuple[tuple[tuple[str, ...], tuple[str, ...], str], ...]  # (g, gs, s), len(gs) > len(g)
    sphere_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def cayley_ball(sys: CoxeterSystem, radius: int) -> CayleyBall:
    """Ball of word-length radius in the Cayley graph, vertices as normal forms."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    ctx = word_context(sys)
    n = sys.rank
    ball: set[tuple[int, ...]] = {()}
    layers: list[list[tuple[int, ...]]] = [[()]]
    for r in range(radius):
        nxt = set()
        for v in layers[r]:
            for s in range(n):
                u = ctx.multiply(v, s)
                if len(u) == len(v) + 1 and u not in ball:
                    nxt.add(u)
        ball.update(nxt)
        if not nxt:
            break
        layers.append(sorted(nxt))
    vertices = [v for layer in layers for v in layer]
    edges = []
    for v in vertices:
        for s in range(n):
            u = ctx.multiply(v, s)
            if len(u) == len(v) + 1 and u in ball:
                edges.append((ctx.decode(v), ctx.decode(u), ctx.gens[s]))
    return CayleyBall(
        radius,
        tuple(ctx.decode(v) for v in vertices),
        tuple(edges),
        tuple(len(layer) for layer in layers),
    )
