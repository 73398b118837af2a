"""Minimum absorbing and dominating sets via red-blue domination.

The splitting bigraph of a digraph G has a left copy u' and a right copy
u'' of every vertex and an edge u'v'' for every arc (u, v), self-loops
included.  When G is reflexive, subsets of the right side dominating the
whole left side correspond exactly to absorbing sets of G, which reduces
Absorbing-Set to Red-Blue Dominating Set on an interval bigraph.  The
bigraph problem is solved by a single greedy sweep: repeatedly cover the
uncovered A-vertex whose interval ends first with its furthest-reaching
B-neighbour, then jump past everything that neighbour covers.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DimensionMismatch
from .graphs import Certificate, Digraph
from .intervals import (Interval, IntervalRep, normalize, require_reflexive,
                        set_is_absorbing, set_is_dominating,
                        verify_representation)


class Bigraph:
    """A bipartite graph on parts A and B with cross edges only."""

    __slots__ = ("a_size", "b_size", "adj_a", "adj_b", "_edges")

    def __init__(self, a_size: int, b_size: int, edges: Iterable[tuple[int, int]] = ()):
        self.a_size = a_size
        self.b_size = b_size
        adj_a: list[set[int]] = [set() for _ in range(a_size)]
        adj_b: list[set[int]] = [set() for _ in range(b_size)]
        edge_set = set()
        for a, b in edges:
            if not (0 <= a < a_size and 0 <= b < b_size):
                raise DimensionMismatch(f"edge ({a}, {b}) out of range "
                                        f"for parts {a_size}, {b_size}")
            adj_a[a].add(b)
            adj_b[b].add(a)
            edge_set.add((a, b))
        self.adj_a = tuple(tuple(sorted(s)) for s in adj_a)
        self.adj_b = tuple(tuple(sorted(s)) for s in adj_b)
        self._edges = frozenset(edge_set)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self._edges

    def edges(self):
        return iter(sorted(self._edges))

    def __repr__(self):
        return f"Bigraph(|A|={self.a_size}, |B|={self.b_size}, m={self.m})"


class IntervalBigraphRep:
    """One interval per vertex of each part; a-b adjacency by intersection."""

    __slots__ = ("a_intervals", "b_intervals")

    def __init__(self, a_intervals: Iterable[Interval], b_intervals: Iterable[Interval]):
        self.a_intervals = tuple(iv if isinstance(iv, Interval) else Interval(*iv)
                                 for iv in a_intervals)
        self.b_intervals = tuple(iv if isinstance(iv, Interval) else Interval(*iv)
                                 for iv in b_intervals)

    @property
    def a_size(self) -> int:
        return len(self.a_intervals)

    @property
    def b_size(self) -> int:
        return len(self.b_intervals)

    def adjacent(self, a: int, b: int) -> bool:
        return self.a_intervals[a].intersects(self.b_intervals[b])

    def to_bigraph(self) -> Bigraph:
        edges = [(a, b) for a in range(self.a_size) for b in range(self.b_size)
                 if self.adjacent(a, b)]
        return Bigraph(self.a_size, self.b_size, edges)

    def __repr__(self):
        return f"IntervalBigraphRep(|A|={self.a_size}, |B|={self.b_size})"


def splitting_bigraph(g: Digraph, rep: Optional[IntervalRep] = None
                      ) -> tuple[Bigraph, Optional[IntervalBigraphRep]]:
    """Left/right split of ``g``; self-loops become cross edges too.

    With a representation of ``g``, also returns the induced interval
    bigraph model (S intervals on the left part, T on the right).
    """
    edges = list(g._edges)
    edges.extend((v, v) for v in range(g.n) if g.loops[v])
    big = Bigraph(g.n, g.n, edges)
    brep = None
    if rep is not None:
        if rep.n != g.n:
            raise DimensionMismatch(f"representation has {rep.n} vertices, digraph {g.n}")
        if not verify_representation(rep, g):
            raise DimensionMismatch("representation does not realize the digraph")
        brep = IntervalBigraphRep(rep.source, rep.target)
    return big, brep


@dataclass(frozen=True)
class RedBlueState:
    """Precomputed sweep data over the A-part sorted by right endpoint.

    ``a_by_right[s]`` is the A index at slot ``s``; ``cover[s]`` the
    B index reaching furthest right among its neighbours; ``jump[s]`` the
    first slot whose interval starts beyond that reach (None at the end).
    Defined only when no A-vertex is isolated; jumps strictly increase.
    """

    a_by_right: tuple[int, ...]
    cover: tuple[int, ...]
    jump: tuple[Optional[int], ...]


def _endpoint_ranks(a_intervals, b_intervals):
    """Distinct total order on all endpoints, closed semantics preserved.

    Left endpoints precede right endpoints at equal coordinates; among
    tied right endpoints, larger indices come first so that a maximum
    over ranks selects the smallest index.  Already-distinct endpoint
    sets are used as-is.
    """
    vals = []
    for iv in a_intervals:
        vals.append(iv.lo)
        vals.append(iv.hi)
    for iv in b_intervals:
        vals.append(iv.lo)
        vals.append(iv.hi)
    if len(set(vals)) == len(vals):
        a = [(iv.lo, iv.hi) for iv in a_intervals]
        b = [(iv.lo, iv.hi) for iv in b_intervals]
        return a, b
    events = []
    for part, ivs in ((0, a_intervals), (1, b_intervals)):
        for idx, iv in enumerate(ivs):
            events.append((iv.lo, 0, part, idx, "l"))
            events.append((iv.hi, 1, part, -idx, "r"))
    events.sort(key=lambda e: e[:4])
    ranks: dict[tuple, int] = {}
    for rank, (_, _, part, signed_idx, side) in enumerate(events):
        idx = signed_idx if side == "l" else -signed_idx
        ranks[(part, idx, side)] = rank
    a = [(ranks[(0, i, "l")], ranks[(0, i, "r")]) for i in range(len(a_intervals))]
    b = [(ranks[(1, i, "l")], ranks[(1, i, "r")]) for i in range(len(b_intervals))]
    return a, b


def _prefix_best(pairs):
    """pairs sorted by lo; returns lo list plus prefix (max hi, payload)."""
    los = [lo for lo, _, _ in pairs]
    pref = []
    best = None
    for _, hi, payload in pairs:
        if best is None or hi > best[0]:
            best = (hi, payload)
        pref.append(best)
    return los, pref


def build_red_blue_state(rep: IntervalBigraphRep) -> Optional[RedBlueState]:
    """The sweep state, or None when some A-vertex has no B-neighbour."""
    t = rep.a_size
    if t == 0:
        return RedBlueState((), (), ())
    if rep.b_size == 0:
        return None
    a_ivs, b_ivs = _endpoint_ranks(rep.a_intervals, rep.b_intervals)

    b_sorted = sorted((lo, hi, j) for j, (lo, hi) in enumerate(b_ivs))
    b_los, b_pref = _prefix_best(b_sorted)

    slots = sorted(range(t), key=lambda i: a_ivs[i][1])
    rho = [None] * t
    cover = [None] * t
    for s, i in enumerate(slots):
        lo, hi = a_ivs[i]
        idx = bisect_right(b_los, hi)
        if idx == 0:
            return None
        best_hi, best_j = b_pref[idx - 1]
        if best_hi < lo:
            return None
        rho[s] = best_hi
        cover[s] = best_j

    by_left = sorted(range(t), key=lambda s: a_ivs[slots[s]][0])
    left_vals = [a_ivs[slots[s]][0] for s in by_left]
    suffix_min_slot = [0] * (t + 1)
    suffix_min_slot[t] = t
    for p in range(t - 1, -1, -1):
        suffix_min_slot[p] = min(by_left[p], suffix_min_slot[p + 1])
    jump: list[Optional[int]] = [None] * t
    for s in range(t):
        p = bisect_right(left_vals, rho[s])
        j = suffix_min_slot[p]
        jump[s] = j if j < t else None

    return RedBlueState(tuple(slots), tuple(cover), tuple(jump))


def red_blue_min_dominating(rep: IntervalBigraphRep) -> Optional[Certificate]:
    """Minimum subset of B whose neighbourhoods cover all of A.

    Returns None exactly when some A-vertex is isolated.  O(n log n).
    """
    state = build_red_blue_state(rep)
    if state is None:
        return None
    picks: list[int] = []
    s = 0
    while s is not None and s < len(state.a_by_right):
        picks.append(state.cover[s])
        nxt = state.jump[s]
        assert nxt is None or nxt > s, "sweep failed to advance"
        s = nxt
    vertices = tuple(sorted(set(picks)))
    covered = _a_fully_covered(rep, vertices)
    if not covered:
        raise RuntimeError("red-blue sweep produced a non-dominating set")
    return Certificate(vertices=vertices, checks={"a-dominating": True},
                       algorithm="red-blue-sweep", optimal=True,
                       objective="min", value=len(vertices))


def _a_fully_covered(rep: IntervalBigraphRep, picks: Iterable[int]) -> bool:
    chosen = sorted(set(picks))
    if not chosen:
        return rep.a_size == 0
    pairs = sorted((rep.b_intervals[j].lo, rep.b_intervals[j].hi, j) for j in chosen)
    los, pref = _prefix_best(pairs)
    for iv in rep.a_intervals:
        idx = bisect_right(los, iv.hi)
        if idx == 0 or pref[idx - 1][0] < iv.lo:
            return False
    return True


def min_absorbing_reflexive(rep: IntervalRep) -> Certificate:
    """Minimum absorbing set of the reflexive interval digraph of ``rep``.

    Solves red-blue domination on the splitting bigraph model (A = source
    intervals, B = target intervals) and maps the chosen right copies back
    to vertices.  Reflexivity guarantees no isolated A-vertex.
    """
    nrep = normalize(rep)
    require_reflexive(nrep)
    brep = IntervalBigraphRep(nrep.source, nrep.target)
    inner = red_blue_min_dominating(brep)
    assert inner is not None, "reflexive representation cannot have isolated copies"
    vertices = inner.vertices
    if not set_is_absorbing(nrep, vertices):
        raise RuntimeError("absorbing sweep produced a non-absorbing set")
    return Certificate(vertices=vertices, checks={"absorbing": True},
                       algorithm="red-blue-sweep", optimal=True,
                       objective="min", value=len(vertices))


def min_dominating_reflexive(rep: IntervalRep) -> Certificate:
    """Minimum dominating set: absorbing on the reversal's representation.

    Swapping each vertex's source and target intervals represents the
    reversed digraph, where dominating and absorbing trade places.
    """
    nrep = normalize(rep)
    require_reflexive(nrep)
    inner = min_absorbing_reflexive(nrep.swapped())
    vertices = inner.vertices
    if not set_is_dominating(nrep, vertices):
        raise RuntimeError("dominating sweep produced a non-dominating set")
    return Certificate(vertices=vertices, checks={"dominating": True},
                       algorithm="red-blue-sweep-reversed", optimal=True,
                       objective="min", value=len(vertices))
