"""Vertex-ordering characterizations and the ordering-to-representation map.

Two nested conditions appear throughout:

* the *directed umbrella-free* (DUF) condition on an ordering: every edge
  spanning a middle vertex is covered on one side, in both edge directions;
* the stronger *forbidden-structure* condition: six four-vertex patterns
  (three per edge direction, the middle pair allowed to coincide in four of
  them) must not occur.  An ordering avoids all six exactly when the
  constructive interval formulas below realize the digraph, which is what
  :func:`check_reflexive_interval_ordering` exploits: build, verify, and
  only hunt for an explicit witness when verification fails.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ForbiddenStructure, InvalidOrdering, NotReflexive
from .graphs import Digraph, UndirectedGraph
from .intervals import Interval, IntervalRep, realize_digraph

ROLES = ("duf", "reflexive-interval", "cocomparability", "adjusted")

# Largest n for which a failing check still locates a concrete quadruple.
WITNESS_SEARCH_CAP = 2000


class Ordering:
    """A permutation of [0, n) with a role tag."""

    __slots__ = ("perm", "role", "positions")

    def __init__(self, perm: Iterable[int], role: str = "duf"):
        perm = tuple(perm)
        n = len(perm)
        pos = [-1] * n
        for p, v in enumerate(perm):
            if not (0 <= v < n) or pos[v] != -1:
                raise InvalidOrdering(f"{perm} is not a permutation of [0, {n})")
            pos[v] = p
        if role not in ROLES:
            raise InvalidOrdering(f"unknown ordering role {role!r}")
        self.perm = perm
        self.role = role
        self.positions = tuple(pos)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __eq__(self, other):
        if not isinstance(other, Ordering):
            return NotImplemented
        return self.perm == other.perm and self.role == other.role

    def __hash__(self):
        return hash((self.perm, self.role))

    def __repr__(self):
        return f"Ordering({self.perm}, role={self.role!r})"


@dataclass(frozen=True)
class StructureWitness:
    """A concrete violation found in an ordering.

    ``vertices`` lists four vertices at ordering positions a < b <= c < d
    (b = c for the collapsed patterns and for DUF violations, where the
    tuple is (i, j, j, k)).  Kinds 'i'..'vi' name the four-vertex patterns;
    'duf-out'/'duf-in' name the two directions of the umbrella condition;
    'unlocated' is a bare failing verdict above the witness-search cap.
    """

    kind: str
    vertices: tuple[int, ...]
    positions: tuple[int, ...]


def _pattern_holds(g: Digraph, kind: str, va: int, vb: int, vc: int, vd: int) -> bool:
    e = g.has_edge
    if kind == "i":
        return e(va, vd) and not e(va, vb) and not e(vc, vd)
    if kind == "ii":
        return e(va, vd) and e(vb, vc) and not e(va, vc) and not e(vb, vd)
    if kind == "iii":
        return e(va, vc) and e(vb, vd) and not e(va, vd) and not e(vb, vc)
    if kind == "iv":
        return e(vd, va) and not e(vb, va) and not e(vd, vc)
    if kind == "v":
        return e(vd, va) and e(vc, vb) and not e(vc, va) and not e(vd, vb)
    if kind == "vi":
        return e(vc, va) and e(vd, vb) and not e(vd, va) and not e(vc, vb)
    if kind == "duf-out":
        return e(va, vd) and not e(va, vb) and not e(vb, vd)
    if kind == "duf-in":
        return e(vd, va) and not e(vd, vb) and not e(vb, va)
    raise ValueError(f"unknown witness kind {kind!r}")


def structure_present(g: Digraph, witness: StructureWitness) -> bool:
    """Re-check a witness's cited edges and non-edges against ``g``."""
    va, vb, vc, vd = witness.vertices
    return _pattern_holds(g, witness.kind, va, vb, vc, vd)


def _require_matching(g, ordering) -> None:
    if ordering.n != g.n:
        raise InvalidOrdering(f"ordering covers {ordering.n} vertices, digraph has {g.n}")


def verify_duf_ordering(g: Digraph, ordering: Ordering) -> Optional[StructureWitness]:
    """None if the ordering is directed umbrella-free, else a witness.

    Scans, for every edge spanning at least one middle position, the
    vertices in between; O(n m) worst case.
    """
    _require_matching(g, ordering)
    perm, pos = ordering.perm, ordering.positions
    for p in range(g.n):
        v = perm[p]
        for q in sorted(pos[w] for w in g.out_adj[v]):
            if q < p + 2:
                continue
            k = perm[q]
            for r in range(p + 1, q):
                mid = perm[r]
                if not (g.has_edge(v, mid) or g.has_edge(mid, k)):
                    return StructureWitness("duf-out", (v, mid, mid, k), (p, r, r, q))
        for q in sorted(pos[w] for w in g.in_adj[v]):
            if q < p + 2:
                continue
            k = perm[q]
            for r in range(p + 1, q):
                mid = perm[r]
                if not (g.has_edge(k, mid) or g.has_edge(mid, v)):
                    return StructureWitness("duf-in", (v, mid, mid, k), (p, r, r, q))
    return None


def find_forbidden_structure(g: Digraph, ordering: Ordering) -> Optional[StructureWitness]:
    """Direct scan for the six patterns; lexicographically least quadruple.

    Quadruples (a, b, c, d) of positions with a < b <= c < d are visited in
    lexicographic order; at each, kinds 'i'..'vi' are tried in order ('iii'
    and 'vi' need b < c).  Intended for witness extraction and as the slow
    reference for the construct-and-verify check; O(n^4).
    """
    _require_matching(g, ordering)
    perm = ordering.perm
    n = g.n
    for pa in range(n):
        va = perm[pa]
        for pb in range(pa + 1, n):
            vb = perm[pb]
            for pc in range(pb, n):
                vc = perm[pc]
                for pd in range(pc + 1, n):
                    vd = perm[pd]
                    for kind in ("i", "ii", "iii", "iv", "v", "vi"):
                        if pb == pc and kind in ("iii", "vi"):
                            continue
                        if _pattern_holds(g, kind, va, vb, vc, vd):
                            return StructureWitness(kind, (va, vb, vc, vd),
                                                    (pa, pb, pc, pd))
    return None


def _construct_scaled(g: Digraph, ordering: Ordering):
    """The interval formulas, with every value scaled by (n + 1).

    Works in position space with 1-based indices; returns the
    per-position endpoint lists (LS, RS, LT, RT) as exact integers.  The
    scaling keeps z-fractions integral and preserves every comparison, so
    the scaled representation realizes the same digraph as the unscaled one.
    """
    n = g.n
    perm, pos = ordering.perm, ordering.positions
    scale = n + 1

    def right_end(p: int, nbr_pos: list[int]) -> int:
        nbrs = set(nbr_pos)
        j = p + 1
        while j < n and j in nbrs:
            j += 1
        # y is 1-based; j == n means everything above p is a neighbour
        y = j + 1 if j < n else n + 1
        z = len(nbr_pos) - bisect_right(nbr_pos, j)
        return (y - 1) * scale + z

    rs = [0] * n
    rt = [0] * n
    out_pos = [sorted(pos[w] for w in g.out_adj[perm[p]]) for p in range(n)]
    in_pos = [sorted(pos[w] for w in g.in_adj[perm[p]]) for p in range(n)]
    for p in range(n):
        rs[p] = right_end(p, out_pos[p])
        rt[p] = right_end(p, in_pos[p])
    ls = [0] * n
    lt = [0] * n
    for p in range(n):
        best_t = (p + 1) * scale
        for q in in_pos[p]:
            if q < p and rs[q] < best_t:
                best_t = rs[q]
        lt[p] = best_t
        best_s = (p + 1) * scale
        for q in out_pos[p]:
            if q < p and rt[q] < best_s:
                best_s = rt[q]
        ls[p] = best_s
    return ls, rs, lt, rt


def _scaled_rep(g: Digraph, ordering: Ordering) -> IntervalRep:
    ls, rs, lt, rt = _construct_scaled(g, ordering)
    pairs = [None] * g.n
    for p, v in enumerate(ordering.perm):
        pairs[v] = (Interval(ls[p], rs[p]), Interval(lt[p], rt[p]))
    return IntervalRep(pairs)


def _require_reflexive_digraph(g: Digraph) -> None:
    for v in range(g.n):
        if not g.loops[v]:
            raise NotReflexive(v, f"vertex {v} has no self-loop")


def check_reflexive_interval_ordering(
        g: Digraph, ordering: Ordering,
        find_witness: bool = True) -> Optional[StructureWitness]:
    """None if none of the six forbidden patterns occur, else a witness.

    Decision by construct-and-verify (O(n^2 + m)): the formulas realize the
    digraph exactly when the ordering is pattern-free.  On failure a
    concrete quadruple is located by :func:`find_forbidden_structure`
    unless n exceeds the search cap, in which case the witness has kind
    'unlocated'.
    """
    _require_matching(g, ordering)
    _require_reflexive_digraph(g)
    rep = _scaled_rep(g, ordering)
    if realize_digraph(rep) == g:
        return None
    if find_witness and g.n <= WITNESS_SEARCH_CAP:
        witness = find_forbidden_structure(g, ordering)
        assert witness is not None, "verification failed but no pattern found"
        return witness
    return StructureWitness("unlocated", (), ())


def build_representation(g: Digraph, ordering: Ordering) -> IntervalRep:
    """A reflexive interval representation realizing ``g`` under ``ordering``.

    Requires a loop on every vertex and a pattern-free ordering; raises
    ForbiddenStructure carrying a witness otherwise.  Endpoint values are
    the exact rationals of the construction (right ends y - 1 + z/(n+1),
    left ends the matching minima).
    """
    _require_matching(g, ordering)
    _require_reflexive_digraph(g)
    ls, rs, lt, rt = _construct_scaled(g, ordering)
    scale = g.n + 1
    pairs: list = [None] * g.n
    for p, v in enumerate(ordering.perm):
        pairs[v] = (Interval(Fraction(ls[p], scale), Fraction(rs[p], scale)),
                    Interval(Fraction(lt[p], scale), Fraction(rt[p], scale)))
    rep = IntervalRep(pairs)
    if not realize_digraph(rep) == g:
        witness = check_reflexive_interval_ordering(g, ordering)
        raise ForbiddenStructure(witness)
    return rep


def verify_cocomparability_ordering(
        h: UndirectedGraph, ordering: Ordering) -> Optional[tuple[int, int, int]]:
    """None if the ordering is umbrella-free for ``h``, else a violating
    triple (i, j, k) of vertices with i < j < k in the ordering, ik an edge
    and neither ij nor jk present."""
    if ordering.n != h.n:
        raise InvalidOrdering(f"ordering covers {ordering.n} vertices, graph has {h.n}")
    perm, pos = ordering.perm, ordering.positions
    for p in range(h.n):
        v = perm[p]
        for q in sorted(pos[w] for w in h.adj[v]):
            if q < p + 2:
                continue
            k = perm[q]
            for r in range(p + 1, q):
                mid = perm[r]
                if not (h.has_edge(v, mid) or h.has_edge(mid, k)):
                    return (v, mid, k)
    return None
