"""Kernel algorithms.

Three routes, by input:

* :func:`kernel_linear` finds *some* kernel of a reflexive interval digraph,
  straight from the normalized representation.  A forward pass repeatedly
  picks the surviving vertex whose source interval ends first and removes
  it together with its surviving in-neighbours; a backward pass thins the
  picked sequence to an independent set.  Never fails: reflexive interval
  digraphs are kernel-perfect.  Runs in O(n log n) plus one tree descent
  per removed vertex; the digraph itself is never materialized.

* :func:`optimal_kernel_duf` finds a minimum/maximum (optionally weighted)
  kernel of any digraph with a directed umbrella-free ordering, or the
  verdict that no kernel exists.  Dynamic program over suffixes of the
  ordering, O((n + m) n).

* :func:`optimal_kernel_adjusted` finds the same optimum in O(n^2) when the
  representation has matching left endpoints, exploiting that each
  vertex's higher neighbourhoods are then contiguous runs.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NotAdjusted, NotCocompOrdered, NotDufOrdered
from .graphs import (Certificate, Digraph, UndirectedGraph, symmetric_digraph,
                     verify_set)
from .intervals import (IntervalRep, normalize, realize_digraph,
                        require_reflexive, set_is_absorbing,
                        set_is_independent)
from .ordering import Ordering, verify_cocomparability_ordering, verify_duf_ordering

OBJECTIVES = ("min", "max")


def _check_objective(objective: str) -> None:
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")


def _check_weights(weights, n: int) -> list[int]:
    if weights is None:
        return [1] * n
    weights = list(weights)
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    for w in weights:
        if not isinstance(w, int) or w < 0:
            raise ValueError(f"weights must be non-negative integers, got {w!r}")
    return weights


# --------------------------------------------------------------------------
# linear-time kernel on reflexive interval digraphs


@dataclass(frozen=True)
class ZSequence:
    """The forward pass: picked vertices, per-step removal counts, and the
    (strictly increasing) right ends of their source intervals.  The picked
    vertex together with its just-removed in-neighbours partition V, so the
    removal counts sum to n."""

    vertices: tuple[int, ...]
    removed_counts: tuple[int, ...]
    right_ends: tuple[int, ...]


class _SurvivorIndex:
    """Max segment tree over vertices sorted by l(S), keyed on r(S).

    Supports deleting a vertex and, for a query interval [lt, rt],
    reporting-and-deleting every live vertex u with l(S_u) < rt and
    r(S_u) > lt, i.e. every surviving in-neighbour of the query's owner.
    Each vertex is reported at most once over the whole run.
    """

    __slots__ = ("size", "tree", "sorted_ls", "vertex_at", "leaf_of")

    def __init__(self, ls, rs):
        n = len(ls)
        order = sorted(range(n), key=ls.__getitem__)
        self.sorted_ls = [ls[v] for v in order]
        self.vertex_at = order
        self.leaf_of = [0] * n
        for i, v in enumerate(order):
            self.leaf_of[v] = i
        size = 1
        while size < max(n, 1):
            size <<= 1
        self.size = size
        tree = [-1] * (2 * size)
        for i, v in enumerate(order):
            tree[size + i] = rs[v]
        for i in range(size - 1, 0, -1):
            tree[i] = max(tree[2 * i], tree[2 * i + 1])
        self.tree = tree

    def _bubble(self, i: int) -> None:
        tree = self.tree
        i >>= 1
        while i:
            new = max(tree[2 * i], tree[2 * i + 1])
            if tree[i] == new:
                break
            tree[i] = new
            i >>= 1

    def remove(self, v: int) -> None:
        leaf = self.leaf_of[v] + self.size
        if self.tree[leaf] != -1:
            self.tree[leaf] = -1
            self._bubble(leaf)

    def pop_intersecting(self, lt: int, rt: int) -> list[int]:
        hi = bisect_left(self.sorted_ls, rt)
        if hi == 0:
            return []
        out: list[int] = []
        tree = self.tree
        stack = [(1, 0, self.size)]
        while stack:
            node, node_lo, node_hi = stack.pop()
            if node_lo >= hi or tree[node] <= lt:
                continue
            if node >= self.size:
                out.append(self.vertex_at[node - self.size])
                tree[node] = -1
                self._bubble(node)
                continue
            mid = (node_lo + node_hi) // 2
            stack.append((2 * node + 1, mid, node_hi))
            stack.append((2 * node, node_lo, mid))
        return out


def z_sequence(rep: IntervalRep) -> ZSequence:
    """Run the forward pass of the kernel sweep on a reflexive representation."""
    rep = normalize(rep)
    require_reflexive(rep)
    n = rep.n
    if n == 0:
        return ZSequence((), (), ())
    ls, rs, lt, rt = rep.ls, rep.rs, rep.lt, rep.rt
    order = sorted(range(n), key=rs.__getitem__)
    index = _SurvivorIndex(ls, rs)
    removed = [False] * n
    picked: list[int] = []
    counts: list[int] = []
    rights: list[int] = []
    for v in order:
        if removed[v]:
            continue
        removed[v] = True
        index.remove(v)
        ins = index.pop_intersecting(lt[v], rt[v])
        for u in ins:
            removed[u] = True
        picked.append(v)
        counts.append(1 + len(ins))
        rights.append(rs[v])
    return ZSequence(tuple(picked), tuple(counts), tuple(rights))


def kernel_linear(rep: IntervalRep) -> Certificate:
    """A kernel of the reflexive interval digraph realized by ``rep``.

    Forward pass by increasing r(S), then a right-to-left pass keeping each
    picked vertex unless it points at the last vertex kept.
    """
    rep = normalize(rep)
    seq = z_sequence(rep)
    zs = seq.vertices
    if not zs:
        return Certificate(vertices=(), checks={"independent": True, "absorbing": True},
                           algorithm="kernel-linear")
    ls, rs, lt, rt = rep.ls, rep.rs, rep.lt, rep.rt
    keep = [zs[-1]]
    last = zs[-1]
    for i in range(len(zs) - 2, -1, -1):
        z = zs[i]
        if not (ls[z] < rt[last] and lt[last] < rs[z]):  # (z, last) not an edge
            keep.append(z)
            last = z
    vertices = tuple(sorted(keep))
    checks = {"independent": set_is_independent(rep, vertices),
              "absorbing": set_is_absorbing(rep, vertices)}
    if not all(checks.values()):
        raise RuntimeError(f"kernel sweep produced an invalid set: {checks}")
    return Certificate(vertices=vertices, checks=checks, algorithm="kernel-linear")


# --------------------------------------------------------------------------
# min/max kernel on digraphs with a DUF-ordering


@dataclass(frozen=True)
class KernelTable:
    """Suffix dynamic program over an ordering, in position space.

    ``values[p]`` is the optimal kernel weight of the subgraph induced by
    positions [p, n) among kernels containing p, or None when no such
    kernel exists; ``succ[p]`` the next chosen position.  ``candidates``
    are the positions usable as the first element of a kernel of the whole
    digraph (every earlier position is one of their in-neighbours).
    """

    ordering: Ordering
    objective: str
    values: tuple[Optional[int], ...]
    succ: tuple[Optional[int], ...]
    candidates: tuple[int, ...]

    def chain_positions(self, p: int) -> list[int]:
        if self.values[p] is None:
            raise ValueError(f"position {p} has no kernel containing it")
        out = [p]
        while self.succ[out[-1]] is not None:
            out.append(self.succ[out[-1]])
        return out

    def kernel_vertices(self, p: int) -> tuple[int, ...]:
        return tuple(sorted(self.ordering.perm[q] for q in self.chain_positions(p)))


def compute_kernel_table(g: Digraph, ordering: Ordering, objective: str = "min",
                         weights: Optional[Iterable[int]] = None) -> KernelTable:
    """Fill the suffix table; assumes ``ordering`` is already verified DUF.

    For each position i the admissible continuations are the non-neighbours
    j above i such that every position strictly between is an in-neighbour
    of i or of j; they are found with one stamped scan per i, O(n + m) each.
    """
    _check_objective(objective)
    n = g.n
    perm, pos = ordering.perm, ordering.positions
    w = _check_weights(weights, n)
    wpos = [w[perm[p]] for p in range(n)]
    in_pos = [sorted(pos[u] for u in g.in_adj[perm[p]]) for p in range(n)]
    in_pos_set = [set(ps) for ps in in_pos]
    out_pos_set = [set(pos[u] for u in g.out_adj[perm[p]]) for p in range(n)]
    prefer_high = objective == "max"

    values: list[Optional[int]] = [None] * n
    succ: list[Optional[int]] = [None] * n
    stamp = [-1] * n
    lindex = [0] * n
    for i in range(n - 1, -1, -1):
        in_above = len(in_pos[i]) - bisect_right(in_pos[i], i)
        if in_above == n - 1 - i:
            values[i] = wpos[i]
            succ[i] = None
            continue
        chain = []
        for j in range(i + 1, n):
            if j not in in_pos_set[i]:
                stamp[j] = i
                lindex[j] = len(chain)
                chain.append(j)
        best_val: Optional[int] = None
        best_j: Optional[int] = None
        for idx, j in enumerate(chain):
            if j in out_pos_set[i] or values[j] is None:
                continue
            covered = 0
            for u in in_pos[j]:
                if stamp[u] == i and lindex[u] < idx:
                    covered += 1
            if covered != idx:
                continue
            val = values[j]
            if best_val is None or (val > best_val if prefer_high else val < best_val):
                best_val, best_j = val, j
        if best_j is not None:
            values[i] = wpos[i] + best_val
            succ[i] = best_j

    candidates = tuple(p for p in range(n) if bisect_left(in_pos[p], p) == p)
    return KernelTable(ordering=ordering, objective=objective,
                       values=tuple(values), succ=tuple(succ),
                       candidates=candidates)


def optimal_kernel_duf(g: Digraph, ordering: Ordering, objective: str = "min",
                       weights: Optional[Iterable[int]] = None) -> Optional[Certificate]:
    """Optimal kernel of a DUF-ordered digraph, or None when no kernel exists.

    ``objective`` picks minimum or maximum total weight (unit weights by
    default).  The ordering is re-verified; a violation raises
    :class:`NotDufOrdered` with a witness.
    """
    _check_objective(objective)
    witness = verify_duf_ordering(g, ordering)
    if witness is not None:
        raise NotDufOrdered(witness)
    if g.n == 0:
        return Certificate(vertices=(), checks={"independent": True, "absorbing": True},
                           algorithm="kernel-dp", optimal=True, objective=objective,
                           value=0)
    table = compute_kernel_table(g, ordering, objective, weights)
    prefer_high = objective == "max"
    best_p: Optional[int] = None
    best_val: Optional[int] = None
    for p in table.candidates:
        val = table.values[p]
        if val is None:
            continue
        if best_val is None or (val > best_val if prefer_high else val < best_val):
            best_val, best_p = val, p
    if best_p is None:
        return None
    vertices = table.kernel_vertices(best_p)
    cert = verify_set(g, vertices, "kernel")
    if not cert.all_checks_pass():
        raise RuntimeError(f"kernel DP produced an invalid set: {cert.checks}")
    return Certificate(vertices=vertices, checks=cert.checks, algorithm="kernel-dp",
                       optimal=True, objective=objective, value=best_val)


# --------------------------------------------------------------------------
# O(n^2) specialization for representations with shared left endpoints


def optimal_kernel_adjusted(rep: IntervalRep, objective: str = "min") -> Optional[Certificate]:
    """Optimal kernel when every vertex's intervals share a left endpoint.

    Orders vertices by the common left endpoints; upper neighbourhoods are
    then contiguous, so the continuation sets collapse to index ranges
    computed from per-vertex maxima and one suffix-minimum array.
    """
    _check_objective(objective)
    rep = normalize(rep)
    if not rep.adjusted:
        raise NotAdjusted("representation does not have matching left endpoints")
    n = rep.n
    if n == 0:
        return Certificate(vertices=(), checks={"independent": True, "absorbing": True},
                           algorithm="kernel-dp-adjusted", optimal=True,
                           objective=objective, value=0)
    g = realize_digraph(rep)
    perm = sorted(range(n), key=rep.ls.__getitem__)
    pos = [0] * n
    for p, v in enumerate(perm):
        pos[v] = p

    # self-loops count: reflexivity makes every vertex its own neighbour here
    max_out = list(range(n))
    max_in = list(range(n))
    for p, v in enumerate(perm):
        for u in g.out_adj[v]:
            if pos[u] > max_out[p]:
                max_out[p] = pos[u]
        for u in g.in_adj[v]:
            if pos[u] > max_in[p]:
                max_in[p] = pos[u]

    suffix_min_out = [0] * (n + 1)
    suffix_min_out[n] = n  # sentinel above any real position
    for p in range(n - 1, -1, -1):
        suffix_min_out[p] = min(max_out[p], suffix_min_out[p + 1])

    prefer_high = objective == "max"
    values: list[Optional[int]] = [None] * n
    succ: list[Optional[int]] = [None] * n
    for i in range(n - 1, -1, -1):
        if max_in[i] == n - 1:
            values[i] = 1
            succ[i] = None
            continue
        lo = max(max_out[i], max_in[i]) + 1
        x = suffix_min_out[max_in[i] + 1]
        best_val: Optional[int] = None
        best_j: Optional[int] = None
        for j in range(lo, min(x, n - 1) + 1):
            val = values[j]
            if val is None:
                continue
            if best_val is None or (val > best_val if prefer_high else val < best_val):
                best_val, best_j = val, j
        if best_j is not None:
            values[i] = 1 + best_val
            succ[i] = best_j

    y = min(max_out)
    best_p: Optional[int] = None
    best_val = None
    for p in range(0, y + 1):
        val = values[p]
        if val is None:
            continue
        if best_val is None or (val > best_val if prefer_high else val < best_val):
            best_val, best_p = val, p
    if best_p is None:
        return None
    chain = [best_p]
    while succ[chain[-1]] is not None:
        chain.append(succ[chain[-1]])
    vertices = tuple(sorted(perm[p] for p in chain))
    cert = verify_set(g, vertices, "kernel")
    if not cert.all_checks_pass():
        raise RuntimeError(f"adjusted kernel DP produced an invalid set: {cert.checks}")
    return Certificate(vertices=vertices, checks=cert.checks,
                       algorithm="kernel-dp-adjusted", optimal=True,
                       objective=objective, value=best_val)


# --------------------------------------------------------------------------
# minimum independent dominating set in cocomparability graphs


def min_independent_dominating_cocomp(h: UndirectedGraph, ordering: Ordering) -> Certificate:
    """Minimum independent dominating set of an umbrella-free ordered graph.

    Kernels of the symmetric digraph of ``h`` are exactly the independent
    dominating sets of ``h``, and the same ordering is umbrella-free in
    both senses, so this delegates to the kernel dynamic program.  Always
    succeeds: every maximal independent set dominates.
    """
    witness = verify_cocomparability_ordering(h, ordering)
    if witness is not None:
        raise NotCocompOrdered(witness)
    d = symmetric_digraph(h)
    cert = optimal_kernel_duf(d, Ordering(ordering.perm, role="duf"), "min")
    assert cert is not None, "symmetric digraphs always have kernels"
    sset = set(cert.vertices)
    independent = all(v not in sset for u in sset for v in h.adj[u])
    dominating = all(v in sset or any(u in sset for u in h.adj[v]) for v in range(h.n))
    checks = {"independent": independent, "dominating": dominating}
    if not all(checks.values()):
        raise RuntimeError(f"cocomparability reduction produced an invalid set: {checks}")
    return Certificate(vertices=cert.vertices, checks=checks,
                       algorithm="cocomp-min-ind-dom", optimal=True,
                       objective="min", value=cert.value)
