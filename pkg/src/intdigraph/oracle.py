"""Brute-force reference implementations.

Everything here is written for transparency, not speed: backtracking and
subset enumeration whose correctness can be read off the definitions.
Each oracle refuses inputs beyond its budget instead of degrading.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .errors import BudgetExceeded
from .graphs import Certificate, Digraph, UndirectedGraph, verify_set
from .domination import Bigraph, IntervalBigraphRep
from .ordering import (Ordering, check_reflexive_interval_ordering,
                       verify_duf_ordering)


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps per problem family plus an optional wall-clock cap."""

    subset_n: int = 16
    perm_n: int = 8
    k33_n: int = 30
    time_cap_s: Optional[float] = None


DEFAULT_BUDGET = OracleBudget()


class _Deadline:
    __slots__ = ("at",)

    def __init__(self, budget: OracleBudget):
        self.at = None if budget.time_cap_s is None else time.monotonic() + budget.time_cap_s

    def check(self) -> None:
        if self.at is not None and time.monotonic() > self.at:
            raise BudgetExceeded("oracle time cap exceeded")


def _refuse(kind: str, n: int, limit: int) -> None:
    if n > limit:
        raise BudgetExceeded(f"{kind} oracle limited to n <= {limit}, got {n}")


def brute_kernel(g: Digraph, objective: str = "exists",
                 weights: Optional[Iterable[int]] = None,
                 budget: OracleBudget = DEFAULT_BUDGET) -> Optional[Certificate]:
    """Kernel existence / minimum / maximum by independent-set backtracking.

    Enumerates independent sets vertex by vertex, tracking how many
    vertices still lack a chosen out-neighbour; a leaf with none left is a
    kernel.  For 'min', a branch is cut once every vertex is absorbed
    (weights are non-negative, supersets cannot improve) or once it cannot
    beat the incumbent.
    """
    if objective not in ("exists", "min", "max"):
        raise ValueError(f"objective must be exists/min/max, got {objective!r}")
    _refuse("kernel", g.n, budget.subset_n)
    deadline = _Deadline(budget)
    n = g.n
    w = list(weights) if weights is not None else [1] * n
    if len(w) != n or any(not isinstance(x, int) or x < 0 for x in w):
        raise ValueError("weights must be n non-negative integers")
    und = [set(g.out_adj[v]) | set(g.in_adj[v]) for v in range(n)]

    blocked = [0] * n
    absorbed = [0] * n
    chosen: list[int] = []
    chosen_flag = [False] * n
    state = {"unsat": n, "best_val": None, "best_set": None, "nodes": 0}

    def take(v: int) -> None:
        chosen_flag[v] = True
        chosen.append(v)
        if absorbed[v] == 0:
            state["unsat"] -= 1
        for u in g.in_adj[v]:
            absorbed[u] += 1
            if absorbed[u] == 1 and not chosen_flag[u]:
                state["unsat"] -= 1
        for u in und[v]:
            blocked[u] += 1

    def drop(v: int) -> None:
        chosen_flag[v] = False
        chosen.pop()
        if absorbed[v] == 0:
            state["unsat"] += 1
        for u in g.in_adj[v]:
            absorbed[u] -= 1
            if absorbed[u] == 0 and not chosen_flag[u]:
                state["unsat"] += 1
        for u in und[v]:
            blocked[u] -= 1

    def record(val: int) -> None:
        best = state["best_val"]
        if best is None or (val > best if objective == "max" else val < best):
            state["best_val"] = val
            state["best_set"] = tuple(sorted(chosen))

    def dfs(idx: int, val: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] % 4096 == 0:
            deadline.check()
        if state["unsat"] == 0:
            if objective == "exists":
                record(val)
                return True
            if objective == "min":
                record(val)
                return False  # supersets cannot be lighter
        if idx == n:
            if state["unsat"] == 0:
                record(val)
            return False
        if objective == "min" and state["best_val"] is not None and val >= state["best_val"]:
            return False
        if blocked[idx] == 0:
            take(idx)
            if dfs(idx + 1, val + w[idx]):
                return True
            drop(idx)
        return dfs(idx + 1, val)

    dfs(0, 0)
    if state["best_set"] is None:
        return None
    vertices = state["best_set"]
    cert = verify_set(g, vertices, "kernel")
    assert cert.all_checks_pass()
    return Certificate(vertices=vertices, checks=cert.checks,
                       algorithm="brute-kernel",
                       optimal=objective != "exists",
                       objective=None if objective == "exists" else objective,
                       value=state["best_val"])


def brute_min_absorbing(g: Digraph, budget: OracleBudget = DEFAULT_BUDGET) -> Certificate:
    """Minimum absorbing set: subsets by increasing size, first hit wins."""
    _refuse("absorbing", g.n, budget.subset_n)
    deadline = _Deadline(budget)
    n = g.n
    ticks = 0
    for r in range(n + 1):
        for comb in combinations(range(n), r):
            ticks += 1
            if ticks % 4096 == 0:
                deadline.check()
            sset = set(comb)
            if all(v in sset or any(u in sset for u in g.out_adj[v]) for v in range(n)):
                cert = verify_set(g, comb, "absorbing")
                assert cert.all_checks_pass()
                return Certificate(vertices=tuple(comb), checks=cert.checks,
                                   algorithm="brute-absorbing", optimal=True,
                                   objective="min", value=r)
    raise AssertionError("the full vertex set always absorbs")


def brute_max_independent(g: Digraph, weights: Optional[Iterable[int]] = None,
                          budget: OracleBudget = DEFAULT_BUDGET) -> Certificate:
    """Maximum-weight independent set by branch and bound."""
    _refuse("independent-set", g.n, budget.subset_n)
    deadline = _Deadline(budget)
    n = g.n
    w = list(weights) if weights is not None else [1] * n
    if len(w) != n or any(not isinstance(x, int) or x < 0 for x in w):
        raise ValueError("weights must be n non-negative integers")
    und = [set(g.out_adj[v]) | set(g.in_adj[v]) for v in range(n)]
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] + w[v]

    best = {"val": -1, "set": ()}
    blocked = [0] * n
    chosen: list[int] = []
    nodes = [0]

    def dfs(idx: int, val: int) -> None:
        nodes[0] += 1
        if nodes[0] % 4096 == 0:
            deadline.check()
        if val > best["val"]:
            best["val"] = val
            best["set"] = tuple(sorted(chosen))
        if idx == n or val + suffix[idx] <= best["val"]:
            return
        if blocked[idx] == 0:
            chosen.append(idx)
            for u in und[idx]:
                blocked[u] += 1
            dfs(idx + 1, val + w[idx])
            for u in und[idx]:
                blocked[u] -= 1
            chosen.pop()
        dfs(idx + 1, val)

    dfs(0, 0)
    cert = verify_set(g, best["set"], "independent")
    assert cert.all_checks_pass()
    return Certificate(vertices=best["set"], checks=cert.checks,
                       algorithm="brute-independent", optimal=True,
                       objective="max", value=best["val"])


def brute_red_blue(instance, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[Certificate]:
    """Minimum A-dominating subset of B by increasing-size enumeration.

    Accepts either a :class:`Bigraph` or an :class:`IntervalBigraphRep`.
    Returns None exactly when some A-vertex is isolated.
    """
    if isinstance(instance, IntervalBigraphRep):
        big = instance.to_bigraph()
    elif isinstance(instance, Bigraph):
        big = instance
    else:
        raise TypeError(f"expected Bigraph or IntervalBigraphRep, got {type(instance)}")
    _refuse("red-blue", big.b_size, budget.subset_n)
    deadline = _Deadline(budget)
    if any(len(big.adj_a[a]) == 0 for a in range(big.a_size)):
        return None
    ticks = 0
    for r in range(big.b_size + 1):
        for comb in combinations(range(big.b_size), r):
            ticks += 1
            if ticks % 4096 == 0:
                deadline.check()
            sset = set(comb)
            if all(any(b in sset for b in big.adj_a[a]) for a in range(big.a_size)):
                return Certificate(vertices=tuple(comb),
                                   checks={"a-dominating": True},
                                   algorithm="brute-red-blue", optimal=True,
                                   objective="min", value=r)
    raise AssertionError("all of B dominates when no A-vertex is isolated")


def find_induced_k33(h: UndirectedGraph, budget: OracleBudget = DEFAULT_BUDGET
                     ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two disjoint independent triples joined by all nine cross edges.

    Exhausts every 3+3 split: one side ranges over all independent triples
    in lexicographic order, the other over independent triples inside the
    common neighbourhood of the first.  A 6-subset induces exactly this
    pattern iff it induces a complete bipartite 3x3 graph.
    """
    _refuse("k33", h.n, budget.k33_n)
    deadline = _Deadline(budget)
    n = h.n
    mask = [0] * n
    for u in range(n):
        for v in h.adj[u]:
            mask[u] |= 1 << v
    ticks = 0
    for a in range(n):
        for b in range(a + 1, n):
            if mask[a] >> b & 1:
                continue
            for c in range(b + 1, n):
                ticks += 1
                if ticks % 1024 == 0:
                    deadline.check()
                if (mask[a] >> c & 1) or (mask[b] >> c & 1):
                    continue
                common = mask[a] & mask[b] & mask[c]
                if common.bit_count() < 3:
                    continue
                members = [v for v in range(n) if common >> v & 1]
                for x, y, z in combinations(members, 3):
                    if (mask[x] >> y & 1) or (mask[x] >> z & 1) or (mask[y] >> z & 1):
                        continue
                    return ((a, b, c), (x, y, z))
    return None


def brute_ordering_search(g: Digraph, kind: str = "duf",
                          budget: OracleBudget = DEFAULT_BUDGET) -> Optional[Ordering]:
    """First permutation (lexicographic) passing the requested check."""
    if kind not in ("duf", "reflexive-interval"):
        raise ValueError(f"kind must be 'duf' or 'reflexive-interval', got {kind!r}")
    _refuse("ordering-search", g.n, budget.perm_n)
    deadline = _Deadline(budget)
    ticks = 0
    for perm in permutations(range(g.n)):
        ticks += 1
        if ticks % 256 == 0:
            deadline.check()
        ordering = Ordering(perm, role=kind)
        if kind == "duf":
            if verify_duf_ordering(g, ordering) is None:
                return ordering
        else:
            if check_reflexive_interval_ordering(g, ordering, find_witness=False) is None:
                return ordering
    return None
