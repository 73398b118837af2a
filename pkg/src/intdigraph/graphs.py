"""Directed and undirected graph types plus the definitional set checkers.

Vertices are dense 0-based integers.  Self-loops are stored as per-vertex
flags, never inside the adjacency lists, and are not counted in ``m``.
All types are immutable after construction and safe to share between
threads; anything that looks like mutation builds a new object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InvalidVertex

VERIFY_MODES = ("independent", "absorbing", "dominating", "kernel", "solution")


class Digraph:
    """A directed graph with O(1)-expected edge membership tests.

    ``out_adj[u]`` / ``in_adj[u]`` are sorted tuples of neighbours other
    than ``u`` itself; ``loops[u]`` records a self-loop.  Duplicate edges
    in the input are collapsed.
    """

    __slots__ = ("n", "out_adj", "in_adj", "loops", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 loops: Iterable[int] = ()):
        if n < 0:
            raise InvalidVertex(f"vertex count {n} is negative")
        self.n = n
        loop_flags = [False] * n
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loop_flags[u] = True
                continue
            out[u].add(v)
            inn[v].add(u)
            edge_set.add((u, v))
        for v in loops:
            if not (0 <= v < n):
                raise InvalidVertex(f"loop vertex {v} out of range for n={n}")
            loop_flags[v] = True
        self.out_adj = tuple(tuple(sorted(s)) for s in out)
        self.in_adj = tuple(tuple(sorted(s)) for s in inn)
        self.loops = tuple(loop_flags)
        self._edges = frozenset(edge_set)

    @property
    def m(self) -> int:
        """Number of edges, self-loops excluded."""
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        """Edge test; ``has_edge(v, v)`` reports the self-loop flag."""
        if u == v:
            return self.loops[u]
        return (u, v) in self._edges

    def edges(self) -> Iterator[tuple[int, int]]:
        """Non-loop edges in (u, v)-sorted order."""
        return iter(sorted(self._edges))

    def loop_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.loops[v])

    def is_reflexive(self) -> bool:
        return all(self.loops)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n == other.n and self._edges == other._edges
                and self.loops == other.loops)

    def __hash__(self):
        return hash((self.n, self._edges, self.loops))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m}, loops={sum(self.loops)})"


class UndirectedGraph:
    """An undirected, loopless graph with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidVertex(f"vertex count {n} is negative")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidVertex(f"loop at {u} not allowed in undirected graph")
            a, b = (u, v) if u < v else (v, u)
            adj[a].add(b)
            adj[b].add(a)
            edge_set.add((a, b))
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = frozenset(edge_set)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self._edges

    def edges(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Certificate:
    """A vertex set together with the property checks actually run on it.

    ``checks`` maps property name to pass/fail; every key listed was
    evaluated on ``vertices``.  ``optimal`` records whether the producing
    algorithm claims extremality, ``value`` the optimised size or weight.
    """

    vertices: tuple[int, ...]
    checks: dict[str, bool] = field(default_factory=dict)
    algorithm: str = "unspecified"
    optimal: bool = False
    objective: str | None = None
    value: int | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def all_checks_pass(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        out = {
            "set": list(self.vertices),
            "size": self.size,
            "checks": dict(self.checks),
            "certificate_checked": self.all_checks_pass(),
            "algorithm": self.algorithm,
            "optimal": self.optimal,
        }
        if self.objective is not None:
            out["objective"] = self.objective
        if self.value is not None:
            out["value"] = self.value
        return out


def reverse(g: Digraph) -> Digraph:
    """The digraph with every edge (u, v) replaced by (v, u); loops kept."""
    return Digraph(g.n, ((v, u) for (u, v) in g._edges), g.loop_vertices())


def induced_subgraph(g: Digraph, s: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Subgraph induced by ``s`` and the relabel map old->new.

    New ids follow the sorted order of ``s``, so the map is a bijection
    onto ``[0, |s|)``.
    """
    svs = sorted(set(s))
    for v in svs:
        if not (0 <= v < g.n):
            raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    relabel = {v: i for i, v in enumerate(svs)}
    inset = set(svs)
    edges = [(relabel[u], relabel[v]) for (u, v) in g._edges
             if u in inset and v in inset]
    loops = [relabel[v] for v in svs if g.loops[v]]
    return Digraph(len(svs), edges, loops), relabel


def underlying_undirected(g: Digraph) -> UndirectedGraph:
    """Drop directions and loops."""
    return UndirectedGraph(g.n, g._edges)


def symmetric_digraph(h: UndirectedGraph) -> Digraph:
    """Replace every undirected edge by a pair of opposite arcs."""
    arcs = []
    for u, v in h._edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(h.n, arcs)


def _check_independent(g: Digraph, sset: set[int]) -> bool:
    for u in sset:
        for v in g.out_adj[u]:
            if v in sset:
                return False
    return True


def _check_absorbing(g: Digraph, sset: set[int]) -> bool:
    # A loop never absorbs a vertex outside the set.
    for v in range(g.n):
        if v in sset:
            continue
        if not any(w in sset for w in g.out_adj[v]):
            return False
    return True


def _check_dominating(g: Digraph, sset: set[int]) -> bool:
    for v in range(g.n):
        if v in sset:
            continue
        if not any(w in sset for w in g.in_adj[v]):
            return False
    return True


def verify_set(g: Digraph, s: Iterable[int], mode: str) -> Certificate:
    """Run the definitional check(s) named by ``mode`` on the set ``s``.

    kernel = independent and absorbing; solution = independent and
    dominating.  Returns a :class:`Certificate` whose ``checks`` record
    exactly the properties evaluated.
    """
    if mode not in VERIFY_MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {VERIFY_MODES}")
    vertices = tuple(sorted(set(s)))
    for v in vertices:
        if not (0 <= v < g.n):
            raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    sset = set(vertices)
    checks: dict[str, bool] = {}
    if mode in ("independent", "kernel", "solution"):
        checks["independent"] = _check_independent(g, sset)
    if mode in ("absorbing", "kernel"):
        checks["absorbing"] = _check_absorbing(g, sset)
    if mode in ("dominating", "solution"):
        checks["dominating"] = _check_dominating(g, sset)
    return Certificate(vertices=vertices, checks=checks,
                       algorithm="definition-check")
