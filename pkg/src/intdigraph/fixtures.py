"""Small named instances that separate the digraph classes.

Each function builds a fresh object, so callers may not worry about
sharing.  These are the standard counterexamples used across the test
suite and handy CLI demo inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Digraph
from .intervals import Interval, IntervalRep
from .ordering import Ordering


def directed_triangle() -> Digraph:
    """A 3-cycle of arcs: a point-point digraph with no DUF-ordering."""
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def symmetric_triangle() -> Digraph:
    """All six arcs on three vertices: DUF under any permutation, yet not
    an interval digraph (its splitting bigraph is a six-cycle)."""
    return Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)])


def no_kernel_duf() -> tuple[Digraph, Ordering]:
    """A semicomplete four-vertex DUF-digraph without a kernel.

    Every vertex has an out-neighbour that is not an in-neighbour, so no
    single vertex absorbs, and adjacency of all pairs forbids larger
    independent sets.  Returned with its DUF-ordering (0, 1, 2, 3).
    """
    g = Digraph(4, [(0, 1), (1, 0), (2, 0), (0, 3), (1, 2), (3, 1), (2, 3), (3, 2)])
    return g, Ordering((0, 1, 2, 3), role="duf")


def oriented_k33_with_loops() -> Digraph:
    """Complete bipartite 3+3 oriented one way, loops everywhere: a
    reflexive DUF-digraph that is not a reflexive interval digraph."""
    edges = [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)]
    return Digraph(6, edges, loops=range(6))


def anti_walk_example() -> Digraph:
    """Four vertices whose arcs (0,1), (2,1), (2,3) with (0,3) absent form
    an anti-directed walk, so this is not a point-point digraph."""
    return Digraph(4, [(0, 1), (0, 2), (1, 2), (2, 1), (2, 3)])


def in_star_adjusted() -> tuple[Digraph, IntervalRep]:
    """Three sources all pointing into vertex 0, loops everywhere.

    Shipped with a representation whose intervals share left endpoints per
    vertex; the unique minimum kernel is {0}.
    """
    g = Digraph(4, [(1, 0), (2, 0), (3, 0)], loops=range(4))
    half = Fraction(1, 2)
    pairs = [(Interval(0, half), Interval(0, 10))]
    for v in (1, 2, 3):
        pairs.append((Interval(v, v + half), Interval(v, v)))
    return g, IntervalRep(pairs)


def two_vertex_example_rep() -> IntervalRep:
    """Two reflexive vertices with the single arc (0, 1); its unique
    kernel is {1} and its minimum dominating set is {0}."""
    return IntervalRep([
        (Interval(0, 2), Interval(1, 3)),
        (Interval(4, 6), Interval(Fraction(3, 2), 5)),
    ])


def reflexive_path(n: int) -> tuple[Digraph, Ordering]:
    """Arcs i -> i+1 with loops everywhere and the natural ordering."""
    g = Digraph(n, [(i, i + 1) for i in range(n - 1)], loops=range(n))
    return g, Ordering(range(n), role="duf")
