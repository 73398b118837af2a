"""Interval representations of digraphs.

A representation assigns each vertex ``u`` a source interval ``S_u`` and a
target interval ``T_u``; the represented digraph has an edge (u, v) exactly
when ``S_u`` and ``T_v`` intersect (closed intervals), and a self-loop on
``u`` exactly when ``S_u`` and ``T_u`` intersect.  Loops are always derived
from the intervals, never stored.

Only the relative order of endpoints matters, so :func:`normalize` replaces
exact rational endpoints by their ranks under a fixed total event order:
coordinates compare first; at equal coordinates every left endpoint precedes
every right endpoint (the unique order-preserving perturbation for closed
intervals); remaining ties break by (vertex id, S-before-T).  All downstream
algorithms run on these distinct integer ranks, so there is no floating
point anywhere.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MalformedInterval, NotReflexive
from .graphs import Digraph

# Event codes in normalization order at a shared coordinate: lefts first.
_SL, _TL, _SR, _TR = 0, 1, 2, 3
_IS_LEFT = (True, True, False, False)


def _coerce(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)
    raise MalformedInterval(f"endpoint {x!r} is not an int, Fraction or float")


class Interval:
    """A closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = _coerce(lo)
        hi = _coerce(hi)
        if lo > hi:
            raise MalformedInterval(f"interval [{lo}, {hi}] has lo > hi")
        self.lo = lo
        self.hi = hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


class IntervalRep:
    """Per-vertex (S, T) interval pairs."""

    __slots__ = ("source", "target")

    def __init__(self, pairs: Iterable[tuple[Interval, Interval]]):
        source = []
        target = []
        for s, t in pairs:
            source.append(s if isinstance(s, Interval) else Interval(*s))
            target.append(t if isinstance(t, Interval) else Interval(*t))
        self.source: tuple[Interval, ...] = tuple(source)
        self.target: tuple[Interval, ...] = tuple(target)

    @property
    def n(self) -> int:
        return len(self.source)

    @property
    def adjusted(self) -> bool:
        """True when S and T share a left endpoint at every vertex."""
        return all(s.lo == t.lo for s, t in zip(self.source, self.target))

    def pairs(self):
        return tuple(zip(self.source, self.target))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class NormalizedRep(IntervalRep):
    """An :class:`IntervalRep` whose 4n endpoints are distinct integers.

    ``events[rank]`` is the (vertex, code) pair placed at that rank, codes
    being S-left, T-left, S-right, T-right.  ``ls``/``rs``/``lt``/``rt``
    expose the endpoint ranks as flat tuples for the sweep algorithms.
    The ``adjusted`` flag reports whether the *source* representation had
    matching left endpoints; ranks themselves are never equal.
    """

    __slots__ = ("events", "ls", "rs", "lt", "rt", "_adjusted")

    def __init__(self, pairs, events, adjusted: bool):
        super().__init__(pairs)
        self.events: tuple[tuple[int, int], ...] = tuple(events)
        self.ls = tuple(iv.lo for iv in self.source)
        self.rs = tuple(iv.hi for iv in self.source)
        self.lt = tuple(iv.lo for iv in self.target)
        self.rt = tuple(iv.hi for iv in self.target)
        self._adjusted = adjusted
        seen = set(self.ls + self.rs + self.lt + self.rt)
        if len(seen) != 4 * self.n:
            raise MalformedInterval("normalized endpoints are not distinct")

    @property
    def adjusted(self) -> bool:
        return self._adjusted

    def swapped(self) -> "NormalizedRep":
        """The representation of the reversal: S and T exchanged per vertex."""
        return normalize(IntervalRep((t, s) for s, t in zip(self.source, self.target)))


def normalize(rep: IntervalRep) -> NormalizedRep:
    """Rank-normalize endpoints; the realized digraph is unchanged."""
    if isinstance(rep, NormalizedRep):
        return rep
    adjusted = rep.adjusted
    events = []
    for v in range(rep.n):
        s, t = rep.source[v], rep.target[v]
        events.append((s.lo, 0, v, 0, _SL))
        events.append((t.lo, 0, v, 1, _TL))
        events.append((s.hi, 1, v, 0, _SR))
        events.append((t.hi, 1, v, 1, _TR))
    events.sort(key=lambda e: (e[0], e[1], e[2], e[3]))
    ls = [0] * rep.n
    rs = [0] * rep.n
    lt = [0] * rep.n
    rt = [0] * rep.n
    order = []
    for rank, (_, _, v, _, code) in enumerate(events):
        order.append((v, code))
        if code == _SL:
            ls[v] = rank
        elif code == _TL:
            lt[v] = rank
        elif code == _SR:
            rs[v] = rank
        else:
            rt[v] = rank
    pairs = [(Interval(ls[v], rs[v]), Interval(lt[v], rt[v])) for v in range(rep.n)]
    return NormalizedRep(pairs, order, adjusted)


def realize_digraph(rep: IntervalRep) -> Digraph:
    """The digraph realized by ``rep``: edge (u, v) iff S_u meets T_v.

    Runs a single sweep over the normalized event order, so the cost is
    O(n log n) plus the number of realized edges.
    """
    nrep = normalize(rep)
    n = nrep.n
    active_s: set[int] = set()
    active_t: set[int] = set()
    edges: list[tuple[int, int]] = []
    for v, code in nrep.events:
        if code == _SL:
            for t in active_t:
                edges.append((v, t))
            active_s.add(v)
        elif code == _TL:
            for s in active_s:
                edges.append((s, v))
            active_t.add(v)
        elif code == _SR:
            active_s.discard(v)
        else:
            active_t.discard(v)
    return Digraph(n, edges)


def verify_representation(rep: IntervalRep, g: Digraph) -> bool:
    """Exact equality of the realized digraph with ``g``, loops included."""
    if rep.n != g.n:
        raise DimensionMismatch(f"representation has {rep.n} vertices, digraph {g.n}")
    return realize_digraph(rep) == g


def is_reflexive(rep: IntervalRep) -> bool:
    """True when S_u and T_u intersect for every vertex u."""
    return all(s.intersects(t) for s, t in zip(rep.source, rep.target))


def require_reflexive(rep: IntervalRep) -> None:
    for v, (s, t) in enumerate(zip(rep.source, rep.target)):
        if not s.intersects(t):
            raise NotReflexive(v)


def extract_duf_ordering(rep: NormalizedRep):
    """Vertices sorted by the left end of S_v ∩ T_v.

    The resulting ordering is directed umbrella-free for the realized
    digraph and also passes the stronger forbidden-structure check; ranks
    are distinct so no tie rule is needed.
    """
    from .ordering import Ordering  # deferred: ordering depends on this module

    rep = normalize(rep)
    require_reflexive(rep)
    xs = []
    for v in range(rep.n):
        xs.append((max(rep.ls[v], rep.lt[v]), v))
    xs.sort()
    return Ordering(tuple(v for _, v in xs), role="duf")


# --- definitional set checks computed through the representation ----------
#
# These evaluate exactly the same properties as graphs.verify_set but walk
# the intervals instead of adjacency lists, so they stay O(n log n) even
# when the realized digraph is too large to materialize.

def _sorted_prefix_max(items: Sequence[tuple]):
    """items are (lo, hi); returns (sorted lo list, prefix max of hi)."""
    items = sorted(items)
    los = [lo for lo, _ in items]
    pref = []
    best = None
    for _, hi in items:
        best = hi if best is None or hi > best else best
        pref.append(best)
    return los, pref


def _covered(lo_list, prefmax, left, right) -> bool:
    """True when some stored [lo, hi] intersects [left, right] (closed)."""
    idx = bisect_right(lo_list, right)
    if idx == 0:
        return False
    return prefmax[idx - 1] >= left


def set_is_absorbing(rep: IntervalRep, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` has an out-neighbour in ``s``."""
    sset = set(s)
    if not sset:
        return rep.n == 0
    los, pref = _sorted_prefix_max([(rep.target[u].lo, rep.target[u].hi) for u in sset])
    for v in range(rep.n):
        if v in sset:
            continue
        if not _covered(los, pref, rep.source[v].lo, rep.source[v].hi):
            return False
    return True


def set_is_dominating(rep: IntervalRep, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` has an in-neighbour in ``s``."""
    sset = set(s)
    if not sset:
        return rep.n == 0
    los, pref = _sorted_prefix_max([(rep.source[u].lo, rep.source[u].hi) for u in sset])
    for v in range(rep.n):
        if v in sset:
            continue
        if not _covered(los, pref, rep.target[v].lo, rep.target[v].hi):
            return False
    return True


def set_is_independent(rep: IntervalRep, s: Iterable[int]) -> bool:
    """No two distinct vertices of ``s`` are adjacent (either direction)."""
    sset = sorted(set(s))
    events = []
    for u in sset:
        for iv, code in ((rep.source[u], _SL), (rep.target[u], _TL)):
            events.append((iv.lo, 0, u, code))
            events.append((iv.hi, 1, u, code))
    events.sort(key=lambda e: (e[0], e[1]))
    active_s: set[int] = set()
    active_t: set[int] = set()
    for _, side, u, code in events:
        if side == 1:
            (active_s if code == _SL else active_t).discard(u)
            continue
        other = active_t if code == _SL else active_s
        if len(other) - (1 if u in other else 0) > 0:
            return False
        (active_s if code == _SL else active_t).add(u)
    return True
