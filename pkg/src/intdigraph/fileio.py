"""Plain-text instance files.

Formats (whitespace separated, one record per line):

* digraph:   header ``digraph <n>``, then ``<u> <v>`` per arc; ``u == v``
  encodes a self-loop.
* intervals: header ``intervals <n>``, then ``<v> <lS> <rS> <lT> <rT>``
  with integer or ``p/q`` rational endpoints.
* bigraph:   header ``bigraph <|A|> <|B|>``, then ``A <i> <l> <r>`` or
  ``B <j> <l> <r>`` lines.
* ordering:  a single line of space-separated vertex ids (no header).

Emitters write records in canonical sorted order, so emit(parse(f)) == f
up to whitespace for canonical files.
"""

from __future__ import annotations

from fractions import Fraction

from .domination import IntervalBigraphRep
from .errors import ParseError
from .graphs import Digraph
from .intervals import Interval, IntervalRep
from .ordering import Ordering


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {token!r}") from None


def _rational(token: str, lineno: int):
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        return int(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"expected an integer or p/q rational, got {token!r}") from None


def _format_value(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_digraph(text: str) -> Digraph:
    rows = list(_lines(text))
    if not rows or rows[0][1][0] != "digraph":
        raise ParseError(rows[0][0] if rows else 1, "expected 'digraph <n>' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(lineno, "expected 'digraph <n>' header")
    n = _int(header[1], lineno)
    edges = []
    for lineno, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {' '.join(tokens)!r}")
        edges.append((_int(tokens[0], lineno), _int(tokens[1], lineno)))
    try:
        return Digraph(n, edges)
    except ValueError as exc:
        raise ParseError(rows[0][0], str(exc)) from None


def emit_digraph(g: Digraph) -> str:
    lines = [f"digraph {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    lines.extend(f"{v} {v}" for v in g.loop_vertices())
    return "\n".join(lines) + "\n"


def parse_interval_rep(text: str) -> IntervalRep:
    rows = list(_lines(text))
    if not rows or rows[0][1][0] != "intervals":
        raise ParseError(rows[0][0] if rows else 1, "expected 'intervals <n>' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(lineno, "expected 'intervals <n>' header")
    n = _int(header[1], lineno)
    pairs: list = [None] * n
    for lineno, tokens in rows[1:]:
        if len(tokens) != 5:
            raise ParseError(lineno, "expected '<v> <lS> <rS> <lT> <rT>'")
        v = _int(tokens[0], lineno)
        if not (0 <= v < n):
            raise ParseError(lineno, f"vertex {v} out of range for n={n}")
        if pairs[v] is not None:
            raise ParseError(lineno, f"duplicate intervals for vertex {v}")
        vals = [_rational(t, lineno) for t in tokens[1:]]
        try:
            pairs[v] = (Interval(vals[0], vals[1]), Interval(vals[2], vals[3]))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    for v in range(n):
        if pairs[v] is None:
            raise ParseError(rows[0][0], f"missing intervals for vertex {v}")
    return IntervalRep(pairs)


def emit_interval_rep(rep: IntervalRep) -> str:
    lines = [f"intervals {rep.n}"]
    for v in range(rep.n):
        s, t = rep.source[v], rep.target[v]
        lines.append(" ".join([str(v)] + [_format_value(x)
                                          for x in (s.lo, s.hi, t.lo, t.hi)]))
    return "\n".join(lines) + "\n"


def parse_bigraph_rep(text: str) -> IntervalBigraphRep:
    rows = list(_lines(text))
    if not rows or rows[0][1][0] != "bigraph":
        raise ParseError(rows[0][0] if rows else 1, "expected 'bigraph <|A|> <|B|>' header")
    lineno, header = rows[0]
    if len(header) != 3:
        raise ParseError(lineno, "expected 'bigraph <|A|> <|B|>' header")
    a_size = _int(header[1], lineno)
    b_size = _int(header[2], lineno)
    a_ivs: list = [None] * a_size
    b_ivs: list = [None] * b_size
    for lineno, tokens in rows[1:]:
        if len(tokens) != 4 or tokens[0] not in ("A", "B"):
            raise ParseError(lineno, "expected 'A|B <i> <l> <r>'")
        idx = _int(tokens[1], lineno)
        store, size = (a_ivs, a_size) if tokens[0] == "A" else (b_ivs, b_size)
        if not (0 <= idx < size):
            raise ParseError(lineno, f"index {idx} out of range for part {tokens[0]}")
        if store[idx] is not None:
            raise ParseError(lineno, f"duplicate interval for {tokens[0]} {idx}")
        try:
            store[idx] = Interval(_rational(tokens[2], lineno), _rational(tokens[3], lineno))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    for part, store in (("A", a_ivs), ("B", b_ivs)):
        for idx, iv in enumerate(store):
            if iv is None:
                raise ParseError(rows[0][0], f"missing interval for {part} {idx}")
    return IntervalBigraphRep(a_ivs, b_ivs)


def emit_bigraph_rep(rep: IntervalBigraphRep) -> str:
    lines = [f"bigraph {rep.a_size} {rep.b_size}"]
    for i, iv in enumerate(rep.a_intervals):
        lines.append(f"A {i} {_format_value(iv.lo)} {_format_value(iv.hi)}")
    for j, iv in enumerate(rep.b_intervals):
        lines.append(f"B {j} {_format_value(iv.lo)} {_format_value(iv.hi)}")
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, role: str = "duf") -> Ordering:
    rows = list(_lines(text))
    if len(rows) != 1:
        raise ParseError(rows[1][0] if len(rows) > 1 else 1,
                         "ordering files hold a single line of vertex ids")
    lineno, tokens = rows[0]
    try:
        return Ordering(tuple(_int(t, lineno) for t in tokens), role=role)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def emit_ordering(ordering: Ordering) -> str:
    return " ".join(str(v) for v in ordering.perm) + "\n"


def parse_weights(text: str) -> list[int]:
    values = []
    for lineno, tokens in _lines(text):
        for t in tokens:
            values.append(_int(t, lineno))
    return values


def parse_vertex_set(text: str) -> list[int]:
    values = []
    for lineno, tokens in _lines(text):
        for t in tokens:
            values.append(_int(t, lineno))
    return values


def detect_kind(text: str) -> str:
    """One of 'digraph', 'intervals', 'bigraph', 'ordering' by header."""
    for _, tokens in _lines(text):
        if tokens[0] in ("digraph", "intervals", "bigraph"):
            return tokens[0]
        return "ordering"
    raise ParseError(1, "empty instance file")


def parse_instance(text: str):
    kind = detect_kind(text)
    if kind == "digraph":
        return parse_digraph(text)
    if kind == "intervals":
        return parse_interval_rep(text)
    if kind == "bigraph":
        return parse_bigraph_rep(text)
    return parse_ordering(text)
