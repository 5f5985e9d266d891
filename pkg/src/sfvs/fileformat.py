"""Line-oriented instance files.

One canonical text format serves all six problem kinds::

    # comments run to end of line, blank lines are ignored
    p <kind> <n> <m>        kind in {wsfvs, sfvs, fvs, nmc, nmcdt, wnmcdt}
    w <v> <weight>          optional, default weight 1
    e <u> <v>               exactly m of these
    set <v1> <v2> ...       the S or T set; absent means empty
    k <budget>              optional decision budget

Reduction sources reuse the same line machinery with their own headers:
``p vc3 n m`` plus ``part A|B|C <ids...>`` lines, and ``p mcis n m`` plus
``class <i> <ids...>`` lines.

Emission is canonical (sorted edges and sets, weight lines only for non-unit
weights), so parse(emit(inst)) == inst.
"""

from __future__ import annotations

from .graph import Graph, GraphError, PreconditionError
from .oracle import ProblemInstance
from .reductions import MulticoloredInstance, ReductionOutput, TripartiteGraph

FILE_KINDS = ("wsfvs", "sfvs", "fvs", "nmc", "nmcdt", "wnmcdt")


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def _tokenized(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line.split()


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {token!r}") from None


class _Body:
    """Shared parsing of weight/edge/set/budget lines after the header."""

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        self.weights: dict[int, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.edge_set: set[tuple[int, int]] = set()
        self.special: tuple[int, ...] | None = None
        self.budget: int | None = None

    def _vertex(self, token: str, line_no: int) -> int:
        v = _int(token, line_no, "vertex id")
        if not (1 <= v <= self.n):
            raise ParseError(line_no, f"vertex id {v} out of range 1..{self.n}")
        return v

    def feed(self, line_no: int, tokens: list[str]) -> bool:
        head = tokens[0]
        if head == "w":
            if len(tokens) != 3:
                raise ParseError(line_no, "weight line needs 'w <v> <weight>'")
            v = self._vertex(tokens[1], line_no)
            w = _int(tokens[2], line_no, "weight")
            if w < 1:
                raise ParseError(line_no, f"weight of vertex {v} must be >= 1")
            if v in self.weights:
                raise ParseError(line_no, f"duplicate weight line for vertex {v}")
            self.weights[v] = w
        elif head == "e":
            if len(tokens) != 3:
                raise ParseError(line_no, "edge line needs 'e <u> <v>'")
            u = self._vertex(tokens[1], line_no)
            v = self._vertex(tokens[2], line_no)
            if u == v:
                raise ParseError(line_no, f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in self.edge_set:
                raise ParseError(line_no, f"duplicate edge {key[0]}-{key[1]}")
            self.edge_set.add(key)
            self.edges.append(key)
        elif head == "set":
            if self.special is not None:
                raise ParseError(line_no, "more than one set line")
            members = [self._vertex(tok, line_no) for tok in tokens[1:]]
            if len(set(members)) != len(members):
                raise ParseError(line_no, "set line repeats a vertex")
            self.special = tuple(sorted(members))
        elif head == "k":
            if self.budget is not None:
                raise ParseError(line_no, "more than one budget line")
            if len(tokens) != 2:
                raise ParseError(line_no, "budget line needs 'k <budget>'")
            b = _int(tokens[1], line_no, "budget")
            if b < 0:
                raise ParseError(line_no, "budget must be nonnegative")
            self.budget = b
        else:
            return False
        return True

    def finish(self, line_no: int) -> None:
        if len(self.edges) != self.m:
            raise ParseError(
                line_no, f"header promises {self.m} edges, file has {len(self.edges)}"
            )


def _header(lines, expected_kinds) -> tuple[int, str, int, int]:
    for line_no, tokens in lines:
        if tokens[0] != "p" or len(tokens) != 4:
            raise ParseError(line_no, "first line must be 'p <kind> <n> <m>'")
        kind = tokens[1]
        if kind not in expected_kinds:
            raise ParseError(line_no, f"unknown kind {kind!r}")
        n = _int(tokens[2], line_no, "vertex count")
        m = _int(tokens[3], line_no, "edge count")
        if n < 0 or m < 0:
            raise ParseError(line_no, "vertex and edge counts must be nonnegative")
        return line_no, kind, n, m
    raise ParseError(0, "empty file")


def parse_instance(text: str) -> ProblemInstance:
    lines = _tokenized(text)
    line_no, kind, n, m = _header(lines, FILE_KINDS)
    body = _Body(n, m)
    for line_no, tokens in lines:
        if not body.feed(line_no, tokens):
            raise ParseError(line_no, f"unknown directive {tokens[0]!r}")
    body.finish(line_no)
    special = body.special or ()
    if kind == "fvs":
        everyone = tuple(range(1, n + 1))
        if body.special not in (None, everyone):
            raise ParseError(line_no, "an fvs instance must have set = all vertices")
        special = everyone
    try:
        graph = Graph(n, body.edges, body.weights)
        return ProblemInstance(graph, kind, special, body.budget)
    except (GraphError, PreconditionError) as exc:  # pragma: no cover - guarded above
        raise ParseError(line_no, str(exc)) from exc


def emit_instance(inst: ProblemInstance) -> str:
    g = inst.graph
    out = [f"p {inst.kind} {g.n} {len(g.edges)}"]
    for v in g.vertices():
        if g.weight(v) != 1:
            out.append(f"w {v} {g.weight(v)}")
    for u, v in sorted(g.edges):
        out.append(f"e {u} {v}")
    if inst.kind == "fvs":
        pass  # set defaults to all vertices
    elif inst.special:
        out.append("set " + " ".join(str(v) for v in inst.special))
    if inst.budget is not None:
        out.append(f"k {inst.budget}")
    return "\n".join(out) + "\n"


def parse_solution_ids(text: str) -> tuple[int, ...]:
    """A removed set: whitespace-separated vertex ids, comments allowed."""
    ids: list[int] = []
    for line_no, tokens in _tokenized(text):
        for tok in tokens:
            ids.append(_int(tok, line_no, "vertex id"))
    if len(set(ids)) != len(ids):
        raise ParseError(1, "solution repeats a vertex")
    return tuple(sorted(ids))


def parse_tripartite(text: str) -> tuple[TripartiteGraph, int | None]:
    """A 'p vc3 n m' file with part A/B/C lines; returns the optional budget too."""
    lines = _tokenized(text)
    line_no, _, n, m = _header(lines, ("vc3",))
    body = _Body(n, m)
    parts: dict[str, tuple[int, ...]] = {}
    for line_no, tokens in lines:
        if tokens[0] == "part":
            if len(tokens) < 2 or tokens[1] not in ("A", "B", "C"):
                raise ParseError(line_no, "part line needs 'part A|B|C <ids...>'")
            name = tokens[1]
            if name in parts:
                raise ParseError(line_no, f"duplicate part {name}")
            parts[name] = tuple(body._vertex(tok, line_no) for tok in tokens[2:])
        elif not body.feed(line_no, tokens):
            raise ParseError(line_no, f"unknown directive {tokens[0]!r}")
    body.finish(line_no)
    graph = Graph(n, body.edges, body.weights)
    triple = tuple(parts.get(name, ()) for name in "ABC")
    return TripartiteGraph(graph, triple), body.budget


def parse_multicolored(text: str) -> MulticoloredInstance:
    """A 'p mcis n m' file with 'class <i> <ids...>' lines, i = 1..k."""
    lines = _tokenized(text)
    line_no, _, n, m = _header(lines, ("mcis",))
    body = _Body(n, m)
    classes: dict[int, tuple[int, ...]] = {}
    for line_no, tokens in lines:
        if tokens[0] == "class":
            if len(tokens) < 3:
                raise ParseError(line_no, "class line needs 'class <i> <ids...>'")
            i = _int(tokens[1], line_no, "class index")
            if i < 1:
                raise ParseError(line_no, "class indices start at 1")
            if i in classes:
                raise ParseError(line_no, f"duplicate class {i}")
            classes[i] = tuple(body._vertex(tok, line_no) for tok in tokens[2:])
        elif not body.feed(line_no, tokens):
            raise ParseError(line_no, f"unknown directive {tokens[0]!r}")
    body.finish(line_no)
    if not classes:
        raise ParseError(line_no, "an mcis file needs at least one class line")
    k = max(classes)
    if sorted(classes) != list(range(1, k + 1)):
        raise ParseError(line_no, f"class indices must be exactly 1..{k}")
    graph = Graph(n, body.edges, body.weights)
    return MulticoloredInstance(graph, tuple(classes[i] for i in range(1, k + 1)))


def emit_mapping(out: ReductionOutput) -> str:
    return "".join(f"{role} {v}\n" for role, v in out.mapping)
