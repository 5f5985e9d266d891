"""Integer max-flow and the two vertex-cut solvers derived from it.

The network solver is a deterministic Edmonds-Karp: breadth-first search of
augmenting paths, neighbors scanned in ascending node id, so the computed flow
and the residual min cut are reproducible bit for bit.  Node ids of a
:class:`FlowNetwork` are ``0..node_count-1`` and independent of graph vertex
ids; the derived solvers do their own encoding.

Infinite capacities are written as ``None``.  Internally they are replaced by
a finite surrogate (one more than the sum of all finite capacities), which
strictly exceeds every finite cut, so arithmetic stays integral.  A
source-to-sink path made of infinite arcs only means the flow value is
unbounded and raises :class:`UnboundedFlowError`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .graph import (
    Graph,
    InternalInvariantError,
    PreconditionError,
    _bits,
    check_vertices,
)

Capacity = int | None  # None means infinite


class UnboundedFlowError(RuntimeError):
    """The network admits a source-to-sink path of infinite capacity."""


@dataclass(frozen=True)
class FlowNetwork:
    node_count: int
    arcs: tuple[tuple[int, int, Capacity], ...]
    source: int
    sink: int

    def __post_init__(self):
        if self.source == self.sink:
            raise PreconditionError("source and sink must differ")
        for node in (self.source, self.sink):
            if not (0 <= node < self.node_count):
                raise PreconditionError(f"node {node} outside 0..{self.node_count - 1}")
        for u, v, c in self.arcs:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise PreconditionError(f"arc {u}->{v} has a node outside the network")
            if c is not None and (not isinstance(c, int) or c < 0):
                raise PreconditionError(f"arc {u}->{v} has invalid capacity {c!r}")


class MaxFlowResult(NamedTuple):
    value: int
    cut_arcs: tuple[tuple[int, int], ...]


def max_flow(net: FlowNetwork) -> MaxFlowResult:
    """Integral maximum flow plus the source-side minimum cut.

    Parallel arcs are merged.  ``cut_arcs`` lists the merged arcs of positive
    capacity leading from the source-reachable side of the final residual
    network to the rest; their total capacity equals ``value``.
    """
    n = net.node_count
    cap: list[dict[int, Capacity]] = [dict() for _ in range(n)]
    finite_total = 0
    for u, v, c in net.arcs:
        if u == v:
            continue
        old = cap[u].get(v, 0)
        if c is None or old is None:
            cap[u][v] = None
        else:
            cap[u][v] = old + c
            finite_total += c

    # Unbounded iff the sink is reachable through infinite arcs alone.
    seen = {net.source}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for v, c in cap[u].items():
            if c is None and v not in seen:
                seen.add(v)
                queue.append(v)
    if net.sink in seen:
        raise UnboundedFlowError("unbounded: infinite-capacity path from source to sink")

    surrogate = finite_total + 1
    res: list[dict[int, int]] = [dict() for _ in range(n)]
    for u in range(n):
        for v, c in cap[u].items():
            res[u][v] = res[u].get(v, 0) + (surrogate if c is None else c)
            res[v].setdefault(u, 0)
    adj = [sorted(res[u]) for u in range(n)]

    value = 0
    s, t = net.source, net.sink
    while True:
        prev = [-1] * n
        prev[s] = s
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for v in adj[u]:
                if prev[v] < 0 and res[u][v] > 0:
                    prev[v] = u
                    queue.append(v)
        if prev[t] < 0:
            break
        bottleneck = None
        v = t
        while v != s:
            u = prev[v]
            r = res[u][v]
            if bottleneck is None or r < bottleneck:
                bottleneck = r
            v = u
        v = t
        while v != s:
            u = prev[v]
            res[u][v] -= bottleneck
            res[v][u] += bottleneck
            v = u
        value += bottleneck

    reach = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in reach and res[u][v] > 0:
                reach.add(v)
                queue.append(v)
    cut = tuple(
        sorted(
            (u, v)
            for u in reach
            for v, c in cap[u].items()
            if v not in reach and (c is None or c > 0)
        )
    )
    return MaxFlowResult(value, cut)


def _bipartite_cover_net(
    left: tuple[int, ...],
    right: tuple[int, ...],
    edges: list[tuple[int, int]],
    weight: dict[int, int],
) -> tuple[FlowNetwork, dict[int, int]]:
    """Source -> left -> right -> sink network whose min cut is a vertex cover."""
    node_of = {}
    for i, v in enumerate(left + right):
        node_of[v] = i + 1
    sink = len(left) + len(right) + 1
    arcs: list[tuple[int, int, Capacity]] = []
    for v in left:
        arcs.append((0, node_of[v], weight[v]))
    for v in right:
        arcs.append((node_of[v], sink, weight[v]))
    for a, b in edges:
        arcs.append((node_of[a], node_of[b], None))
    return FlowNetwork(sink + 1, tuple(arcs), 0, sink), node_of


def _cover_from_cut(
    left: tuple[int, ...],
    right: tuple[int, ...],
    node_of: dict[int, int],
    sink: int,
    cut: tuple[tuple[int, int], ...],
) -> tuple[int, ...]:
    cut_set = set(cut)
    cover = [v for v in left if (0, node_of[v]) in cut_set]
    cover += [v for v in right if (node_of[v], sink) in cut_set]
    return tuple(sorted(cover))


def _solve_bipartite_cover(
    left: tuple[int, ...],
    right: tuple[int, ...],
    edges: list[tuple[int, int]],
    weight: dict[int, int],
) -> tuple[int, tuple[int, ...]]:
    """(minimum cover weight, one minimum cover from the residual cut)."""
    if not edges:
        return 0, ()
    net, node_of = _bipartite_cover_net(left, right, edges, weight)
    value, cut = max_flow(net)
    return value, _cover_from_cut(left, right, node_of, net.sink, cut)


def _constrained_cover_weight(
    left_set: frozenset[int],
    edges: list[tuple[int, int]],
    weight: dict[int, int],
    forced: set[int],
    banned: set[int],
) -> int | None:
    """Minimum cover weight over covers that include ``forced`` and avoid ``banned``.

    None when no such cover exists.  Banning a vertex forces every neighbor
    across an uncovered edge, which may cascade.
    """
    forced = set(forced)
    pending = list(edges)
    while True:
        remaining = []
        grew = False
        for a, b in pending:
            if a in forced or b in forced:
                continue
            a_banned = a in banned
            b_banned = b in banned
            if a_banned and b_banned:
                return None
            if a_banned:
                forced.add(b)
                grew = True
            elif b_banned:
                forced.add(a)
                grew = True
            else:
                remaining.append((a, b))
        pending = remaining
        if not grew:
            break
    sub_left = tuple(sorted({a for a, _ in pending} & left_set))
    sub_right = tuple(sorted({b for _, b in pending}))
    value, _ = _solve_bipartite_cover(sub_left, sub_right, pending, weight)
    return sum(weight[v] for v in forced) + value


def min_weight_bipartite_vertex_cover(
    left: Iterable[int],
    right: Iterable[int],
    cross_edges: Iterable[tuple[int, int]],
    weights: Mapping[int, int],
) -> tuple[int, ...]:
    """Minimum-weight vertex cover of a bipartite graph, by max-flow.

    Ties between equal-weight covers are broken toward the lexicographically
    smallest sorted vertex tuple, realized by fixing vertices one at a time
    and re-solving the constrained flow.
    """
    ltup = tuple(sorted(set(left)))
    rtup = tuple(sorted(set(right)))
    lset, rset = frozenset(ltup), frozenset(rtup)
    if lset & rset:
        raise PreconditionError("left and right sides must be disjoint")
    weight = {}
    for v in ltup + rtup:
        w = weights[v]
        if not isinstance(w, int) or w < 1:
            raise PreconditionError(f"weight of vertex {v} must be a positive integer")
        weight[v] = w
    edges: list[tuple[int, int]] = []
    seen = set()
    for a, b in cross_edges:
        if a in rset and b in lset:
            a, b = b, a
        if a not in lset or b not in rset:
            raise PreconditionError(f"edge {a}-{b} does not cross the bipartition")
        if (a, b) not in seen:
            seen.add((a, b))
            edges.append((a, b))

    best = _constrained_cover_weight(lset, edges, weight, set(), set())
    assert best is not None
    chosen: set[int] = set()
    banned: set[int] = set()
    for v in sorted(ltup + rtup):
        if sum(weight[u] for u in chosen) == best and all(
            a in chosen or b in chosen for a, b in edges
        ):
            break
        trial = _constrained_cover_weight(lset, edges, weight, set(chosen) | {v}, banned)
        if trial == best:
            chosen.add(v)
        else:
            banned.add(v)
    result = tuple(sorted(chosen))
    if any(a not in chosen and b not in chosen for a, b in edges):
        raise InternalInvariantError("greedy cover selection missed an edge")
    if sum(weight[v] for v in result) != best:
        raise InternalInvariantError("greedy cover weight drifted from the optimum")
    return result


def min_vertex_separator(
    g: Graph,
    s_side: Iterable[int],
    t_side: Iterable[int],
    forbidden: Iterable[int] = (),
) -> tuple[int, ...] | None:
    """Minimum-weight vertex set outside the protected sets whose removal
    disconnects ``s_side`` from ``t_side``.

    Uses the standard node-splitting construction: the split arc of a
    removable vertex carries its weight, protected vertices and edge arcs are
    infinite.  Returns None when separation is impossible, i.e. the two sides
    touch through protected vertices only.
    """
    sm = check_vertices(g, s_side)
    tm = check_vertices(g, t_side)
    fm = check_vertices(g, forbidden)
    if sm & tm or sm & fm or tm & fm:
        raise PreconditionError("s_side, t_side and forbidden must be pairwise disjoint")
    if not sm or not tm:
        return ()
    protected = sm | tm | fm
    n = g.n

    def v_in(v: int) -> int:
        return 2 * v - 1

    def v_out(v: int) -> int:
        return 2 * v

    sink = 2 * n + 1
    arcs: list[tuple[int, int, Capacity]] = []
    for v in range(1, n + 1):
        capv: Capacity = None if protected >> v & 1 else g.weight(v)
        arcs.append((v_in(v), v_out(v), capv))
    for u, v in sorted(g.edges):
        arcs.append((v_out(u), v_in(v), None))
        arcs.append((v_out(v), v_in(u), None))
    for v in _bits(sm):
        arcs.append((0, v_in(v), None))
    for v in _bits(tm):
        arcs.append((v_out(v), sink, None))
    net = FlowNetwork(sink + 1, tuple(arcs), 0, sink)
    try:
        value, cut = max_flow(net)
    except UnboundedFlowError:
        return None
    removed = sorted((a + 1) // 2 for a, b in cut if b == a + 1 and a % 2 == 1)
    if g.weight_of(removed) != value:
        raise InternalInvariantError(
            f"separator weight {g.weight_of(removed)} does not match flow value {value}"
        )
    return tuple(removed)
