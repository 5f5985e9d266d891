"""Core graph type and the predicates every solver in this package builds on.

Vertices are 1-based contiguous integers ``1..n``.  A :class:`Graph` is a
simple undirected graph with a positive integer weight per vertex (default 1).
Graphs are immutable after construction, so they can be shared freely between
solvers and threads.

Vertex sets are passed around as plain iterables of ids and returned as sorted
tuples.  Internally everything runs on integer bitmasks (bit ``v`` stands for
vertex ``v``; bit 0 is unused), which keeps the exponential enumerations in
the rest of the package fast enough for exhaustive testing.

The central predicate is :func:`is_s_forest`: given a vertex subset ``x`` and
a distinguished set ``s``, decide whether no cycle of ``G[x]`` passes through
a vertex of ``s``.  A vertex lies on a cycle exactly when one of its incident
edges is not a bridge, so the test reduces to a single bridge-finding DFS
instead of any kind of cycle enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple


class GraphError(ValueError):
    """Rejected graph construction: self-loop, parallel edge, bad id or weight."""


class PreconditionError(ValueError):
    """An operation was invoked outside its documented contract."""


class AlphaBoundError(PreconditionError):
    """A solver that needs alpha(G) <= bound was given a graph that violates it.

    Carries a witness independent set of size ``bound + 1``.
    """

    def __init__(self, bound: int, witness: Iterable[int]):
        self.bound = bound
        self.witness = tuple(witness)
        super().__init__(
            f"independence number exceeds {bound}: "
            f"witness independent set {list(self.witness)}"
        )


class InternalInvariantError(RuntimeError):
    """A fact that must hold by construction failed; indicates an upstream bug."""


def mask_of(ids: Iterable[int]) -> int:
    """Bitmask with bit ``v`` set for every vertex ``v`` in ``ids``."""
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def ids_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertex ids encoded in ``mask``."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Simple undirected vertex-weighted graph on vertices ``1..n``."""

    __slots__ = ("n", "_edges", "_w", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Mapping[int, int] | None = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        norm: set[tuple[int, int]] = set()
        adj = [0] * (n + 1)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            if u > v:
                u, v = v, u
            if (u, v) in norm:
                raise GraphError(f"parallel edge {u}-{v}")
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        w = [0] * (n + 1)
        for v in range(1, n + 1):
            w[v] = 1
        if weights:
            for v, wv in weights.items():
                if not (1 <= v <= n):
                    raise GraphError(f"weight given for unknown vertex {v}")
                if not isinstance(wv, int) or wv < 1:
                    raise GraphError(f"weight of vertex {v} must be a positive integer")
                w[v] = wv
        self._edges = frozenset(norm)
        self._w = tuple(w)
        self._adj = tuple(adj)

    # -- basic accessors ---------------------------------------------------

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def vertex_mask(self) -> int:
        """Mask of all vertices."""
        return (1 << (self.n + 1)) - 2

    def weight(self, v: int) -> int:
        return self._w[v]

    def weight_of(self, ids: Iterable[int]) -> int:
        return sum(self._w[v] for v in ids)

    def weight_of_mask(self, mask: int) -> int:
        w = self._w
        total = 0
        for v in _bits(mask):
            total += w[v]
        return total

    def total_weight(self) -> int:
        return sum(self._w)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return ids_of(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1) if 1 <= u <= self.n and 1 <= v <= self.n else False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges and self._w == other._w

    def __hash__(self) -> int:
        return hash((self.n, self._edges, self._w))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


def check_vertices(g: Graph, ids: Iterable[int]) -> int:
    """Validate ``ids`` against ``g`` and return them as a mask."""
    m = 0
    for v in ids:
        if not (1 <= v <= g.n):
            raise PreconditionError(f"vertex {v} is not in 1..{g.n}")
        m |= 1 << v
    return m


class InducedSubgraph(NamedTuple):
    """An induced subgraph together with the bijection back to the parent.

    ``original_ids[i - 1]`` is the parent id of vertex ``i`` of ``graph``.
    """

    graph: Graph
    original_ids: tuple[int, ...]


def induced_subgraph(g: Graph, x: Iterable[int]) -> InducedSubgraph:
    """Return ``G[x]`` with vertices renamed to ``1..|x|`` in ascending id order."""
    xs = ids_of(check_vertices(g, x))
    index = {v: i + 1 for i, v in enumerate(xs)}
    edges = [
        (index[u], index[v]) for (u, v) in g.edges if u in index and v in index
    ]
    weights = {index[v]: g.weight(v) for v in xs}
    return InducedSubgraph(Graph(len(xs), edges, weights), xs)


def neighborhood(g: Graph, x: Iterable[int], closed: bool = False) -> tuple[int, ...]:
    """Open neighborhood ``N(x)`` of a vertex set, or ``N[x]`` when closed."""
    xm = check_vertices(g, x)
    nm = 0
    for v in _bits(xm):
        nm |= g._adj[v]
    return ids_of(nm | xm if closed else nm & ~xm)


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components of a graph.

    ``blocks`` lists every block as a sorted vertex tuple, ordered by smallest
    contained vertex (full tuple order breaks ties).  A block with exactly two
    vertices is a bridge; those edges are repeated in ``bridges``.  Isolated
    vertices belong to no block.
    """

    blocks: tuple[tuple[int, ...], ...]
    bridges: frozenset[tuple[int, int]]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via the classic low-link DFS, iteratively."""
    n = g.n
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    nbrs = [()] + [g.neighbors(v) for v in range(1, n + 1)]
    blocks: list[tuple[int, ...]] = []
    timer = 1
    for root in range(1, n + 1):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        dfs: list[list[int]] = [[root, 0, 0]]  # vertex, parent, next neighbor index
        while dfs:
            frame = dfs[-1]
            v, p, i = frame
            if i < len(nbrs[v]):
                frame[2] = i + 1
                u = nbrs[v][i]
                if u == p:
                    # the tree edge to the parent; a simple graph has no second copy
                    frame[1] = 0
                    continue
                if not disc[u]:
                    estack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    dfs.append([u, v, 0])
                elif disc[u] < disc[v]:
                    estack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            else:
                dfs.pop()
                if dfs:
                    pv = dfs[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] >= disc[pv]:
                        verts: set[int] = set()
                        while True:
                            e = estack.pop()
                            verts.update(e)
                            if e == (pv, v):
                                break
                        blocks.append(tuple(sorted(verts)))
    blocks.sort()
    bridges = frozenset(b for b in blocks if len(b) == 2)
    return BlockDecomposition(tuple(blocks), bridges)


def _s_cycle_free(adj, kept: int, s_mask: int) -> bool:
    """True iff no cycle of the graph induced on ``kept`` meets ``s_mask``.

    ``adj`` is any sequence of neighbor masks (it may extend past the graph's
    own vertices, which is how hat graphs are tested without materializing
    them).  A cycle through a vertex exists exactly when the vertex has an
    incident non-bridge edge, so the scan aborts as soon as a non-bridge edge
    with an endpoint in ``s_mask`` shows up.
    """
    s_in = s_mask & kept
    size = max(len(adj), kept.bit_length() + 1)
    disc = [0] * size
    low = [0] * size
    visited = 0
    timer = 1
    for root in _bits(kept):
        if visited >> root & 1:
            continue
        visited |= 1 << root
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list[int]] = [[root, 0, adj[root] & kept]]
        while stack:
            frame = stack[-1]
            v, p, rem = frame
            if rem:
                ub = rem & -rem
                frame[2] = rem ^ ub
                u = ub.bit_length() - 1
                if u == p:
                    frame[1] = 0
                    continue
                if not visited >> u & 1:
                    visited |= ub
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append([u, v, adj[u] & kept])
                elif disc[u] < disc[v]:
                    # back edge (v, u): always on a cycle
                    if (s_in >> v | s_in >> u) & 1:
                        return False
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] <= disc[pv]:
                        # tree edge (pv, v) is not a bridge
                        if (s_in >> v | s_in >> pv) & 1:
                            return False
    return True


def is_s_forest(g: Graph, x: Iterable[int], s: Iterable[int]) -> bool:
    """Decide whether ``G[x]`` is an S-forest: no cycle of it meets ``s``.

    Only ``s & x`` matters; members of ``s`` outside ``x`` are ignored.
    """
    xm = check_vertices(g, x)
    sm = check_vertices(g, s)
    return _s_cycle_free(g._adj, xm, sm)


def components_of_mask(g: Graph, mask: int) -> list[int]:
    """Connected components of ``G[mask]`` as masks, ordered by smallest vertex."""
    adj = g._adj
    comps = []
    todo = mask
    while todo:
        b = todo & -todo
        comp = b
        frontier = b
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


# -- independence number utilities ------------------------------------------


def find_independent_set(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically smallest independent set of size ``k``, or None.

    Exact branch-and-prune search, meant for desk-scale graphs.
    """
    if k <= 0:
        return ()
    adj = g._adj
    chosen: list[int] = []

    def extend(allowed: int, need: int) -> bool:
        if need == 0:
            return True
        m = allowed
        while m:
            if m.bit_count() < need:
                return False
            b = m & -m
            v = b.bit_length() - 1
            chosen.append(v)
            if extend(m & ~adj[v] & ~b & ~(b - 1), need - 1):
                return True
            chosen.pop()
            m ^= b
        return False

    if extend(g.vertex_mask(), k):
        return tuple(chosen)
    return None


def independence_at_most(g: Graph, d: int) -> bool:
    """True iff alpha(G) <= d, by exhaustive search for a (d+1)K1."""
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    return find_independent_set(g, d + 1) is None


def max_independent_set(g: Graph) -> tuple[int, ...]:
    """A maximum independent set, lexicographically smallest among the ties."""
    adj = g._adj
    memo: dict[int, int] = {0: 0}

    def best(allowed: int) -> int:
        res = memo.get(allowed)
        if res is not None:
            return res
        b = allowed & -allowed
        v = b.bit_length() - 1
        res = max(best(allowed ^ b), 1 + best(allowed & ~adj[v] & ~b))
        memo[allowed] = res
        return res

    full = g.vertex_mask()
    need = best(full)
    chosen: list[int] = []
    allowed = full
    for v in range(1, g.n + 1):
        if need == 0:
            break
        if not allowed >> v & 1:
            continue
        rest = allowed & ~adj[v] & ~((1 << (v + 1)) - 1)
        if 1 + best(rest) == need:
            chosen.append(v)
            need -= 1
            allowed = rest
    return tuple(chosen)
