"""Constructive hardness-reduction generators with oracle-backed verifiers.

Each generator turns a small source instance into an instance of one of the
package's problems, preserving the optimum in the advertised way, and records
which fresh vertices were added and in which role.  None of this proves
anything by itself; the point is that every emitted instance can be checked
end to end against the brute-force oracle at desk scale, and the structural
facts promised by each construction are asserted at emit time.

Fresh vertices are appended after the source ids in a fixed order
(r_A, r_B, r_C, s for the tripartite constructions; x_1, y_1, ..., x_k, y_k, z
for the multicolored one) so mappings stay deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    InternalInvariantError,
    PreconditionError,
    check_vertices,
    ids_of,
    independence_at_most,
    mask_of,
)
from .oracle import ProblemInstance, oracle_solve


@dataclass(frozen=True)
class TripartiteGraph:
    """A graph whose vertex set splits into three independent parts."""

    graph: Graph
    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def __post_init__(self):
        masks = [check_vertices(self.graph, p) for p in self.parts]
        object.__setattr__(self, "parts", tuple(ids_of(m) for m in masks))
        if masks[0] & masks[1] or masks[0] & masks[2] or masks[1] & masks[2]:
            raise PreconditionError("tripartite parts must be disjoint")
        if masks[0] | masks[1] | masks[2] != self.graph.vertex_mask():
            raise PreconditionError("tripartite parts must cover every vertex")
        for name, part in zip("ABC", self.parts):
            for u in part:
                if self.graph.adj_mask(u) & mask_of(part):
                    raise PreconditionError(f"part {name} is not independent")


@dataclass(frozen=True)
class MulticoloredInstance:
    """A graph with a partition into k nonempty color classes."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.classes) < 1:
            raise PreconditionError("need at least one color class")
        masks = [check_vertices(self.graph, c) for c in self.classes]
        object.__setattr__(self, "classes", tuple(ids_of(m) for m in masks))
        union = 0
        for m in masks:
            if not m:
                raise PreconditionError("color classes must be nonempty")
            if union & m:
                raise PreconditionError("color classes must be disjoint")
            union |= m
        if union != self.graph.vertex_mask():
            raise PreconditionError("color classes must cover every vertex")


@dataclass(frozen=True)
class ReductionOutput:
    """The reduced instance plus the roles of the added vertices."""

    instance: ProblemInstance
    mapping: tuple[tuple[str, int], ...]
    budget_rule: str


def _complete(part: tuple[int, ...]) -> list[tuple[int, int]]:
    return list(combinations(part, 2))


def _clique_edges_into(edges: set[tuple[int, int]], part: tuple[int, ...]) -> None:
    for u, v in _complete(part):
        edges.add((u, v) if u < v else (v, u))


def reduce_vc3_to_wsfvs(tg: TripartiteGraph, k: int) -> ReductionOutput:
    """Vertex cover on a tripartite graph as weighted SFVS with alpha <= 4.

    Parts become cliques with unit weights; three part apexes plus one top
    vertex s (all of weight n) tie them together; S = {s}.  A cover of size
    at most k < n exists iff the result has an SFVS of weight at most k.
    """
    g = tg.graph
    n = g.n
    if not (0 <= k < n):
        raise PreconditionError(f"budget k must satisfy 0 <= k < n, got k={k}, n={n}")
    r_a, r_b, r_c, s = n + 1, n + 2, n + 3, n + 4
    edges = set(g.edges)
    for part, apex in zip(tg.parts, (r_a, r_b, r_c)):
        _clique_edges_into(edges, part)
        for v in part:
            edges.add((v, apex))
    for apex in (r_a, r_b, r_c):
        edges.add((apex, s))
    weights = {v: 1 for v in g.vertices()}
    for v in (r_a, r_b, r_c, s):
        weights[v] = n
    out = Graph(n + 4, edges, weights)

    if out.n != n + 4:
        raise InternalInvariantError("vertex count drifted")
    for part, apex in zip(tg.parts, (r_a, r_b, r_c)):
        if out.neighbors(apex) != tuple(sorted(part + (s,))):
            raise InternalInvariantError("apex adjacency is wrong")
    if out.neighbors(s) != (r_a, r_b, r_c):
        raise InternalInvariantError("top vertex adjacency is wrong")
    if not independence_at_most(out, 4):
        raise InternalInvariantError("construction exceeded independence number 4")

    inst = ProblemInstance(out, "wsfvs", special=(s,), budget=k)
    mapping = (("r_A", r_a), ("r_B", r_b), ("r_C", r_c), ("s", s))
    return ReductionOutput(inst, mapping, "k unchanged")


def reduce_vc3_to_nmc(tg: TripartiteGraph, k: int) -> ReductionOutput:
    """Vertex cover on a tripartite graph as node multiway cut with alpha <= 3.

    Parts become cliques and each gains an adjacent apex; the three apexes are
    the terminals.  Covers of G correspond exactly to multiway cuts.
    """
    g = tg.graph
    n = g.n
    if k < 0:
        raise PreconditionError("budget k must be nonnegative")
    r_a, r_b, r_c = n + 1, n + 2, n + 3
    edges = set(g.edges)
    for part, apex in zip(tg.parts, (r_a, r_b, r_c)):
        _clique_edges_into(edges, part)
        for v in part:
            edges.add((v, apex))
    out = Graph(n + 3, edges)

    if out.n != n + 3:
        raise InternalInvariantError("vertex count drifted")
    for part, apex in zip(tg.parts, (r_a, r_b, r_c)):
        if out.neighbors(apex) != part:
            raise InternalInvariantError("apex adjacency is wrong")
    if not independence_at_most(out, 3):
        raise InternalInvariantError("construction exceeded independence number 3")

    inst = ProblemInstance(out, "nmc", special=(r_a, r_b, r_c), budget=k)
    mapping = (("r_A", r_a), ("r_B", r_b), ("r_C", r_c))
    return ReductionOutput(inst, mapping, "k unchanged")


def reduce_mcis_to_fvs(mi: MulticoloredInstance) -> ReductionOutput:
    """Multicolored independent set as feedback vertex set with small clique cover.

    Classes become cliques; each class i gains two private vertices x_i, y_i
    adjacent to all of it; one apex z is adjacent to every original vertex.
    The result has n + 2k + 1 vertices and clique cover number at most 2k + 1,
    and admits an FVS of size n - k iff a multicolored independent set exists.
    """
    g = mi.graph
    n = g.n
    k = len(mi.classes)
    edges = set(g.edges)
    mapping: list[tuple[str, int]] = []
    for i, cls in enumerate(mi.classes, start=1):
        x_i = n + 2 * i - 1
        y_i = n + 2 * i
        _clique_edges_into(edges, cls)
        for v in cls:
            edges.add((v, x_i))
            edges.add((v, y_i))
        mapping.append((f"x_{i}", x_i))
        mapping.append((f"y_{i}", y_i))
    z = n + 2 * k + 1
    for v in g.vertices():
        edges.add((v, z))
    mapping.append(("z", z))
    out = Graph(n + 2 * k + 1, edges)

    if out.n != n + 2 * k + 1:
        raise InternalInvariantError("vertex count drifted")
    # constructive clique-cover certificate: class+x_i cliques, then singletons
    for i, cls in enumerate(mi.classes, start=1):
        cm = mask_of(cls + (n + 2 * i - 1,))
        for v in ids_of(cm):
            if cm & ~out.adj_mask(v) & ~(1 << v):
                raise InternalInvariantError("class plus x_i does not induce a clique")

    inst = ProblemInstance(
        out, "fvs", special=tuple(out.vertices()), budget=n - k
    )
    return ReductionOutput(inst, tuple(mapping), "n - k")


def multicolored_source_optimum(mi: MulticoloredInstance, max_vertices: int = 22) -> int:
    """Largest independent set using at most one vertex per class.

    Computed by completing every class into a clique and asking the oracle for
    a maximum independent set; it equals the class count exactly when a
    multicolored independent set exists.
    """
    edges = set(mi.graph.edges)
    for cls in mi.classes:
        _clique_edges_into(edges, cls)
    completed = Graph(mi.graph.n, edges)
    sol = oracle_solve(ProblemInstance(completed, "mis"), max_vertices)
    assert sol.objective is not None
    return mi.graph.n - sol.objective


def verify_reduction(
    out: ReductionOutput, source_opt: int, max_vertices: int = 22
) -> bool:
    """Check the advertised optimum correspondence against the oracle.

    ``source_opt`` is the source problem's optimum: minimum vertex cover size
    for the tripartite reductions, and the value of
    :func:`multicolored_source_optimum` for the multicolored one (where the
    correspondence is the if-and-only-if between a full independent
    transversal and an FVS within budget).
    """
    kind = out.instance.kind
    sol = oracle_solve(out.instance, max_vertices)
    if kind in ("wsfvs", "nmc"):
        return sol.feasible and sol.objective == source_opt
    if kind == "fvs":
        k = sum(1 for role, _ in out.mapping if role.startswith("x_"))
        budget = out.instance.budget
        assert sol.objective is not None and budget is not None
        if sol.objective < budget:
            raise InternalInvariantError(
                "feedback vertex set beat the structural lower bound"
            )
        return (sol.objective == budget) == (source_opt == k)
    raise PreconditionError(f"unknown reduction output kind {kind!r}")
