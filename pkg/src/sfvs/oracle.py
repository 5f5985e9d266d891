"""Brute-force exact solvers used as ground truth.

Every problem the package solves has a feasibility predicate that is easy to
state and cheap to evaluate on one candidate set; the oracle simply enumerates
candidate removed sets in canonical order (ascending objective, then
lexicographically smallest sorted vertex tuple) and returns the first feasible
one.  Nothing here is clever on purpose: the point is a referee whose
correctness is obvious, not speed.

A size guard refuses graphs with more than ``max_vertices`` vertices (22 by
default) so that an accidental call on a large instance fails fast instead of
running for hours.  The guard is a safety valve, not a semantic limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    PreconditionError,
    _bits,
    _s_cycle_free,
    check_vertices,
    ids_of,
)

KINDS = ("wsfvs", "sfvs", "fvs", "nmc", "nmcdt", "wnmcdt", "vc", "mis")
WEIGHTED_KINDS = frozenset({"wsfvs", "wnmcdt"})


class SizeGuardError(PreconditionError):
    """The instance exceeds the oracle's size guard."""


@dataclass(frozen=True)
class ProblemInstance:
    """A graph plus the distinguished vertex set of one problem kind.

    ``special`` holds S for the feedback-set kinds and T for the multiway
    kinds; it must be all vertices for ``fvs`` and empty for ``vc``/``mis``.
    ``budget`` is the optional decision bound k; solvers ignore it and report
    the optimum, the CLI uses it for a within-budget verdict.
    """

    graph: Graph
    kind: str
    special: tuple[int, ...] = ()
    budget: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown problem kind {self.kind!r}")
        mask = check_vertices(self.graph, self.special)
        object.__setattr__(self, "special", ids_of(mask))
        if self.kind == "fvs" and self.special != tuple(self.graph.vertices()):
            raise PreconditionError("fvs instances must have special = all vertices")
        if self.kind in ("vc", "mis") and self.special:
            raise PreconditionError(f"{self.kind} instances must have an empty special set")
        if self.budget is not None and self.budget < 0:
            raise PreconditionError("budget must be nonnegative")

    def special_mask(self) -> int:
        m = 0
        for v in self.special:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class Solution:
    """A removed vertex set with its objective value.

    ``objective`` is the total weight of ``removed`` for the weighted kinds
    and its cardinality otherwise; it is None when the instance is infeasible
    (which only NMC can be).
    """

    removed: tuple[int, ...]
    objective: int | None
    feasible: bool


def _terminals_separated(g: Graph, kept: int, terms: int) -> bool:
    """Every connected component of G[kept] contains at most one terminal."""
    adj = g._adj
    todo = kept
    while todo:
        b = todo & -todo
        comp = b
        frontier = b
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & kept & ~comp
            comp |= frontier
        if (comp & terms).bit_count() > 1:
            return False
        todo &= ~comp
    return True


def feasible_removed(inst: ProblemInstance, removed: tuple[int, ...] | int) -> bool:
    """Re-check feasibility of a removed set for the instance's kind."""
    g = inst.graph
    rm = removed if isinstance(removed, int) else check_vertices(g, removed)
    kept = g.vertex_mask() & ~rm
    sm = inst.special_mask()
    kind = inst.kind
    if kind in ("wsfvs", "sfvs"):
        return _s_cycle_free(g._adj, kept, sm)
    if kind == "fvs":
        return _s_cycle_free(g._adj, kept, kept)
    if kind == "nmc":
        if rm & sm:
            return False
        return _terminals_separated(g, kept, sm)
    if kind in ("nmcdt", "wnmcdt"):
        return _terminals_separated(g, kept, sm & kept)
    if kind in ("vc", "mis"):
        # removed must cover every edge, i.e. the kept set is independent
        for v in _bits(kept):
            if g._adj[v] & kept:
                return False
        return True
    raise PreconditionError(f"unknown problem kind {kind!r}")


def oracle_solve(inst: ProblemInstance, max_vertices: int = 22) -> Solution:
    """Exhaustive minimum solution in canonical (objective, lexicographic) order."""
    g = inst.graph
    n = g.n
    if n > max_vertices:
        raise SizeGuardError(
            f"oracle guard: {n} vertices exceeds the limit of {max_vertices}"
        )
    if inst.kind == "nmc":
        sm = inst.special_mask()
        for v in _bits(sm):
            if g._adj[v] & sm:
                return Solution((), None, False)

    if inst.kind in WEIGHTED_KINDS:
        return _solve_weighted(inst)
    return _solve_unweighted(inst)


def _solve_unweighted(inst: ProblemInstance) -> Solution:
    g = inst.graph
    vertices = list(g.vertices())
    for k in range(g.n + 1):
        for members in combinations(vertices, k):
            m = 0
            for v in members:
                m |= 1 << v
            if feasible_removed(inst, m):
                return Solution(members, k, True)
    raise PreconditionError("exhausted all subsets without a feasible solution")


def _solve_weighted(inst: ProblemInstance) -> Solution:
    g = inst.graph
    w = g._w
    buckets: dict[int, list[int]] = {}
    full = g.vertex_mask()
    for m in range(full + 1):
        if m & 1:
            continue
        total = 0
        mm = m
        while mm:
            b = mm & -mm
            total += w[b.bit_length() - 1]
            mm ^= b
        buckets.setdefault(total, []).append(m)
    for total in sorted(buckets):
        feas = [m for m in buckets[total] if feasible_removed(inst, m)]
        if feas:
            best = min(ids_of(m) for m in feas)
            return Solution(best, total, True)
    raise PreconditionError("exhausted all subsets without a feasible solution")


def oracle_clique_cover_at_most(g: Graph, c: int) -> bool:
    """True iff the vertices partition into at most ``c`` cliques (exhaustive)."""
    if c < 1:
        raise PreconditionError(f"c must be >= 1, got {c}")
    adj = g._adj
    # most-constrained-first: high degree vertices early prune faster
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    groups: list[int] = []

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        b = 1 << v
        av = adj[v]
        for j, gm in enumerate(groups):
            if gm & ~av == 0:
                groups[j] = gm | b
                if place(i + 1):
                    return True
                groups[j] = gm
        if len(groups) < c:
            groups.append(b)
            if place(i + 1):
                return True
            groups.pop()
        return False

    return place(0)
