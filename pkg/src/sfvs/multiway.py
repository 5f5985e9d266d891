"""Terminal separation solvers: node multiway cut and its deletable variant.

Three regimes are tractable and implemented here:

* plain node multiway cut (terminals are protected) for alpha(G) <= 2, where
  after the trivial no-instance check at most two terminals exist and one
  max-flow separator finishes the job;
* multiway cut with deletable terminals for alpha(G) <= d, unit weights, by
  branching on which independent set of at most d terminals survives;
* the weighted deletable variant for alpha(G) <= 2, by attaching one heavy
  apex vertex to all terminals and handing the graph to the weighted subset
  feedback vertex set solver (cycles through the apex are exactly the
  terminal-to-terminal paths).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .flow import min_vertex_separator
from .graph import (
    AlphaBoundError,
    Graph,
    InternalInvariantError,
    PreconditionError,
    _bits,
    check_vertices,
    find_independent_set,
    ids_of,
    mask_of,
)
from .oracle import Solution, _terminals_separated
from .solvers import solve_wsfvs_alpha3


def check_multiway(
    g: Graph, t: Iterable[int], x: Iterable[int], deletable: bool
) -> bool:
    """Feasibility of a removed set: surviving terminals pairwise disconnected.

    Without ``deletable`` the removed set must avoid the terminals entirely.
    """
    tm = check_vertices(g, t)
    xm = check_vertices(g, x)
    if not deletable and xm & tm:
        return False
    kept = g.vertex_mask() & ~xm
    return _terminals_separated(g, kept, tm & kept)


def _alpha_guard(g: Graph, d: int) -> None:
    witness = find_independent_set(g, d + 1)
    if witness is not None:
        raise AlphaBoundError(d, witness)


def solve_nmc_alpha2(g: Graph, t: Iterable[int]) -> Solution:
    """Node multiway cut (terminals protected) for alpha(G) <= 2.

    Adjacent terminals make the instance infeasible outright.  Otherwise the
    terminal set is independent, hence has at most two members, and a minimum
    vertex separator with both terminals protected is optimal.  The problem is
    a cardinality one, so the separator runs on unit capacities.
    """
    _alpha_guard(g, 2)
    tm = check_vertices(g, t)
    for v in _bits(tm):
        if g._adj[v] & tm:
            return Solution((), None, False)
    terms = ids_of(tm)
    if len(terms) <= 1:
        return Solution((), 0, True)
    unit = Graph(g.n, g.edges)
    sep = min_vertex_separator(unit, terms[:1], terms[1:])
    if sep is None:
        raise InternalInvariantError("non-adjacent terminals cannot be inseparable")
    if not check_multiway(g, terms, sep, deletable=False):
        raise InternalInvariantError("separator failed the multiway recheck")
    return Solution(sep, len(sep), True)


def _smallest_cut(
    g: Graph, avail_mask: int, t_mask: int, limit: int
) -> tuple[int, tuple[int, ...]] | None:
    """Smallest X within ``avail`` (|X| <= limit) separating the terminals left.

    First hit in ascending-size, lexicographic order is the canonical optimum.
    """
    ids = ids_of(avail_mask)
    for k in range(min(limit, len(ids)) + 1):
        for members in combinations(ids, k):
            xm = mask_of(members)
            kept = avail_mask & ~xm
            if _terminals_separated(g, kept, t_mask & kept):
                return k, members
    return None


def solve_nmcdt_xp(g: Graph, t: Iterable[int], d: int) -> Solution:
    """Multiway cut with deletable terminals for alpha(G) <= d, unit weights.

    Removing all terminals is always feasible, so the optimum has at most |T|
    vertices.  With few terminals (|T| <= d) plain subset enumeration works;
    otherwise every solution keeps an independent set T' of at most d
    terminals, so branch over those, delete the rest, and recurse into the
    small case.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if any(w != 1 for w in g._w[1:]):
        raise PreconditionError("solve_nmcdt_xp handles unit weights only")
    if g.n <= 22:
        _alpha_guard(g, d)
    tm = check_vertices(g, t)
    t_ids = ids_of(tm)
    full = g.vertex_mask()

    if len(t_ids) <= d:
        found = _smallest_cut(g, full, tm, len(t_ids))
        assert found is not None  # X = T is always feasible
        size, members = found
        return Solution(members, size, True)

    adj = g._adj
    best: tuple[int, tuple[int, ...]] | None = None
    solved_u: set[int] = set()  # guard against re-solving one deletion set
    for keep in range(d + 1):
        for t_keep in combinations(t_ids, keep):
            km = mask_of(t_keep)
            if any(adj[v] & km for v in t_keep):
                continue  # surviving terminals must be independent
            um = tm & ~km
            if um in solved_u:
                continue
            solved_u.add(um)
            base = um.bit_count()
            if best is not None and base > best[0]:
                continue
            limit = keep if best is None else min(keep, best[0] - base)
            found = _smallest_cut(g, full & ~um, km, limit)
            if found is None:
                continue
            size, members = found
            total = base + size
            removed = tuple(sorted(ids_of(um) + members))
            cand = (total, removed)
            if best is None or cand < best:
                best = cand
    assert best is not None  # keep = 0 always yields a feasible branch
    if not check_multiway(g, t_ids, best[1], deletable=True):
        raise InternalInvariantError("deletable-terminal cut failed the recheck")
    return Solution(best[1], best[0], True)


def solve_wnmcdt_alpha2(g: Graph, t: Iterable[int]) -> Solution:
    """Weighted multiway cut with deletable terminals for alpha(G) <= 2.

    Adds an apex vertex adjacent to every terminal, with weight equal to the
    whole graph's weight so it can never be worth removing, and solves
    weighted subset feedback vertex set with S = {apex} on the result (which
    has alpha <= 3).
    """
    _alpha_guard(g, 2)
    tm = check_vertices(g, t)
    terms = ids_of(tm)
    if not terms:
        return Solution((), 0, True)
    apex = g.n + 1
    edges = list(g.edges) + [(v, apex) for v in terms]
    weights = {v: g.weight(v) for v in g.vertices()}
    weights[apex] = g.total_weight()
    extended = Graph(g.n + 1, edges, weights)
    inner = solve_wsfvs_alpha3(extended, (apex,))
    if apex in inner.removed:
        raise InternalInvariantError("the apex outweighs every solution, yet was removed")
    if not check_multiway(g, terms, inner.removed, deletable=True):
        raise InternalInvariantError("apex reduction produced an invalid multiway cut")
    return Solution(inner.removed, g.weight_of(inner.removed), True)
