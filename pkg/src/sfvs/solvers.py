"""Subset feedback vertex set solvers for graphs of small independent set number.

Two algorithms live here.

``solve_wsfvs_alpha3`` solves the weighted problem exactly when alpha(G) <= 3.
It searches over the structure of an optimal S-forest F: split F into the
near layer (the closed neighborhood of the S-vertices that survive) and the
far part (everything at distance >= 2 from surviving S-vertices).  The near
layer is small, at most ``4d - 2`` vertices, so all of its candidates can be
enumerated.  For each candidate X and each way (A_1, ..., A_d') of budgeting
which X-vertices the far components may touch, a "hat" test (adding one proxy
vertex per budget set, adjacent to exactly that set) certifies that any
completion respecting the budgets stays an S-forest.  Completions are then
computed exactly: one far component means picking the heaviest component of
the admissible vertices, two far components reduce to a minimum-weight vertex
cover on a bipartite conflict graph.

``solve_sfvs_xp`` solves the unweighted problem for any alpha bound d by brute
force over the two small sides of an optimal solution: at most 2d surviving
S-vertices and at most 2d removed non-S-vertices.

Both return the canonical optimum: minimum objective, ties broken toward the
lexicographically smallest removed set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .flow import _solve_bipartite_cover
from .graph import (
    AlphaBoundError,
    Graph,
    InternalInvariantError,
    PreconditionError,
    _bits,
    _s_cycle_free,
    check_vertices,
    components_of_mask,
    find_independent_set,
    ids_of,
    induced_subgraph,
    mask_of,
)
from .oracle import Solution


@dataclass(frozen=True)
class SDistancePartition:
    """A candidate S-forest split into its near layer and far components.

    ``s1`` is the near layer (the candidate closed neighborhood of the kept
    S-vertices), ``kept_s = s1 & S``, and each far component induces a
    connected subgraph none of whose vertices touches ``kept_s``.
    """

    s1: tuple[int, ...]
    kept_s: tuple[int, ...]
    far_components: tuple[tuple[int, ...], ...]

    def kept_vertices(self) -> tuple[int, ...]:
        out = set(self.s1)
        for comp in self.far_components:
            out.update(comp)
        return tuple(sorted(out))


# -- near-layer candidate enumeration ----------------------------------------


def enumerate_s1_candidates(
    g: Graph, s: Iterable[int], d: int, loose_bounds: bool = False
) -> Iterator[tuple[int, ...]]:
    """Yield every candidate near layer X subject to the size bounds.

    A candidate satisfies: |X & S| <= 2d; X \\ S lies inside N(X & S); G[X] is
    an S-forest; and |X| <= 4d - 2 when |X & S| <= 2d - 2, |X| <= 2d
    otherwise.  With ``loose_bounds`` the single bound |X| <= 4d is used
    instead (useful for differential testing).  The empty candidate is always
    yielded first; the no-surviving-S case is handled by the caller's
    baseline.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    s_mask = check_vertices(g, s)
    if d <= 3 and g.n <= 22:
        witness = find_independent_set(g, d + 1)
        if witness is not None:
            raise AlphaBoundError(d, witness)
    return _s1_candidates(g, s_mask, d, loose_bounds)


def _s1_candidates(
    g: Graph, s_mask: int, d: int, loose_bounds: bool
) -> Iterator[tuple[int, ...]]:
    adj = g._adj
    yield ()
    s_ids = ids_of(s_mask)

    def extend(x_mask: int, budget: int, pool: tuple[int, ...], start: int):
        yield ids_of(x_mask)
        if budget == 0:
            return
        for i in range(start, len(pool)):
            m2 = x_mask | (1 << pool[i])
            # supersets of a set with an S-cycle keep the S-cycle: prune
            if _s_cycle_free(adj, m2, s_mask):
                yield from extend(m2, budget - 1, pool, i + 1)

    def grow_s(sp_mask: int, count: int, start: int):
        for i in range(start, len(s_ids)):
            m2 = sp_mask | (1 << s_ids[i])
            if not _s_cycle_free(adj, m2, s_mask):
                continue
            cnt2 = count + 1
            if loose_bounds:
                cap = 4 * d
            else:
                cap = 4 * d - 2 if cnt2 <= 2 * d - 2 else 2 * d
            nm = 0
            for v in _bits(m2):
                nm |= adj[v]
            pool = ids_of(nm & ~s_mask)
            yield from extend(m2, cap - cnt2, pool, 0)
            if cnt2 < 2 * d:
                yield from grow_s(m2, cnt2, i + 1)

    yield from grow_s(0, 0, 0)


# -- hat graphs and budget tuples ---------------------------------------------


def build_hat_graph(g: Graph, x: Iterable[int], parts: Sequence[Iterable[int]]) -> Graph:
    """G[x] plus one fresh proxy vertex per part, adjacent to exactly that part.

    Vertices ``1..len(x)`` are the members of ``x`` in ascending order; proxy
    vertex ``j`` gets id ``len(x) + j``.  Proxies carry weight 1 and are never
    S-vertices; callers are expected to keep parts inside ``x \\ S``.
    """
    x_mask = check_vertices(g, x)
    xs = ids_of(x_mask)
    index = {v: i + 1 for i, v in enumerate(xs)}
    base, _ = induced_subgraph(g, xs)
    edges = list(base.edges)
    for j, part in enumerate(parts):
        pm = check_vertices(g, part)
        if pm & ~x_mask:
            raise PreconditionError("tuple part is not a subset of x")
        hat = len(xs) + j + 1
        for v in _bits(pm):
            edges.append((index[v], hat))
    weights = {index[v]: g.weight(v) for v in xs}
    return Graph(len(xs) + len(parts), edges, weights)


def _hat_ok(g: Graph, x_mask: int, s_mask: int, parts: Sequence[int]) -> bool:
    """S-forest test of the hat graph, done in place on extended masks."""
    ext = [m & x_mask for m in g._adj]
    kept = x_mask
    for j, pm in enumerate(parts):
        hat_bit = 1 << (g.n + 1 + j)
        ext.append(pm)
        for v in _bits(pm):
            ext[v] |= hat_bit
        kept |= hat_bit
    return _s_cycle_free(ext, kept, s_mask)


def _valid_single_parts(g: Graph, x_mask: int, s_mask: int) -> list[int]:
    """All A inside x \\ S whose one-proxy hat graph stays an S-forest.

    Validity is downward closed (removing proxy edges cannot create a cycle),
    so the subset search prunes whole subtrees on first failure.
    """
    pool = ids_of(x_mask & ~s_mask)
    valids = [0]

    def grow(a_mask: int, start: int):
        for i in range(start, len(pool)):
            a2 = a_mask | (1 << pool[i])
            if _hat_ok(g, x_mask, s_mask, (a2,)):
                valids.append(a2)
                grow(a2, i + 1)

    grow(0, 0)
    valids.sort()
    return valids


def enumerate_valid_tuples(
    g: Graph, x: Iterable[int], s: Iterable[int], d_prime_max: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every budget tuple of arity 0..d_prime_max that passes the hat test.

    Parts are subsets of ``x \\ s``; a tuple qualifies when the hat graph with
    one proxy vertex per part is still an S-forest.
    """
    x_mask = check_vertices(g, x)
    s_mask = check_vertices(g, s)
    if not _s_cycle_free(g._adj, x_mask, s_mask):
        raise PreconditionError("G[x] must be an S-forest")
    return _valid_tuples(g, x_mask, s_mask, d_prime_max)


def _valid_tuples(
    g: Graph, x_mask: int, s_mask: int, d_prime_max: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    singles = _valid_single_parts(g, x_mask, s_mask)
    yield ()

    def grow(prefix: tuple[int, ...]):
        for a in singles:
            cand = prefix + (a,)
            if len(cand) > 1 and not _hat_ok(g, x_mask, s_mask, cand):
                continue
            yield tuple(ids_of(m) for m in cand)
            if len(cand) < d_prime_max:
                yield from grow(cand)

    if d_prime_max >= 1:
        yield from grow(())


# -- admissible far vertices and the two completion cases --------------------


def _b_mask(g: Graph, x_mask: int, s_mask: int, a_mask: int) -> int:
    """Vertices outside x and S whose whole neighborhood into x sits in ``a``.

    The exclusion uses x \\ a (not x \\ (S | a)): a far vertex adjacent to a
    surviving S-vertex would sit in the near layer, so it must be ruled out
    here as well.
    """
    adj = g._adj
    rest = g.vertex_mask() & ~x_mask & ~s_mask
    out = 0
    for v in _bits(rest):
        if adj[v] & x_mask & ~a_mask == 0:
            out |= 1 << v
    return out


def b_set(g: Graph, x: Iterable[int], s: Iterable[int], a: Iterable[int]) -> tuple[int, ...]:
    """Public view of the admissible far-vertex set for one budget set."""
    x_mask = check_vertices(g, x)
    s_mask = check_vertices(g, s)
    a_mask = check_vertices(g, a)
    if a_mask & ~(x_mask & ~s_mask):
        raise PreconditionError("a must be a subset of x \\ s")
    return ids_of(_b_mask(g, x_mask, s_mask, a_mask))


def _removal_key(g: Graph, kept_mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: maximize kept weight, then lexicographically smallest removal."""
    removed = g.vertex_mask() & ~kept_mask
    return (-g.weight_of_mask(kept_mask), ids_of(removed))


def _case_a1(g: Graph, x_mask: int, s_mask: int, a_mask: int) -> tuple[int, int]:
    """Best completion with a single far component: (kept mask, component mask)."""
    b = _b_mask(g, x_mask, s_mask, a_mask)
    if not b:
        return x_mask, 0
    best = None
    best_key = None
    for comp in components_of_mask(g, b):
        key = _removal_key(g, x_mask | comp)
        if best_key is None or key < best_key:
            best_key = key
            best = comp
    return x_mask | best, best


def _case_a1a2(
    g: Graph, x_mask: int, s_mask: int, a1_mask: int, a2_mask: int
) -> tuple[int, int, int] | None:
    """Best completion with two far components, or None if no pair exists.

    Returns (kept mask, component 1 mask, component 2 mask).
    """
    adj = g._adj
    b1 = _b_mask(g, x_mask, s_mask, a1_mask)
    b2 = _b_mask(g, x_mask, s_mask, a2_mask)
    if not b1 or not b2:
        return None
    weight = {v: g.weight(v) for v in _bits(b1 | b2)}
    best = None
    best_key = None
    for w1 in _bits(b1):
        w1_bit = 1 << w1
        for w2 in _bits(b2 & ~adj[w1] & ~w1_bit):
            w2_bit = 1 << w2
            b1p = b1 & ~adj[w2] & ~w2_bit & ~w1_bit
            b2p = b2 & ~adj[w1] & ~w1_bit & ~w2_bit
            if b1p & b2p:
                raise InternalInvariantError(
                    "refined candidate sets overlap; an upstream precondition failed"
                )
            for side in (b1p, b2p):
                for v in _bits(side):
                    if side & ~adj[v] & ~(1 << v):
                        raise InternalInvariantError(
                            "refined candidate set is not a clique; "
                            "an upstream precondition failed"
                        )
            edges = []
            for l in _bits(b1p):
                for r in _bits(adj[l] & b2p):
                    edges.append((l, r))
            if edges:
                left = ids_of(b1p)
                right = ids_of(b2p)
                _, cover = _solve_bipartite_cover(left, right, edges, weight)
                u_mask = mask_of(cover)
            else:
                u_mask = 0
            c1 = w1_bit | (b1p & ~u_mask)
            c2 = w2_bit | (b2p & ~u_mask)
            kept = x_mask | c1 | c2
            if not _s_cycle_free(adj, kept, s_mask):
                raise InternalInvariantError(
                    "two-component completion produced an S-cycle"
                )
            key = _removal_key(g, kept)
            if best_key is None or key < best_key:
                best_key = key
                best = (kept, c1, c2)
    return best


def _partition_from(g: Graph, s_mask: int, x_mask: int, far: Sequence[int]) -> SDistancePartition:
    return SDistancePartition(
        s1=ids_of(x_mask),
        kept_s=ids_of(x_mask & s_mask),
        far_components=tuple(ids_of(c) for c in far if c),
    )


def solve_case_a1(
    g: Graph, s: Iterable[int], x: Iterable[int], a1: Iterable[int]
) -> SDistancePartition:
    """Maximum S-forest whose far part is one component respecting budget a1."""
    s_mask = check_vertices(g, s)
    x_mask = check_vertices(g, x)
    a_mask = check_vertices(g, a1)
    kept, comp = _case_a1(g, x_mask, s_mask, a_mask)
    if not _s_cycle_free(g._adj, kept, s_mask):
        raise InternalInvariantError("single-component completion produced an S-cycle")
    return _partition_from(g, s_mask, x_mask, (comp,))


def solve_case_a1a2(
    g: Graph,
    s: Iterable[int],
    x: Iterable[int],
    a1: Iterable[int],
    a2: Iterable[int],
) -> SDistancePartition | None:
    """Maximum S-forest with two far components respecting budgets (a1, a2)."""
    s_mask = check_vertices(g, s)
    x_mask = check_vertices(g, x)
    if not x_mask & s_mask:
        raise PreconditionError("the two-component case needs a surviving S-vertex in x")
    res = _case_a1a2(g, x_mask, s_mask, check_vertices(g, a1), check_vertices(g, a2))
    if res is None:
        return None
    _, c1, c2 = res
    return _partition_from(g, s_mask, x_mask, (c1, c2))


# -- the two top-level solvers ------------------------------------------------


def solve_wsfvs_alpha3(g: Graph, s: Iterable[int]) -> Solution:
    """Minimum-weight subset feedback vertex set for graphs with alpha <= 3."""
    witness = find_independent_set(g, 4)
    if witness is not None:
        raise AlphaBoundError(3, witness)
    s_mask = check_vertices(g, s)
    adj = g._adj
    full = g.vertex_mask()

    best_kept = full & ~s_mask  # dropping all of S is always feasible
    best_key = _removal_key(g, best_kept)

    def consider(kept: int):
        nonlocal best_kept, best_key
        key = _removal_key(g, kept)
        if key < best_key:
            best_key = key
            best_kept = kept

    for x in _s1_candidates(g, s_mask, 3, False):
        if not x:
            continue
        x_mask = mask_of(x)
        consider(x_mask)  # empty tuple: the forest is G[x] itself
        singles = _valid_single_parts(g, x_mask, s_mask)
        for a in singles:
            kept, _ = _case_a1(g, x_mask, s_mask, a)
            consider(kept)
        for i, a1 in enumerate(singles):
            for a2 in singles[i:]:
                if not _hat_ok(g, x_mask, s_mask, (a1, a2)):
                    continue
                res = _case_a1a2(g, x_mask, s_mask, a1, a2)
                if res is not None:
                    consider(res[0])

    if not _s_cycle_free(adj, best_kept, s_mask):
        raise InternalInvariantError("chosen forest fails the S-forest check")
    removed = ids_of(full & ~best_kept)
    return Solution(removed, g.weight_of(removed), True)


def solve_sfvs_xp(g: Graph, s: Iterable[int], d: int) -> Solution:
    """Minimum-size subset feedback vertex set when alpha(G) <= d, unit weights.

    Enumerates at most 2d surviving S-vertices against at most 2d removed
    non-S-vertices; every optimal solution has both sides that small.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if any(w != 1 for w in g._w[1:]):
        raise PreconditionError(
            "solve_sfvs_xp handles unit weights only; "
            "the weighted problem is intractable beyond alpha <= 3"
        )
    if g.n <= 22:
        witness = find_independent_set(g, d + 1)
        if witness is not None:
            raise AlphaBoundError(d, witness)
    s_mask = check_vertices(g, s)
    adj = g._adj
    full = g.vertex_mask()
    s_ids = ids_of(s_mask)
    non_s = ids_of(full & ~s_mask)
    cap = 2 * d

    best_size = g.n + 1
    best_removed: tuple[int, ...] | None = None
    for keep_count in range(min(cap, len(s_ids)), -1, -1):
        base = len(s_ids) - keep_count
        if base > best_size:
            continue
        for s_keep in combinations(s_ids, keep_count):
            s_removed = s_mask & ~mask_of(s_keep)
            for extra in range(min(cap, len(non_s)) + 1):
                size = base + extra
                if size > best_size:
                    break
                for x2 in combinations(non_s, extra):
                    removed = s_removed | mask_of(x2)
                    if size == best_size:
                        assert best_removed is not None
                        if ids_of(removed) >= best_removed:
                            continue
                    if _s_cycle_free(adj, full & ~removed, s_mask):
                        best_size = size
                        best_removed = ids_of(removed)
    assert best_removed is not None  # removing all of S is always feasible
    return Solution(best_removed, best_size, True)
