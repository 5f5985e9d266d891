"""Shared builders and independent brute-force oracles for the test suite.

The brute-force helpers here deliberately use different algorithms than the
package (subset enumeration instead of DFS, one-sided enumeration instead of
flow) so that agreement actually means something.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx
import pytest

from sfvs import Graph, independence_at_most


def complete_graph(n: int, weights=None) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)], weights)


def path_graph(n: int, weights=None) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(1, n)], weights)


def cycle_graph(n: int, weights=None) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(1, n)] + [(1, n)], weights)


def random_graph(rng: random.Random, n: int, p: float, wmax: int = 1) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    weights = {v: rng.randint(1, wmax) for v in range(1, n + 1)} if wmax > 1 else None
    return Graph(n, edges, weights)


def random_bounded_alpha(
    rng: random.Random, n: int, alpha: int, p: float, wmax: int = 1
) -> Graph:
    """Random graph with alpha(G) <= alpha by construction (clique cover)."""
    chunk_of = {v: (v - 1) % alpha for v in range(1, n + 1)}
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if chunk_of[u] == chunk_of[v] or rng.random() < p:
                edges.append((u, v))
    weights = {v: rng.randint(1, wmax) for v in range(1, n + 1)} if wmax > 1 else None
    return Graph(n, edges, weights)


def random_subset(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    return tuple(v for v in range(1, n + 1) if rng.random() < p)


@lru_cache(maxsize=1)
def atlas_graphs(max_n: int = 6) -> tuple[Graph, ...]:
    """Every graph on 1..max_n vertices, one per isomorphism class."""
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < 1 or n > max_n:
            continue
        mapping = {old: i + 1 for i, old in enumerate(sorted(G.nodes()))}
        out.append(Graph(n, [(mapping[u], mapping[v]) for u, v in G.edges()]))
    return tuple(out)


def atlas_alpha3(max_n: int = 6) -> list[Graph]:
    return [g for g in atlas_graphs(max_n) if independence_at_most(g, 3)]


# -- independent oracles -------------------------------------------------------


def naive_is_s_forest(g: Graph, x, s) -> bool:
    """S-forest test by enumerating induced cycles as vertex subsets.

    A vertex lies on a cycle iff it lies on a chordless one (a chord splits a
    shortest cycle through it into a shorter one), and a chordless cycle is
    exactly a subset inducing a connected 2-regular graph.
    """
    xs = sorted(set(x))
    s_in = set(s) & set(xs)
    for size in range(3, len(xs) + 1):
        for ys in combinations(xs, size):
            if not s_in.intersection(ys):
                continue
            yset = set(ys)
            degs = [len([u for u in g.neighbors(v) if u in yset]) for v in ys]
            if any(d != 2 for d in degs):
                continue
            # 2-regular: a disjoint union of cycles; connected iff one cycle
            seen = {ys[0]}
            frontier = [ys[0]]
            while frontier:
                v = frontier.pop()
                for u in g.neighbors(v):
                    if u in yset and u not in seen:
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == size:
                return False
    return True


def brute_bipartite_cover_weight(left, right, edges, weights) -> int:
    """Minimum cover weight by enumerating which left vertices are chosen."""
    left = sorted(left)
    best = None
    for r in range(len(left) + 1):
        for chosen in combinations(left, r):
            chosen_set = set(chosen)
            forced_right = {b for a, b in edges if a not in chosen_set}
            w = sum(weights[v] for v in chosen) + sum(weights[v] for v in forced_right)
            if best is None or w < best:
                best = w
    return best


def brute_min_separator_weight(g: Graph, s_side, t_side, forbidden=()) -> int | None:
    """Minimum separator weight by enumerating all allowed subsets."""
    s_set, t_set = set(s_side), set(t_side)
    pool = [v for v in g.vertices() if v not in s_set | t_set | set(forbidden)]
    best = None
    for r in range(len(pool) + 1):
        for sub in combinations(pool, r):
            removed = set(sub)
            if _connects(g, s_set, t_set, removed):
                continue
            w = g.weight_of(sub)
            if best is None or w < best:
                best = w
    return best


def _connects(g: Graph, s_set, t_set, removed) -> bool:
    seen = set(s_set)
    frontier = list(s_set)
    while frontier:
        v = frontier.pop()
        if v in t_set:
            return True
        for u in g.neighbors(v):
            if u not in removed and u not in seen:
                seen.add(u)
                frontier.append(u)
    return bool(seen & t_set)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
