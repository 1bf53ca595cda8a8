"""Isomorph-free enumeration of small graphs and trees.

Trees come from networkx's free-tree generator; general graphs are grown
one vertex at a time (every n-vertex graph contains an (n-1)-vertex
induced subgraph, so extending all smaller graphs by one vertex in every
possible way and deduplicating by canonical form is exhaustive). Both
are returned sorted by canonical certificate for reproducible order.
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .canon import canonical_form
from .errors import NTooLarge
from .graph import Graph, make_graph

TREES_MAX_N = 10
GRAPHS_MAX_N = 7


def enumerate_trees(n):
    """One representative per isomorphism class of trees on n vertices."""
    if not 1 <= n <= TREES_MAX_N:
        raise NTooLarge(f"tree enumeration supports 1..{TREES_MAX_N}, got {n}")
    if n == 1:
        trees = [make_graph(1, [])]
    else:
        trees = [make_graph(n, t.edges()) for t in nx.nonisomorphic_trees(n)]
    return sorted(trees, key=canonical_form)


def _extensions(g):
    """All graphs obtained from g by appending one vertex (any neighborhood)."""
    n = g.n
    out = []
    for nbrs in range(1 << n):
        adj = list(g._adj)
        for v in range(n):
            if (nbrs >> v) & 1:
                adj[v] |= 1 << n
        adj.append(nbrs)
        out.append(Graph(n + 1, adj))
    return out


@lru_cache(maxsize=None)
def _graph_layer(n):
    if n == 1:
        return (make_graph(1, []),)
    seen = {}
    for g in _graph_layer(n - 1):
        for h in _extensions(g):
            cert = canonical_form(h)
            if cert not in seen:
                seen[cert] = h
    return tuple(seen[c] for c in sorted(seen))


def enumerate_graphs(n):
    """One representative per isomorphism class of all graphs on n vertices."""
    if not 1 <= n <= GRAPHS_MAX_N:
        raise NTooLarge(
            f"graph enumeration supports 1..{GRAPHS_MAX_N}, got {n}")
    return list(_graph_layer(n))


def _is_connected_graph(g):
    if g.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        m = g.adjacency_mask(v) & ~seen
        seen |= m
        while m:
            low = m & -m
            frontier.append(low.bit_length() - 1)
            m ^= low
    return seen == (1 << g.n) - 1


def enumerate_connected_graphs(n):
    """Connected members of enumerate_graphs(n), same order."""
    if not 1 <= n <= GRAPHS_MAX_N:
        raise NTooLarge(
            f"graph enumeration supports 1..{GRAPHS_MAX_N}, got {n}")
    return [g for g in enumerate_graphs(n) if _is_connected_graph(g)]
