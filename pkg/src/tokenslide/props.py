"""Graph property computations: planarity, coloring, Eulerian checks,
girth, cliques, connectivity, and isomorphism-backed canonical forms.

All functions accept either a Graph or a LabeledGraph; internally they
work on neighbor bit masks, so node counts are not width-limited.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from .canon import canonical_form, canonical_labeling, is_isomorphic, iso_map
from .graph import Graph


class _InfiniteType:
    """Distinguished infinite value for girth and diameter.

    Compares greater than every integer and equal only to itself, so it
    can never be confused with a sentinel numeric value.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    def __eq__(self, other):
        return isinstance(other, _InfiniteType)

    def __hash__(self):
        return hash("_InfiniteType")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _InfiniteType)

    def __gt__(self, other):
        return not isinstance(other, _InfiniteType)

    def __ge__(self, other):
        return True


INFINITE = _InfiniteType()


def _node_count_and_masks(g):
    if isinstance(g, Graph):
        return g.n, [g.adjacency_mask(v) for v in range(g.n)]
    return g.num_nodes(), g.adjacency_masks()


def _edge_list(n, masks):
    out = []
    for i in range(n):
        rest = masks[i] >> (i + 1) << (i + 1)
        while rest:
            low = rest & -rest
            out.append((i, low.bit_length() - 1))
            rest ^= low
    return out


def _to_networkx(g):
    n, masks = _node_count_and_masks(g)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(_edge_list(n, masks))
    return h


# ---------------------------------------------------------------------------
# planarity


def classify_subdivision(n, edges):
    """Classify an edge list as a subdivision of K_5 or K_{3,3}.

    Suppresses degree-2 vertices, then matches the branch graph. Returns
    "K5", "K33", or None if the edge set is neither.
    """
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if any(not 0 <= v < n for v in adj):
        return None
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            nb = adj.get(v)
            if nb is None or len(nb) != 2:
                continue
            a, b = sorted(nb)
            if b in adj[a]:
                continue  # suppression would create a parallel edge
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            del adj[v]
            changed = True
    verts = sorted(adj)
    degs = sorted(len(adj[v]) for v in verts)
    if len(verts) == 5 and degs == [4] * 5:
        return "K5"
    if len(verts) == 6 and degs == [3] * 6:
        # complete bipartite: the non-neighbors of each vertex, plus the
        # vertex itself, must split the six into two triples
        v0 = verts[0]
        side = {v0} | {v for v in verts if v not in adj[v0] and v != v0}
        if len(side) != 3:
            return None
        other = [v for v in verts if v not in side]
        if all(adj[a] == set(other) for a in side) and \
           all(adj[b] == side for b in other):
            return "K33"
    return None


def _minimize_nonplanar(n, edges):
    """Shrink a non-planar edge set until removing any edge makes it planar."""
    current = list(edges)
    i = 0
    while i < len(current):
        trial = current[:i] + current[i + 1:]
        h = nx.Graph()
        h.add_edges_from(trial)
        if not nx.check_planarity(h)[0]:
            current = trial
        else:
            i += 1
    return current


def is_planar(g):
    """(planar, witness): witness is a Kuratowski subdivision edge tuple."""
    n, masks = _node_count_and_masks(g)
    h = _to_networkx(g)
    ok, cert = nx.check_planarity(h, counterexample=True)
    if ok:
        return True, None
    edges = sorted((min(a, b), max(a, b)) for a, b in cert.edges())
    if classify_subdivision(n, edges) is None:
        edges = sorted(_minimize_nonplanar(n, _edge_list(n, masks)))
        if classify_subdivision(n, edges) is None:
            raise RuntimeError("failed to extract a Kuratowski witness")
    return False, tuple(edges)


# ---------------------------------------------------------------------------
# connectivity


def components(g):
    """Connected components as sorted tuples, ordered by smallest node."""
    n, masks = _node_count_and_masks(g)
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= masks[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        mem = []
        rest = comp
        while rest:
            low = rest & -rest
            mem.append(low.bit_length() - 1)
            rest ^= low
        out.append(tuple(mem))
    return out


def is_connected(g):
    return len(components(g)) <= 1


def _bfs_dists(masks, source, n):
    dist = [-1] * n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= masks[low.bit_length() - 1]
            rest ^= low
        frontier = nxt & ~seen
        seen |= frontier
        rest = frontier
        while rest:
            low = rest & -rest
            dist[low.bit_length() - 1] = d
            rest ^= low
    return dist


def diameter(g):
    """Longest shortest path; INFINITE when disconnected, 0 for n <= 1."""
    n, masks = _node_count_and_masks(g)
    if n <= 1:
        return 0
    best = 0
    for s in range(n):
        dist = _bfs_dists(masks, s, n)
        if min(dist) < 0:
            return INFINITE
        best = max(best, max(dist))
    return best


# ---------------------------------------------------------------------------
# Eulerian


def is_eulerian(g):
    """Connected with all degrees even. Isolated-vertex graphs count only
    when connected, so K_1 is Eulerian but K_1 + K_1 is not."""
    n, masks = _node_count_and_masks(g)
    if n == 0:
        return True
    if any(m.bit_count() % 2 for m in masks):
        return False
    return is_connected(g)


def components_eulerian(g):
    """Every connected component is Eulerian (equivalently: all degrees even)."""
    n, masks = _node_count_and_masks(g)
    return all(m.bit_count() % 2 == 0 for m in masks)


# ---------------------------------------------------------------------------
# girth


def girth(g):
    """Length of a shortest cycle, or INFINITE for forests."""
    n, masks = _node_count_and_masks(g)
    best = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if best is not None and dist[u] * 2 >= best:
                break
            rest = masks[u]
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if w == parent[u]:
                    continue
                if dist[w] >= 0:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
                else:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
    return INFINITE if best is None else best


# ---------------------------------------------------------------------------
# cliques


def _max_stable_in_masks(n, masks, stop_at=None):
    """Max independent set size over an adjacency mask list.

    With stop_at set, returns early once a set of that size is found.
    """
    full = (1 << n) - 1
    best = 0

    def grow(cand, size):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            if size > best:
                best = size
            return
        # branch on a highest-degree-in-candidates vertex
        pick, pick_deg = -1, -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = (masks[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            if size + cand.bit_count() > best:
                best = size + cand.bit_count()
            return
        grow(cand & ~(1 << pick) & ~masks[pick], size + 1)
        if stop_at is not None and best >= stop_at:
            return
        grow(cand & ~(1 << pick), size)

    grow(full, 0)
    return best


def clique_number(g):
    n, masks = _node_count_and_masks(g)
    full = (1 << n) - 1
    comp = [full & ~masks[v] & ~(1 << v) for v in range(n)]
    return _max_stable_in_masks(n, comp)


def has_clique(g, s):
    """Does g contain a clique on s vertices?"""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    n, masks = _node_count_and_masks(g)
    if s > n:
        return False
    full = (1 << n) - 1
    comp = [full & ~masks[v] & ~(1 << v) for v in range(n)]
    return _max_stable_in_masks(n, comp, stop_at=s) >= s


# ---------------------------------------------------------------------------
# coloring


def _try_color(n, masks, order, s):
    """Backtracking s-coloring over the given vertex order."""
    color = [-1] * n
    used = 0  # number of distinct colors already placed

    def place(idx, used):
        if idx == len(order):
            return True
        v = order[idx]
        forbidden = 0
        rest = masks[v]
        while rest:
            low = rest & -rest
            c = color[low.bit_length() - 1]
            rest ^= low
            if c >= 0:
                forbidden |= 1 << c
        limit = min(s, used + 1)  # first use of a new color: lowest index only
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            color[v] = c
            if place(idx + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return place(0, used)


def _coloring_order(n, masks):
    """Degeneracy-like order, highest degree first within a greedy peel."""
    return sorted(range(n), key=lambda v: -masks[v].bit_count())


def is_s_partite(g, s):
    """Can the nodes be split into s independent parts (s-colorable)?"""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    n, masks = _node_count_and_masks(g)
    if n == 0:
        return True
    return _try_color(n, masks, _coloring_order(n, masks), s)


def chromatic_number(g):
    n, masks = _node_count_and_masks(g)
    if n == 0:
        return 0
    if not any(masks):
        return 1
    low = clique_number(g)
    # greedy upper bound over the degree order
    order = _coloring_order(n, masks)
    color = [-1] * n
    high = 0
    for v in order:
        forbidden = 0
        rest = masks[v]
        while rest:
            lowb = rest & -rest
            c = color[lowb.bit_length() - 1]
            rest ^= lowb
            if c >= 0:
                forbidden |= 1 << c
        c = 0
        while forbidden >> c & 1:
            c += 1
        color[v] = c
        high = max(high, c + 1)
    for s in range(low, high):
        if _try_color(n, masks, order, s):
            return s
    return high


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class PropertyReport:
    nodes: int
    edges: int
    connected: bool
    component_count: int
    diameter: Union[int, _InfiniteType]
    chromatic: int
    clique: int
    girth: Union[int, _InfiniteType]
    planar: bool
    planar_witness: Optional[tuple]
    eulerian: bool
    components_eulerian: bool

    def to_json(self):
        def enc(x):
            return "infinite" if isinstance(x, _InfiniteType) else x

        return {
            "nodes": self.nodes,
            "edges": self.edges,
            "connected": self.connected,
            "component_count": self.component_count,
            "diameter": enc(self.diameter),
            "chromatic": self.chromatic,
            "clique": self.clique,
            "girth": enc(self.girth),
            "planar": self.planar,
            "planar_witness": (None if self.planar_witness is None else
                               [list(e) for e in self.planar_witness]),
            "eulerian": self.eulerian,
            "components_eulerian": self.components_eulerian,
        }


def analyze(g):
    n, masks = _node_count_and_masks(g)
    planar, witness = is_planar(g)
    return PropertyReport(
        nodes=n,
        edges=sum(m.bit_count() for m in masks) // 2,
        connected=is_connected(g),
        component_count=len(components(g)),
        diameter=diameter(g),
        chromatic=chromatic_number(g),
        clique=clique_number(g),
        girth=girth(g),
        planar=planar,
        planar_witness=witness,
        eulerian=is_eulerian(g),
        components_eulerian=components_eulerian(g),
    )


__all__ = [
    "INFINITE", "PropertyReport", "analyze", "canonical_form",
    "canonical_labeling", "chromatic_number", "classify_subdivision",
    "clique_number", "components", "components_eulerian", "diameter",
    "girth", "has_clique", "is_connected", "is_eulerian", "is_isomorphic",
    "is_planar", "is_s_partite", "iso_map",
]
