"""Simple undirected graphs over vertex indices 0..n-1.

Adjacency rows are bit masks (Python ints), so a graph is a tuple of n
integers and every set operation is a couple of bitwise ops. The width
cap is 128 vertices: the base graphs in every experiment are tiny, and
reconfiguration graphs built from them live in LabeledGraph, which is
adjacency-list based and not subject to this cap.
"""

from __future__ import annotations

from .errors import (
    CycleTooSmall,
    IndexOutOfRange,
    LoopEdge,
    NExceedsWidth,
    SubsetViolation,
)

WIDTH_DEFAULT = 64
WIDTH_MAX = 128


def _mask_members(mask):
    """Indices of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class VertexSet:
    """Immutable set of vertices of a host graph with n vertices.

    Stored as a bit mask; bit v set means vertex v is a member. The n is
    carried along so subset checks against the host are possible.
    """

    __slots__ = ("mask", "n")

    def __init__(self, mask, n):
        if n < 0 or n > WIDTH_MAX:
            raise NExceedsWidth(f"host size {n} outside 0..{WIDTH_MAX}")
        if mask < 0 or mask >> n:
            raise SubsetViolation(
                f"set bits must lie in 0..{n - 1}, got mask {bin(mask)}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, vertices, n):
        """Build from an iterable of vertex indices."""
        mask = 0
        for v in vertices:
            v = int(v)
            if v < 0 or v >= n:
                raise IndexOutOfRange(f"vertex {v} not in 0..{n - 1}")
            mask |= 1 << v
        return cls(mask, n)

    def members(self):
        return _mask_members(self.mask)

    def __iter__(self):
        return iter(self.members())

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, v):
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __eq__(self, other):
        return (isinstance(other, VertexSet)
                and self.mask == other.mask and self.n == other.n)

    def __hash__(self):
        return hash((self.mask, self.n))

    def _check_host(self, other):
        if not isinstance(other, VertexSet):
            raise TypeError("expected VertexSet")
        if other.n != self.n:
            raise SubsetViolation("vertex sets have different hosts")

    def __or__(self, other):
        self._check_host(other)
        return VertexSet(self.mask | other.mask, self.n)

    def __and__(self, other):
        self._check_host(other)
        return VertexSet(self.mask & other.mask, self.n)

    def __sub__(self, other):
        self._check_host(other)
        return VertexSet(self.mask & ~other.mask, self.n)

    def __le__(self, other):
        self._check_host(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other):
        self._check_host(other)
        return self.mask & other.mask == 0

    def __repr__(self):
        return "VertexSet({" + ", ".join(map(str, self.members())) + "}, n=%d)" % self.n


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "names")

    def __init__(self, n, adj, names=None):
        # internal constructor; use make_graph for validated building
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "names", tuple(names) if names is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def adjacency_mask(self, v):
        return self._adj[v]

    def adjacency(self, v):
        """Neighbors of v as a VertexSet."""
        return VertexSet(self._adj[v], self.n)

    def neighbors(self, v):
        return _mask_members(self._adj[v])

    def degree(self, v):
        return self._adj[v].bit_count()

    def has_edge(self, u, v):
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{self.n - 1}")
        return (self._adj[u] >> v) & 1 == 1

    def edges(self):
        """All edges as (u, v) with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def num_edges(self):
        return sum(a.bit_count() for a in self._adj) // 2

    def vertex_set(self, vertices):
        """VertexSet over this graph's vertices."""
        return VertexSet.of(vertices, self.n)

    def full_set(self):
        return VertexSet((1 << self.n) - 1, self.n)

    def name_of(self, v):
        if self.names is not None:
            return self.names[v]
        return str(v)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self._adj == other._adj and self.names == other.names)

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n, edges, names=None):
    """Graph with exactly the given edges, deduplicated and symmetric."""
    n = int(n)
    if n < 0:
        raise IndexOutOfRange(f"vertex count {n} is negative")
    if n > WIDTH_MAX:
        raise NExceedsWidth(f"vertex count {n} exceeds the cap {WIDTH_MAX}")
    adj = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise LoopEdge(f"loop edge ({u},{u})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise IndexOutOfRange(f"{len(names)} names for {n} vertices")
    return Graph(n, adj, names)


def complement(g):
    """Edge uv present iff absent in g (u != v)."""
    full = (1 << g.n) - 1
    adj = [(~g.adjacency_mask(v)) & full & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, adj, g.names)


# named generators

def path(n):
    """P_n: vertices 0..n-1 consecutive."""
    if n < 1:
        raise IndexOutOfRange("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    """C_n: vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    """K_n."""
    if n < 1:
        raise IndexOutOfRange("complete needs n >= 1")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m, n):
    """K_{m,n}: parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise IndexOutOfRange("complete_bipartite needs m, n >= 1")
    return make_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n):
    """K_{1,n}: center 0, leaves 1..n."""
    if n < 1:
        raise IndexOutOfRange("star needs n >= 1")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_minus_edge(n):
    """K_n minus the edge (0,1); n=4 gives the diamond."""
    if n < 2:
        raise IndexOutOfRange("complete_minus_edge needs n >= 2")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                          if (i, j) != (0, 1)])


def add_isolated(g, t):
    """g plus t isolated vertices appended after the existing ones."""
    if t < 0:
        raise IndexOutOfRange("add_isolated needs t >= 0")
    n = g.n + t
    if n > WIDTH_MAX:
        raise NExceedsWidth(f"vertex count {n} exceeds the cap {WIDTH_MAX}")
    names = None
    if g.names is not None:
        names = g.names + tuple(str(g.n + i) for i in range(t))
    return Graph(n, list(g._adj) + [0] * t, names)


def disjoint_union(g1, g2):
    """g1 plus g2 with g2's indices shifted by |V(g1)|."""
    n = g1.n + g2.n
    if n > WIDTH_MAX:
        raise NExceedsWidth(f"vertex count {n} exceeds the cap {WIDTH_MAX}")
    adj = list(g1._adj) + [a << g1.n for a in g2._adj]
    names = None
    if g1.names is not None and g2.names is not None:
        names = g1.names + g2.names
    return Graph(n, adj, names)


def _as_vset(x, n):
    if isinstance(x, VertexSet):
        if x.n != n:
            raise SubsetViolation(
                f"vertex set over {x.n} vertices, host has {n}")
        return x
    try:
        return VertexSet.of(x, n)
    except IndexOutOfRange as exc:
        raise SubsetViolation(str(exc)) from exc


def join(g1, h1, g2, h2):
    """Disjoint union of g1, g2 plus all edges between h1 and h2.

    h1 and h2 are vertex sets of g1 and g2 respectively (VertexSet or
    iterable of indices); h2's members refer to g2's own indexing.
    """
    h1 = _as_vset(h1, g1.n)
    h2 = _as_vset(h2, g2.n)
    g = disjoint_union(g1, g2)
    adj = list(g._adj)
    h2_shifted = h2.mask << g1.n
    for u in h1.members():
        adj[u] |= h2_shifted
    for v in h2.members():
        adj[g1.n + v] |= h1.mask
    return Graph(g.n, adj, g.names)


def induced_subgraph(g, vertices):
    """Induced subgraph on the given vertices, relabeled 0..m-1 ascending."""
    vs = _as_vset(vertices, g.n)
    keep = vs.members()
    pos = {v: i for i, v in enumerate(keep)}
    m = len(keep)
    adj = [0] * m
    for v in keep:
        row = g.adjacency_mask(v) & vs.mask
        for w in _mask_members(row):
            adj[pos[v]] |= 1 << pos[w]
    names = None
    if g.names is not None:
        names = tuple(g.names[v] for v in keep)
    return Graph(m, adj, names)


def delete_vertices(g, vertices):
    """g minus the given vertices (remaining ones relabeled ascending)."""
    vs = _as_vset(vertices, g.n)
    return induced_subgraph(g, VertexSet(~vs.mask & ((1 << g.n) - 1), g.n))


def relabel(g, perm):
    """Image of g under the permutation perm (perm[v] = new index of v)."""
    if sorted(perm) != list(range(g.n)):
        raise IndexOutOfRange("perm is not a permutation of 0..n-1")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in g.neighbors(v):
            row |= 1 << perm[w]
        adj[perm[v]] = row
    names = None
    if g.names is not None:
        names = [None] * g.n
        for v in range(g.n):
            names[perm[v]] = g.names[v]
    return Graph(g.n, adj, names)
