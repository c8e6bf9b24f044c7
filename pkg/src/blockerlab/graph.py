"""Undirected simple graphs on dense integer vertices.

Vertices are always ``0 .. n-1``.  Adjacency is stored as one int bitmask per
vertex, which keeps the exhaustive solvers (subset enumeration, branch and
bound) fast without external dependencies.  Graphs are immutable after
construction and safe to share between threads; every operation returns a new
graph together with whatever vertex map is needed to translate witnesses back
to the input.

Edges are normalised ``(u, v)`` tuples with ``u < v``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import InvalidEdgeError, InvalidVertexError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair to a canonical edge tuple."""
    if u == v:
        raise InvalidEdgeError(f"self-loop {u}-{v} is not a valid edge")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple graph: no loops, no parallel edges, symmetric."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidVertexError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InvalidEdgeError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks."""
        return self._adj

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def neighbours_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[Edge]:
        """All edges as sorted ``(u, v)`` tuples with ``u < v``."""
        out = []
        for u in range(self.n):
            mask = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(mask):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = tuple(full & ~(self._adj[v] | (1 << v)) for v in range(self.n))
        return g

    def connected_components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            frontier = 1 << start
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def validate_edge_set(g: Graph, s: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    """Normalise ``s`` and check every pair is an edge of ``g``."""
    out = set()
    for u, v in s:
        e = edge(u, v)
        if not (0 <= e[0] < g.n and e[1] < g.n) or not g.has_edge(*e):
            raise InvalidEdgeError(f"{e} is not an edge of the host graph")
        out.add(e)
    return frozenset(out)


def validate_vertex_set(g: Graph, u: Iterable[int]) -> frozenset[int]:
    out = frozenset(u)
    for v in out:
        if not 0 <= v < g.n:
            raise InvalidVertexError(f"vertex {v} out of range for n={g.n}")
    return out


def restriction(g: Graph, s: Iterable[tuple[int, int]]) -> Graph:
    """The spanning subgraph of ``g`` whose edge set is exactly ``s``."""
    return Graph(g.n, validate_edge_set(g, s))


def contract_edges(
    g: Graph, s: Iterable[tuple[int, int]]
) -> tuple[Graph, tuple[int, ...]]:
    """Contract every edge of ``s`` simultaneously.

    The vertices of the result correspond to the connected components of the
    restriction of ``g`` to ``s``; two of them are adjacent exactly when the
    components they came from are joined by an edge of ``g``.  Returns the
    contracted graph plus a map ``old vertex -> new vertex`` so that witnesses
    on the result can be translated back.
    """
    s = validate_edge_set(g, s)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in s:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(g.n)})
    new_id = {r: i for i, r in enumerate(roots)}
    comp = tuple(new_id[find(v)] for v in range(g.n))

    edges = set()
    for u in range(g.n):
        mask = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(mask):
            cu, cv = comp[u], comp[v]
            if cu != cv:
                edges.add((cu, cv) if cu < cv else (cv, cu))
    return Graph(len(roots), edges), comp


def delete_vertices(g: Graph, u: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``V - u`` plus the old->new reindexing map."""
    u = validate_vertex_set(g, u)
    keep = [v for v in range(g.n) if v not in u]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[a], remap[b])
        for a in keep
        for b in bits(g.adj[a] >> (a + 1) << (a + 1))
        if b in remap
    ]
    return Graph(len(keep), edges), remap


def delete_edges(g: Graph, s: Iterable[tuple[int, int]]) -> Graph:
    """Same vertex set, with the edges of ``s`` removed."""
    s = validate_edge_set(g, s)
    return Graph(g.n, [e for e in g.edges() if e not in s])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    vs = validate_vertex_set(g, vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in vs])


def is_forest(g: Graph) -> bool:
    """True iff the graph has no cycle."""
    return g.edge_count() == g.n - len(g.connected_components())


def contains_induced(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """Search for an induced copy of ``h`` in ``g``.

    Returns a tuple mapping each vertex of ``h`` to a distinct vertex of
    ``g`` witnessing the copy, or ``None``.  Plain backtracking with degree
    pruning; intended for small patterns (up to about 6 vertices).
    """
    if h.n > g.n:
        return None
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    mapping = [-1] * h.n
    used = [False] * g.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        hu = order[i]
        for gv in range(g.n):
            if used[gv] or g.degree(gv) < h.degree(hu):
                continue
            ok = True
            for j in range(i):
                hw = order[j]
                if g.has_edge(gv, mapping[hw]) != h.has_edge(hu, hw):
                    ok = False
                    break
            if ok:
                mapping[hu] = gv
                used[gv] = True
                if extend(i + 1):
                    return True
                used[gv] = False
                mapping[hu] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


# -- small named graphs -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidEdgeError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


def graph_join(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)
