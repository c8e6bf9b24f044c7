"""Graph-class recognizers returning positive certificates or negative witnesses.

Positive certificates carry enough structure to drive the polynomial
parameter routines (bipartition for matching/König, perfect elimination order
for the chordal greedy, cotree for the colouring DPs, parts for complete
multipartite graphs).  Negative answers carry a concrete forbidden structure:
an odd cycle, a chordless cycle of length >= 4, an induced P4, or an induced
P2+P1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .cotree import Cotree, build_cotree
from .errors import CertificateError, NotACographError
from .graph import Graph, bits, contains_induced, disjoint_union, path_graph


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class EliminationOrder:
    """A perfect elimination order: each vertex's later neighbours are a clique."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class CotreeCertificate:
    cotree: Cotree


@dataclass(frozen=True)
class MultipartiteParts:
    parts: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class NotInClass:
    reason: str
    witness: tuple[int, ...]


ClassCertificate = Union[
    Bipartition, EliminationOrder, CotreeCertificate, MultipartiteParts, NotInClass
]


def recognize_bipartite(g: Graph) -> Union[Bipartition, NotInClass]:
    """Two-colour by BFS; on failure return an odd cycle."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u]):
                if colour[v] == -1:
                    colour[v] = colour[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return NotInClass("odd cycle", _odd_cycle(parent, u, v))
    left = frozenset(v for v in range(g.n) if colour[v] == 0)
    right = frozenset(v for v in range(g.n) if colour[v] == 1)
    return Bipartition(left, right)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    path_u, path_v = [u], [v]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    su, sv = set(path_u), set(path_v)
    meet = next(x for x in path_u if x in sv)
    cyc = path_u[: path_u.index(meet) + 1] + path_v[: path_v.index(meet)][::-1]
    assert len(cyc) % 2 == 1
    return tuple(cyc)


def validate_bipartition(g: Graph, cert: Bipartition) -> None:
    if cert.left & cert.right or cert.left | cert.right != set(range(g.n)):
        raise CertificateError("bipartition does not partition the vertex set")
    for part in (cert.left, cert.right):
        for u in part:
            if any(v in part for v in bits(g.adj[u])):
                raise CertificateError("bipartition part is not independent")


def _lex_bfs(g: Graph) -> list[int]:
    # O(n^2) lexicographic BFS; ample at this scale.
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        u = max(
            (v for v in range(g.n) if not visited[v]),
            key=lambda v: (labels[v], -v),
        )
        visited[u] = True
        order.append(u)
        for w in bits(g.adj[u]):
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def recognize_chordal(g: Graph) -> Union[EliminationOrder, NotInClass]:
    """LexBFS then elimination-order verification; failure yields a hole."""
    visit = _lex_bfs(g)
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=lambda w: pos[w])
        for w in later:
            if w != first and not g.has_edge(first, w):
                return NotInClass("chordless cycle", _find_hole(g, v, first, w))
    return EliminationOrder(tuple(peo))


def _find_hole(g: Graph, v: int, u: int, w: int) -> tuple[int, ...]:
    """An induced cycle >= 4 through v given non-adjacent u, w in N(v)."""
    blocked = set(bits(g.adj[v])) - {u, w}
    parent = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y in bits(g.adj[x]):
            if y not in parent and y != v and y not in blocked:
                parent[y] = x
                queue.append(y)
    assert w in parent, "failing PEO triple must close a cycle"
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    # Shorten to an induced path: BFS already gives a shortest u-w path, which
    # has no chords, so v + path is a chordless cycle of length >= 4.
    return tuple([v] + path[::-1])


def validate_elimination_order(g: Graph, cert: EliminationOrder) -> None:
    if sorted(cert.order) != list(range(g.n)):
        raise CertificateError("elimination order must enumerate all vertices")
    pos = {v: i for i, v in enumerate(cert.order)}
    for v in cert.order:
        later = [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1 :]:
                if not g.has_edge(a, b):
                    raise CertificateError(
                        f"later neighbours {a},{b} of {v} are not adjacent"
                    )


def recognize_cograph(g: Graph) -> Union[CotreeCertificate, NotInClass]:
    try:
        return CotreeCertificate(build_cotree(g))
    except NotACographError as exc:
        return NotInClass("induced P4", exc.witness)


def recognize_complete_multipartite(g: Graph) -> Union[MultipartiteParts, NotInClass]:
    """Parts are the complement's components; failure yields an induced P2+P1."""
    comps = g.complement().connected_components()
    parts = [frozenset(c) for c in comps]
    ok = True
    for part in parts:
        for u in part:
            if any(v in part for v in bits(g.adj[u])):
                ok = False
    if ok:
        for i, a in enumerate(parts):
            for b in parts[i + 1 :]:
                for u in a:
                    if not all(g.has_edge(u, v) for v in b):
                        ok = False
    if ok:
        return MultipartiteParts(tuple(sorted(parts, key=min)))
    p2p1 = disjoint_union(path_graph(2), path_graph(1))
    hit = contains_induced(g, p2p1)
    assert hit is not None
    return NotInClass("induced P2+P1", hit)


def validate_multipartite(g: Graph, cert: MultipartiteParts) -> None:
    seen: set[int] = set()
    for part in cert.parts:
        if part & seen:
            raise CertificateError("parts overlap")
        seen |= part
        for u in part:
            if any(v in part for v in bits(g.adj[u])):
                raise CertificateError("part is not independent")
    if seen != set(range(g.n)):
        raise CertificateError("parts do not cover the vertex set")
    for i, a in enumerate(cert.parts):
        for b in cert.parts[i + 1 :]:
            for u in a:
                for v in b:
                    if not g.has_edge(u, v):
                        raise CertificateError("cross pair not adjacent")
