"""Isomorphism testing and deduplication for small graphs (n <= ~10).

Colour refinement gives a cheap isomorphism-invariant key; exact checks run a
refinement-guided backtracking search.  This is all the catalogue generators
need at desk scale.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, bits


def _refine(g: Graph) -> tuple[int, ...]:
    """Stable colour refinement; returns the final colour of every vertex.

    New colour ids are ranks of sorted signatures, so corresponding vertices
    of isomorphic graphs end up with identical numeric colours.
    """
    colours = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        relabel = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        new = [relabel[sig] for sig in signatures]
        if new == colours:
            break
        colours = new
    return tuple(colours)


def invariant_key(g: Graph):
    """A hashable isomorphism invariant used to bucket candidate graphs."""
    colours = _refine(g)
    return (g.n, g.edge_count(), tuple(sorted(colours)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    cg, ch = _refine(g), _refine(h)
    if sorted(cg) != sorted(ch):
        return False

    # Map g-vertices in order of rarest refinement colour first.
    freq: dict[int, int] = {}
    for c in cg:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(g.n), key=lambda v: (freq[cg[v]], cg[v], v))
    image = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for v in range(h.n):
            if used[v] or ch[v] != cg[u]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if g.has_edge(u, w) != h.has_edge(v, image[w]):
                    ok = False
                    break
            if ok:
                image[u] = v
                used[v] = True
                if extend(i + 1):
                    return True
                used[v] = False
                image[u] = -1
        return False

    return extend(0)


def dedup_isomorphic(graphs: Iterable[Graph]) -> list[Graph]:
    """Keep one representative per isomorphism class, in input order."""
    buckets: dict = {}
    out = []
    for g in graphs:
        key = invariant_key(g)
        reps = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
            out.append(g)
    return out
