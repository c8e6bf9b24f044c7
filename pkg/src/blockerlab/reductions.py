"""Executable hardness gadgets with witness transfer in both directions.

Three constructions:

* vertex cover -> clique-number contraction blocking, by adding a universal
  vertex to a triangle-free graph;
* all-positive 2-clause satisfiability with a budget of true variables ->
  independence-number blocking (contraction or deletion) on a chordal gadget
  built from per-variable cliques and a clause clique;
* minimum sum of squares -> monochromatic-edge budgets on a complete
  multipartite graph with one part per input number.

Builders re-verify their structural postconditions on construction, and the
transfer routines check the criticality/satisfiability preconditions they
document, so every output is certified rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CriticalityError, GadgetPreconditionError
from .graph import (
    Edge,
    Graph,
    bits,
    complete_graph,
    contains_induced,
    contract_edges,
    delete_vertices,
    disjoint_union,
    validate_edge_set,
    validate_vertex_set,
)
from .monochromatic import Colouring, recolour_module
from .parameters import alpha_chordal, omega_exact
from .recognizers import (
    EliminationOrder,
    MultipartiteParts,
    NotInClass,
    recognize_chordal,
    recognize_complete_multipartite,
)


@dataclass(frozen=True)
class SatInstance:
    """All-positive 2-clause CNF with a cap on the number of true variables."""

    variable_count: int
    clauses: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        if self.variable_count < 1:
            raise GadgetPreconditionError("need at least one variable")
        if self.k < 0:
            raise GadgetPreconditionError("budget k must be non-negative")
        seen = set()
        for x, y in self.clauses:
            if x == y:
                raise GadgetPreconditionError("clauses must use two distinct variables")
            if not (0 <= x < self.variable_count and 0 <= y < self.variable_count):
                raise GadgetPreconditionError("clause variable out of range")
            seen.add((min(x, y), max(x, y)))
        if not seen:
            raise GadgetPreconditionError("need at least one clause")

    @classmethod
    def make(cls, variable_count: int, clauses, k: int) -> "SatInstance":
        """Normalise clause order and drop duplicates."""
        dedup = sorted({(min(x, y), max(x, y)) for x, y in clauses})
        return cls(variable_count, tuple(dedup), k)

    def satisfied_by(self, positives) -> bool:
        positives = set(positives)
        return all(x in positives or y in positives for x, y in self.clauses)


@dataclass(frozen=True)
class MssInstance:
    """Partition ``ell`` positive integers into ``h`` groups, bounding the
    sum of squared group sums by ``J``."""

    ell: int
    a: tuple[int, ...]
    h: int
    J: int

    def __post_init__(self):
        if self.ell < 1 or len(self.a) != self.ell:
            raise GadgetPreconditionError("tuple length must match ell >= 1")
        if any(x < 1 for x in self.a):
            raise GadgetPreconditionError("all entries must be positive")
        if self.h < 1:
            raise GadgetPreconditionError("h must be at least 1")


@dataclass(frozen=True)
class VcGadgetMap:
    universal_vertex: int
    base_vertex_count: int


@dataclass(frozen=True)
class ChordalGadgetMap:
    var_vertex: tuple[int, ...]  # v_x per variable
    var_clique: tuple[tuple[int, ...], ...]  # K_x per variable, 2k+1 vertices
    clause_vertex: tuple[int, ...]  # one per clause, forming a clique
    instance: SatInstance


@dataclass(frozen=True)
class MssGadgetMap:
    parts: tuple[tuple[int, ...], ...]
    instance: MssInstance


@dataclass(frozen=True)
class MssTarget:
    exact: Fraction  # J/2 - D, may be non-integral
    budget: int  # floor of the exact target; equivalent for integer counts


def _has_triangle(g: Graph):
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common:
            return (u, v, next(iter(bits(common))))
    return None


def build_vc_gadget(g: Graph, k: int) -> tuple[Graph, VcGadgetMap]:
    """Attach a universal vertex to a triangle-free graph with an edge.

    The result has clique number exactly 3, every triangle uses the new
    vertex, and no vertex is far from any triangle, which is re-verified via
    an induced-subgraph search on construction.
    """
    triangle = _has_triangle(g)
    if triangle is not None:
        raise GadgetPreconditionError(f"input has a triangle {triangle}")
    if g.edge_count() == 0:
        raise GadgetPreconditionError("input needs at least one edge")
    if k < 0:
        raise GadgetPreconditionError("budget k must be non-negative")
    w = g.n
    edges = g.edges() + [(v, w) for v in range(g.n)]
    gadget = Graph(g.n + 1, edges)
    c3p1 = disjoint_union(complete_graph(3), Graph(1))
    assert contains_induced(gadget, c3p1) is None
    assert _has_triangle(gadget) is not None  # omega == 3: triangle, no K4
    return gadget, VcGadgetMap(universal_vertex=w, base_vertex_count=g.n)


def vc_to_contraction_set(gm: VcGadgetMap, g: Graph, cover) -> frozenset[Edge]:
    """A vertex cover of the base graph becomes cover-to-universal edges."""
    cover = validate_vertex_set(g, cover)
    w = gm.universal_vertex
    if w in cover:
        raise GadgetPreconditionError("the universal vertex is not a base vertex")
    for u, v in g.edges():
        if w not in (u, v) and u not in cover and v not in cover:
            raise GadgetPreconditionError(f"edge {u}-{v} is not covered")
    return frozenset((min(v, w), max(v, w)) for v in cover)


def contraction_set_to_vc(gm: VcGadgetMap, g: Graph, s) -> frozenset[int]:
    """Read a vertex cover off a clique-number-reducing contraction set.

    Per connected component of the contracted edges: everything except the
    universal vertex, or everything except one vertex (the highest index)
    for components avoiding it.
    """
    s = validate_edge_set(g, s)
    before = omega_exact(g).value
    after = omega_exact(contract_edges(g, s)[0]).value
    if after >= before:
        raise CriticalityError("the set does not reduce the clique number")
    w = gm.universal_vertex
    cover: set[int] = set()
    restriction = Graph(g.n, s)
    for comp in restriction.connected_components():
        if len(comp) == 1:
            continue
        if w in comp:
            cover.update(v for v in comp if v != w)
        else:
            cover.update(sorted(comp)[:-1])
    assert len(cover) <= len(s)
    return frozenset(cover)


def build_chordal_gadget(sat: SatInstance) -> tuple[Graph, ChordalGadgetMap]:
    """One clique of 2k+1 vertices plus a pendant-clique vertex per variable,
    one clique over the clause vertices, clause vertices complete to the
    cliques of their two variables.

    Chordality and the independence number (variable count plus one) are
    re-verified on construction.  Chordal graphs are perfect, so the same
    instances double as a perfect-graph family for the deletion variant.
    """
    k = sat.k
    block = 2 * k + 2
    var_vertex = []
    var_clique = []
    edges: list[tuple[int, int]] = []
    for x in range(sat.variable_count):
        base = x * block
        v_x = base
        clique = tuple(range(base + 1, base + block))
        var_vertex.append(v_x)
        var_clique.append(clique)
        edges.extend((v_x, u) for u in clique)
        edges.extend(
            (clique[i], clique[j])
            for i in range(len(clique))
            for j in range(i + 1, len(clique))
        )
    offset = sat.variable_count * block
    clause_vertex = tuple(offset + c for c in range(len(sat.clauses)))
    edges.extend(
        (clause_vertex[i], clause_vertex[j])
        for i in range(len(clause_vertex))
        for j in range(i + 1, len(clause_vertex))
    )
    for c, (x, y) in enumerate(sat.clauses):
        for u in var_clique[x]:
            edges.append((u, clause_vertex[c]))
        for u in var_clique[y]:
            edges.append((u, clause_vertex[c]))
    gadget = Graph(offset + len(sat.clauses), edges)

    cert = recognize_chordal(gadget)
    assert isinstance(cert, EliminationOrder)
    assert alpha_chordal(gadget, cert).value == sat.variable_count + 1
    gm = ChordalGadgetMap(
        var_vertex=tuple(var_vertex),
        var_clique=tuple(var_clique),
        clause_vertex=clause_vertex,
        instance=sat,
    )
    return gadget, gm


def _gadget_alpha(g: Graph) -> int:
    cert = recognize_chordal(g)
    if isinstance(cert, NotInClass):
        raise CriticalityError("derived graph is unexpectedly not chordal")
    return alpha_chordal(g, cert).value


def assignment_to_contraction_set(
    gm: ChordalGadgetMap, g: Graph, positives
) -> frozenset[Edge]:
    """One pendant edge per true variable; contracting them drops alpha."""
    positives = sorted(set(positives))
    sat = gm.instance
    if len(positives) > sat.k:
        raise GadgetPreconditionError("assignment sets too many variables true")
    if not sat.satisfied_by(positives):
        raise GadgetPreconditionError("assignment does not satisfy every clause")
    return frozenset(
        (min(gm.var_vertex[x], gm.var_clique[x][0]), max(gm.var_vertex[x], gm.var_clique[x][0]))
        for x in positives
    )


def assignment_to_deletion_set(gm: ChordalGadgetMap, g: Graph, positives) -> frozenset[int]:
    """Delete the variable vertex of every true variable."""
    positives = sorted(set(positives))
    sat = gm.instance
    if len(positives) > sat.k:
        raise GadgetPreconditionError("assignment sets too many variables true")
    if not sat.satisfied_by(positives):
        raise GadgetPreconditionError("assignment does not satisfy every clause")
    return frozenset(gm.var_vertex[x] for x in positives)


def contraction_set_to_assignment(gm: ChordalGadgetMap, g: Graph, s) -> frozenset[int]:
    """Variables whose gadget is touched become true; untouched clauses get
    one of their variables for free.  Works for any alpha-reducing set of at
    most k edges."""
    s = validate_edge_set(g, s)
    sat = gm.instance
    if len(s) > sat.k:
        raise CriticalityError(f"set has {len(s)} edges, budget is {sat.k}")
    if _gadget_alpha(contract_edges(g, s)[0]) >= sat.variable_count + 1:
        raise CriticalityError("the set does not reduce the independence number")
    touched = {v for e in s for v in e}
    gadget_sets = [
        {gm.var_vertex[x], *gm.var_clique[x]} for x in range(sat.variable_count)
    ]
    positives = {x for x in range(sat.variable_count) if gadget_sets[x] & touched}
    for x, y in sat.clauses:
        if x not in positives and y not in positives:
            if not gadget_sets[x] & touched and not gadget_sets[y] & touched:
                positives.add(min(x, y))
    assert sat.satisfied_by(positives)
    assert len(positives) <= len(s)
    return frozenset(positives)


def deletion_set_to_assignment(gm: ChordalGadgetMap, g: Graph, w) -> frozenset[int]:
    """Deleted variable vertices become true; each deleted clause vertex
    donates one of its variables."""
    w = validate_vertex_set(g, w)
    sat = gm.instance
    if len(w) > sat.k:
        raise CriticalityError(f"set has {len(w)} vertices, budget is {sat.k}")
    if _gadget_alpha(delete_vertices(g, w)[0]) >= sat.variable_count + 1:
        raise CriticalityError("the set does not reduce the independence number")
    positives = {x for x in range(sat.variable_count) if gm.var_vertex[x] in w}
    for c, (x, y) in enumerate(sat.clauses):
        if gm.clause_vertex[c] in w and x not in positives and y not in positives:
            positives.add(min(x, y))
    assert sat.satisfied_by(positives)
    assert len(positives) <= len(w)
    return frozenset(positives)


def build_mss_gadget(mss: MssInstance) -> tuple[Graph, MssGadgetMap, MssTarget]:
    """Complete multipartite graph with one part of size a_j per index j.

    The monochromatic-edge budget is J/2 - D with D half the sum of squared
    entries; counts are integers, so the floor is an equivalent budget.
    """
    offsets = []
    total = 0
    for x in mss.a:
        offsets.append(total)
        total += x
    edges = []
    for j in range(mss.ell):
        for jp in range(j + 1, mss.ell):
            for u in range(offsets[j], offsets[j] + mss.a[j]):
                for v in range(offsets[jp], offsets[jp] + mss.a[jp]):
                    edges.append((u, v))
    gadget = Graph(total, edges)
    cert = recognize_complete_multipartite(gadget)
    assert isinstance(cert, MultipartiteParts)

    D = Fraction(sum(x * x for x in mss.a), 2)
    exact = Fraction(mss.J, 2) - D
    parts = tuple(
        tuple(range(offsets[j], offsets[j] + mss.a[j])) for j in range(mss.ell)
    )
    target = MssTarget(exact=exact, budget=_floor(exact))
    return gadget, MssGadgetMap(parts=parts, instance=mss), target


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def partition_to_colouring(gm: MssGadgetMap, parts: Sequence[Sequence[int]]) -> Colouring:
    """Colour the vertex block of index j with the group that contains j."""
    mss = gm.instance
    flat = sorted(j for group in parts for j in group)
    if flat != list(range(mss.ell)):
        raise GadgetPreconditionError("groups must partition the index set")
    if len(parts) > mss.h:
        raise GadgetPreconditionError(f"at most h={mss.h} groups allowed")
    n = sum(mss.a)
    colouring = [0] * n
    for colour, group in enumerate(parts, start=1):
        for j in group:
            for v in gm.parts[j]:
                colouring[v] = colour
    # Unused colours are fine; every vertex got one because groups cover [ell].
    return tuple(colouring)


def colouring_to_partition(
    gm: MssGadgetMap, g: Graph, c: Sequence[int]
) -> tuple[Colouring, tuple[tuple[int, ...], ...]]:
    """Normalise each block to one colour, then read the groups off.

    Blocks are independent sets whose members all see exactly the rest of the
    graph, so the recolouring step never increases the monochromatic count.
    Returns the normalised colouring and the length-h group tuple.
    """
    mss = gm.instance
    out = tuple(c)
    for block in gm.parts:
        if len({out[v] for v in block}) > 1:
            out = recolour_module(g, out, block)
    colours = sorted({out[block[0]] for block in gm.parts})
    if len(colours) > mss.h or any(col < 1 or col > mss.h for col in colours):
        raise GadgetPreconditionError("colouring must use colours within [h]")
    groups = tuple(
        tuple(j for j in range(mss.ell) if out[gm.parts[j][0]] == colour)
        for colour in range(1, mss.h + 1)
    )
    return out, groups
