"""Finite multigraphs, voltage graphs over Z^d, covers and restrictions.

Vertices and edges keep their input order throughout, so every derived matrix
is reproducible byte for byte.  All structures are immutable after
construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple

from .laurent import LaurentPoly


class Edge(NamedTuple):
    name: str
    tail: str
    head: str


@dataclass(frozen=True)
class FiniteGraph:
    """A finite multigraph; multi-edges and self-loops are allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _vindex: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [e.name for e in self.edges]
        if len(set(names)) != len(names):
            raise ValueError("duplicate edge names")
        vset = set(self.vertices)
        for e in self.edges:
            if e.tail not in vset or e.head not in vset:
                raise ValueError(f"edge {e.name} references an unknown vertex")
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> "FiniteGraph":
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges))

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def degree(self, v: str) -> int:
        """Vertex degree; a self-loop counts as two edges."""
        i = self._vindex[v]
        d = 0
        for e in self.edges:
            if self._vindex[e.tail] == i:
                d += 1
            if self._vindex[e.head] == i:
                d += 1
        return d

    def __str__(self):
        return f"FiniteGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class VoltageGraph:
    """A finite quotient graph with Z^d voltages on its oriented edges.

    The voltage s on an edge v_i -> v_j says that the lift starting at the
    level-0 copy of v_i ends at the level-s copy of v_j.  Rank 0 reduces to
    plain finite-graph semantics.
    """

    base: FiniteGraph
    rank: int
    voltages: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank not in (0, 1, 2):
            raise ValueError("voltage rank must be 0, 1 or 2")
        if len(self.voltages) != len(self.base.edges):
            raise ValueError("one voltage vector per edge required")
        for s in self.voltages:
            if len(s) != self.rank:
                raise ValueError(f"voltage {s} has wrong arity for rank {self.rank}")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str, tuple[int, ...]]],
        rank: int,
    ) -> "VoltageGraph":
        es = []
        volts = []
        for name, tail, head, s in edges:
            es.append(Edge(name, tail, head))
            volts.append(tuple(s))
        return cls(FiniteGraph(tuple(vertices), tuple(es)), rank, tuple(volts))

    def voltage_of(self, edge_name: str) -> tuple[int, ...]:
        for e, s in zip(self.base.edges, self.voltages):
            if e.name == edge_name:
                return s
        raise KeyError(edge_name)

    def with_reversed_edge(self, edge_name: str) -> "VoltageGraph":
        """Same graph with one edge's orientation flipped and voltage negated."""
        es = []
        volts = []
        for e, s in zip(self.base.edges, self.voltages):
            if e.name == edge_name:
                es.append(Edge(e.name, e.head, e.tail))
                volts.append(tuple(-a for a in s))
            else:
                es.append(e)
                volts.append(s)
        return VoltageGraph(FiniteGraph(self.base.vertices, tuple(es)), self.rank, tuple(volts))


@dataclass(frozen=True)
class SublatticeSpec:
    """A finite-index sublattice of Z^d: nZ for d = 1, integer column span for d = 2."""

    rank: int
    n: int | None = None
    matrix: tuple[tuple[int, int], tuple[int, int]] | None = None

    @classmethod
    def cyclic(cls, n: int) -> "SublatticeSpec":
        if n < 1:
            raise ValueError("sublattice index must be at least 1")
        return cls(rank=1, n=n)

    @classmethod
    def lattice2(cls, rows: tuple[tuple[int, int], tuple[int, int]]) -> "SublatticeSpec":
        m = tuple(tuple(int(v) for v in r) for r in rows)
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det == 0:
            raise ValueError("sublattice matrix must have nonzero determinant")
        return cls(rank=2, matrix=m)

    @property
    def index(self) -> int:
        if self.rank == 1:
            return self.n
        m = self.matrix
        return abs(m[0][0] * m[1][1] - m[0][1] * m[1][0])

    def _hermite(self) -> tuple[int, int, int]:
        """Lower-triangular column form (a, b, c): columns (a, b) and (0, c), a, c > 0."""
        (m00, m01), (m10, m11) = self.matrix
        det = m00 * m11 - m01 * m10
        g, u, v = _ext_gcd(m00, m01)
        if g == 0:
            raise ValueError("degenerate sublattice (zero first row)")
        b = u * m10 + v * m11
        c = abs(det) // g
        b %= c
        return g, b, c

    def coset_reps(self) -> list[tuple[int, ...]]:
        """Canonical coset representatives of Z^d modulo the sublattice."""
        if self.rank == 1:
            return [(i,) for i in range(self.n)]
        a, b, c = self._hermite()
        return [(i, j) for i in range(a) for j in range(c)]

    def reduce(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Canonical representative of vec's coset."""
        if self.rank == 1:
            return (vec[0] % self.n,)
        a, b, c = self._hermite()
        x, y = vec
        t = x % a
        y -= ((x - t) // a) * b
        return (t, y % c)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """g, u, v with g = gcd(a, b) >= 0 and g = u*a + v*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class RectangleSpec:
    """A box of coset representatives [0, n_1 - 1] x ... defining a restriction."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ValueError("rectangle sizes must be positive")

    def points(self) -> list[tuple[int, ...]]:
        return list(product(*(range(n) for n in self.sizes)))

    def __contains__(self, vec: tuple[int, ...]) -> bool:
        return all(0 <= a < n for a, n in zip(vec, self.sizes))


# -- matrices ------------------------------------------------------------------


def incidence_matrix(g: FiniteGraph) -> list[list[int]]:
    """|V| x |E| incidence matrix: +1 at the head, -1 at the tail of each edge.

    A self-loop column is zero (its +1 and -1 coincide).
    """
    Q = [[0] * len(g.edges) for _ in g.vertices]
    for j, e in enumerate(g.edges):
        if e.tail == e.head:
            continue
        Q[g.vertex_index(e.head)][j] = 1
        Q[g.vertex_index(e.tail)][j] = -1
    return Q


def laplacian_finite(g: FiniteGraph) -> list[list[int]]:
    """Laplacian D - A of a finite multigraph (self-loops add 2 to both)."""
    n = len(g.vertices)
    L = [[0] * n for _ in range(n)]
    for e in g.edges:
        i = g.vertex_index(e.tail)
        j = g.vertex_index(e.head)
        L[i][i] += 1
        L[j][j] += 1
        L[i][j] -= 1
        L[j][i] -= 1
    return L


def voltage_laplacian(vg: VoltageGraph) -> list[list[LaurentPoly]]:
    """The matrix L(x) = D - A(x) over the Laurent ring in d = rank variables.

    A(x)_ij collects x^s for every edge from v_i to the level-s copy of v_j;
    a self-loop with voltage s contributes x^s + x^-s to its diagonal entry.
    Satisfies L(1/x) = L(x)^T.
    """
    if vg.rank == 0:
        raise ValueError("rank-0 voltage graph: use laplacian_finite on the base")
    g = vg.base
    n = len(g.vertices)
    d = vg.rank
    zero = LaurentPoly.zero(d)
    L = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        L[i][i] = LaurentPoly.constant(g.degree(g.vertices[i]), d)
    for e, s in zip(g.edges, vg.voltages):
        i = g.vertex_index(e.tail)
        j = g.vertex_index(e.head)
        neg_s = tuple(-a for a in s)
        L[i][j] = L[i][j] - LaurentPoly.monomial(1, s)
        L[j][i] = L[j][i] - LaurentPoly.monomial(1, neg_s)
    return L


# -- covers and restrictions -----------------------------------------------------


def _coset_name(c: tuple[int, ...]) -> str:
    return ",".join(str(a) for a in c)


def cover_graph(vg: VoltageGraph, lam: SublatticeSpec) -> FiniteGraph:
    """The finite r-sheeted cover determined by a finite-index sublattice.

    Vertices are v@c for each base vertex v and canonical coset c; each base
    edge with voltage s yields one edge per coset, from (tail, c) to
    (head, c + s).  Vertex order is base-vertex major, coset minor.
    """
    if vg.rank == 0:
        raise ValueError("cover of a rank-0 voltage graph is undefined")
    if lam.rank != vg.rank:
        raise ValueError("sublattice rank does not match voltage rank")
    reps = lam.coset_reps()
    vertices = [f"{v}@{_coset_name(c)}" for v in vg.base.vertices for c in reps]
    edges = []
    for e, s in zip(vg.base.edges, vg.voltages):
        for c in reps:
            c2 = lam.reduce(tuple(a + b for a, b in zip(c, s)))
            edges.append(
                Edge(f"{e.name}@{_coset_name(c)}", f"{e.tail}@{_coset_name(c)}", f"{e.head}@{_coset_name(c2)}")
            )
    return FiniteGraph(tuple(vertices), tuple(edges))


def restriction_subgraph(vg: VoltageGraph, rect: RectangleSpec) -> FiniteGraph:
    """Full subgraph of the periodic lift on the box of translates in rect."""
    if vg.rank == 0:
        raise ValueError("restriction of a rank-0 voltage graph is undefined")
    if len(rect.sizes) != vg.rank:
        raise ValueError("rectangle rank does not match voltage rank")
    pts = rect.points()
    vertices = [f"{v}@{_coset_name(c)}" for v in vg.base.vertices for c in pts]
    edges = []
    for e, s in zip(vg.base.edges, vg.voltages):
        for c in pts:
            c2 = tuple(a + b for a, b in zip(c, s))
            if c2 in rect:
                edges.append(
                    Edge(f"{e.name}@{_coset_name(c)}", f"{e.tail}@{_coset_name(c)}", f"{e.head}@{_coset_name(c2)}")
                )
    return FiniteGraph(tuple(vertices), tuple(edges))


def wrapping_edge_count(vg: VoltageGraph, rect: RectangleSpec) -> int:
    """Number of (edge, translate) pairs leaving the box; complements the restriction."""
    count = 0
    for s in vg.voltages:
        for c in rect.points():
            c2 = tuple(a + b for a, b in zip(c, s))
            if c2 not in rect:
                count += 1
    return count


# -- components ------------------------------------------------------------------


def connected_components(g: FiniteGraph) -> list[list[str]]:
    """Vertex partition into connected components, ordered by least vertex index."""
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    seen: set[str] = set()
    comps: list[list[str]] = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp.sort(key=g.vertex_index)
        comps.append(comp)
    return comps


def subgraph_on(g: FiniteGraph, vertices: list[str]) -> FiniteGraph:
    """Full subgraph induced on the given vertices (kept in g's order)."""
    keep = set(vertices)
    vs = tuple(v for v in g.vertices if v in keep)
    es = tuple(e for e in g.edges if e.tail in keep and e.head in keep)
    return FiniteGraph(vs, es)


def degree_certificate(g: FiniteGraph):
    """A cheap isomorphism certificate: size data plus sorted local degree views."""
    degs = {v: g.degree(v) for v in g.vertices}
    local = []
    for v in g.vertices:
        nbrs = []
        for e in g.edges:
            if e.tail == v and e.head != v:
                nbrs.append(degs[e.head])
            elif e.head == v and e.tail != v:
                nbrs.append(degs[e.tail])
            elif e.tail == v and e.head == v:
                nbrs.append(-1)  # loop marker
        local.append((degs[v], tuple(sorted(nbrs))))
    return (len(g.vertices), len(g.edges), tuple(sorted(local)))
