"""Plane graphs as rotation systems: faces, Dehn colorings, medial tracing.

A rotation system lists the edge-ends (darts) counterclockwise around each
vertex.  A dart is a pair (edge name, end) with end "t" at the tail and "h"
at the head; a loop contributes both of its ends to its vertex's rotation.

Faces are orbits of the next-corner permutation.  A dart d inside a face
means the boundary walk traverses d's edge away from d's end with the face on
its left.

Medial components are straight-ahead strand walks.  A walk state is
(dart, sign): sign +1 means the strand sits in the corner between d and its
rotation successor, moving toward the successor's edge; sign -1 means it sits
between the predecessor and d, moving toward the predecessor's edge.  Crossing
an edge straight through flips to the far end's matching corner:

    (d, +1) -> (opposite(next(d)), -1)     crossing next(d)'s edge
    (d, -1) -> (opposite(prev(d)), +1)     crossing prev(d)'s edge

Reversing a strand maps (d, +1) to (next(d), -1), which lets one undirected
component absorb both directed orbits.  In the voltage case each crossing
from the tail end accumulates +s and from the head end -s; the net winding of
a closed quotient trace counts how its lifts wrap the annulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import GF2, Domain
from .graphs import FiniteGraph, SublatticeSpec, VoltageGraph, cover_graph, laplacian_finite

Dart = tuple[str, str]  # (edge name, "t" | "h")


@dataclass(frozen=True)
class PlaneGraph:
    """A finite or voltage graph (rank <= 1) with a rotation system."""

    graph: FiniteGraph | VoltageGraph
    rotations: dict[str, tuple[Dart, ...]] = field(compare=False)

    def __post_init__(self):
        if isinstance(self.graph, VoltageGraph) and self.graph.rank > 1:
            raise ValueError("plane graphs carry voltages of rank at most 1")
        g = self.base
        expected: dict[Dart, str] = {}
        for e in g.edges:
            expected[(e.name, "t")] = e.tail
            expected[(e.name, "h")] = e.head
        seen: set[Dart] = set()
        for v in g.vertices:
            rot = self.rotations.get(v, ())
            if len(rot) != g.degree(v):
                raise ValueError(f"rotation at {v} has length {len(rot)}, degree is {g.degree(v)}")
            for d in rot:
                if d in seen:
                    raise ValueError(f"edge end {d} appears twice")
                if expected.get(d) != v:
                    raise ValueError(f"edge end {d} does not belong at vertex {v}")
                seen.add(d)
        if len(seen) != 2 * len(g.edges):
            raise ValueError("rotation system does not cover every edge end")

    @property
    def base(self) -> FiniteGraph:
        return self.graph.base if isinstance(self.graph, VoltageGraph) else self.graph

    @property
    def is_voltage(self) -> bool:
        return isinstance(self.graph, VoltageGraph) and self.graph.rank == 1

    def dart_vertex(self, d: Dart) -> str:
        e = next(e for e in self.base.edges if e.name == d[0])
        return e.tail if d[1] == "t" else e.head

    def _maps(self):
        """next/prev in rotation, and the opposite-end involution."""
        nxt: dict[Dart, Dart] = {}
        prv: dict[Dart, Dart] = {}
        for v in self.base.vertices:
            rot = self.rotations.get(v, ())
            k = len(rot)
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % k]
                prv[d] = rot[(i - 1) % k]
        opp = {}
        for e in self.base.edges:
            opp[(e.name, "t")] = (e.name, "h")
            opp[(e.name, "h")] = (e.name, "t")
        return nxt, prv, opp


def parse_rotations(g: FiniteGraph, spec: dict[str, str]) -> dict[str, tuple[Dart, ...]]:
    """Build a rotation dict from strings like 'a.t r.t a.h' per vertex."""
    out: dict[str, tuple[Dart, ...]] = {}
    for v, text in spec.items():
        darts = []
        for tok in text.split():
            name, _, end = tok.rpartition(".")
            if end not in ("t", "h") or not name:
                raise ValueError(f"bad edge-end token {tok!r}")
            darts.append((name, end))
        out[v] = tuple(darts)
    for v in g.vertices:
        out.setdefault(v, ())
    return out


# -- faces ---------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A face boundary walk: the cyclic sequence of darts kept on the left."""

    darts: tuple[Dart, ...]

    def __len__(self):
        return len(self.darts)


def faces(pg: PlaneGraph) -> list[Face]:
    """Face orbits of the rotation system, in deterministic order."""
    nxt, _, opp = pg._maps()
    order = [(e.name, end) for e in pg.base.edges for end in ("t", "h")]
    seen: set[Dart] = set()
    out: list[Face] = []
    for start in order:
        if start in seen:
            continue
        walk = []
        d = start
        while True:
            walk.append(d)
            seen.add(d)
            d = nxt[opp[d]]
            if d == start:
                break
        out.append(Face(tuple(walk)))
    return out


def face_index_of_darts(face_list: list[Face]) -> dict[Dart, int]:
    return {d: i for i, f in enumerate(face_list) for d in f.darts}


def euler_characteristic(pg: PlaneGraph) -> int:
    g = pg.base
    return len(g.vertices) - len(g.edges) + len(faces(pg))


# -- Dehn colorings --------------------------------------------------------------


@dataclass(frozen=True)
class DehnColoring:
    """Vertex and face colors with a base face colored zero."""

    vertex_colors: tuple
    face_colors: tuple
    base_face: int


def is_conservative_vertex(g: FiniteGraph, alpha: list, fld: Domain) -> bool:
    L = laplacian_finite(g)
    for row in L:
        s = fld.zero
        for lij, a in zip(row, alpha):
            s = fld.add(s, fld.mul(fld.of(lij), a))
        if not fld.is_zero(s):
            return False
    return True


def dehn_extend(pg: PlaneGraph, alpha: list, base_face: int, fld: Domain) -> DehnColoring:
    """Integrate a conservative vertex coloring to face colors from a base face.

    Crossing an edge from the face on its right to the face on its left adds
    color(head) - color(tail); conservativity makes the result independent of
    the traversal order.
    """
    g = pg.base
    alpha = [fld.of(a) for a in alpha]
    if not is_conservative_vertex(g, alpha, fld):
        raise ValueError("vertex coloring is not conservative; integration would be path dependent")
    fl = faces(pg)
    if not 0 <= base_face < len(fl):
        raise ValueError(f"base face {base_face} out of range (have {len(fl)} faces)")
    fidx = face_index_of_darts(fl)
    vidx = g.vertex_index
    colors: list = [None] * len(fl)
    colors[base_face] = fld.zero
    queue = [base_face]
    # dual adjacency: edge e joins face of (e, h) to face of (e, t);
    # gamma(left of tail->head) = gamma(right) + alpha(head) - alpha(tail).
    incident: dict[int, list] = {i: [] for i in range(len(fl))}
    for e in g.edges:
        ft = fidx[(e.name, "t")]  # face left of tail -> head
        fh = fidx[(e.name, "h")]  # face right of tail -> head
        inc = fld.sub(alpha[vidx(e.tail)], alpha[vidx(e.head)])
        incident[fh].append((ft, inc))  # crossing right -> left adds tail - head
        incident[ft].append((fh, fld.neg(inc)))
    while queue:
        f = queue.pop(0)
        for f2, inc in incident[f]:
            c = fld.add(colors[f], inc)
            if colors[f2] is None:
                colors[f2] = c
                queue.append(f2)
            elif colors[f2] != c:
                raise ValueError("face coloring is path dependent")
    for i, c in enumerate(colors):
        if c is None:
            colors[i] = fld.zero  # face in an unreachable dual component
    dc = DehnColoring(tuple(alpha), tuple(colors), base_face)
    verify_dehn(pg, dc, fld)
    return dc


def verify_dehn(pg: PlaneGraph, dc: DehnColoring, fld: Domain):
    """Check the edge condition color(tail) + gamma(left) = color(head) + gamma(right)."""
    g = pg.base
    fl = faces(pg)
    fidx = face_index_of_darts(fl)
    for e in g.edges:
        left = dc.face_colors[fidx[(e.name, "t")]]
        right = dc.face_colors[fidx[(e.name, "h")]]
        lhs = fld.add(fld.of(dc.vertex_colors[g.vertex_index(e.tail)]), fld.of(right))
        rhs = fld.add(fld.of(dc.vertex_colors[g.vertex_index(e.head)]), fld.of(left))
        if lhs != rhs:
            raise AssertionError(f"Dehn condition fails at edge {e.name}")


def dehn_restrict(dc: DehnColoring) -> list:
    """Forget the face colors."""
    return list(dc.vertex_colors)


# -- medial components -------------------------------------------------------------


@dataclass(frozen=True)
class MedialComponent:
    """One closed strand of the medial graph.

    crossings: edge names in traversal order (each edge appears as often as
    this strand passes its crossing).  residue: edges crossed exactly once.
    winding: net annulus voltage of the quotient trace (voltage case only).
    """

    crossings: tuple[str, ...]
    residue: tuple[str, ...]
    winding: int | None = None


State = tuple[Dart, int]


def _trace_components(pg: PlaneGraph, with_winding: bool) -> list[MedialComponent]:
    g = pg.base
    nxt, prv, opp = pg._maps()
    if with_winding:
        volt = {e.name: s[0] for e, s in zip(g.edges, pg.graph.voltages)}
    edge_order = {e.name: i for i, e in enumerate(g.edges)}

    def step(state: State) -> tuple[State, str, int]:
        d, sign = state
        target = nxt[d] if sign > 0 else prv[d]
        w = 0
        if with_winding:
            w = volt[target[0]] if target[1] == "t" else -volt[target[0]]
        return (opp[target], -sign), target[0], w

    def reverse(state: State) -> State:
        d, sign = state
        return (nxt[d], -1) if sign > 0 else (prv[d], 1)

    seeds = [((e.name, end), sign) for e in g.edges for end in ("t", "h") for sign in (1, -1)]
    seen: set[State] = set()
    out: list[MedialComponent] = []
    for seed in seeds:
        if seed in seen:
            continue
        crossings: list[str] = []
        winding = 0
        s = seed
        while True:
            seen.add(s)
            seen.add(reverse(s))
            s, edge, w = step(s)
            crossings.append(edge)
            winding += w
            if s == seed:
                break
        counts: dict[str, int] = {}
        for name in crossings:
            counts[name] = counts.get(name, 0) + 1
        residue = tuple(sorted((n for n, c in counts.items() if c == 1), key=edge_order.get))
        out.append(
            MedialComponent(tuple(crossings), residue, winding if with_winding else None)
        )
    return out


def medial_components(pg: PlaneGraph) -> list[MedialComponent]:
    """Strand components of the medial graph of a finite plane graph."""
    if pg.is_voltage:
        raise ValueError("voltage quotient: use medial_components_voltage")
    return _trace_components(pg, with_winding=False)


def medial_components_voltage(pg: PlaneGraph) -> list[MedialComponent]:
    """Quotient strand traces with their annulus windings.

    A trace with winding w != 0 lifts to |w| noncompact strands of the
    periodic graph's medial; a trace with winding 0 lifts to one Z-orbit of
    compact strands.
    """
    if not pg.is_voltage:
        raise ValueError("finite plane graph: use medial_components")
    return _trace_components(pg, with_winding=True)


def noncompact_count(components: list[MedialComponent]) -> int:
    return sum(abs(c.winding) for c in components if c.winding)


def compact_orbit_count(components: list[MedialComponent]) -> int:
    return sum(1 for c in components if not c.winding)


# -- residues and the Shank basis ----------------------------------------------------


def residue_vector(g: FiniteGraph, comp: MedialComponent) -> list[int]:
    """GF(2) indicator of the edges the component crosses exactly once."""
    names = set(comp.residue)
    return [1 if e.name in names else 0 for e in g.edges]


def shank_basis(pg: PlaneGraph, base_component: int = 0) -> list[list[int]]:
    """Residues of all medial components but one: a GF(2) basis of the bicycles.

    Raises if the residues fail to be a basis of the bicycle space, which for
    a connected plane graph would contradict the rotation system being planar.
    """
    from .colorings import bicycle_basis
    from .linalg import row_space_canonical

    g = pg.base
    comps = medial_components(pg)
    if not 0 <= base_component < len(comps):
        raise ValueError(f"base component {base_component} out of range")
    vectors = [
        residue_vector(g, c) for i, c in enumerate(comps) if i != base_component
    ]
    bicycles = bicycle_basis(g, GF2)
    want = row_space_canonical(bicycles, GF2)
    got = row_space_canonical(vectors, GF2)
    if len(got) != len(vectors) or got != want:
        raise AssertionError("medial residues do not form a basis of the bicycle space")
    return vectors


# -- covers with inherited rotations ---------------------------------------------------


def cover_plane_graph(pg: PlaneGraph, n: int) -> PlaneGraph:
    """The n-sheeted cyclic cover of a rank-1 plane quotient, rotations inherited.

    The dart (e, t) at the level-c copy of a vertex belongs to edge instance
    e@c; the dart (e, h) to instance e@(c - s) where s is e's voltage.
    """
    if not pg.is_voltage:
        raise ValueError("cover_plane_graph needs a rank-1 voltage quotient")
    vg = pg.graph
    lam = SublatticeSpec.cyclic(n)
    cov = cover_graph(vg, lam)
    volt = {e.name: s[0] for e, s in zip(vg.base.edges, vg.voltages)}
    rot: dict[str, tuple[Dart, ...]] = {}
    for v in vg.base.vertices:
        for c in range(n):
            darts = []
            for name, end in pg.rotations[v]:
                inst = c if end == "t" else (c - volt[name]) % n
                darts.append((f"{name}@{inst}", end))
            rot[f"{v}@{c}"] = tuple(darts)
    return PlaneGraph(cov, rot)
