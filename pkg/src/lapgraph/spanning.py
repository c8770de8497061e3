"""Spanning-tree counts, complexity, CRSF coefficients, annular connectivity,
and growth-rate experiments over covers and restrictions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .fields import ZZ
from .graphs import (
    FiniteGraph,
    RectangleSpec,
    SublatticeSpec,
    VoltageGraph,
    connected_components,
    cover_graph,
    laplacian_finite,
    restriction_subgraph,
    subgraph_on,
    voltage_laplacian,
)
from .laurent import LaurentPoly
from .linalg import elementary_divisor, int_det
from .mahler import mahler_1var, mahler_2var


def tree_count(g: FiniteGraph, delete_index: int | None = None) -> int:
    """Number of spanning trees by the matrix-tree theorem (exact).

    Deletes one row and column of the Laplacian (the last by default) and
    takes the absolute determinant.  Requires a connected graph.
    """
    if len(connected_components(g)) != 1:
        raise ValueError("tree count needs a connected graph")
    n = len(g.vertices)
    if n == 1:
        return 1
    k = n - 1 if delete_index is None else delete_index
    L = laplacian_finite(g)
    reduced = [
        [L[i][j] for j in range(n) if j != k]
        for i in range(n)
        if i != k
    ]
    return abs(int_det(reduced))


def complexity(g: FiniteGraph) -> int:
    """Product of spanning-tree counts over connected components.

    Equals the number of spanning forests with the minimal number of trees.
    """
    total = 1
    for comp in connected_components(g):
        total *= tree_count(subgraph_on(g, comp))
    return total


# -- cycle-rooted spanning forests ------------------------------------------------


@dataclass(frozen=True)
class CrsfReport:
    """Counts C_k of essential cycle-rooted spanning forests with k components.

    reconstruction is the annulus specialization sum C_k (2 - x - 1/x)^k,
    which equals Delta_0 when every essential cycle winds once (embedded
    quotients).  general_reconstruction is the product form
    sum over CRSFs of prod (2 - x^w - x^-w) over component windings w, which
    equals det L(x) for every rank-1 voltage graph.  max_winding tells which
    applies.
    """

    coefficients: dict[int, int]
    reconstruction: LaurentPoly
    general_reconstruction: LaurentPoly
    max_winding: int


def _component_cycle_winding(edges, volts, vertices) -> int | None:
    """Winding of the unique cycle of a connected subgraph with #edges == #vertices.

    Returns None if the edge count is wrong (no unique cycle).
    """
    if len(edges) != len(vertices):
        return None
    pot: dict[str, int] = {}
    root = vertices[0]
    pot[root] = 0
    adj: dict[str, list[int]] = {v: [] for v in vertices}
    for idx, e in enumerate(edges):
        if e.tail != e.head:
            adj[e.tail].append(idx)
            adj[e.head].append(idx)
    tree: set[int] = set()
    queue = [root]
    while queue:
        u = queue.pop(0)
        for idx in adj[u]:
            e = edges[idx]
            w = e.head if e.tail == u else e.tail
            if w in pot or idx in tree:
                continue
            s = volts[idx] if e.tail == u else -volts[idx]
            pot[w] = pot[u] + s
            tree.add(idx)
            queue.append(w)
    extras = [i for i in range(len(edges)) if i not in tree]
    if len(extras) != 1:
        return None
    e = edges[extras[0]]
    s = volts[extras[0]]
    return s + pot[e.tail] - pot[e.head]


def crsf_coefficients(vg: VoltageGraph, max_edges: int = 16) -> CrsfReport:
    """Brute-force enumeration of essential CRSFs of a rank-1 quotient.

    A qualifying edge subset covers every vertex, gives each component exactly
    one independent cycle, and every component cycle has nonzero net voltage.
    """
    if vg.rank != 1:
        raise ValueError("CRSF coefficients are defined for rank-1 quotients")
    g = vg.base
    m = len(g.edges)
    n = len(g.vertices)
    if m > max_edges:
        raise ValueError(f"quotient too large for brute force ({m} > {max_edges} edges)")
    volts = [s[0] for s in vg.voltages]
    counts: dict[int, int] = {}
    general = LaurentPoly.zero(1)
    max_w = 0
    for subset in combinations(range(m), n):
        chosen = [g.edges[i] for i in subset]
        sub = FiniteGraph(g.vertices, tuple(chosen))
        comps = connected_components(sub)
        windings = []
        for comp in comps:
            members = set(comp)
            comp_idx = [i for i, e in zip(subset, chosen) if e.tail in members]
            comp_edges = [g.edges[i] for i in comp_idx]
            w = _component_cycle_winding(comp_edges, [volts[i] for i in comp_idx], comp)
            if w is None or w == 0:
                windings = None
                break
            windings.append(abs(w))
        if windings is None:
            continue
        counts[len(comps)] = counts.get(len(comps), 0) + 1
        max_w = max(max_w, *windings)
        term = LaurentPoly.constant(1, 1)
        for w in windings:
            term = term * LaurentPoly(1, {(0,): 2, (w,): -1, (-w,): -1})
        general = general + term
    u = LaurentPoly(1, {(0,): 2, (1,): -1, (-1,): -1})  # 2 - x - 1/x
    recon = LaurentPoly.zero(1)
    for k, c in sorted(counts.items()):
        recon = recon + c * u**k
    return CrsfReport(dict(sorted(counts.items())), recon, general, max_w)


# -- annular connectivity -----------------------------------------------------------


def _has_essential_cycle(vg: VoltageGraph, removed: set[str]) -> bool:
    g = vg.base
    volts = {e.name: s[0] for e, s in zip(g.edges, vg.voltages)}
    kept = [v for v in g.vertices if v not in removed]
    edges = [e for e in g.edges if e.tail not in removed and e.head not in removed]
    pot: dict[str, int] = {}
    adj: dict[str, list] = {v: [] for v in kept}
    for e in edges:
        if e.tail != e.head:
            adj[e.tail].append(e)
            adj[e.head].append(e)
        elif volts[e.name] != 0:
            return True  # essential loop
    tree: set[str] = set()
    for root in kept:
        if root in pot:
            continue
        pot[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for e in adj[u]:
                w = e.head if e.tail == u else e.tail
                if w in pot or e.name in tree:
                    continue
                s = volts[e.name] if e.tail == u else -volts[e.name]
                pot[w] = pot[u] + s
                tree.add(e.name)
                queue.append(w)
    for e in edges:
        if e.name in tree or e.tail == e.head:
            continue
        if volts[e.name] + pot[e.tail] - pot[e.head] != 0:
            return True
    return False


def minimum_annular_cut(vg: VoltageGraph) -> list[str]:
    """Smallest vertex set whose deletion leaves no cycle with nonzero voltage."""
    if vg.rank != 1:
        raise ValueError("annular cuts are defined for rank-1 quotients")
    vs = vg.base.vertices
    for size in range(len(vs) + 1):
        for subset in combinations(vs, size):
            if not _has_essential_cycle(vg, set(subset)):
                return list(subset)
    raise AssertionError("unreachable: deleting all vertices leaves no cycles")


def annular_connectivity(vg: VoltageGraph) -> int:
    return len(minimum_annular_cut(vg))


# -- the kappa = 1 vertex split ---------------------------------------------------


def split_at_annular_cut(vg: VoltageGraph, cut_vertex: str | None = None) -> FiniteGraph:
    """Split a kappa = 1 quotient at its cut vertex into the finite graph H.

    Gauges all voltages off the cut vertex to zero, then opens the vertex into
    two copies v@0 and v@1 so each former edge into v lands on the copy its
    lift meets.  Spanning trees of H biject with essential one-component
    CRSFs of the quotient.
    """
    if vg.rank != 1:
        raise ValueError("the vertex split applies to rank-1 quotients")
    if cut_vertex is None:
        cut = minimum_annular_cut(vg)
        if len(cut) != 1:
            raise ValueError(f"annular connectivity is {len(cut)}, not 1")
        cut_vertex = cut[0]
    g = vg.base
    v = cut_vertex
    volts = {e.name: s[0] for e, s in zip(g.edges, vg.voltages)}
    others = [u for u in g.vertices if u != v]
    # BFS potentials per component of the quotient minus v
    pot: dict[str, int] = {}
    adj: dict[str, list] = {u: [] for u in others}
    for e in g.edges:
        if e.tail != v and e.head != v and e.tail != e.head:
            adj[e.tail].append(e)
            adj[e.head].append(e)
    comp_of: dict[str, int] = {}
    ncomp = 0
    for root in others:
        if root in pot:
            continue
        pot[root] = 0
        comp_of[root] = ncomp
        queue = [root]
        while queue:
            u = queue.pop(0)
            for e in adj[u]:
                w = e.head if e.tail == u else e.tail
                if w in pot:
                    continue
                s = volts[e.name] if e.tail == u else -volts[e.name]
                pot[w] = pot[u] + s
                comp_of[w] = ncomp
                queue.append(w)
        ncomp += 1
    # attachment levels of each component at v
    levels: dict[int, set[int]] = {c: set() for c in range(ncomp)}
    for e in g.edges:
        if e.tail == v and e.head == v:
            if abs(volts[e.name]) > 1:
                raise ValueError("loop winds more than once; not an embedded kappa = 1 quotient")
            continue
        if e.tail == v:
            u = e.head
            t = -(volts[e.name] - pot[u])  # lift of u at level 0 meets v at this level
            levels[comp_of[u]].add(t)
        elif e.head == v:
            u = e.tail
            t = volts[e.name] + pot[u]
            levels[comp_of[u]].add(t)
        else:
            if volts[e.name] + pot[e.tail] - pot[e.head] != 0:
                raise ValueError("essential cycle avoids the cut vertex; kappa > 1")
    base_level: dict[int, int] = {}
    for c, ls in levels.items():
        if not ls:
            base_level[c] = 0
            continue
        if max(ls) - min(ls) > 1:
            raise ValueError("component attaches to more than two consecutive levels")
        base_level[c] = min(ls)
    v0, v1 = f"{v}@0", f"{v}@1"
    vertices = [v0, v1] + others
    edges = []
    for e in g.edges:
        if e.tail == v and e.head == v:
            if volts[e.name] == 0:
                edges.append((e.name, v0, v0))
            else:
                edges.append((e.name, v0, v1))
        elif e.tail == v:
            u = e.head
            t = -(volts[e.name] - pot[u]) - base_level[comp_of[u]]
            edges.append((e.name, v0 if t == 0 else v1, u))
        elif e.head == v:
            u = e.tail
            t = volts[e.name] + pot[u] - base_level[comp_of[u]]
            edges.append((e.name, u, v0 if t == 0 else v1))
        else:
            edges.append((e.name, e.tail, e.head))
    return FiniteGraph.build(vertices, edges)


# -- growth experiments --------------------------------------------------------------


@dataclass(frozen=True)
class GrowthReport:
    """Rows (scale, exact complexity, normalized log) with a Mahler reference."""

    mode: str  # "covers" | "restrictions"
    rows: tuple[tuple[int, int, float], ...]
    reference: float


def laplacian_determinant_polynomial(vg: VoltageGraph) -> LaurentPoly:
    """Delta_0 over the integers, in normalized form."""
    return elementary_divisor(voltage_laplacian(vg), 0, ZZ)


def _mahler_reference(vg: VoltageGraph, fibers: int) -> float:
    d0 = laplacian_determinant_polynomial(vg)
    if d0.is_zero():
        raise ValueError("Delta_0 vanishes; no growth reference")
    if vg.rank == 1:
        return mahler_1var(d0).value
    return mahler_2var(d0, fibers).value


def growth_covers(
    vg: VoltageGraph, schedule: list[int], fibers: int = 512
) -> GrowthReport:
    """Complexity of finite covers along a schedule of indices.

    For rank 1 the index n gives the cyclic cover nZ; for rank 2 it gives the
    square sublattice nZ x nZ (r = n^2 sheets).
    """
    rows = []
    for n in schedule:
        if vg.rank == 1:
            lam = SublatticeSpec.cyclic(n)
        else:
            lam = SublatticeSpec.lattice2(((n, 0), (0, n)))
        cov = cover_graph(vg, lam)
        t = complexity(cov)
        r = lam.index
        rows.append((r, t, math.log(t) / r))
    return GrowthReport("covers", tuple(rows), _mahler_reference(vg, fibers))


def growth_restrictions(
    vg: VoltageGraph, schedule: list[int], fibers: int = 512
) -> GrowthReport:
    """Spanning trees of box restrictions; the reference is m(Delta_0)/k.

    Every restriction must be connected.
    """
    k = len(vg.base.vertices)
    rows = []
    for n in schedule:
        rect = RectangleSpec((n,) * vg.rank)
        sub = restriction_subgraph(vg, rect)
        if len(connected_components(sub)) != 1:
            raise ValueError(f"restriction of size {n} is not connected")
        tau = tree_count(sub)
        s = len(sub.vertices)
        rows.append((s, tau, math.log(tau) / s))
    return GrowthReport(
        "restrictions", tuple(rows), _mahler_reference(vg, fibers) / k
    )


def grimmett_bound(vg: VoltageGraph) -> float:
    """|V| log(2|E| / |V|) for the quotient: an upper bound for m(Delta_0)."""
    nv = len(vg.base.vertices)
    ne = len(vg.base.edges)
    return nv * math.log(2 * ne / nv)
