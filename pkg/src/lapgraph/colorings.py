"""Conservative vertex and edge colorings, cut/cycle/bicycle spaces.

Colorings are plain lists of field elements indexed like the graph's vertex
or edge list.  Basis-returning functions give a list of such vectors in a
deterministic reduced-echelon form.
"""

from __future__ import annotations

from .fields import Domain
from .graphs import FiniteGraph, connected_components, incidence_matrix, laplacian_finite
from .linalg import nullspace, row_space_canonical, transpose

YES = "yes"
FAILS_CYCLE = "fails-cycle"
FAILS_KIRCHHOFF = "fails-kirchhoff"


def conservative_vertex_basis(g: FiniteGraph, fld: Domain) -> list[list]:
    """Basis of the conservative vertex colorings: the kernel of the Laplacian."""
    return nullspace(laplacian_finite(g), fld)


def constant_colorings_basis(g: FiniteGraph, fld: Domain) -> list[list]:
    """Indicator vector of each connected component (colorings constant per part)."""
    comps = connected_components(g)
    out = []
    for comp in comps:
        members = set(comp)
        out.append([fld.one if v in members else fld.zero for v in g.vertices])
    return out


def based_vertex_basis(g: FiniteGraph, fld: Domain, base_vertex: str) -> list[list]:
    """Basis of the conservative colorings that vanish at the base vertex.

    Requires a connected graph, where this subspace represents colorings up to
    an additive constant.
    """
    if len(connected_components(g)) != 1:
        raise ValueError("based colorings need a connected graph")
    L = laplacian_finite(g)
    base_row = [0] * len(g.vertices)
    base_row[g.vertex_index(base_vertex)] = 1
    return nullspace(L + [base_row], fld)


def edge_from_vertex(g: FiniteGraph, alpha: list, fld: Domain) -> list:
    """The cut-space edge coloring Q^T alpha: each edge gets head minus tail color."""
    alpha = [fld.of(a) for a in alpha]
    return [
        fld.sub(alpha[g.vertex_index(e.head)], alpha[g.vertex_index(e.tail)])
        for e in g.edges
    ]


def _spanning_forest_potentials(g: FiniteGraph, beta: list, fld: Domain):
    """Potentials integrating beta along a BFS forest; also the non-forest edges."""
    adj: dict[str, list[tuple[int, str]]] = {v: [] for v in g.vertices}
    for j, e in enumerate(g.edges):
        if e.tail != e.head:
            adj[e.tail].append((j, e.head))
            adj[e.head].append((j, e.tail))
    pot: dict[str, object] = {}
    tree_edges: set[int] = set()
    for root in g.vertices:
        if root in pot:
            continue
        pot[root] = fld.zero
        queue = [root]
        while queue:
            u = queue.pop(0)
            for j, w in adj[u]:
                if w in pot or j in tree_edges:
                    continue
                e = g.edges[j]
                # crossing tail -> head adds beta, head -> tail subtracts
                delta = beta[j] if e.tail == u else fld.neg(beta[j])
                pot[w] = fld.add(pot[u], delta)
                tree_edges.add(j)
                queue.append(w)
    return pot, tree_edges


def is_conservative_edge(g: FiniteGraph, beta: list, fld: Domain) -> str:
    """Classify an edge coloring: conservative, or which condition fails.

    The cycle condition is checked on a fundamental cycle basis from a
    spanning forest (sufficient by linearity) and is reported first; the
    Kirchhoff condition is the vanishing of Q beta at every vertex.
    """
    beta = [fld.of(b) for b in beta]
    pot, tree_edges = _spanning_forest_potentials(g, beta, fld)
    for j, e in enumerate(g.edges):
        if j in tree_edges:
            continue
        circ = fld.add(beta[j], fld.sub(pot[e.tail], pot[e.head]))
        if not fld.is_zero(circ):
            return FAILS_CYCLE
    Q = incidence_matrix(g)
    for row in Q:
        s = fld.zero
        for qij, b in zip(row, beta):
            s = fld.add(s, fld.mul(fld.of(qij), b))
        if not fld.is_zero(s):
            return FAILS_KIRCHHOFF
    return YES


def bicycle_basis(g: FiniteGraph, fld: Domain) -> list[list]:
    """Basis of the bicycle space, the cut space intersected with the cycle space.

    Computed two independent ways and cross-checked: the image under Q^T of
    the Laplacian kernel, and the direct intersection of the row space of Q
    with the kernel of Q.  Returns the canonical echelon basis.
    """
    Q = incidence_matrix(g)
    # (i) image of ker L under Q^T
    kerL = conservative_vertex_basis(g, fld)
    images = [edge_from_vertex(g, v, fld) for v in kerL]
    via_kernel = row_space_canonical(images, fld)
    # (ii) row space of Q meet kernel of Q
    cut = row_space_canonical([[fld.of(v) for v in row] for row in Q], fld)
    cyc = nullspace(Q, fld)
    meet = _intersect_spans(cut, cyc, fld)
    if via_kernel != meet:
        raise AssertionError("bicycle space methods disagree")
    return via_kernel


def _intersect_spans(A: list[list], B: list[list], fld: Domain) -> list[list]:
    if not A or not B:
        return []
    cols = [list(v) for v in A] + [[fld.neg(x) for x in v] for v in B]
    stacked = transpose(cols)
    combos = nullspace(stacked, fld)
    vectors = []
    for c in combos:
        vec = [fld.zero] * len(A[0])
        for coeff, basis_vec in zip(c[: len(A)], A):
            if fld.is_zero(coeff):
                continue
            vec = [fld.add(x, fld.mul(coeff, b)) for x, b in zip(vec, basis_vec)]
        vectors.append(vec)
    return row_space_canonical(vectors, fld)
