"""Shared oracles and random graph generators for the test suite.

The oracles here are deliberately independent of the library code paths they
check: spanning trees by edge-subset enumeration, determinants by cofactor
expansion only, connectivity by union-find.

Random plane graphs and annulus quotients are built by mutating a grid patch
(or annular grid) whose embedding is known, using only mutations that keep
the rotation system planar: edge deletion, vertex deletion, parallel
duplication next to the original, contractible loop insertion, and edge
reversal.
"""

from __future__ import annotations

import random
from itertools import combinations

from lapgraph.graphs import FiniteGraph, VoltageGraph
from lapgraph.planar import PlaneGraph


# -- independent oracles --------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def brute_force_tree_count(g: FiniteGraph) -> int:
    """Count spanning trees by checking every (n-1)-edge subset."""
    n = len(g.vertices)
    if n == 1:
        return 1
    useful = [e for e in g.edges if e.tail != e.head]
    count = 0
    for subset in combinations(useful, n - 1):
        uf = _UnionFind(g.vertices)
        acyclic = True
        for e in subset:
            if not uf.union(e.tail, e.head):
                acyclic = False
                break
        if acyclic:
            count += 1
    return count


def brute_force_components(g: FiniteGraph) -> int:
    uf = _UnionFind(g.vertices)
    for e in g.edges:
        uf.union(e.tail, e.head)
    return len({uf.find(v) for v in g.vertices})


def cofactor_det_poly(M):
    """Cofactor-only determinant of a matrix of LaurentPoly (test oracle)."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * cofactor_det_poly(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def all_minor_dets(M, size):
    """Cofactor determinants of every size x size submatrix (test oracle)."""
    n = len(M)
    out = []
    for rows in combinations(range(n), size):
        for cols in combinations(range(n), size):
            out.append(cofactor_det_poly([[M[i][j] for j in cols] for i in rows]))
    return out


# -- random multigraphs ------------------------------------------------------------


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 12,
    connected: bool = False,
    loops: bool = True,
) -> FiniteGraph:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    m = rng.randint(0, max_edges)
    edges = []
    for j in range(m):
        tail = rng.choice(vertices)
        if loops and rng.random() < 0.15:
            head = tail
        else:
            head = rng.choice(vertices)
        edges.append((f"e{j}", tail, head))
    g = FiniteGraph.build(vertices, edges)
    if connected:
        comps = _components_list(g)
        extra = []
        for i in range(1, len(comps)):
            extra.append((f"j{i}", comps[0][0], comps[i][0]))
        if extra:
            g = FiniteGraph.build(vertices, edges + extra)
    return g


def _components_list(g: FiniteGraph):
    uf = _UnionFind(g.vertices)
    for e in g.edges:
        uf.union(e.tail, e.head)
    roots: dict[str, list[str]] = {}
    for v in g.vertices:
        roots.setdefault(uf.find(v), []).append(v)
    return list(roots.values())


def random_voltage_graph(
    rng: random.Random,
    rank: int = 1,
    max_vertices: int = 4,
    max_edges: int = 8,
    connected: bool = True,
) -> VoltageGraph:
    g = random_multigraph(rng, max_vertices, max_edges, connected=connected)
    volts = tuple(
        tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in g.edges
    )
    return VoltageGraph(g, rank, volts)


# -- plane graphs with known embeddings -----------------------------------------------


def _grid_plane(rows: int, cols: int, wrap: bool):
    """Rows x cols grid; wrap=True closes the angular direction with voltage 1."""
    vertices = [f"w{i}_{j}" for i in range(rows) for j in range(cols)]
    edges = []  # (name, tail, head, voltage)
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((f"a{i}_{j}", f"w{i}_{j}", f"w{i}_{j + 1}", 0))
            elif wrap:
                edges.append((f"a{i}_{j}", f"w{i}_{j}", f"w{i}_0", 1))
            if i + 1 < rows:
                edges.append((f"r{i}_{j}", f"w{i}_{j}", f"w{i + 1}_{j}", 0))
    rot = {}
    names = {e[0] for e in edges}
    for i in range(rows):
        for j in range(cols):
            darts = []
            if f"a{i}_{j}" in names:
                darts.append((f"a{i}_{j}", "t"))  # east
            if f"r{i}_{j}" in names:
                darts.append((f"r{i}_{j}", "t"))  # north
            west = f"a{i}_{(j - 1) % cols}" if (wrap or j > 0) else None
            if west in names and not (wrap and cols == 1 and False):
                darts.append((west, "h"))
            if i > 0 and f"r{i - 1}_{j}" in names:
                darts.append((f"r{i - 1}_{j}", "h"))
            rot[f"w{i}_{j}"] = darts
    return vertices, edges, rot


def _mutate_plane(rng, vertices, edges, rot, target_edges, allow_reverse=True):
    """Random embedding-preserving mutations; keeps at most target_edges edges."""
    edges = list(edges)
    rot = {v: list(d) for v, d in rot.items()}

    def delete_edge(name):
        nonlocal edges
        edges = [e for e in edges if e[0] != name]
        for v in rot:
            rot[v] = [d for d in rot[v] if d[0] != name]

    # drop random edges until small enough, then a few more at random
    names = [e[0] for e in edges]
    rng.shuffle(names)
    while len(edges) > target_edges:
        delete_edge(names.pop())
    for name in list(names):
        if edges and rng.random() < 0.2:
            delete_edge(name)

    # parallel duplicates, nested right next to the original
    for k in range(rng.randint(0, 2)):
        if not edges:
            break
        name, tail, head, volt = rng.choice(edges)
        dup = f"{name}d{k}"
        edges.append((dup, tail, head, volt))
        rt = rot[tail]
        rt.insert(rt.index((name, "t")) + 1, (dup, "t"))
        rh = rot[head]
        rh.insert(rh.index((name, "h")), (dup, "h"))

    # contractible loops
    for k in range(rng.randint(0, 2)):
        active = [v for v in vertices if rot[v]] or list(vertices)
        v = rng.choice(active)
        pos = rng.randrange(len(rot[v]) + 1)
        rot[v][pos:pos] = [(f"l{k}_{v}", "t"), (f"l{k}_{v}", "h")]
        edges.append((f"l{k}_{v}", v, v, 0))

    # orientation flips: swap the ends in the edge list and in the rotations
    if allow_reverse:
        for i, (name, tail, head, volt) in enumerate(edges):
            if rng.random() < 0.3:
                edges[i] = (name, head, tail, -volt)
                for v in rot:
                    rot[v] = [
                        (n, {"t": "h", "h": "t"}[end]) if n == name else (n, end)
                        for n, end in rot[v]
                    ]

    # drop isolated vertices sometimes
    kept = [v for v in vertices if rot[v] or rng.random() < 0.5]
    used = {e[1] for e in edges} | {e[2] for e in edges}
    kept = [v for v in vertices if v in used or v in kept]
    if not kept:
        kept = [vertices[0]]
    edges = [e for e in edges if e[1] in kept and e[2] in kept]
    rot = {v: tuple(rot[v]) for v in kept}
    return kept, edges, rot


def random_plane_graph(
    rng: random.Random, max_edges: int = 10, connected: bool = True
) -> PlaneGraph:
    """A random finite plane multigraph with a valid rotation system."""
    while True:
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 3)
        vertices, edges, rot = _grid_plane(rows, cols, wrap=False)
        vertices, edges, rot = _mutate_plane(rng, vertices, edges, rot, max_edges)
        if not edges:
            continue
        g = FiniteGraph.build(vertices, [(n, t, h) for n, t, h, _ in edges])
        if connected and brute_force_components(g) != 1:
            continue
        return PlaneGraph(g, rot)


def random_annulus_quotient(
    rng: random.Random, max_edges: int = 8, require_essential: bool = False
) -> PlaneGraph:
    """A random connected quotient genuinely embedded in the annulus."""
    while True:
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 2)
        vertices, edges, rot = _grid_plane(rows, cols, wrap=True)
        vertices, edges, rot = _mutate_plane(rng, vertices, edges, rot, max_edges)
        if not edges:
            continue
        g = FiniteGraph.build(vertices, [(n, t, h) for n, t, h, _ in edges])
        if brute_force_components(g) != 1:
            continue
        if require_essential and all(v == 0 for *_, v in edges):
            continue
        vg = VoltageGraph(g, 1, tuple((v,) for *_, v in edges))
        return PlaneGraph(vg, rot)
