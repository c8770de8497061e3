"""Faces, Dehn colorings, medial components, residues, Shank basis."""

import random

import pytest

from conftest import random_annulus_quotient, random_plane_graph
from lapgraph.colorings import (
    YES,
    bicycle_basis,
    conservative_vertex_basis,
    is_conservative_edge,
)
from lapgraph.fields import GF2, QQ, PrimeField
from lapgraph.graphs import FiniteGraph, voltage_laplacian
from lapgraph.library import (
    girder_plane_quotient,
    k4_plane,
    ladder_plane_quotient,
    single_loop_plane_quotient,
    triangle_plane,
)
from lapgraph.linalg import first_nonzero_divisor, row_space_canonical
from lapgraph.planar import (
    PlaneGraph,
    compact_orbit_count,
    cover_plane_graph,
    dehn_extend,
    dehn_restrict,
    euler_characteristic,
    face_index_of_darts,
    faces,
    medial_components,
    medial_components_voltage,
    noncompact_count,
    parse_rotations,
    residue_vector,
    shank_basis,
)

GF5 = PrimeField(5)


# -- faces -------------------------------------------------------------------------


def test_face_counts():
    assert len(faces(k4_plane())) == 4
    assert len(faces(triangle_plane())) == 2
    g = FiniteGraph.build(["v"], [("l", "v", "v")])
    pg = PlaneGraph(g, parse_rotations(g, {"v": "l.t l.h"}))
    assert len(faces(pg)) == 2


@pytest.mark.parametrize("seed", range(50))
def test_euler_formula_on_random_plane_graphs(seed):
    pg = random_plane_graph(random.Random(seed))
    assert euler_characteristic(pg) == 2


def test_face_walks_partition_the_darts():
    pg = k4_plane()
    fl = faces(pg)
    darts = [d for f in fl for d in f.darts]
    assert len(darts) == 2 * len(pg.base.edges)
    assert len(set(darts)) == len(darts)


def test_rotation_validation():
    g = FiniteGraph.build(["a", "b"], [("e", "a", "b")])
    with pytest.raises(ValueError):
        PlaneGraph(g, {"a": (("e", "t"), ("e", "t")), "b": (("e", "h"),)})
    with pytest.raises(ValueError):
        PlaneGraph(g, {"a": (), "b": (("e", "h"),)})
    with pytest.raises(ValueError):
        PlaneGraph(g, {"a": (("e", "h"),), "b": (("e", "t"),)})


# -- Dehn colorings -------------------------------------------------------------------


def test_constant_coloring_extends_to_zero_faces():
    pg = k4_plane()
    dc = dehn_extend(pg, [3, 3, 3, 3], 0, GF5)
    assert all(c == 0 for c in dc.face_colors)
    assert dc.vertex_colors == (3, 3, 3, 3)


def test_k4_dehn_extension_satisfies_edge_condition_everywhere():
    pg = k4_plane()
    g = pg.base
    for base_face in range(4):
        dc = dehn_extend(pg, [0, 1, 1, 0], base_face, GF2)
        assert dc.face_colors[base_face] == 0
        fidx = face_index_of_darts(faces(pg))
        for e in g.edges:
            left = dc.face_colors[fidx[(e.name, "t")]]
            right = dc.face_colors[fidx[(e.name, "h")]]
            a1 = dc.vertex_colors[g.vertex_index(e.tail)]
            a2 = dc.vertex_colors[g.vertex_index(e.head)]
            assert GF2.add(a1, right) == GF2.add(a2, left)


def test_triangle_conservative_over_q_is_constant():
    pg = triangle_plane()
    basis = conservative_vertex_basis(pg.base, QQ)
    assert len(basis) == 1
    dc = dehn_extend(pg, basis[0], 0, QQ)
    assert all(c == 0 for c in dc.face_colors)


def test_nonconservative_coloring_rejected():
    pg = triangle_plane()
    with pytest.raises(ValueError):
        dehn_extend(pg, [1, 0, 0], 0, QQ)


def test_dehn_roundtrip_k4():
    pg = k4_plane()
    dc = dehn_extend(pg, [0, 1, 1, 0], 0, GF2)
    assert dehn_restrict(dc) == [0, 1, 1, 0]


@pytest.mark.parametrize("batch", range(10))
def test_dehn_roundtrip_on_random_plane_graphs_gf5(batch):
    rng = random.Random(6000 + batch)
    done = 0
    while done < 50:
        pg = random_plane_graph(rng)
        basis = conservative_vertex_basis(pg.base, GF5)
        if not basis:
            continue
        coeffs = [rng.randrange(5) for _ in basis]
        alpha = [
            sum(c * v[i] for c, v in zip(coeffs, basis)) % 5
            for i in range(len(pg.base.vertices))
        ]
        base_face = rng.randrange(len(faces(pg)))
        dc = dehn_extend(pg, alpha, base_face, GF5)
        assert dehn_restrict(dc) == alpha
        done += 1


# -- medial components -----------------------------------------------------------------


def test_k4_medial_components_and_residues():
    pg = k4_plane()
    comps = medial_components(pg)
    assert len(comps) == 3
    residues = {tuple(residue_vector(pg.base, c)) for c in comps}
    assert (1, 0, 1, 0, 1, 1) in residues
    assert (1, 1, 0, 1, 0, 1) in residues


def test_single_loop_medial_is_one_component():
    # The pinched annulus boundary crosses itself at the lone edge, joining
    # the two boundary circles into one strand; this matches the kernel
    # dimension over GF(2), which is 1.
    g = FiniteGraph.build(["v"], [("l", "v", "v")])
    pg = PlaneGraph(g, parse_rotations(g, {"v": "l.t l.h"}))
    comps = medial_components(pg)
    assert len(comps) == 1
    assert comps[0].crossings == ("l", "l")
    assert len(conservative_vertex_basis(g, GF2)) == 1


def test_single_edge_medial_is_one_component():
    g = FiniteGraph.build(["a", "b"], [("e", "a", "b")])
    pg = PlaneGraph(g, parse_rotations(g, {"a": "e.t", "b": "e.h"}))
    assert len(medial_components(pg)) == 1


@pytest.mark.parametrize("seed", range(60))
def test_medial_crossings_and_component_count(seed):
    pg = random_plane_graph(random.Random(7000 + seed))
    comps = medial_components(pg)
    counts: dict[str, int] = {}
    for c in comps:
        for name in c.crossings:
            counts[name] = counts.get(name, 0) + 1
    assert all(counts.get(e.name, 0) == 2 for e in pg.base.edges)
    assert len(comps) == len(conservative_vertex_basis(pg.base, GF2))


@pytest.mark.parametrize("seed", range(60))
def test_residues_are_bicycles_random(seed):
    pg = random_plane_graph(random.Random(8000 + seed))
    for comp in medial_components(pg):
        beta = residue_vector(pg.base, comp)
        assert is_conservative_edge(pg.base, beta, GF2) == YES


# -- voltage medial ---------------------------------------------------------------------


def test_ladder_quotient_medial():
    comps = medial_components_voltage(ladder_plane_quotient())
    assert noncompact_count(comps) == 4
    assert compact_orbit_count(comps) == 0


def test_girder_quotient_medial():
    comps = medial_components_voltage(girder_plane_quotient())
    assert noncompact_count(comps) == 2
    assert compact_orbit_count(comps) == 0


def test_single_essential_loop_medial():
    comps = medial_components_voltage(single_loop_plane_quotient())
    assert noncompact_count(comps) == 2
    # cross-check: GF(2) degree of Delta_0 = 2
    L = voltage_laplacian(single_loop_plane_quotient().graph)
    s, d = first_nonzero_divisor(L, GF2)
    assert s == 0 and d.degree_span()[0] == 2


@pytest.mark.parametrize("seed", range(60))
def test_gf2_degree_equals_noncompact_count_random(seed):
    pg = random_annulus_quotient(random.Random(9000 + seed))
    comps = medial_components_voltage(pg)
    L = voltage_laplacian(pg.graph)
    s, ds = first_nonzero_divisor(L, GF2)
    deg = 0 if ds.is_zero() else ds.degree_span()[0]
    assert deg == noncompact_count(comps)
    assert s == compact_orbit_count(comps)
    counts: dict[str, int] = {}
    for c in comps:
        for name in c.crossings:
            counts[name] = counts.get(name, 0) + 1
    assert all(counts.get(e.name, 0) == 2 for e in pg.base.edges)


def test_medial_dispatch_errors():
    with pytest.raises(ValueError):
        medial_components(ladder_plane_quotient())
    with pytest.raises(ValueError):
        medial_components_voltage(k4_plane())


# -- Shank basis ---------------------------------------------------------------------------


def test_k4_shank_basis_every_base_choice():
    pg = k4_plane()
    for base in range(3):
        basis = shank_basis(pg, base)
        assert len(basis) == 2
        assert row_space_canonical(basis, GF2) == row_space_canonical(
            bicycle_basis(pg.base, GF2), GF2
        )
    # base component 2 leaves exactly the two residues printed in the example
    assert sorted(shank_basis(pg, 2)) == sorted(
        [[1, 0, 1, 0, 1, 1], [1, 1, 0, 1, 0, 1]]
    )


def test_tree_has_empty_shank_basis():
    g = FiniteGraph.build(["a", "b", "c"], [("e1", "a", "b"), ("e2", "b", "c")])
    pg = PlaneGraph(
        g, parse_rotations(g, {"a": "e1.t", "b": "e1.h e2.t", "c": "e2.h"})
    )
    comps = medial_components(pg)
    assert len(comps) == 1
    assert shank_basis(pg, 0) == []


@pytest.mark.parametrize("seed", range(60))
def test_shank_basis_on_random_plane_graphs(seed):
    rng = random.Random(10000 + seed)
    pg = random_plane_graph(rng)
    comps = medial_components(pg)
    bases = range(len(comps)) if seed < 15 else [rng.randrange(len(comps))]
    for base in bases:
        shank_basis(pg, base)  # raises if the residues fail to be a basis


# -- covers -----------------------------------------------------------------------------


def test_cover_plane_graph_is_planar():
    for pg in (ladder_plane_quotient(), girder_plane_quotient(), single_loop_plane_quotient()):
        for n in (2, 3, 5):
            cov = cover_plane_graph(pg, n)
            assert euler_characteristic(cov) == 2


def test_cover_medial_count_matches_quotient_prediction():
    # For an n-cover of an annulus quotient, each quotient trace with winding w
    # lifts to gcd(n, w) closed strands.
    from math import gcd

    pg = ladder_plane_quotient()
    qcomps = medial_components_voltage(pg)
    for n in (2, 3, 4):
        cov = cover_plane_graph(pg, n)
        expect = sum(gcd(n, abs(c.winding)) for c in qcomps)
        assert len(medial_components(cov)) == expect
