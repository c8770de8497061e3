"""Determinants, nullspaces, and elementary divisors."""

import random

import pytest

from conftest import all_minor_dets, cofactor_det_poly
from lapgraph.fields import GF2, QQ, ZZ, PrimeField
from lapgraph.graphs import laplacian_finite, voltage_laplacian
from lapgraph.laurent import LaurentPoly, divides, normalize, parse_poly
from lapgraph.library import girder_quotient, k4_graph, ladder_quotient, mitsubishi_quotient
from lapgraph.linalg import (
    det_laurent,
    elementary_divisor,
    first_nonzero_divisor,
    int_det,
    int_det_cofactor,
    int_matrix_to_poly,
    nullspace,
    rank,
    row_space_canonical,
)

GF3 = PrimeField(3)


def test_int_det_against_cofactor_thousand_cases():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randint(1, 4)
        M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert int_det(M) == int_det_cofactor(M)


def test_int_det_examples():
    L0 = [[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]
    assert int_det(L0) == 16
    assert int_det([[0, 0], [0, 0]]) == 0
    assert int_det([]) == 1


def test_int_det_rejects_non_square():
    with pytest.raises(ValueError):
        int_det([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        det_laurent([[LaurentPoly.constant(1, 1)], [LaurentPoly.constant(2, 1)]])


def test_nullspace_k4_examples():
    L0 = [[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]
    basis = nullspace(L0, GF2)
    want = row_space_canonical([[1, 1, 0], [0, 1, 1]], GF2)
    assert row_space_canonical(basis, GF2) == want
    assert nullspace(L0, QQ) == []
    assert nullspace([[1, 0], [0, 1]], QQ) == []


@pytest.mark.parametrize("fld", [GF2, GF3, QQ])
def test_nullspace_vectors_lie_in_kernel(fld):
    rng = random.Random(5)
    for _ in range(150):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        M = [[fld.of(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
        basis = nullspace(M, fld)
        assert len(basis) == cols - rank(M, fld)
        for v in basis:
            for row in M:
                s = fld.zero
                for a, b in zip(row, v):
                    s = fld.add(s, fld.mul(a, b))
                assert fld.is_zero(s)


def test_det_laurent_matches_cofactor_on_large_matrices():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(5, 6)
        M = [
            [
                LaurentPoly(
                    1,
                    {
                        (rng.randint(-1, 1),): rng.randint(-2, 2)
                        for _ in range(rng.randint(0, 2))
                    },
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        assert det_laurent(M, ZZ) == cofactor_det_poly(M)


def test_delta0_examples_from_quotients():
    lad = elementary_divisor(voltage_laplacian(ladder_quotient()), 0, ZZ)
    assert lad == normalize(
        parse_poly("x^2-2x+1") * parse_poly("x^2-4x+1"), ZZ
    )
    gird = elementary_divisor(voltage_laplacian(girder_quotient()), 0, ZZ)
    assert gird == normalize(
        parse_poly("x^2-2x+1") * parse_poly("4x^2-17x+4"), ZZ
    )
    gird2 = elementary_divisor(voltage_laplacian(girder_quotient()), 0, GF2)
    assert gird2 == parse_poly("1 + x^2").reduce_to(GF2)  # (x+1)^2 mod 2
    mits = elementary_divisor(voltage_laplacian(mitsubishi_quotient()), 0, ZZ)
    core = parse_poly("6 - x - x^-1 - y - y^-1 - x*y^-1 - x^-1*y")
    assert mits == normalize(6 * core, ZZ)
    assert elementary_divisor(voltage_laplacian(mitsubishi_quotient()), 0, GF2).is_zero()


def test_k4_constant_matrix_divisors():
    P = int_matrix_to_poly(laplacian_finite(k4_graph()))
    assert elementary_divisor(P, 0, ZZ).is_zero()
    assert elementary_divisor(P, 1, ZZ) == LaurentPoly.constant(16, 1)
    assert elementary_divisor(P, 4, ZZ) == LaurentPoly.constant(1, 1)
    with pytest.raises(ValueError):
        elementary_divisor(P, 5, ZZ)


def test_first_nonzero_divisor_scans():
    P = int_matrix_to_poly(laplacian_finite(k4_graph()))
    s, d = first_nonzero_divisor(P, QQ)
    assert s == 1 and d == LaurentPoly.constant(1, 1)
    zero = [[LaurentPoly.zero(1)]]
    s, d = first_nonzero_divisor(zero, QQ)
    assert s == 1 and d == LaurentPoly.constant(1, 1)


def _random_laurent_matrix(rng, n):
    return [
        [
            LaurentPoly(
                1,
                {
                    (rng.randint(-2, 2),): rng.randint(-3, 3)
                    for _ in range(rng.randint(0, 2))
                },
            )
            for _ in range(n)
        ]
        for _ in range(n)
    ]


@pytest.mark.parametrize("seed", range(25))
def test_divisor_chain_against_brute_force_minors(seed):
    rng = random.Random(200 + seed)
    M = _random_laurent_matrix(rng, 3)
    divisors = [elementary_divisor(M, k, QQ) for k in range(4)]
    # independent check: gcd of cofactor-expanded minors divides every minor
    for k in range(3):
        dets = [d for d in all_minor_dets(M, 3 - k) if not d.is_zero()]
        if not dets:
            assert divisors[k].is_zero()
            continue
        for d in dets:
            assert divides(divisors[k], d, QQ)
    # the chain: each divisor divides the previous one
    for k in range(3):
        if divisors[k].is_zero():
            continue
        assert divides(divisors[k + 1], divisors[k], QQ)


@pytest.mark.parametrize("seed", range(15))
def test_gf2_divisors_match_brute_force_gcd(seed):
    from lapgraph.laurent import gcd_many

    rng = random.Random(400 + seed)
    M = _random_laurent_matrix(rng, 3)
    for k in range(3):
        mine = elementary_divisor(M, k, GF2)
        dets = [d.reduce_to(GF2) for d in all_minor_dets(M, 3 - k)]
        dets = [d for d in dets if not d.is_zero()]
        if not dets:
            assert mine.is_zero()
        else:
            assert mine == gcd_many(dets, GF2)
