import random

import pytest
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from gscct.cohomology import (
    betti,
    coboundary_matrix,
    nullspace,
    random_cocycle,
    rank,
)
from gscct.scalars import field_make
from gscct.subdivision import HOCHSCHILD, SIMPLICIAL, Cochain, simplicial_coboundary

from conftest import CORPUS_NAMES, corpus


def oracle_rank(M, field):
    """Dense rank by sympy, independent of the sparse elimination."""
    if not M.rows or not M.cols:
        return 0
    dense = M.to_dense()
    if field.spec.kind == "rationals":
        return DomainMatrix([[QQ(x) for x in row] for row in dense], M.shape, QQ).rank()
    K = GF(field.spec.characteristic)
    return DomainMatrix([[K(int(x)) for x in row] for row in dense], M.shape, K).rank()


def oracle_betti(K, field, top, normalized=True, side=SIMPLICIAL):
    mats = [coboundary_matrix(K, side, n, normalized, field) for n in range(top + 1)]
    ranks = [oracle_rank(M, field) for M in mats]
    return tuple(len(mats[n].cols) - ranks[n] - (ranks[n - 1] if n else 0)
                 for n in range(top + 1))


def components(K):
    parent = {v: v for v in K.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in K.elements:
        if len(s) == 2:
            parent[find(s[0])] = find(s[1])
    return len({find(v) for v in K.vertices})


def test_edge_matrix_degree_zero(edge, q):
    M = coboundary_matrix(edge, SIMPLICIAL, 0, True, q)
    assert M.rows == [edge.chain("a", "a,b"), edge.chain("b", "a,b")]
    assert M.shape == (2, 3)
    # delta e_v (v < ab) = e_ab - e_v on each edge of the subdivision
    assert M.to_dense() == [[-1, 0, 1], [0, -1, 1]]


@pytest.mark.parametrize("name", ["interval", "circle", "triangle", "sphere"])
@pytest.mark.parametrize("normalized", [True, False])
def test_consecutive_matrices_compose_to_zero(name, normalized, q):
    K = corpus(name)
    for n in range(3):
        A = coboundary_matrix(K, SIMPLICIAL, n, normalized, q)
        B = coboundary_matrix(K, SIMPLICIAL, n + 1, normalized, q)
        assert A.rows == B.cols
        for col in A.columns:
            image = {}
            for k, a in col.items():
                for i, b in B.columns[k].items():
                    image[i] = image.get(i, 0) + a * b
            assert not any(image.values())


@pytest.mark.parametrize("name", ["interval", "circle", "triangle", "sphere", "rp2"])
def test_hochschild_matrix_equals_simplicial(name, q):
    K = corpus(name)
    for normalized in (True, False):
        for n in range(3):
            a = coboundary_matrix(K, SIMPLICIAL, n, normalized, q)
            b = coboundary_matrix(K, HOCHSCHILD, n, normalized, q)
            assert a.rows == b.rows and a.cols == b.cols and a.columns == b.columns


@pytest.mark.parametrize("name,field,expected", [
    ("interval", "q", (1, 0)),
    ("circle", "q", (1, 1)),
    ("sphere", "q", (1, 0, 1)),
    ("rp2", "z2", (1, 1, 1)),
    ("rp2", "q", (1, 0, 0)),
    ("torus", "q", (1, 2, 1)),
    ("torus", "z2", (1, 2, 1)),
    ("triangle", "z101", (1, 0, 0)),
])
def test_betti_numbers(name, field, expected):
    K = corpus(name)
    F = field_make(field)
    top = len(expected) - 1
    assert oracle_betti(K, F, top) == expected
    for side in (SIMPLICIAL, HOCHSCHILD):
        table = betti(K, side, F, max_degree=top + 1)
        assert table.values == expected + (0,)


@pytest.mark.parametrize("name", CORPUS_NAMES)
@pytest.mark.parametrize("field", ["q", "z2", "z7"])
def test_sparse_rank_matches_dense_oracle(name, field):
    K = corpus(name)
    F = field_make(field)
    for n in range(K.dimension):
        M = coboundary_matrix(K, SIMPLICIAL, n, True, F)
        assert rank(M, F) == oracle_rank(M, F)


@pytest.mark.parametrize("name", ["interval", "circle"])
@pytest.mark.parametrize("field", ["q", "z2"])
def test_full_and_normalized_complexes_agree(name, field):
    K = corpus(name)
    F = field_make(field)
    full = betti(K, SIMPLICIAL, F, max_degree=2, normalized=False)
    norm = betti(K, SIMPLICIAL, F, max_degree=2, normalized=True)
    assert full.values == norm.values
    assert oracle_betti(K, F, 2, normalized=False) == full.values


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_b0_counts_components(name):
    K = corpus(name)
    assert betti(K, SIMPLICIAL, "q", 0).values[0] == components(K)


def test_b0_of_disconnected_complex():
    from gscct.complex import parse_facets
    K = parse_facets("a b\nc d e\nf")
    assert components(K) == 3
    assert betti(K, SIMPLICIAL, "z101").values[0] == 3


def test_render(circle):
    table = betti(circle, HOCHSCHILD, "z7", 2)
    assert table.render() == "BETTI side=hochschild field=z7 normalized=true : b0=1 b1=1 b2=0"


@pytest.mark.parametrize("field", ["q", "z3"])
def test_nullspace_vectors_are_cocycles(circle, field):
    F = field_make(field)
    for n in range(3):
        M = coboundary_matrix(circle, SIMPLICIAL, n, False, F)
        basis = nullspace(M, F)
        assert len(basis) == len(M.cols) - rank(M, F)
        for vec in basis:
            f = Cochain(circle, F, n, {M.cols[j]: x for j, x in vec.items()})
            assert simplicial_coboundary(f).is_zero()


def test_random_cocycle(triangle, q):
    rng = random.Random(0)
    for n in range(3):
        z = random_cocycle(triangle, q, n, rng)
        assert z.degree == n and simplicial_coboundary(z).is_zero()
