"""Exact sparse linear algebra and chain-complex reports."""

import random

import pytest

from simplicial_derham.rationals import Q
from simplicial_derham.linalg import (
    QMatrix, ChainComplexQ, rank, kernel_basis, solve, rank_of_vectors,
    check_chain_map, induced_image_dims, quasi_iso_check,
)
from simplicial_derham.sset import build
from simplicial_derham.phiglobal import truncated_complex, _inclusion_maps, _phi_maps


def mat(rows):
    m = QMatrix(len(rows), len(rows[0]) if rows else 0)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            m.set(i, j, Q(v))
    return m


def rand_matrix(rng, nrows, ncols, density=0.4):
    m = QMatrix(nrows, ncols)
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                m.set(i, j, Q(rng.randint(-5, 5), rng.randint(1, 4)))
    return m


def test_rank_examples():
    assert rank(mat([[1, 1], [1, 1]])) == 1
    assert rank(mat([[1, 0], [0, 1]])) == 2
    assert rank(mat([[0, 0], [0, 0]])) == 0
    assert rank(mat([[2, 4, 6], [1, 2, 3], [0, 1, 1]])) == 2


def test_rank_pivot_strategies_agree():
    rng = random.Random(101)
    for _ in range(100):
        nrows = rng.randint(1, 30)
        ncols = rng.randint(1, 30)
        m = rand_matrix(rng, nrows, ncols, density=rng.uniform(0.05, 0.5))
        assert rank(m, pivot="first") == rank(m, pivot="maxabs")


def test_kernel_basis_spans_kernel():
    rng = random.Random(103)
    for _ in range(40):
        m = rand_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
        ker = kernel_basis(m)
        for v in ker:
            assert all(c == 0 for c in m.apply(v).values())
        assert rank(m) + len(ker) == m.ncols
        assert rank_of_vectors(ker) == len(ker) if ker else True


def test_solve_round_trip():
    rng = random.Random(107)
    solved = 0
    for _ in range(60):
        m = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        x_true = {j: Q(rng.randint(-3, 3)) for j in range(m.ncols)
                  if rng.random() < 0.6}
        b = m.apply(x_true)
        x = solve(m, b)
        assert x is not None
        assert m.apply(x) == b
        solved += 1
    assert solved == 60


def test_solve_detects_inconsistency():
    m = mat([[1, 1], [1, 1]])
    assert solve(m, {0: Q(1), 1: Q(2)}) is None


def test_matrix_multiply():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert a.mul(b) == mat([[2, 1], [4, 3]])


def test_boundary_squared_enforced():
    good = ChainComplexQ(
        [["v0", "v1"], ["e"]],
        [None, mat([[-1], [1]])],
    )
    assert good.homology_dims() == (1, 0)
    with pytest.raises(ValueError):
        ChainComplexQ(
            [["a"], ["b"], ["c"]],
            [None, mat([[1]]), mat([[1]])],
        )


def test_homology_dims_known_spaces():
    s1 = build("sphere:1").chain_complex()
    assert tuple(s1.homology_dims()) == (1, 1)
    bd3 = build("boundary:3").chain_complex()
    assert tuple(bd3.homology_dims()) == (1, 0, 1)
    d2 = build("delta:2").chain_complex()
    assert tuple(d2.homology_dims()) == (1, 0, 0)
    torus = build("product:(sphere:1,sphere:1)").chain_complex()
    assert tuple(torus.homology_dims()) == (1, 2, 1)


def test_cycles_are_cycles():
    C = build("boundary:2").chain_complex()
    for k in range(C.top + 1):
        for z in C.cycles(k):
            if k > 0:
                img = C.boundary(k).apply(z)
                assert all(c == 0 for c in img.values())


def _identity_maps(C):
    out = []
    for k in range(C.top + 1):
        m = QMatrix(C.dim(k), C.dim(k))
        for j in range(C.dim(k)):
            m.set(j, j, 1)
        out.append(m)
    return out


def _zero_maps(C):
    return [QMatrix(C.dim(k), C.dim(k)) for k in range(C.top + 1)]


def test_induced_image_identity_and_zero():
    C = build("sphere:1").chain_complex()
    ident = _identity_maps(C)
    zero = _zero_maps(C)
    dims = C.homology_dims()
    for k in range(C.top + 1):
        assert induced_image_dims(ident, C, C, k) == dims[k]
        assert induced_image_dims(zero, C, C, k) == 0


def test_induced_image_rejects_non_chain_map():
    # on the interval the boundary is nonzero, so a lone scaling breaks it
    C = build("delta:1").chain_complex()
    bad = _identity_maps(C)
    bad[1].set(0, 0, Q(2))
    with pytest.raises(ValueError):
        induced_image_dims(bad, C, C, 0)


def test_truncation_inclusion_image():
    # weight-1 into weight-3 truncation over the circle, degree 0
    X = build("sphere:1")
    C = truncated_complex(X, 1)
    Cp = truncated_complex(X, 3)
    inc = _inclusion_maps(C, Cp)
    inc_list = [inc[k] for k in range(C.top + 1)]
    assert check_chain_map(inc_list, C, Cp) is None
    assert induced_image_dims(inc_list, C, Cp, 0) == 1


def test_quasi_iso_check_phi():
    # the embedding of simplicial chains is an iso onto the stabilized
    # homology of the weight truncations
    for expr, iso_degrees in [("delta:2", (0, 1, 2)), ("sphere:1", (0, 1))]:
        X = build(expr)
        N = X.chain_complex()
        D = X.top_dim
        G = truncated_complex(X, D)
        Gp = truncated_complex(X, D + 2)
        phim = _phi_maps(X, N, G)
        fmaps = [phim[k] for k in range(N.top + 1)]
        inc = _inclusion_maps(G, Gp)
        inc_list = [inc[k] for k in range(G.top + 1)]
        report = quasi_iso_check(fmaps, N, G, k_range=range(N.top + 1),
                                 through=inc_list, Cpp=Gp)
        for k in iso_degrees:
            assert report[k]["iso"], (expr, k, report[k])
