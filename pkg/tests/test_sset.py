"""Finite simplicial sets: builders, normal forms, serialization."""

import math
import random

import pytest

from simplicial_derham.rationals import Q
from simplicial_derham.ordmaps import OrdMap, compose, identity, face, degeneracy
from simplicial_derham.sset import (
    SSet, DegSimplex, nd, surjections, delta, skeleton, boundary_delta,
    point, cube, cube_boundary_ids, quotient, sphere, product, product_pair,
    product_ref, build,
)


def test_delta_cell_counts():
    for n in range(4):
        X = delta(n)
        for k in range(n + 1):
            assert len(X.nd_ids(k)) == math.comb(n + 1, k + 1)
        assert X.euler_characteristic() == 1


def test_point_and_sphere_cells():
    P = point()
    assert list(P.all_nd_refs()) == [(0, "0")]
    S1 = sphere(1)
    assert list(S1.all_nd_refs()) == [(0, "*"), (1, "j1")]
    # the square's interior diagonal survives the boundary collapse
    S2 = sphere(2)
    assert S2.nd_counts() == (1, 1, 2)
    assert tuple(S2.chain_complex().homology_dims()) == (1, 0, 1)


def test_square_cube_counts():
    # triangulated square: 4 vertices, 5 edges, 2 triangles
    C2 = cube(2)
    assert C2.nd_counts() == (4, 5, 2)
    assert C2.euler_characteristic() == 1


def test_product_cell_counts():
    T = build("product:(sphere:1,sphere:1)")
    assert T.nd_counts() == (1, 3, 2)
    assert T.euler_characteristic() == 0
    Sq = build("product:(delta:1,delta:1)")
    assert Sq.nd_counts() == (4, 5, 2)
    # the two top cells of the square, one per vertex order
    top = sorted(Sq.nd_ids(2))
    assert top == ["[0.1]x[0.1]@xy", "[0.1]x[0.1]@yx"]


CORPUS = (
    "delta:1", "delta:2", "delta:3", "boundary:2", "boundary:3",
    "sphere:1", "sphere:2", "product:(sphere:1,sphere:1)",
    "product:(delta:1,delta:1)",
)


@pytest.mark.parametrize("expr", CORPUS)
def test_corpus_validates(expr):
    X = build(expr)
    assert X.validate()


def test_interval_boundary_matrix():
    X = delta(1)
    m = X.boundary_matrix(1)
    col = m.column(0)
    assert col == {0: Q(-1), 1: Q(1)}


def test_quotient_requires_face_closure():
    X = delta(2)
    with pytest.raises(ValueError):
        quotient(X, {(1, "0.1")})


def test_quotient_collapses_to_basepoint():
    X = delta(2)
    sub = {ref for ref in boundary_delta(2).all_nd_refs()}
    Qt = quotient(X, sub)
    assert Qt.base_ref == (0, "*")
    assert Qt.nd_counts() == (1, 0, 1)
    assert tuple(Qt.chain_complex().homology_dims()) == (1, 0, 1)


def test_build_quotient_grammar():
    Qt = build("quotient:(delta:2,boundary:2)")
    assert Qt.nd_counts() == (1, 0, 1)


def test_build_rejects_garbage():
    with pytest.raises(ValueError):
        build("simplex:2")
    with pytest.raises(ValueError):
        build("delta")


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 3)])
def test_surjection_counts(m, k):
    surjs = list(surjections(m, k))
    assert len(surjs) == math.comb(m, k)
    assert len(set(surjs)) == len(surjs)
    for s in surjs:
        assert s.is_surjective() and s.dom == m and s.cod == k


@pytest.mark.parametrize("expr", ["delta:2", "sphere:2", "product:(delta:1,delta:1)"])
def test_normal_form_counts(expr):
    # every m-simplex is (surjection, nondegenerate) exactly once
    X = build(expr)
    for m in range(X.top_dim + 2):
        sims = X.degenerate_simplices(m)
        assert len(sims) == len(set(sims))
        want = sum(
            math.comb(m, k) * len(X.nd_ids(k)) for k in range(m + 1)
        )
        assert len(sims) == want


def test_apply_map_functorial():
    rng = random.Random(13)
    X = build("product:(delta:1,delta:1)")
    sims = X.degenerate_simplices(2) + X.degenerate_simplices(3)
    for _ in range(80):
        t = rng.choice(sims)
        n = t.dim
        k = rng.randint(0, n)
        # random monotone f: [k] -> [n]
        f = OrdMap(tuple(sorted(rng.randint(0, n) for _ in range(k + 1))), n)
        m2 = rng.randint(0, k)
        g = OrdMap(tuple(sorted(rng.randint(0, k) for _ in range(m2 + 1))), k)
        via = X.apply_map(g, X.apply_map(f, t))
        direct = X.apply_map(compose(f, g), t)
        assert via == direct
        assert X.apply_map(identity(n), t) == t


def test_face_of_degenerate_simplices():
    X = build("sphere:2")
    for t in X.degenerate_simplices(3):
        for j in range(1, 4):
            for i in range(j):
                lhs = X.face(X.face(t, j), i)
                rhs = X.face(X.face(t, i), j - 1)
                assert lhs == rhs


def test_product_pair_round_trip():
    P = build("product:(delta:1,delta:1)")
    for ref in P.all_nd_refs():
        a, b = product_pair(P, ref)
        assert product_ref(P, a, b) == ref


def test_json_round_trip(tmp_path):
    for expr in ("delta:2", "sphere:1", "product:(sphere:1,sphere:1)"):
        X = build(expr)
        path = tmp_path / "space.json"
        X.save_json(path)
        Y = SSet.load_json(path)
        assert Y.to_jsonable() == X.to_jsonable()
        Z = build("file:%s" % path)
        assert Z.nd_counts() == X.nd_counts()
        assert tuple(Z.chain_complex().homology_dims()) == tuple(
            X.chain_complex().homology_dims())


def test_from_jsonable_validates():
    X = delta(1)
    data = X.to_jsonable()
    # break a face assignment: edge with both endpoints equal but with a
    # dangling base id
    data["simplices"]["1"][0]["faces"][0]["base"] = "missing"
    with pytest.raises(ValueError):
        SSet.from_jsonable(data)


def test_cube_boundary_ids_closed():
    for m in (1, 2):
        C = cube(m)
        ids = cube_boundary_ids(m)
        for ref in ids:
            assert C.has_ref(ref)
            for ds in C.face_table[ref]:
                assert ds.ref in ids
