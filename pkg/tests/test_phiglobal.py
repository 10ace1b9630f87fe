"""Global dual-form chains over a simplicial set."""

import random

import pytest

from simplicial_derham.rationals import Q
from simplicial_derham.ordmaps import degeneracy
from simplicial_derham.polyforms import FormElt, Poly, ThetaElt
from simplicial_derham.philocal import PhiElt
from simplicial_derham.sset import build, DegSimplex, nd
from simplicial_derham.phiglobal import (
    PhiChain, CochainForm, canonicalize_term, phi_boundary, phi_of_chain,
    truncated_complex, validate_cochain, global_pair, omega_wedge,
    homology_report,
)
from simplicial_derham.verify import rand_phichain

SPACES = ("delta:1", "delta:2", "sphere:1", "boundary:2",
          "product:(delta:1,delta:1)")


@pytest.mark.parametrize("expr", SPACES)
def test_boundary_squares_to_zero(expr):
    X = build(expr)
    rng = random.Random(301)
    for _ in range(20):
        d = rng.randint(1, min(2, X.top_dim + 1))
        c = rand_phichain(rng, X, d)
        assert phi_boundary(phi_boundary(c)).is_zero()


@pytest.mark.parametrize("expr", SPACES)
def test_embedding_is_chain_map(expr):
    X = build(expr)
    rng = random.Random(307)
    for k in range(1, X.top_dim + 1):
        refs = X.nd_refs(k)
        if not refs:
            continue
        coeffs = {ref: Q(rng.randint(-3, 3)) for ref in refs}
        coeffs = {r: q for r, q in coeffs.items() if q}
        if not coeffs:
            continue
        lhs = phi_boundary(phi_of_chain(X, coeffs, k))
        # simplicial boundary with degenerate faces dropped
        bnd = {}
        for ref, q in coeffs.items():
            for i, ds in enumerate((X.face_table[ref])):
                if ds.is_nondegenerate():
                    bnd[ds.ref] = bnd.get(ds.ref, Q(0)) + Q(-1) ** i * q
        bnd = {r: q for r, q in bnd.items() if q}
        rhs = phi_of_chain(X, bnd, k - 1)
        assert lhs == rhs


def test_canonicalize_degenerate_carrier():
    # a top-wedge element on a degenerate carrier dies with the collapse
    X = build("delta:1")
    edge = (1, "0.1")
    sq = DegSimplex(degeneracy(1, 0), edge)  # [2] ->> [1]
    a = PhiElt.include(2, range(3), ThetaElt.monomial(2, (0, 0), (1, 2)))
    out = canonicalize_term(X, sq, a)
    assert out.is_zero()


def test_canonicalize_face_supported_component():
    # components on proper faces relocate to the face's carrier
    X = build("delta:2")
    tri = (2, "0.1.2")
    a = PhiElt.include(2, (0, 1), ThetaElt.w(1, 1))
    out = canonicalize_term(X, tri, a)
    want = PhiChain(X, 1, {((1, "0.1"), ((0,), (1,))): Q(1)})
    assert out == want


def test_chain_group_relation():
    # (x . sigma, a) and (x, sigma_* a) canonicalize identically
    X = build("delta:2")
    tri = (2, "0.1.2")
    sq = DegSimplex(degeneracy(2, 1), tri)  # [3] ->> [2]
    a = PhiElt.include(3, (0, 1, 3), ThetaElt.monomial(2, (1, 0), (1, 2)))
    lhs = canonicalize_term(X, sq, a)
    from simplicial_derham.philocal import push_phi
    rhs = canonicalize_term(X, tri, push_phi(a, degeneracy(2, 1).values, 2))
    assert lhs == rhs


def test_global_pair_frozen_example():
    # the edge chain against ds_1 pairs to 1
    X = build("delta:1")
    edge = (1, "0.1")
    c = PhiChain(X, 1, {(edge, ((0,), (1,))): Q(1)})
    om = CochainForm(X, 1, {edge: FormElt.ds(1, 1)})
    assert validate_cochain(om) is None
    assert global_pair(c, om) == Q(1)


def test_global_pair_degree_mismatch():
    X = build("delta:1")
    edge = (1, "0.1")
    c = PhiChain(X, 1, {(edge, ((0,), (1,))): Q(1)})
    om0 = CochainForm.constant(X, Q(1))
    assert global_pair(c, om0) == Q(0)


def test_global_pair_requires_shared_complex():
    X = build("delta:1")
    Y = build("delta:1")
    c = PhiChain(X, 0, {((0, "0"), ((), ())): Q(1)})
    om = CochainForm.constant(Y, Q(1))
    with pytest.raises(ValueError):
        global_pair(c, om)


def test_constant_cochain_total_pairing():
    # pairing the vertex sum with the constant 1 counts the vertices
    X = build("boundary:2")
    coeffs = {ref: Q(1) for ref in X.nd_refs(0)}
    c = phi_of_chain(X, coeffs, 0)
    om = CochainForm.constant(X, Q(1))
    assert global_pair(c, om) == Q(3)


def test_validate_cochain_finds_violation():
    X = build("delta:2")
    vals = {}
    for ref in X.all_nd_refs():
        m = ref[0]
        vals[ref] = FormElt.zero(m)
    # a constant on one edge only cannot match its vertex values
    vals[(1, "0.1")] = FormElt.from_poly(Poly.const(1, Q(1)))
    om = CochainForm(X, 0, vals)
    bad = validate_cochain(om)
    assert bad is not None
    ref, i = bad
    assert ref[0] >= 1 and 0 <= i <= ref[0]


def test_coordinate_cochain_validates():
    # barycentric vertex coordinates glue into a genuine global 0-form
    X = build("delta:2")
    verts = {"0": 0, "1": 1, "2": 2}
    vals = {}
    for ref in X.all_nd_refs():
        m, cid = ref
        carriers = [verts.get(v) for v in cid.split(".")]
        p = Poly.zero(m)
        for pos, v in enumerate(carriers):
            if v == 1:
                p = p + Poly.t(m, pos)
        vals[ref] = FormElt.from_poly(p)
    om = CochainForm(X, 0, vals)
    assert validate_cochain(om) is None


def test_omega_wedge_validates():
    X = build("sphere:1")
    P = build("product:(sphere:1,sphere:1)")
    # rebuild factors shared with the product: construct from P itself
    from simplicial_derham.sset import product, sphere
    A = sphere(1)
    B = sphere(1)
    P = product(A, B)
    omA = CochainForm.constant(A, Q(2))
    omB = CochainForm.constant(B, Q(3))
    w = omega_wedge(P, omA, omB)
    assert w.d == 0
    assert validate_cochain(w) is None
    c = phi_of_chain(P, {P.nd_refs(0)[0]: Q(1)}, 0)
    assert global_pair(c, w) == Q(6)


def test_truncated_complex_weight_filter():
    X = build("delta:1")
    C = truncated_complex(X, 2)
    for k, labels in enumerate(C.bases):
        for (ref, e, S) in labels:
            assert sum(e) + len(S) <= 2
            assert len(S) == k


@pytest.mark.parametrize("expr,want", [
    ("delta:2", [1, 0, 0]),
    ("sphere:1", [1, 1]),
    ("boundary:3", [1, 0, 1]),
])
def test_homology_report_small(expr, want):
    X = build(expr)
    rep = homology_report(X, X.top_dim, name=expr)
    assert rep["matches_N"] is True
    assert rep["stable_image_dims"] == want
    assert rep["complex"] == expr
