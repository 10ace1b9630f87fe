"""Dual-form chains on a finite simplicial set, in split normal form.

A :class:`PhiChain` stores rational combinations of pairs (nondegenerate
simplex, dual-form monomial on its standard model).  Every geometric
relation is applied eagerly: data attached to a face or a degenerate
simplex is transferred to a nondegenerate carrier the moment it appears,
so equality of chains is literal dictionary equality.

The boundary of a chain applies the one-simplex boundary to each term and
re-normalizes.  Cochain-side data (:class:`CochainForm`) is a compatible
choice of polynomial form on each nondegenerate simplex; the two sides
meet in an exact rational pairing.
"""

from .rationals import QZERO
from .ordmaps import OrdMap, identity, subset_incl, face
from .polyforms import FormElt, ThetaElt, _compositions
from .philocal import PhiElt, delta
from .sset import DegSimplex, nd
from .linalg import ChainComplexQ, QMatrix, rank_of_vectors

__all__ = [
    "PhiChain",
    "CochainForm",
    "canonicalize_term",
    "phi_boundary",
    "phi_of_chain",
    "truncated_complex",
    "validate_cochain",
    "global_pair",
    "omega_wedge",
    "homology_report",
]


def _term_sort_key(item):
    (ref, (e, S)), _ = item
    return (ref[0], ref[1], e, S)


class PhiChain:
    """Chain of dual-form monomials carried by nondegenerate simplices.

    ``terms`` maps ``(ref, (exps, S))`` to a rational; ``ref`` is a
    nondegenerate simplex of some dimension ``m``, ``exps`` a length-``m``
    exponent tuple and ``S`` a strictly increasing wedge subset of
    ``{1..m}`` with ``len(S)`` equal to the chain degree.
    """

    __slots__ = ("X", "d", "terms")

    def __init__(self, X, d, terms=None):
        self.X = X
        self.d = d
        clean = {}
        if terms:
            for (ref, (e, S)), c in terms.items():
                if not c:
                    continue
                m = ref[0]
                if len(S) != d:
                    raise ValueError("wedge size disagrees with chain degree")
                if len(e) != m:
                    raise ValueError("exponent tuple must match the dimension")
                if not X.has_ref(ref):
                    raise ValueError("unknown simplex %r" % (ref,))
                clean[(ref, (tuple(e), tuple(S)))] = c
        self.terms = clean

    @classmethod
    def zero(cls, X, d=0):
        return cls(X, d, {})

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_term_sort_key)

    def __add__(self, other):
        if other.X is not self.X and other.X != self.X:
            raise ValueError("chains live on different complexes")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.d != other.d:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, QZERO) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        res = PhiChain(self.X, self.d)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        res = PhiChain(self.X, self.d)
        if c:
            res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, PhiChain):
            return NotImplemented
        return self.X == other.X and self.terms == other.terms

    def __hash__(self):
        raise TypeError("unhashable (mutable term maps)")

    def __repr__(self):
        if self.is_zero():
            return "PhiChain(%r, 0)" % getattr(self.X, "name", "?")
        bits = []
        for (ref, (e, S)), c in self.sorted_terms():
            bits.append("%s*%r@(%s|%s)" % (c, ref[1], e, S))
        return "PhiChain[%s]" % ", ".join(bits)


def canonicalize_term(X, simplex, a):
    """Rewrite simplex-times-element into split normal form.

    ``simplex`` is a Ref or DegSimplex of dimension matching the ambient
    size of the :class:`PhiElt` ``a``.  Face-supported components move to
    the corresponding face of the simplex; a degenerate carrier then hands
    its data forward along the collapse, which may kill wedge parts.
    """
    if not isinstance(simplex, DegSimplex):
        simplex = DegSimplex(identity(simplex[0]), simplex)
    m = simplex.surj.dom
    if a.n != m:
        raise ValueError("element size does not match the simplex dimension")
    out = PhiChain.zero(X, a.m)
    for J, beta in a.comps.items():
        k = len(J) - 1
        if k == m:
            y = simplex
        else:
            y = X.apply_map(subset_incl(J, m), simplex)
        gamma = beta.pushforward(y.surj.values, y.surj.cod)
        if gamma.is_zero():
            continue
        add = {(y.ref, key): c for key, c in gamma.terms.items()}
        out = out + PhiChain(X, a.m, add)
    return out


def phi_boundary(c):
    """Boundary of a chain: termwise one-simplex boundary, re-normalized."""
    out = PhiChain.zero(c.X, c.d - 1)
    for (ref, (e, S)), q in c.terms.items():
        m = ref[0]
        elt = PhiElt.include(m, range(m + 1), ThetaElt.monomial(m, e, S))
        out = out + canonicalize_term(c.X, ref, delta(elt)).scale(q)
    return out


def phi_of_chain(X, coeffs, n=None):
    """Embed a normalized chain: each ``n``-simplex becomes its top wedge.

    ``coeffs`` maps nondegenerate refs of one common dimension to
    rationals.  The image of a single simplex is the simplex paired with
    ``w_1 ^ ... ^ w_n`` (the alternating-sign top class and the embedding
    sign cancel).  This is a chain map into the dual-form chains.
    """
    dims = {ref[0] for ref in coeffs}
    if n is None:
        if len(dims) > 1:
            raise ValueError("chain mixes dimensions %r" % sorted(dims))
        n = dims.pop() if dims else 0
    elif dims - {n}:
        raise ValueError("chain mixes dimensions %r" % sorted(dims | {n}))
    terms = {}
    for ref, q in coeffs.items():
        if not q:
            continue
        if not X.has_ref(ref) or not nd(ref):
            raise ValueError("chain must be carried by nondegenerate simplices")
        terms[(ref, ((0,) * n, tuple(range(1, n + 1))))] = q
    return PhiChain(X, n, terms)


def _basis_labels(X, d, weight_cap):
    out = []
    for m in range(X.top_dim + 1):
        if d > m:
            continue
        for ref in X.nd_refs(m):
            for e, S in _weighted_monomials(m, d, weight_cap):
                out.append((ref, e, S))
    return out


def _weighted_monomials(m, d, weight_cap):
    from itertools import combinations

    for S in combinations(range(1, m + 1), d):
        for total in range(weight_cap - d + 1):
            for e in _compositions(total, m):
                yield e, S


def truncated_complex(X, weight_cap):
    """Finite subcomplex spanned by terms of bounded weight.

    The weight of a term is its coefficient degree plus the wedge degree.
    The derivative part of the boundary drops weight by two; restriction
    to a nondegenerate face drops it by at least one; collapsing onto a
    degenerate face trades wedge degree for coefficient degree without
    gaining.  So the span is closed under the boundary, which is also
    verified here term by term while assembling the matrices.
    """
    if weight_cap < 0:
        raise ValueError("weight bound must be nonnegative")
    top = X.top_dim
    bases = [_basis_labels(X, d, weight_cap) for d in range(top + 1)]
    boundaries = [None]
    for d in range(1, top + 1):
        idx = {lab: i for i, lab in enumerate(bases[d - 1])}
        mat = QMatrix(len(bases[d - 1]), len(bases[d]))
        for col, (ref, e, S) in enumerate(bases[d]):
            one = PhiChain(X, d, {(ref, (e, S)): 1})
            for (ref2, (e2, S2)), c in phi_boundary(one).terms.items():
                row = idx.get((ref2, e2, S2))
                if row is None:
                    raise ValueError(
                        "boundary left the truncation at weight %d: %r"
                        % (weight_cap, (ref2, e2, S2))
                    )
                mat.set(row, col, mat.get(row, col) + c)
        boundaries.append(mat)
    return ChainComplexQ(bases, boundaries)


class CochainForm:
    """Choice of a polynomial form on every nondegenerate simplex.

    Values on degenerate simplices are determined by pullback and never
    stored.  Compatibility under the face maps is a separate check
    (:func:`validate_cochain`), not a construction invariant, so partial
    and wrong data can be built and then diagnosed.
    """

    __slots__ = ("X", "d", "values")

    def __init__(self, X, d, values):
        self.X = X
        self.d = d
        vals = {}
        for ref in X.all_nd_refs():
            m = ref[0]
            v = values.get(ref)
            if v is None:
                v = FormElt.zero(m)
            if v.n != m:
                raise ValueError("value on %r has wrong ambient size" % (ref,))
            vals[ref] = v
        self.values = vals

    @classmethod
    def constant(cls, X, poly_const):
        """Degree-0 form with the same constant on every simplex."""
        vals = {}
        for ref in X.all_nd_refs():
            vals[ref] = FormElt(ref[0], {((0,) * ref[0], ()): poly_const})
        return cls(X, 0, vals)

    def value_on(self, simplex):
        """Value on an arbitrary simplex presented as Ref or DegSimplex."""
        if not isinstance(simplex, DegSimplex):
            return self.values[simplex]
        base = self.values[simplex.ref]
        if simplex.surj.dom == simplex.surj.cod:
            return base
        return base.pullback(simplex.surj.values)


def validate_cochain(omega):
    """Face-compatibility check; returns None or the first violation.

    A violation is reported as ``(ref, face_index)``: pulling the value on
    ``ref`` back along that face map disagrees with the value determined
    by the face's normal form.
    """
    X = omega.X
    for ref in X.all_nd_refs():
        m = ref[0]
        if m == 0:
            continue
        mine = omega.values[ref]
        for i in range(m + 1):
            fx = X.face_of_nd(ref, i)
            lhs = mine.pullback(face(m, i).values)
            rhs = omega.value_on(fx)
            if lhs != rhs:
                return (ref, i)
    return None


def global_pair(c, omega):
    """Pair a chain against a cochain form: integrate term against value."""
    if c.X != omega.X:
        raise ValueError("chain and form live on different complexes")
    total = QZERO
    if c.d != omega.d:
        return total
    for (ref, (e, S)), q in c.terms.items():
        m = ref[0]
        alpha = ThetaElt.monomial(m, e, S)
        total += alpha.pair(omega.values[ref]).integrate() * q
    return total


def omega_wedge(P, omega, upsilon):
    """Wedge of forms on the factors, assembled on the product complex.

    ``P`` must be the product complex built from the two factor complexes;
    each of its nondegenerate simplices records the pair of factor
    simplices it projects to, which is where the factor values are read.
    """
    vals = {}
    for ref in P.all_nd_refs():
        a, b = P.pair_of[ref]
        va = omega.values[a.ref].pullback(a.surj.values)
        vb = upsilon.values[b.ref].pullback(b.surj.values)
        vals[ref] = va.wedge(vb)
    return CochainForm(P, omega.d + upsilon.d, vals)


def _inclusion_maps(C, Cp):
    out = {}
    for k in range(C.top + 1):
        M = QMatrix(Cp.dim(k), C.dim(k))
        idx = Cp.index[k]
        for col, lab in enumerate(C.bases[k]):
            M.set(idx[lab], col, 1)
        out[k] = M
    return out


def _phi_maps(X, N, G):
    out = {}
    for k in range(N.top + 1):
        M = QMatrix(G.dim(k), N.dim(k))
        idx = G.index[k]
        for col, cid in enumerate(N.bases[k]):
            lab = ((k, cid), (0,) * k, tuple(range(1, k + 1)))
            M.set(idx[lab], col, 1)
        out[k] = M
    return out


def _image_dim_and_span(fmaps, C, Cp, k):
    """Image of degree-``k`` homology inside the target, as spanning vectors."""
    boundary_cols = list(Cp.boundary(k + 1).columns())
    cycles = C.cycles(k)
    mapped = [fmaps[k].apply(z) for z in cycles] if k in fmaps else []
    base_rank = rank_of_vectors(boundary_cols)
    dim = rank_of_vectors(boundary_cols + mapped) - base_rank
    return dim, boundary_cols, mapped


def homology_report(X, weight_cap, name=None):
    """Homology of the dual-form chains via stabilized truncations.

    Computes the image of ``H(G_D) -> H(G_{D+2})`` at ``D = weight_cap``
    and again one step up; the two image dimension vectors must agree, or
    the computation refuses to answer.  The report also records whether
    the stable dimensions match ordinary simplicial homology and whether
    the embedded simplicial classes generate the stable image.
    """
    if name is None:
        name = getattr(X, "name", "") or "complex"
    top = X.top_dim
    reports = []
    for D in (weight_cap, weight_cap + 1):
        C = truncated_complex(X, D)
        Cp = truncated_complex(X, D + 2)
        inc = _inclusion_maps(C, Cp)
        dims = []
        generated = True
        N = X.chain_complex()
        phim = _phi_maps(X, N, Cp)
        for k in range(top + 1):
            dim, boundary_cols, mapped = _image_dim_and_span(inc, C, Cp, k)
            dims.append(dim)
            nz = N.cycles(k)
            nmapped = [phim[k].apply(z) for z in nz]
            base = rank_of_vectors(boundary_cols)
            joint = rank_of_vectors(boundary_cols + mapped + nmapped)
            phi_dim = rank_of_vectors(boundary_cols + nmapped) - base
            if not (dim == phi_dim == joint - base):
                generated = False
        reports.append((dims, generated))
    (dims0, gen0), (dims1, gen1) = reports
    if dims0 != dims1:
        raise RuntimeError(
            "truncated homology did not stabilize: image dims %r at weight %d "
            "but %r at weight %d" % (dims0, weight_cap, dims1, weight_cap + 1)
        )
    n_dims = list(X.chain_complex().homology_dims())
    g_dims = truncated_complex(X, weight_cap).homology_dims()
    return {
        "complex": name,
        "D": weight_cap,
        "dims_GD": list(g_dims),
        "stable_image_dims": list(dims0),
        "matches_N": dims0 == n_dims and gen0 and gen1,
    }
