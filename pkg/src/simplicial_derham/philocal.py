"""Face-indexed dual forms on a standard simplex.

A :class:`PhiElt` attaches to nonempty vertex subsets ``J`` of ``{0..n}``
polynomial dual forms living on the face spanned by ``J``, each written in
the standard coordinates of a simplex of size ``len(J)``.  The boundary
operator combines a within-face derivative part with a part that restricts
data to smaller faces; it pairs against ambient differential forms by
restricting face by face, pairing, and integrating exactly.

Everything is exact: coefficients are rationals throughout.
"""

from itertools import combinations

from .rationals import QONE, QZERO
from .polyforms import FormElt, Poly, ThetaElt, _compositions, theta_top
from .linalg import ChainComplexQ, QMatrix

__all__ = [
    "PhiElt",
    "delta",
    "delta_prime",
    "delta_dblprime",
    "push_phi",
    "big_pair",
    "xi_witness",
    "vertex_connector",
    "local_complex",
    "theta_top",
]


def _subset_key(J):
    J = tuple(sorted(J))
    if not J:
        raise ValueError("components live on nonempty vertex subsets")
    if len(set(J)) != len(J):
        raise ValueError("subset has repeated vertices")
    return J


class PhiElt:
    """Sparse family of dual forms indexed by nonempty vertex subsets.

    ``comps[J]`` is a :class:`ThetaElt` over ``[len(J)-1]``, the standard
    model of the face spanned by ``J``.  All stored components share the
    exterior degree ``m``; zero components are never stored.
    """

    __slots__ = ("n", "m", "comps")

    def __init__(self, n, m, comps=None):
        self.n = n
        self.m = m
        clean = {}
        if comps:
            for J, alpha in comps.items():
                J = _subset_key(J)
                if J[0] < 0 or J[-1] > n:
                    raise ValueError("subset outside the ambient vertex set")
                if alpha.is_zero():
                    continue
                if alpha.n != len(J) - 1:
                    raise ValueError("component size mismatch on %r" % (J,))
                if alpha.degree() != m:
                    raise ValueError("component degree mismatch on %r" % (J,))
                clean[J] = alpha
        self.comps = clean

    @classmethod
    def zero(cls, n, m=0):
        return cls(n, m, {})

    @classmethod
    def include(cls, n, J, alpha):
        """View a dual form on the face spanned by ``J`` inside ``{0..n}``."""
        return cls(n, alpha.degree(), {tuple(sorted(J)): alpha})

    @classmethod
    def top_class(cls, n):
        """The fundamental element on the full vertex set."""
        return cls.include(n, range(n + 1), theta_top(n))

    def is_zero(self):
        return not self.comps

    def components(self):
        """Components in lexicographic subset order."""
        for J in sorted(self.comps):
            yield J, self.comps[J]

    def bigrading(self, J):
        """Subset-size / complementary filtration degrees of one component."""
        J = _subset_key(J)
        return (len(J), self.m - len(J))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("ambient size mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.m != other.m:
            raise ValueError("degree mismatch")
        out = dict(self.comps)
        for J, alpha in other.comps.items():
            _acc_into(out, J, alpha)
        return PhiElt(self.n, self.m, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if not c:
            return PhiElt(self.n, self.m, {})
        return PhiElt(self.n, self.m, {J: a.scale(c) for J, a in self.comps.items()})

    def __eq__(self, other):
        if not isinstance(other, PhiElt):
            return NotImplemented
        # zeros of different formal degrees are the same element
        return self.n == other.n and self.comps == other.comps

    def __hash__(self):
        raise TypeError("unhashable (mutable component maps)")

    def __repr__(self):
        if self.is_zero():
            return "PhiElt(%d, 0)" % self.n
        parts = ", ".join("%r: %r" % (J, a) for J, a in self.components())
        return "PhiElt(%d, {%s})" % (self.n, parts)


def _acc_into(out, J, beta):
    cur = out.get(J)
    beta = beta if cur is None else cur + beta
    if beta.is_zero():
        out.pop(J, None)
    else:
        out[J] = beta


def _coeff_deriv(alpha, j):
    """Apply d/dt_j to every coefficient polynomial of ``alpha``."""
    out = {}
    for (e, S), c in alpha.terms.items():
        for ee, cc in Poly(alpha.n, {e: c}).deriv(j).terms.items():
            key = (ee, S)
            v = out.get(key, QZERO) + cc
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return ThetaElt(alpha.n, out)


def delta_prime(a):
    """Within-face boundary: coefficient derivatives contracted into wedges."""
    out = {}
    for J, alpha in a.comps.items():
        k = alpha.n
        acc = ThetaElt.zero(k)
        for j in range(1, k + 1):
            d_j = _coeff_deriv(alpha, j)
            if d_j.is_zero():
                continue
            acc = acc + d_j.interior(FormElt.dt(k, j))
        if not acc.is_zero():
            _acc_into(out, J, acc.scale(-1))
    return PhiElt(a.n, a.m - 1, out)


def delta_dblprime(a):
    """Face-restriction boundary: push each component to its facets."""
    out = {}
    for J, alpha in a.comps.items():
        if len(J) == 1:
            continue
        for p in range(len(J)):
            beta = alpha.contract_face(p)
            if beta.is_zero():
                continue
            _acc_into(out, J[:p] + J[p + 1:], beta.scale(-1))
    return PhiElt(a.n, a.m - 1, out)


def delta(a):
    """Total boundary; squares to zero."""
    return delta_prime(a) + delta_dblprime(a)


def push_phi(a, values, cod=None):
    """Transfer along an arbitrary vertex map ``{0..n} -> {0..cod}``.

    Each subset surjects onto its image; the component is pushed forward
    along that surjection (fibrewise integration on coefficients, dual
    transfer on wedges).  ``values`` may be any integer sequence, monotone
    or not, or an object carrying ``values``/``cod`` attributes.
    """
    if hasattr(values, "values") and hasattr(values, "cod"):
        cod = values.cod if cod is None else cod
        values = values.values
    values = tuple(values)
    if len(values) != a.n + 1:
        raise ValueError("vertex map must list an image for every vertex")
    if cod is None:
        cod = max(values)
    if min(values) < 0 or max(values) > cod:
        raise ValueError("vertex map value out of range")
    out = {}
    for J, alpha in a.comps.items():
        image = sorted({values[j] for j in J})
        pos = {v: i for i, v in enumerate(image)}
        local = tuple(pos[values[j]] for j in J)
        beta = alpha.pushforward(local, len(image) - 1)
        if not beta.is_zero():
            _acc_into(out, tuple(image), beta)
    return PhiElt(cod, a.m, out)


def big_pair(a, omega):
    """Pair against an ambient form: restrict to each face, pair, integrate.

    Mismatched degrees pair to zero.
    """
    if omega.n != a.n:
        raise ValueError("ambient size mismatch")
    total = QZERO
    for J, alpha in a.comps.items():
        total += alpha.pair(omega.res_to(J)).integrate()
    return total


def xi_witness(a):
    """An ambient form whose pairing against ``a`` is provably nonzero.

    Construction: take a largest face ``J`` carrying a nonzero component
    (lexicographically first among ties), read off a wedge direction ``S``
    it actually uses, and let ``f0`` be the paired coefficient polynomial.
    The witness is ``f * g * ds_T`` where ``f`` re-expresses ``f0`` in
    ambient coordinates, ``g`` is the product of the coordinates of ``J``,
    and ``T`` places ``S`` at the ambient positions of ``J``.  Components
    on faces not containing ``J`` kill ``g`` under restriction, larger
    faces carry nothing, so the pairing equals the integral of ``f0^2``
    against a positive weight: a strictly positive rational.
    """
    if a.is_zero():
        raise ValueError("witness requires a nonzero element")
    size = max(len(J) for J in a.comps)
    J = min(J2 for J2 in a.comps if len(J2) == size)
    alpha = a.comps[J]
    k = alpha.n
    S = min(S2 for (_, S2) in alpha.terms)
    f0 = alpha.pair(FormElt.monomial(k, (0,) * k, S))
    amb = {}
    for e, c in f0.terms.items():
        ee = [0] * a.n
        for pos in range(1, k + 1):
            ee[J[pos] - 1] = e[pos - 1]
        amb[tuple(ee)] = c
    f = Poly(a.n, amb)
    raw = tuple(1 if i in set(J) else 0 for i in range(a.n + 1))
    g = Poly.from_raw(a.n, {raw: QONE})
    fg = f * g
    T = tuple(J[s] for s in S)
    return FormElt(a.n, {(e, T): c for e, c in fg.terms.items()})


def vertex_connector(n, a, b):
    """Element whose boundary connects two vertex classes.

    ``delta(vertex_connector(n, a, b)) == include({b}, 1) - include({a}, 1)``.
    """
    if not (0 <= a < b <= n):
        raise ValueError("need 0 <= a < b <= ambient size")
    return PhiElt.include(n, (a, b), ThetaElt.w(1, 1))


def _face_monomials(k, m, weight_cap):
    """Basis labels ``(exps, S)`` over ``[k]`` with ``|exps| + m <= cap``."""
    for S in combinations(range(1, k + 1), m):
        for total in range(weight_cap - m + 1):
            for e in _compositions(total, k):
                yield e, S


def local_complex(n, weight_cap):
    """Finite weight truncation of the whole complex over ``{0..n}``.

    Weight of a component monomial is coefficient degree plus wedge degree.
    The boundary strictly lowers weight here (derivatives drop it by two,
    restrictions by at least one), so the truncation is a subcomplex.
    Labels are ``(J, exps, S)`` with ``exps`` over the face coordinates.
    """
    subsets = []
    for size in range(1, n + 2):
        subsets.extend(combinations(range(n + 1), size))
    bases = []
    for m in range(n + 1):
        labels = []
        for J in subsets:
            k = len(J) - 1
            if m > k:
                continue
            for e, S in _face_monomials(k, m, weight_cap):
                labels.append((J, e, S))
        bases.append(labels)
    boundaries = [None]
    for m in range(1, n + 1):
        idx = {lab: i for i, lab in enumerate(bases[m - 1])}
        mat = QMatrix(len(bases[m - 1]), len(bases[m]))
        for col, (J, e, S) in enumerate(bases[m]):
            elt = PhiElt.include(n, J, ThetaElt.monomial(len(J) - 1, e, S))
            for J2, beta in delta(elt).comps.items():
                for (e2, S2), c in beta.terms.items():
                    row = idx[(J2, e2, S2)]
                    mat.set(row, col, mat.get(row, col) + c)
        boundaries.append(mat)
    return ChainComplexQ(bases, boundaries)
