"""Finite simplicial sets presented by nondegenerate simplices.

A complex stores, per dimension, an ordered list of nondegenerate simplex ids
and, for every such simplex, the tuple of its faces in normal form.  A general
simplex is a :class:`DegSimplex`: a pair (surjection, nondegenerate id), the
Eilenberg-Zilber normal form.  ``apply_map`` pushes a simplex along any
simplex-category map by factoring it and peeling faces, always landing back in
normal form.

Builders cover simplices, their boundaries, combinatorial cubes, spheres
(cube mod boundary), binary products, quotients and skeleta, plus JSON
round-tripping and a small expression grammar used by the command line.
"""

import itertools
import json
from typing import NamedTuple, Tuple

from .rationals import Q, qstr, qparse
from .ordmaps import OrdMap, compose, identity, face, constant
from .linalg import QMatrix, ChainComplexQ


Ref = Tuple[int, str]  # (dimension, id)


class DegSimplex(NamedTuple):
    """Normal form (surjection, nondegenerate simplex reference)."""

    surj: OrdMap
    ref: Ref

    @property
    def dim(self):
        return self.surj.dom

    def is_nondegenerate(self):
        return self.surj.dom == self.surj.cod


def nd(ref):
    """The nondegenerate simplex ``ref`` as a :class:`DegSimplex`."""
    return DegSimplex(identity(ref[0]), ref)


class SSet:
    """A finite simplicial set with ordered nondegenerate cells."""

    def __init__(self, name=""):
        self.name = name
        self.cells = {}      # dim -> list of ids
        self.face_table = {}  # ref -> tuple(DegSimplex), length dim+1
        self.pair_of = None   # products: ref -> (DegSimplex in X, DegSimplex in Y)
        self.base_ref = None  # quotients: the collapsed basepoint ref

    # -- construction -------------------------------------------------------

    def add_cell(self, dim, cid, faces=()):
        if dim < 0:
            raise ValueError("negative dimension")
        ids = self.cells.setdefault(dim, [])
        ref = (dim, cid)
        if ref in self.face_table:
            raise ValueError("duplicate cell %r" % (ref,))
        faces = tuple(faces)
        if len(faces) != (dim + 1 if dim > 0 else 0):
            raise ValueError("cell %r needs %d faces" % (ref, dim + 1 if dim else 0))
        ids.append(cid)
        self.face_table[ref] = faces
        return ref

    # -- basic queries ------------------------------------------------------

    @property
    def top_dim(self):
        return max((d for d, ids in self.cells.items() if ids), default=0)

    def nd_ids(self, dim):
        return tuple(self.cells.get(dim, ()))

    def nd_refs(self, dim):
        return tuple((dim, cid) for cid in self.cells.get(dim, ()))

    def all_nd_refs(self):
        for d in sorted(self.cells):
            for cid in self.cells[d]:
                yield (d, cid)

    def nd_counts(self):
        return tuple(len(self.cells.get(d, ())) for d in range(self.top_dim + 1))

    def euler_characteristic(self):
        return sum((-1) ** d * c for d, c in enumerate(self.nd_counts()))

    def has_ref(self, ref):
        return ref in self.face_table

    def face_of_nd(self, ref, i):
        """Stored face ``d_i`` of a nondegenerate simplex, in normal form."""
        return self.face_table[ref][i]

    # -- the simplicial action ----------------------------------------------

    def apply_map(self, f, target):
        """Act by ``f`` in the simplex category: ``target . f`` in normal form.

        ``target`` is a Ref or DegSimplex of dimension ``f.cod``; the result
        is the DegSimplex of dimension ``f.dom``.
        """
        if isinstance(target, DegSimplex):
            f = compose(target.surj, f)
            ref = target.ref
        else:
            ref = target
        if f.cod != ref[0]:
            raise ValueError("map lands in [%d], simplex has dim %d" % (f.cod, ref[0]))
        while not f.is_surjective():
            n = f.cod
            missing = max(set(range(n + 1)) - set(f.values))
            # f = face(n, missing) o h, and target . face = stored face table
            h = OrdMap([v if v < missing else v - 1 for v in f.values], cod=n - 1)
            step = self.face_table[ref][missing]
            f = compose(step.surj, h)
            ref = step.ref
        return DegSimplex(f, ref)

    def face(self, x, i):
        """``d_i`` of a Ref or DegSimplex, in normal form."""
        dim = x.dim if isinstance(x, DegSimplex) else x[0]
        return self.apply_map(face(dim, i), x)

    def degenerate_simplices(self, m):
        """Every m-simplex (degenerate or not) as a DegSimplex, sorted."""
        out = []
        for k in range(m + 1):
            for surj in surjections(m, k):
                for ref in self.nd_refs(k):
                    out.append(DegSimplex(surj, ref))
        return out

    # -- chains --------------------------------------------------------------

    def boundary_matrix(self, k):
        """Normalized-chains boundary ``N_k -> N_{k-1}`` (degenerate faces drop)."""
        rows = self.nd_ids(k - 1)
        cols = self.nd_ids(k)
        idx = {cid: i for i, cid in enumerate(rows)}
        mat = QMatrix(len(rows), len(cols))
        for j, cid in enumerate(cols):
            for i, ds in enumerate(self.face_table[(k, cid)]):
                if ds.is_nondegenerate():
                    r = idx[ds.ref[1]]
                    mat.set(r, j, mat.get(r, j) + Q(-1) ** i)
        return mat

    def chain_complex(self, top=None):
        """Normalized chain complex up to ``top`` (default: top dimension)."""
        if top is None:
            top = self.top_dim
        bases = [list(self.nd_ids(d)) for d in range(top + 1)]
        mats = [None] + [self.boundary_matrix(k) for k in range(1, top + 1)]
        return ChainComplexQ(bases, mats)

    # -- validation ----------------------------------------------------------

    def validate(self):
        """Check structural well-formedness and the simplicial identities."""
        for ref, faces in self.face_table.items():
            dim, cid = ref
            if cid not in self.cells.get(dim, ()):
                raise ValueError("cell %r missing from index" % (ref,))
            for i, ds in enumerate(faces):
                if not isinstance(ds, DegSimplex):
                    raise ValueError("face %d of %r is not a simplex" % (i, ref))
                if ds.surj.dom != dim - 1:
                    raise ValueError("face %d of %r has wrong dimension" % (i, ref))
                if not ds.surj.is_surjective():
                    raise ValueError("face %d of %r is not in normal form" % (i, ref))
                if ds.ref not in self.face_table:
                    raise ValueError("face %d of %r hits unknown cell %r" % (i, ref, ds.ref))
                if ds.ref[0] != ds.surj.cod:
                    raise ValueError("face %d of %r: mismatched base dim" % (i, ref))
        for ref in self.all_nd_refs():
            n = ref[0]
            if n < 2:
                continue
            for j in range(n + 1):
                for i in range(j):
                    # d_i d_j = d_{j-1} d_i
                    lhs = self.face(self.face(ref, j), i)
                    rhs = self.face(self.face(ref, i), j - 1)
                    if lhs != rhs:
                        raise ValueError(
                            "simplicial identity fails at %r: d_%d d_%d" % (ref, i, j)
                        )
        return True

    # -- serialization --------------------------------------------------------

    def to_jsonable(self):
        top = self.top_dim
        simpl = {}
        for d in range(top + 1):
            entries = []
            for cid in self.nd_ids(d):
                if d == 0:
                    entries.append({"id": cid, "faces": []})
                else:
                    faces = [
                        {"surj": list(ds.surj.values), "base": ds.ref[1]}
                        for ds in self.face_table[(d, cid)]
                    ]
                    entries.append({"id": cid, "faces": faces})
            simpl[str(d)] = entries
        return {"dims": top, "simplices": simpl}

    def save_json(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_jsonable(), fh, indent=1, sort_keys=True)
            fh.write("\n")

    @classmethod
    def from_jsonable(cls, data, name=""):
        X = cls(name)
        top = data["dims"]
        simpl = data["simplices"]
        for d in range(top + 1):
            for entry in simpl.get(str(d), []):
                cid = entry["id"]
                faces = []
                for fd in entry["faces"]:
                    vals = tuple(fd["surj"])
                    surj = OrdMap(vals, cod=vals[-1])
                    faces.append(DegSimplex(surj, (surj.cod, fd["base"])))
                X.add_cell(d, cid, faces)
        X.validate()
        return X

    @classmethod
    def load_json(cls, path, name=""):
        with open(path) as fh:
            data = json.load(fh)
        return cls.from_jsonable(data, name=name or str(path))


def surjections(m, k):
    """All nondecreasing surjections ``[m] -> [k]``, lexicographic."""
    if k > m or k < 0:
        return
    for jumps in itertools.combinations(range(1, m + 1), k):
        vals = []
        v = 0
        nxt = 0
        for i in range(m + 1):
            if nxt < k and jumps[nxt] == i:
                v += 1
                nxt += 1
            vals.append(v)
        yield OrdMap(vals, cod=k)


# ---------------------------------------------------------------------------
# builders


def delta(n):
    """The standard n-simplex; cells are vertex subsets of {0..n}."""
    X = SSet("delta:%d" % n)
    for k in range(n + 1):
        for verts in itertools.combinations(range(n + 1), k + 1):
            cid = ".".join(str(v) for v in verts)
            faces = []
            for i in range(k + 1) if k else ():
                sub = verts[:i] + verts[i + 1:]
                faces.append(nd((k - 1, ".".join(str(v) for v in sub))))
            X.add_cell(k, cid, faces)
    return X


def skeleton(X, k):
    """The subcomplex of cells of dimension at most ``k``."""
    S = SSet("%s|skeleton:%d" % (X.name, k))
    for d in sorted(X.cells):
        if d > k:
            continue
        for cid in X.cells[d]:
            S.add_cell(d, cid, X.face_table[(d, cid)])
    S.base_ref = X.base_ref if X.base_ref in S.face_table else None
    return S


def boundary_delta(n):
    X = skeleton(delta(n), n - 1)
    X.name = "boundary:%d" % n
    return X


def point():
    X = SSet("point")
    X.add_cell(0, "0")
    return X


# -- combinatorial cubes ------------------------------------------------------
#
# An n-cell of the m-cube is one token per axis: "0", "1", or "jK" for the
# axis that steps from 0 to 1 between vertices K-1 and K; jointly the jumps
# must cover {1..n} exactly for the cell to be nondegenerate.


def _cube_id(tokens):
    return ",".join(tokens)


def _cube_face_tokens(tokens, n, i):
    """Face d_i of a cube cell: per-axis jump bookkeeping, then renormalize."""
    raw = []
    for tok in tokens:
        if tok[0] != "j":
            raw.append(tok)
            continue
        j = int(tok[1:])
        if j > i:
            j -= 1
        if j == 0:
            raw.append("1")
        elif j == n:  # only reachable when i == n and the axis jumped last
            raw.append("0")
        else:
            raw.append("j%d" % j)
    used = sorted({int(t[1:]) for t in raw if t[0] == "j"})
    rank = {j: r + 1 for r, j in enumerate(used)}
    base = tuple(t if t[0] != "j" else "j%d" % rank[int(t[1:])] for t in raw)
    # surjection [n-1] ->> [len(used)] jumping exactly at `used`
    vals = []
    v = 0
    for vert in range(n):
        if v < len(used) and used[v] == vert:
            v += 1
        vals.append(v)
    surj = OrdMap(vals, cod=len(used))
    return surj, base


def cube(m):
    """The m-fold product of intervals as a simplicial set."""
    X = SSet("cube:%d" % m)
    axes = range(m)
    for n in range(m + 1):
        choices = ["0", "1"] + ["j%d" % k for k in range(1, n + 1)]
        for tokens in itertools.product(choices, repeat=m):
            jumps = {int(t[1:]) for t in tokens if t[0] == "j"}
            if jumps != set(range(1, n + 1)):
                continue
            faces = []
            for i in range(n + 1) if n else ():
                surj, base = _cube_face_tokens(tokens, n, i)
                faces.append(DegSimplex(surj, (surj.cod, _cube_id(base))))
            X.add_cell(n, _cube_id(tokens), faces)
    del axes
    return X


def cube_boundary_ids(m):
    """Cells of the cube having some constant axis (the geometric boundary)."""
    out = set()
    X = cube(m)
    for ref in X.all_nd_refs():
        tokens = ref[1].split(",")
        if any(t in ("0", "1") for t in tokens):
            out.add(ref)
    return out


def quotient(X, collapse, name=None):
    """Collapse a nonempty subcomplex of ``X`` to a single basepoint ``*``.

    ``collapse`` is a set of Refs of ``X``; it must be closed under faces.
    """
    collapse = set(collapse)
    if not collapse:
        raise ValueError("cannot collapse an empty subcomplex")
    for ref in collapse:
        if ref not in X.face_table:
            raise ValueError("unknown cell %r" % (ref,))
        for ds in X.face_table[ref]:
            if ds.ref not in collapse:
                raise ValueError("collapse set not closed under faces at %r" % (ref,))
    Qt = SSet(name or "%s/%d-cells" % (X.name, len(collapse)))
    star = (0, "*")
    Qt.add_cell(0, "*")
    Qt.base_ref = star
    for d in sorted(X.cells):
        for cid in X.cells[d]:
            ref = (d, cid)
            if ref in collapse:
                continue
            faces = []
            for ds in X.face_table[ref]:
                if ds.ref in collapse:
                    faces.append(DegSimplex(constant(d - 1, 0, 0), star))
                else:
                    faces.append(ds)
            Qt.add_cell(d, cid, faces)
    return Qt


def sphere(m):
    """The m-sphere: the m-cube with its boundary collapsed to a point."""
    if m < 1:
        raise ValueError("sphere dimension must be >= 1")
    S = quotient(cube(m), cube_boundary_ids(m), name="sphere:%d" % m)
    return S


# -- products -----------------------------------------------------------------


def _paths(p, q, k):
    """Monotone lattice paths (0,0)->(p,q) with k unit steps x/y/b(oth)."""
    if p < 0 or q < 0 or k < 0 or p + q < k or max(p, q) > k:
        return
    if k == 0:
        yield ""
        return
    for step, dp, dq in (("x", 1, 0), ("y", 0, 1), ("b", 1, 1)):
        if dp <= p and dq <= q:
            for rest in _paths(p - dp, q - dq, k - 1):
                yield step + rest


def _path_to_surjections(path):
    """The path's pair of jointly injective surjections out of [len(path)]."""
    xs, ys = [0], [0]
    for step in path:
        xs.append(xs[-1] + (step in "xb"))
        ys.append(ys[-1] + (step in "yb"))
    return OrdMap(xs, cod=xs[-1]), OrdMap(ys, cod=ys[-1])


def product(X, Y, name=None):
    """Binary product; nondegenerate cells are jointly injective pairs."""
    P = SSet(name or "product:(%s,%s)" % (X.name, Y.name))
    P.pair_of = {}
    ref_of_pair = {}

    def pair_key(a, b):
        return (a.surj.values, a.ref, b.surj.values, b.ref)

    top = X.top_dim + Y.top_dim
    for k in range(top + 1):
        for xref in X.all_nd_refs():
            for yref in Y.all_nd_refs():
                p, q = xref[0], yref[0]
                for path in _paths(p, q, k):
                    zeta, xi = _path_to_surjections(path)
                    a = DegSimplex(zeta, xref)
                    b = DegSimplex(xi, yref)
                    cid = "[%s]x[%s]@%s" % (xref[1], yref[1], path)
                    faces = []
                    for i in range(k + 1) if k else ():
                        fa = X.apply_map(face(k, i), a)
                        fb = Y.apply_map(face(k, i), b)
                        tau, na, nb = _joint_normal_form(fa, fb)
                        base = ref_of_pair[pair_key(na, nb)]
                        faces.append(DegSimplex(tau, base))
                    ref = P.add_cell(k, cid, faces)
                    P.pair_of[ref] = (a, b)
                    ref_of_pair[pair_key(a, b)] = ref
    P.ref_of_pair = ref_of_pair
    return P


def _joint_normal_form(a, b):
    """Split a simplex pair into a shared surjection and an injective pair.

    Both inputs are in their single-factor normal forms already; the shared
    degeneracy is the rank map of the pointwise value pairs.
    """
    m = a.surj.dom
    pairs = list(zip(a.surj.values, b.surj.values))
    tau_vals = []
    keep = []
    r = -1
    last = None
    for i, pv in enumerate(pairs):
        if pv != last:
            r += 1
            keep.append(i)
            last = pv
        tau_vals.append(r)
    tau = OrdMap(tau_vals, cod=r)
    na = DegSimplex(OrdMap([a.surj.values[i] for i in keep], cod=a.surj.cod), a.ref)
    nb = DegSimplex(OrdMap([b.surj.values[i] for i in keep], cod=b.surj.cod), b.ref)
    del m
    return tau, na, nb


def product_pair(P, ref):
    """The (DegSimplex, DegSimplex) pair a product cell stands for."""
    if P.pair_of is None:
        raise ValueError("not a product complex")
    return P.pair_of[ref]


def product_ref(P, a, b):
    """Reverse lookup: the cell for a jointly injective normal-form pair."""
    return P.ref_of_pair[(a.surj.values, a.ref, b.surj.values, b.ref)]


# ---------------------------------------------------------------------------
# build expressions: delta:n | boundary:n | sphere:k | product:(a,b)
#                  | quotient:(a,sub) | file:path


def _split_args(body):
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise ValueError("expected two comma-separated arguments: %r" % body)


def build(expr):
    """Construct a complex from a builder expression string."""
    expr = expr.strip()
    head, sep, rest = expr.partition(":")
    if not sep:
        raise ValueError("bad expression %r" % expr)
    head = head.strip()
    rest = rest.strip()
    if head == "delta":
        return delta(int(rest))
    if head == "boundary":
        return boundary_delta(int(rest))
    if head == "sphere":
        return sphere(int(rest))
    if head == "file":
        return SSet.load_json(rest, name=expr)
    if head in ("product", "quotient"):
        if not (rest.startswith("(") and rest.endswith(")")):
            raise ValueError("%s needs parenthesized arguments" % head)
        left, right = _split_args(rest[1:-1])
        A = build(left)
        B = build(right)
        if head == "product":
            P = product(A, B)
            P.name = expr
            return P
        sub = set()
        for ref in B.all_nd_refs():
            if not A.has_ref(ref):
                raise ValueError("%r is not a cell of %s" % (ref, A.name))
            sub.add(ref)
        Qt = quotient(A, sub, name=expr)
        return Qt
    raise ValueError("unknown builder %r" % head)


# small round-trip helpers for rational JSON payloads

def chain_to_jsonable(coeffs):
    return {cid: qstr(v) for cid, v in sorted(coeffs.items())}


def chain_from_jsonable(data):
    return {cid: qparse(s) for cid, s in data.items()}
