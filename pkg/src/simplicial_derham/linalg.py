"""Exact rational linear algebra for chain complexes.

Sparse matrices are stored row-major as dicts (no explicit zeros).  Ranks use
fraction-free integer elimination (rows are scaled to integers first, and row
updates are the Bareiss-style ``r2*p - r1*e`` followed by a gcd reduction);
kernels and solves run the same elimination with rational back-substitution.
Pivoting is deterministic: columns in order, first usable row ("first"), with
an alternative max-magnitude strategy kept for cross-checking ranks.
"""

import math

from .rationals import Q, QZERO


class QMatrix:
    """Sparse rational matrix: ``rows[i]`` maps column -> nonzero Fraction."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [{} for _ in range(nrows)]
        if rows is not None:
            for i, row in enumerate(rows):
                for j, v in row.items():
                    self.set(i, j, v)

    @classmethod
    def from_columns(cls, nrows, cols):
        m = cls(nrows, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                m.set(i, j, v)
        return m

    def set(self, i, j, v):
        if not 0 <= i < self.nrows or not 0 <= j < self.ncols:
            raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, self.nrows, self.ncols))
        v = Q(v)
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def get(self, i, j):
        return self.rows[i].get(j, QZERO)

    def column(self, j):
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return all(not r for r in self.rows)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = QMatrix(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc = {}
            for k, v in row.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, QZERO) + v * w
            for j, v in acc.items():
                if v:
                    out.rows[i][j] = v
        return out

    def apply(self, vec):
        """Matrix times a sparse column vector (dict)."""
        out = {}
        for i, row in enumerate(self.rows):
            s = QZERO
            for j, v in row.items():
                c = vec.get(j)
                if c:
                    s += v * c
            if s:
                out[i] = s
        return out

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.rows == other.rows
        )


def _int_rows(rows):
    """Scale each rational row to a primitive integer row (rank/kernel safe)."""
    out = []
    for row in rows:
        if not row:
            continue
        lcm = 1
        for v in row.values():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = {j: int(v * lcm) for j, v in row.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, abs(v))
        if g > 1:
            ints = {j: v // g for j, v in ints.items()}
        out.append(ints)
    return out


def rank(M, pivot="first"):
    """Rank by fraction-free elimination.  ``pivot``: "first" or "maxabs"."""
    rows = _int_rows(M.rows if isinstance(M, QMatrix) else M)
    ncols = M.ncols if isinstance(M, QMatrix) else (
        max((j for r in rows for j in r), default=-1) + 1
    )
    r = 0
    for col in range(ncols):
        cand = [i for i in range(len(rows)) if col in rows[i]]
        if not cand:
            continue
        if pivot == "maxabs":
            pick = max(cand, key=lambda i: (abs(rows[i][col]), -i))
        else:
            pick = cand[0]
        prow = rows.pop(pick)
        p = prow[col]
        nxt = []
        for row in rows:
            e = row.get(col)
            if not e:
                nxt.append(row)
                continue
            new = {}
            for j in set(row) | set(prow):
                v = row.get(j, 0) * p - prow.get(j, 0) * e
                if v:
                    new[j] = v
            if new:
                g = 0
                for v in new.values():
                    g = math.gcd(g, abs(v))
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        rows = nxt
        r += 1
    return r


def _rational_echelon(M):
    """Row echelon over Q.  Returns (pivot_rows, pivot_cols) with unit pivots."""
    rows = [dict(r) for r in M.rows if r]
    pivots = []  # (col, row dict with row[col] == 1)
    for row in rows:
        for pcol, prow in pivots:
            e = row.get(pcol)
            if e:
                for j, v in prow.items():
                    nv = row.get(j, QZERO) - e * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        if row:
            pcol = min(row)
            pe = row[pcol]
            row = {j: v / pe for j, v in row.items()}
            pivots.append((pcol, row))
    pivots.sort(key=lambda t: t[0])
    return pivots


def kernel_basis(M):
    """Exact basis of ``{x : Mx = 0}`` as sparse column dicts, one per free column."""
    pivots = _rational_echelon(M)
    # back-substitute to reduced echelon form
    for idx in range(len(pivots) - 1, -1, -1):
        pcol, prow = pivots[idx]
        for _, above in pivots[:idx]:
            e = above.get(pcol)
            if e:
                for j, v in prow.items():
                    nv = above.get(j, QZERO) - e * v
                    if nv:
                        above[j] = nv
                    else:
                        above.pop(j, None)
    pivot_cols = [pc for pc, _ in pivots]
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        vec = {free: Q(1)}
        for pc, prow in pivots:
            e = prow.get(free)
            if e:
                vec[pc] = -e
        basis.append(vec)
    return basis


def solve(M, b):
    """One exact solution of ``Mx = b`` or ``None`` if inconsistent."""
    aug = QMatrix(M.nrows, M.ncols + 1)
    for i, row in enumerate(M.rows):
        aug.rows[i] = dict(row)
    for i, v in b.items():
        aug.set(i, M.ncols, v)
    pivots = _rational_echelon(aug)
    for pc, _ in pivots:
        if pc == M.ncols:
            return None
    for idx in range(len(pivots) - 1, -1, -1):
        pc, prow = pivots[idx]
        for _, above in pivots[:idx]:
            e = above.get(pc)
            if e:
                for j, v in prow.items():
                    nv = above.get(j, QZERO) - e * v
                    if nv:
                        above[j] = nv
                    else:
                        above.pop(j, None)
    x = {}
    for pc, prow in pivots:
        v = prow.get(M.ncols, QZERO)
        if v:
            x[pc] = v
    return x


def rank_of_vectors(vectors):
    """Rank of the span of sparse vectors (dicts over a common index set)."""
    ncols = max((j for v in vectors for j in v), default=-1) + 1
    m = QMatrix(len(vectors), max(ncols, 1))
    for i, v in enumerate(vectors):
        for j, c in v.items():
            m.set(i, j, c)
    return rank(m)


class ChainComplexQ:
    """Nonnegatively graded chain complex with labelled bases.

    ``bases[k]`` is the ordered label list in degree ``k``; ``boundary(k)`` is
    the matrix of the differential ``C_k -> C_{k-1}``.  ``d d = 0`` is checked
    at construction, before any homology is computed.
    """

    def __init__(self, bases, boundaries, check=True):
        self.bases = [list(b) for b in bases]
        self.index = [
            {label: i for i, label in enumerate(b)} for b in self.bases
        ]
        self.d = list(boundaries)  # d[k]: degree k -> k-1; d[0] unused
        if len(self.d) != len(self.bases):
            raise ValueError("need one boundary slot per degree")
        for k in range(1, len(self.bases)):
            mat = self.d[k]
            if mat.nrows != len(self.bases[k - 1]) or mat.ncols != len(self.bases[k]):
                raise ValueError("boundary shape mismatch in degree %d" % k)
        if check:
            for k in range(2, len(self.bases)):
                if not self.d[k - 1].mul(self.d[k]).is_zero():
                    raise ValueError("d o d != 0 between degrees %d and %d" % (k, k - 2))

    @property
    def top(self):
        return len(self.bases) - 1

    def dim(self, k):
        if 0 <= k <= self.top:
            return len(self.bases[k])
        return 0

    def boundary(self, k):
        if 1 <= k <= self.top:
            return self.d[k]
        return QMatrix(self.dim(k - 1), self.dim(k))

    def rank_d(self, k):
        if not 1 <= k <= self.top:
            return 0
        return rank(self.d[k])

    def homology_dims(self):
        """``dim H_k = dim ker d_k - rank d_{k+1}`` for ``k = 0..top``."""
        out = []
        for k in range(self.top + 1):
            out.append(self.dim(k) - self.rank_d(k) - self.rank_d(k + 1))
        return tuple(out)

    def cycles(self, k):
        if k == 0:
            return [{i: Q(1)} for i in range(self.dim(0))]
        if k > self.top:
            return []
        return kernel_basis(self.d[k])


def check_chain_map(fmaps, C, Cp):
    """Verify ``f d = d f`` degreewise; return None or a witness string."""
    for k in range(1, C.top + 1):
        fk = fmaps[k] if k < len(fmaps) else QMatrix(Cp.dim(k), C.dim(k))
        fk1 = fmaps[k - 1] if k - 1 < len(fmaps) else QMatrix(Cp.dim(k - 1), C.dim(k - 1))
        lhs = fk1.mul(C.boundary(k))
        rhs = Cp.boundary(k).mul(fk)
        if lhs != rhs:
            for j in range(lhs.ncols):
                if lhs.column(j) != rhs.column(j):
                    return "degree %d, basis column %d (%r)" % (k, j, C.bases[k][j])
    return None


def induced_image_dims(fmaps, C, Cp, k):
    """``dim im(H_k(C) -> H_k(Cp))`` for the chain map given degreewise.

    Raises ``ValueError`` with a witness if the maps fail to commute with the
    boundaries.
    """
    witness = check_chain_map(fmaps, C, Cp)
    if witness is not None:
        raise ValueError("not a chain map: fails at " + witness)
    fk = fmaps[k] if k < len(fmaps) else QMatrix(Cp.dim(k), C.dim(k))
    fz = [fk.apply(z) for z in C.cycles(k)]
    bp = [c for c in Cp.boundary(k + 1).columns() if c]
    r_b = rank_of_vectors(bp) if bp else 0
    r_all = rank_of_vectors(fz + bp) if (fz or bp) else 0
    return r_all - r_b


def quasi_iso_check(fmaps, C, Cp, k_range=None, through=None, Cpp=None):
    """Per-degree report comparing homology dims with the induced image.

    Without ``through`` the comparison is literal: the image of ``H_k(C)``
    in ``H_k(Cp)`` against both homology dimensions.  With ``through`` (a
    further chain map ``Cp -> Cpp``) the target side is stabilized: the
    composite image of ``H_k(C)`` inside ``H_k(Cpp)`` is compared against
    the image of ``H_k(Cp)`` there, so transient truncation classes that
    die one step up do not count against surjectivity.
    """
    if k_range is None:
        k_range = range(max(C.top, Cp.top) + 1)
    if through is not None:
        comp = []
        for k in range(C.top + 1):
            fk = fmaps[k] if k < len(fmaps) else QMatrix(Cp.dim(k), C.dim(k))
            gk = through[k] if k < len(through) else QMatrix(Cpp.dim(k), Cp.dim(k))
            comp.append(gk.mul(fk))
    report = {}
    for k in k_range:
        hc = C.homology_dims()[k] if k <= C.top else 0
        if through is None:
            hcp = Cp.homology_dims()[k] if k <= Cp.top else 0
            img = induced_image_dims(fmaps, C, Cp, k) if k <= C.top else 0
        else:
            hcp = induced_image_dims(through, Cp, Cpp, k) if k <= Cp.top else 0
            img = induced_image_dims(comp, C, Cpp, k) if k <= C.top else 0
        report[k] = {
            "dim_H_source": hc,
            "dim_H_target": hcp,
            "image_dim": img,
            "injective": img == hc,
            "surjective": img == hcp,
            "iso": img == hc == hcp,
        }
    return report
