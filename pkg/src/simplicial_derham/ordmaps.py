"""Nondecreasing maps between finite ordinals, and shuffle combinatorics.

The objects here are the arrows of the simplex category: nondecreasing maps
``[n] -> [m]`` where ``[n] = {0, 1, ..., n}``.  An :class:`OrdMap` stores the
dense value vector together with the codomain top element, so non-surjective
maps are unambiguous.

Conventions used throughout the package:

* ``dagger`` of a surjection picks the minimal section, ``f_dag(j) = min
  f^{-1}(j)``, so ``f o f_dag = id``.
* A *pointed* subset of ``[n]`` is one containing 0.  For pointed ``A`` the
  retraction ``pi_proj(A, n)`` sends ``i`` to the index of ``max(a in A : a <=
  i)`` in ``A``; ``eps(A, n) = sigma_incl o pi_proj`` is the idempotent
  collapsing onto ``A``.
* An ``(n_1, ..., n_r)``-shuffle is a tuple of surjections ``z_i : [n] ->
  [n_i]`` with ``n = sum(n_i)`` that is jointly injective; these biject with
  ordered partitions of ``{1, ..., n}`` into blocks of sizes ``n_i``.
"""

import math
from itertools import combinations


class OrdMap:
    """A nondecreasing map ``[n] -> [cod]`` stored as its value tuple."""

    __slots__ = ("values", "cod")

    def __init__(self, values, cod=None):
        values = tuple(values)
        if not values:
            raise ValueError("empty domain is not an ordinal")
        if cod is None:
            cod = values[-1]
        for a, b in zip(values, values[1:]):
            if b < a:
                raise ValueError("values must be nondecreasing: %r" % (values,))
        if values[0] < 0 or values[-1] > cod:
            raise ValueError("values out of range for codomain [%d]" % cod)
        self.values = values
        self.cod = cod

    @property
    def dom(self):
        return len(self.values) - 1

    def __call__(self, i):
        return self.values[i]

    def __eq__(self, other):
        return (
            isinstance(other, OrdMap)
            and self.values == other.values
            and self.cod == other.cod
        )

    def __hash__(self):
        return hash((self.values, self.cod))

    def __repr__(self):
        return "OrdMap(%r, cod=%d)" % (list(self.values), self.cod)

    def is_surjective(self):
        return set(self.values) == set(range(self.cod + 1))

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def image(self):
        return tuple(sorted(set(self.values)))

    def dagger(self):
        """Minimal section of a surjection: ``dagger(j) = min self^{-1}(j)``."""
        if not self.is_surjective():
            raise ValueError("dagger needs a surjective map")
        sec = []
        for j in range(self.cod + 1):
            sec.append(self.values.index(j))
        return OrdMap(sec, cod=self.dom)


def compose(f, g):
    """``compose(f, g)(i) = f(g(i))``."""
    if g.cod != f.dom:
        raise ValueError("domains do not match: %r after %r" % (f, g))
    return OrdMap(tuple(f.values[v] for v in g.values), cod=f.cod)


def identity(n):
    return OrdMap(range(n + 1), cod=n)


def face(n, i):
    """The injection ``[n-1] -> [n]`` skipping ``i``."""
    if not 0 <= i <= n:
        raise ValueError("face index out of range")
    return OrdMap([j for j in range(n + 1) if j != i], cod=n)


def degeneracy(n, i):
    """The surjection ``[n+1] -> [n]`` hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError("degeneracy index out of range")
    vals = list(range(i + 1)) + list(range(i, n + 1))
    return OrdMap(vals, cod=n)


def constant(n, value, cod):
    return OrdMap([value] * (n + 1), cod=cod)


def subset_incl(A, n):
    """The injection ``[p] -> [n]`` with image the (nonempty) subset ``A``."""
    A = tuple(sorted(A))
    if not A or A[0] < 0 or A[-1] > n:
        raise ValueError("not a nonempty subset of [%d]: %r" % (n, A))
    return OrdMap(A, cod=n)


def pointed_proj(A, n):
    """The retraction ``[n] -> [p]`` of :func:`subset_incl` for pointed ``A``.

    Sends ``i`` to the position in ``A`` of the largest element ``<= i``;
    requires ``0 in A`` so every ``i`` has one.
    """
    A = tuple(sorted(A))
    if not A or A[0] != 0:
        raise ValueError("subset must be pointed (contain 0): %r" % (A,))
    vals = []
    j = 0
    for i in range(n + 1):
        while j + 1 < len(A) and A[j + 1] <= i:
            j += 1
        vals.append(j)
    return OrdMap(vals, cod=len(A) - 1)


def eps(A, n):
    """Idempotent ``[n] -> [n]`` collapsing onto the pointed subset ``A``."""
    return compose(subset_incl(A, n), pointed_proj(A, n))


def factor_injective_surjective(f):
    """Write ``f = incl o surj`` with ``surj`` surjective onto the image.

    Returns ``(incl, surj)`` where ``incl = subset_incl(image, cod)``.
    """
    img = f.image()
    pos = {v: k for k, v in enumerate(img)}
    surj = OrdMap([pos[v] for v in f.values], cod=len(img) - 1)
    return subset_incl(img, f.cod), surj


# ---------------------------------------------------------------------------
# shuffles

def shuffle_count(parts):
    """``(sum parts)! / prod(parts!)``, the number of ``parts``-shuffles."""
    n = sum(parts)
    c = math.factorial(n)
    for p in parts:
        c //= math.factorial(p)
    return c


def partition_to_shuffle(blocks, n):
    """Ordered partition ``blocks`` of ``{1..n}`` -> tuple of surjections.

    Component ``i`` is ``pointed_proj(blocks[i] | {0}, n)``: it increments
    exactly at the positions in its block.
    """
    seen = set()
    for b in blocks:
        seen.update(b)
    if seen != set(range(1, n + 1)):
        raise ValueError("blocks must partition {1..%d}" % n)
    if sum(len(b) for b in blocks) != n:
        raise ValueError("blocks overlap")
    return tuple(pointed_proj(sorted(b) + [0], n) for b in blocks)


def shuffle_to_partition(zs):
    """Inverse of :func:`partition_to_shuffle`: block ``i`` is the jump set of ``zs[i]``."""
    n = zs[0].dom
    return tuple(
        tuple(s for s in range(1, n + 1) if z(s) > z(s - 1)) for z in zs
    )


def is_shuffle(zs, parts=None):
    """Check joint injectivity plus surjectivity of each component."""
    n = zs[0].dom
    if any(z.dom != n for z in zs):
        return False
    if parts is not None and tuple(z.cod for z in zs) != tuple(parts):
        return False
    if sum(z.cod for z in zs) != n:
        return False
    if not all(z.is_surjective() for z in zs):
        return False
    seen = set()
    for i in range(n + 1):
        key = tuple(z(i) for z in zs)
        if key in seen:
            return False
        seen.add(key)
    return True


def enumerate_shuffles(parts):
    """All ``parts``-shuffles, in the lexicographic order of their partitions.

    Deterministic: blocks for the first component are enumerated by
    ``itertools.combinations``, then recursively on the remaining positions.
    """
    n = sum(parts)
    out = []

    def rec(remaining, parts_left, acc):
        if not parts_left:
            out.append(partition_to_shuffle(acc, n))
            return
        k = parts_left[0]
        for block in combinations(remaining, k):
            rest = tuple(s for s in remaining if s not in block)
            rec(rest, parts_left[1:], acc + [block])

    rec(tuple(range(1, n + 1)), tuple(parts), [])
    return out


def operad_left(zeta, xi, phi, psi):
    """Compose ``((m,n),p)``-shuffle data into an ``(m,n,p)``-shuffle.

    ``(zeta, xi)`` is an ``(m+n, p)``-shuffle and ``(phi, psi)`` an
    ``(m, n)``-shuffle; the result is ``(phi o zeta, psi o zeta, xi)``.
    """
    return (compose(phi, zeta), compose(psi, zeta), xi)


def operad_right(zeta, xi, phi, psi):
    """Compose ``(m,(n,p))``-shuffle data into an ``(m,n,p)``-shuffle.

    ``(zeta, xi)`` is an ``(m, n+p)``-shuffle and ``(phi, psi)`` an
    ``(n, p)``-shuffle; the result is ``(zeta, phi o xi, psi o xi)``.
    """
    return (zeta, compose(phi, xi), compose(psi, xi))
