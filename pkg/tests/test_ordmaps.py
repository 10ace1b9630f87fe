"""Monotone-map category: composition, sections, shuffles."""

import math
import random
from itertools import product as iproduct

import pytest

from simplicial_derham.ordmaps import (
    OrdMap, compose, identity, face, degeneracy, constant, subset_incl,
    pointed_proj, eps, factor_injective_surjective, shuffle_count,
    partition_to_shuffle, shuffle_to_partition, is_shuffle,
    enumerate_shuffles, operad_left, operad_right,
)


def test_basic_constructors():
    f = OrdMap((0, 0, 1), 1)
    assert f.dom == 2 and f.cod == 1
    assert f(0) == 0 and f(2) == 1
    assert identity(3) == OrdMap((0, 1, 2, 3), 3)
    assert face(2, 1) == OrdMap((0, 2), 2)
    assert degeneracy(2, 0) == OrdMap((0, 0, 1, 2), 2)
    assert constant(2, 1, 3) == OrdMap((1, 1, 1), 3)
    assert subset_incl((0, 2), 3) == OrdMap((0, 2), 3)


def test_rejects_nonmonotone():
    with pytest.raises(ValueError):
        OrdMap((1, 0), 1)


def test_compose_and_identity():
    f = face(2, 1)            # [1] -> [2]
    g = degeneracy(1, 0)      # [2] -> [1]
    fg = compose(f, g)
    assert fg.dom == 2 and fg.cod == 2
    assert compose(identity(f.cod), f) == f
    assert compose(f, identity(f.dom)) == f


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplicial_identities(n):
    # d_j d_i = d_i d_{j-1} for i < j
    for i in range(n + 1):
        for j in range(i + 1, n + 2):
            lhs = compose(face(n + 1, j), face(n, i))
            rhs = compose(face(n + 1, i), face(n, j - 1))
            assert lhs == rhs
    # s_j s_i = s_i s_{j+1} for i <= j
    for i in range(n):
        for j in range(i, n):
            lhs = compose(degeneracy(n - 1, j), degeneracy(n, i))
            rhs = compose(degeneracy(n - 1, i), degeneracy(n, j + 1))
            assert lhs == rhs
    # mixed: s_j d_i as maps [n] -> [n]
    for i in range(n + 2):
        for j in range(n + 1):
            got = compose(degeneracy(n, j), face(n + 1, i))
            if i < j:
                assert got == compose(face(n, i), degeneracy(n - 1, j - 1))
            elif i in (j, j + 1):
                assert got == identity(n)
            else:
                assert got == compose(face(n, i - 1), degeneracy(n - 1, j))


def test_dagger_is_min_section():
    rng = random.Random(11)
    for _ in range(100):
        cod = rng.randint(0, 4)
        dom = rng.randint(cod, cod + 4)
        jumps = sorted(rng.sample(range(1, dom + 1), cod))
        vals = [0]
        for i in range(1, dom + 1):
            vals.append(vals[-1] + (1 if i in jumps else 0))
        f = OrdMap(tuple(vals), cod)
        assert f.is_surjective()
        sec = f.dagger()
        assert compose(f, sec) == identity(cod)
        for j in range(cod + 1):
            assert sec(j) == min(i for i in range(dom + 1) if f(i) == j)


def test_factor_injective_surjective():
    rng = random.Random(5)
    for _ in range(100):
        dom = rng.randint(0, 5)
        cod = rng.randint(0, 5)
        vals = sorted(rng.randint(0, cod) for _ in range(dom + 1))
        f = OrdMap(tuple(vals), cod)
        inj, surj = factor_injective_surjective(f)
        assert surj.is_surjective() and inj.is_injective()
        assert compose(inj, surj) == f


def test_pointed_proj_retracts_subset():
    # pointed subsets of [n] classify idempotent retractions
    for n in range(1, 4):
        for a in range(1, n + 1):
            A = (0, a)
            p = pointed_proj(A, n)
            i = subset_incl(A, n)
            assert compose(p, i) == identity(len(A) - 1)


@pytest.mark.parametrize("parts,count", [
    ((1, 1), 2), ((2, 1), 3), ((2, 2), 6), ((3, 2), 10),
    ((1, 1, 1), 6), ((2, 1, 1), 12),
])
def test_shuffle_counts(parts, count):
    shuffles = list(enumerate_shuffles(parts))
    assert len(shuffles) == count
    assert shuffle_count(parts) == count


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 2), (4, 4)])
def test_shuffles_jointly_injective_surjective(n, m):
    total = n + m
    for zs in enumerate_shuffles((n, m)):
        assert is_shuffle(zs, (n, m))
        for z in zs:
            assert z.is_surjective()
        seen = set()
        for i in range(total):
            key = tuple(z(i + 1) - z(i) for z in zs)
            assert sum(key) == 1
            seen.add((i, key.index(1)))
        assert len(seen) == total


def test_binomial_totals():
    for n in range(0, 5):
        for m in range(0, 5):
            if n + m == 0 or n + m > 8:
                continue
            assert shuffle_count((n, m)) == math.comb(n + m, n)


def test_partition_round_trip():
    for n, m in [(2, 2), (3, 1), (2, 3)]:
        for zs in enumerate_shuffles((n, m)):
            blocks = shuffle_to_partition(zs)
            assert partition_to_shuffle(blocks, n + m) == zs


@pytest.mark.parametrize("n,m,p", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 3)])
def test_operad_composition_bijection(n, m, p):
    # left-nested and right-nested assemblies hit the same triple shuffles
    left = set()
    for zeta, xi in enumerate_shuffles((n + m, p)):
        for phi, psi in enumerate_shuffles((n, m)):
            left.add(operad_left(zeta, xi, phi, psi))
    right = set()
    for zeta, xi in enumerate_shuffles((n, m + p)):
        for phi, psi in enumerate_shuffles((m, p)):
            right.add(operad_right(zeta, xi, phi, psi))
    want = math.factorial(n + m + p) // (
        math.factorial(n) * math.factorial(m) * math.factorial(p))
    assert len(left) == len(right) == want
    assert left == right == set(enumerate_shuffles((n, m, p)))


def test_eps_idempotent():
    for n in range(1, 4):
        for size in range(1, n + 2):
            for rest in iproduct(range(1, n + 1), repeat=size - 1):
                A = (0,) + tuple(sorted(set(rest)))
                e = eps(A, n)
                assert compose(e, e) == e
                assert e.image() == A
    assert eps(tuple(range(4)), 3) == identity(3)
