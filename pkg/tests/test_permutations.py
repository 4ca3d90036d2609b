"""Permutation operad and Koszul sign machinery."""

import random
from itertools import product

import pytest

from cochainops import permutations as perm


def test_block_permutation_transposition():
    # the block transposition: (2,1) with sizes (p,q) moves the q-block first
    assert perm.block_permutation((2, 1), (2, 3)) == (3, 4, 5, 1, 2)
    for p, q in [(1, 1), (1, 3), (3, 2)]:
        got = perm.block_permutation((2, 1), (p, q))
        assert got == tuple(range(p + 1, p + q + 1)) + tuple(range(1, p + 1))


def test_block_permutation_identity_and_unit_sizes():
    for r in range(1, 7):
        for sizes in [(1,) * r, tuple(range(1, r + 1))]:
            total = sum(sizes)
            assert perm.block_permutation(perm.identity(r), sizes) == perm.identity(total)
    for r in range(1, 7):
        for sigma in perm.all_permutations(r):
            assert perm.block_permutation(sigma, (1,) * r) == sigma


def test_partial_composition_worked_example():
    assert perm.compose_partial((3, 2, 1), 2, (1, 3, 2)) == (5, 2, 4, 3, 1)


def test_partial_composition_units():
    for r in (1, 2, 3):
        for v in perm.all_permutations(r):
            assert perm.compose_partial(perm.identity(1), 1, v) == v
            for k in range(1, r + 1):
                assert perm.compose_partial(v, k, (1,)) == v


def test_partial_composition_out_of_range():
    with pytest.raises(ValueError):
        perm.compose_partial((1, 2), 3, (1,))


def test_operad_associativity_exhaustive():
    # (u o_k v) o_{k+l-1} w == u o_k (v o_l w), all arities <= 3, all slots
    for r in (1, 2, 3):
        for s in (1, 2, 3):
            for t in (1, 2):
                for u in perm.all_permutations(r):
                    for v in perm.all_permutations(s):
                        for w in perm.all_permutations(t):
                            for k in range(1, r + 1):
                                for l in range(1, s + 1):
                                    lhs = perm.compose_partial(perm.compose_partial(u, k, v), k + l - 1, w)
                                    rhs = perm.compose_partial(u, k, perm.compose_partial(v, l, w))
                                    assert lhs == rhs


def test_disjoint_slots_commute():
    for u in perm.all_permutations(3):
        for v in perm.all_permutations(2):
            for w in perm.all_permutations(2):
                # slots 1 and 3 of u are disjoint; composing in either order agrees
                a = perm.compose_partial(perm.compose_partial(u, 1, v), 3 + len(v) - 1, w)
                b = perm.compose_partial(perm.compose_partial(u, 3, w), 1, v)
                assert a == b


def test_full_composition_block_formula():
    # u(v_1,...,v_r) = (v_1 (+) ... (+) v_r) . u_*(s_1,...,s_r)
    for r in (1, 2, 3):
        for u in perm.all_permutations(r):
            for sizes in product((1, 2), repeat=r):
                for vs in product(*[perm.all_permutations(s) for s in sizes]):
                    assert perm.compose_full(u, vs) == perm.compose_full_direct(u, vs)


def test_koszul_identity_and_even_pairs():
    assert perm.koszul_sign([1] * 5, perm.identity(5)) == 1
    # transposing a degree-0 symbol with a degree-1 symbol costs nothing
    assert perm.koszul_sign([0, 1], (2, 1)) == 1
    assert perm.koszul_sign([1, 1], (2, 1)) == -1
    assert perm.koszul_sign([2, 1], (2, 1)) == 1


def test_koszul_multiplicative_under_composition():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 6)
        degrees = [rng.randint(0, 3) for _ in range(n)]
        p = tuple(rng.sample(range(1, n + 1), n))
        q = tuple(rng.sample(range(1, n + 1), n))
        # first reorder by p, then reorder the result by q: composite is p o q
        degrees_after_p = [degrees[p[i] - 1] for i in range(n)]
        lhs = perm.koszul_sign(degrees, p) * perm.koszul_sign(degrees_after_p, q)
        rhs = perm.koszul_sign(degrees, perm.compose(p, q))
        assert lhs == rhs


def test_signature():
    assert perm.sign((1, 2, 3)) == 1
    assert perm.sign((2, 1, 3)) == -1
    assert perm.sign((2, 3, 1)) == 1
