"""The surjection operad: table arrangement, differential, composition."""

import random
from itertools import product

import pytest

from cochainops import surjections as sj
from cochainops.formal import FormalSum


def rand_surjection(rng, r, d):
    if r == 1:
        d = 0
    while True:
        seq = tuple(rng.randint(1, r) for _ in range(r + d))
        if sj.is_basis_surjection(seq, r):
            return seq


def test_table_arrangement_worked_example():
    t = sj.table_arrangement((1, 3, 2, 1, 4, 2, 1))
    assert t["rows"] == [(1,), (3, 2), (1,), (4, 2, 1)]
    assert t["caesuras"] == (1, 2, 1)


def test_table_arrangement_degree_zero():
    t = sj.table_arrangement((2, 1, 3))
    assert t["rows"] == [(2, 1, 3)] and t["caesuras"] == ()


def test_table_arrangement_small():
    t = sj.table_arrangement((1, 2, 1))
    assert t["rows"] == [(1,), (2, 1)] and t["caesuras"] == (1,)


def test_caesura_count_equals_degree():
    rng = random.Random(0)
    for _ in range(100):
        r = rng.choice([2, 3, 4])
        d = rng.choice([0, 1, 2, 3])
        u = rand_surjection(rng, r, d)
        assert len(sj.caesura_positions(u)) == d


def test_differential_worked_example():
    d = sj.differential_basis((1, 3, 2, 1, 4, 2, 1))
    assert d.terms == {
        (3, 2, 1, 4, 2, 1): 1,
        (1, 3, 1, 4, 2, 1): -1,
        (1, 3, 2, 4, 2, 1): 1,
        (1, 3, 2, 1, 4, 1): 1,
        (1, 3, 2, 1, 4, 2): -1,
    }


def test_differential_of_permutation_vanishes():
    for seq in [(1,), (1, 2), (2, 1, 3)]:
        assert sj.differential_basis(seq) == 0


def test_differential_small():
    assert sj.differential_basis((1, 2, 1)).terms == {(2, 1): 1, (1, 2): -1}


def test_d_squared_zero_exhaustive_small():
    for r in (1, 2, 3):
        for d in range(0, 4):
            for u in sj.all_basis(r, d):
                assert sj.differential(sj.differential_basis(u)) == 0


def test_compose_worked_example():
    got = sj.compose_partial_basis((1, 2, 1, 3), 1, (1, 2, 1))
    assert got.terms == {
        (1, 3, 1, 2, 1, 4): 1,
        (1, 2, 3, 2, 1, 4): -1,
        (1, 2, 1, 3, 1, 4): -1,
    }


def test_compose_degree_zero_matches_permutations():
    from cochainops.permutations import all_permutations, compose_partial as pcp

    for r in (2, 3):
        for s in (1, 2):
            for u in all_permutations(r):
                for v in all_permutations(s):
                    for k in range(1, r + 1):
                        got = sj.compose_partial_basis(u, k, v, r, s)
                        assert got.terms == {pcp(u, k, v): 1}


def test_compose_unit():
    for seq in [(1, 2, 1), (2, 1, 3, 4, 3, 2), (1, 2)]:
        r = max(seq)
        for k in range(1, r + 1):
            got = sj.compose_partial_basis(seq, k, (1,), r, 1)
            assert got.terms == {seq: 1}
        got = sj.compose_partial_basis((1,), 1, seq, 1, r)
        assert got.terms == {seq: 1}


def test_compose_is_chain_map_samples():
    rng = random.Random(5)
    for _ in range(200):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        d, e = rng.choice([0, 1, 2]), rng.choice([0, 1, 2])
        u, v = rand_surjection(rng, r, d), rand_surjection(rng, s, e)
        k = rng.randint(1, r)
        fu, fv = FormalSum.single(u), FormalSum.single(v)
        lhs = sj.differential(sj.compose_partial(fu, k, fv, r, s))
        rhs = sj.compose_partial(sj.differential_basis(u), k, fv, r, s) + \
            sj.compose_partial(fu, k, sj.differential_basis(v), r, s).scale(-1 if d & 1 else 1)
        assert lhs == rhs


def test_compose_associativity_samples():
    rng = random.Random(6)
    for _ in range(100):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        u = FormalSum.single(rand_surjection(rng, r, rng.choice([0, 1, 2])))
        v = FormalSum.single(rand_surjection(rng, s, rng.choice([0, 1])))
        w = FormalSum.single(rand_surjection(rng, 2, rng.choice([0, 1])))
        k, l = rng.randint(1, r), rng.randint(1, s)
        lhs = sj.compose_partial(sj.compose_partial(u, k, v, r, s), k + l - 1, w, r + s - 1, 2)
        rhs = sj.compose_partial(u, k, sj.compose_partial(v, l, w, s, 2), r, s + 1)
        assert lhs == rhs


def test_sigma_action():
    assert sj.sigma_action_basis((2, 1), (1, 2, 1)) == (2, 1, 2)
    rng = random.Random(7)
    from cochainops.permutations import compose

    for _ in range(50):
        r = rng.choice([2, 3])
        u = rand_surjection(rng, r, rng.choice([0, 1, 2]))
        sigma = tuple(rng.sample(range(1, r + 1), r))
        tau = tuple(rng.sample(range(1, r + 1), r))
        assert sj.sigma_action_basis(compose(sigma, tau), u) == \
            sj.sigma_action_basis(sigma, sj.sigma_action_basis(tau, u))


def test_compose_equivariance_samples():
    # (sigma . u) o_k v = sigma_*(1,..,s at k,..,1) . (u o_{sigma^{-1}(k)} v)
    from cochainops.permutations import block_permutation, inverse

    rng = random.Random(12)
    for _ in range(80):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        u = rand_surjection(rng, r, rng.choice([0, 1, 2]))
        v = rand_surjection(rng, s, rng.choice([0, 1, 2]))
        k = rng.randint(1, r)
        sigma = tuple(rng.sample(range(1, r + 1), r))
        lhs = sj.compose_partial_basis(sj.sigma_action_basis(sigma, u), k, v, r, s)
        sizes = [1] * r
        sizes[k - 1] = s
        block = block_permutation(sigma, tuple(sizes))
        rhs = sj.sigma_action(block, sj.compose_partial_basis(u, inverse(sigma)[k - 1], v, r, s))
        assert lhs == rhs


def test_pair_projection_examples():
    assert sj.pair_projection((2, 1, 3, 4, 3, 1), 1, 3) == (1, 3, 3, 1)
    assert sj.pair_projection((2, 1, 3, 4, 3, 1), 1, 2) == (2, 1, 1)
    assert sj.pair_projection((1, 2), 1, 2) == (1, 2)


def test_complexity_examples():
    assert sj.complexity((1, 2, 1, 2)) == 3
    assert sj.complexity((2, 1, 3, 4, 3, 2)) == 2
    for seq in [(1,), (2, 1), (3, 1, 2)]:
        assert sj.complexity(seq) == 1


def test_complexity_submultiplicative_under_composition():
    rng = random.Random(8)
    for _ in range(100):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        u = rand_surjection(rng, r, rng.choice([0, 1, 2]))
        v = rand_surjection(rng, s, rng.choice([0, 1, 2]))
        k = rng.randint(1, r)
        bound = max(sj.complexity(u, r), sj.complexity(v, s))
        for seq in sj.compose_partial_basis(u, k, v, r, s).terms:
            assert sj.complexity(seq, r + s - 1) <= bound


def test_cell_membership_examples():
    assert sj.cell_member((1, 2, 1), {(1, 2): 1}, (2, 1))
    assert sj.cell_member((1, 2, 1, 2), {(1, 2): 2}, (1, 2))
    assert not sj.cell_member((1, 2, 1, 2), {(1, 2): 2}, (2, 1))
    rng = random.Random(9)
    for _ in range(50):
        r = rng.choice([2, 3])
        u = rand_surjection(rng, r, rng.choice([0, 1, 2]))
        mu = {}
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                mu[(i, j)] = sj.variation_count(sj.pair_projection(u, i, j))
        assert sj.cell_member(u, mu, tuple(range(1, r + 1)), r)


def recover_composition(w, k, r, s):
    """Recovery of (u, v, splitting) from a composite term: the outer
    sequence collapses the inserted block to one occurrence of the slot, the
    inner one reads off the block values."""
    u = []
    for x in w:
        if k <= x <= k + s - 1:
            if not (u and u[-1] == k):
                u.append(k)
        elif x >= k + s:
            u.append(x - s + 1)
        else:
            u.append(x)
    v = []
    for x in w:
        if k <= x <= k + s - 1:
            value = x - k + 1
            if not (v and v[-1] == value):
                v.append(value)
    return tuple(u), tuple(v)


def test_composite_terms_recover_their_factors():
    rng = random.Random(10)
    for _ in range(120):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        u = rand_surjection(rng, r, rng.choice([0, 1, 2]))
        v = rand_surjection(rng, s, rng.choice([0, 1, 2]))
        k = rng.randint(1, r)
        comp = sj.compose_partial_basis(u, k, v, r, s)
        for w in comp.terms:
            assert recover_composition(w, k, r, s) == (u, v)
        # distinct splittings give distinct nondegenerate composites
        occurrences = [i for i, x in enumerate(u) if x == k]
        seen = {}
        for js in sj.splittings(len(v), len(occurrences)):
            cuts = [j - 1 for j in js]
            out = []
            prev = 0
            for m, pos in enumerate(occurrences):
                out.extend(x + s - 1 if x > k else x for x in u[prev:pos])
                out.extend(x + k - 1 for x in v[cuts[m]:cuts[m + 1] + 1])
                prev = pos + 1
            out.extend(x + s - 1 if x > k else x for x in u[prev:])
            result = tuple(out)
            if sj.is_nondegenerate(result):
                assert result not in seen, "two splittings produced one composite"
                seen[result] = js
        assert set(seen) == set(comp.terms)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        sj.check_surjection((1, 1, 2))
    with pytest.raises(ValueError):
        sj.check_surjection((1, 3))
    with pytest.raises(ValueError):
        sj.compose_partial_basis((1, 2), 3, (1,), 2, 1)
