"""Hochschild cochains: differential, cup, braces, bracket."""

import random

import pytest

from cochainops import barratt_eccles as be
from cochainops import hochschild as hh
from cochainops import surjections as sj
from cochainops import table_reduction as tre


ALGEBRAS = [hh.upper_triangular(), hh.truncated_polynomial()]


def test_algebra_checks_fire_on_bad_input():
    # a*b = a, b*a = b is non-associative: (a*b)*a = 0 != a = a*(b*a)
    names = ["u", "a", "b"]
    z = (0, 0, 0)
    u, a, b = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    with pytest.raises(ValueError):
        hh.AssociativeAlgebra(names, [[u, a, b], [a, z, a], [b, b, z]])
    with pytest.raises(ValueError):
        # first basis element is not a unit
        hh.AssociativeAlgebra(["u", "a"], [[(0, 0), (0, 0)], [(0, 0), (0, 0)]])


def test_normalization_enforced():
    A = ALGEBRAS[0]
    f = hh.HochschildCochain(A, 2, {(0, 1): (0, 1, 0), (1, 1): (0, 1, 0)})
    assert (0, 1) not in f.table and (1, 1) in f.table


def test_arity_zero_differential_is_commutator():
    # the coboundary of an element is the commutator x a - a x, the sign
    # fixed by the leading term a_0 f(...) of the general formula
    for A in ALGEBRAS:
        for i in range(A.dim):
            f = hh.HochschildCochain(A, 0, {(): A.basis_vector(i)})
            df = hh.differential(f)
            for j in range(1, A.dim):
                x = A.basis_vector(j)
                want = tuple(
                    p - q
                    for p, q in zip(
                        A.product_coords(x, A.basis_vector(i)),
                        A.product_coords(A.basis_vector(i), x),
                    )
                )
                assert df.value_on_coords((x,)) == want


def test_differential_of_identity_is_multiplication():
    # the arity-1 identity is not a cocycle: its coboundary is the product
    for A in ALGEBRAS:
        assert hh.differential(hh.identity_cochain(A)) == hh.multiplication_cochain(A)


def test_d_squared_zero():
    rng = random.Random(0)
    for A in ALGEBRAS:
        for m in (0, 1, 2, 3):
            for _ in range(4):
                f = hh.random_cochain(A, m, rng)
                assert not hh.differential(hh.differential(f))


def test_cup_unit():
    for A in ALGEBRAS:
        one = hh.HochschildCochain(A, 0, {(): A.basis_vector(0)})
        rng = random.Random(1)
        for m in (1, 2):
            f = hh.random_cochain(A, m, rng)
            assert hh.cup(one, f) == f
            assert hh.cup(f, one) == f


def test_cup_on_commutative_algebra():
    A = hh.truncated_polynomial()
    f = hh.identity_cochain(A)
    fg = hh.cup(f, f)
    for i in range(1, A.dim):
        for j in range(1, A.dim):
            assert fg.value_on_coords((A.basis_vector(i), A.basis_vector(j))) == A.mult[i][j]


def test_cup_associative():
    rng = random.Random(2)
    for A in ALGEBRAS:
        for _ in range(6):
            f = hh.random_cochain(A, rng.choice([1, 2]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            h = hh.random_cochain(A, rng.choice([1, 2]), rng)
            assert hh.cup(hh.cup(f, g), h) == hh.cup(f, hh.cup(g, h))


def test_single_brace_of_arity_one_maps_is_composition():
    for A in ALGEBRAS:
        rng = random.Random(3)
        f = hh.random_cochain(A, 1, rng)
        g = hh.random_cochain(A, 1, rng)
        fg = hh.brace(f, g)
        for i in range(1, A.dim):
            x = A.basis_vector(i)
            assert fg.value_on_coords((x,)) == f.value_on_coords((g.value_on_coords((x,)),))


def test_bracket_antisymmetry_cases():
    rng = random.Random(4)
    for A in ALGEBRAS:
        f_odd = hh.random_cochain(A, 2, rng)  # |f| = 1
        assert hh.gerstenhaber_bracket(f_odd, f_odd) == hh.brace(f_odd, f_odd).scale(2)
        f_even = hh.random_cochain(A, 1, rng)  # |f| = 0
        assert not hh.gerstenhaber_bracket(f_even, f_even)


def test_multiplication_brackets_to_zero():
    for A in ALGEBRAS:
        mu = hh.multiplication_cochain(A)
        assert not hh.brace(mu, mu)
        assert not hh.gerstenhaber_bracket(mu, mu)


def test_differential_is_bracketing_with_multiplication():
    rng = random.Random(5)
    for A in ALGEBRAS:
        mu = hh.multiplication_cochain(A)
        for m in (1, 2, 3):
            f = hh.random_cochain(A, m, rng, unit_free=True)
            assert hh.differential(f) == hh.gerstenhaber_bracket(mu, f).scale(
                -1 if (m - 1) & 1 else 1
            )


def test_brace_pre_lie_identity():
    rng = random.Random(6)
    for A in ALGEBRAS:
        for _ in range(8):
            f = hh.random_cochain(A, rng.choice([1, 2]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            h = hh.random_cochain(A, rng.choice([1, 2]), rng)
            lhs = hh.brace(hh.brace(f, g), h) - hh.brace(f, hh.brace(g, h))
            sgn = -1 if (g.shifted_degree * h.shifted_degree) & 1 else 1
            rhs = hh.brace(f, g, h) + hh.brace(f, h, g).scale(sgn)
            assert lhs == rhs


def test_graded_jacobi():
    rng = random.Random(7)
    A = ALGEBRAS[0]
    for _ in range(6):
        f = hh.random_cochain(A, rng.choice([1, 2]), rng)
        g = hh.random_cochain(A, rng.choice([1, 2]), rng)
        h = hh.random_cochain(A, rng.choice([1, 2]), rng)
        a, b = f.shifted_degree, g.shifted_degree
        t1 = hh.gerstenhaber_bracket(f, hh.gerstenhaber_bracket(g, h))
        t2 = hh.gerstenhaber_bracket(hh.gerstenhaber_bracket(f, g), h)
        t3 = hh.gerstenhaber_bracket(g, hh.gerstenhaber_bracket(f, h)).scale(
            -1 if (a * b) & 1 else 1
        )
        assert t1 == t2 + t3


def test_cup_commutativity_homotopy():
    # d(f{g}) = (-1)^|g| (df){g} + f{dg}
    #           + (-1)^(|f||g|+|f|+1) f.g + (-1)^(|g|+1) g.f
    rng = random.Random(8)
    for A in ALGEBRAS:
        for _ in range(10):
            f = hh.random_cochain(A, rng.choice([1, 2, 3]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            p, q = f.shifted_degree, g.shifted_degree
            lhs = hh.differential(hh.brace(f, g))
            rhs = hh.brace(hh.differential(f), g).scale(-1 if q & 1 else 1)
            rhs = rhs + hh.brace(f, hh.differential(g))
            rhs = rhs + hh.cup(f, g).scale(-1 if (p * q + p + 1) & 1 else 1)
            rhs = rhs + hh.cup(g, f).scale(-1 if (q + 1) & 1 else 1)
            assert lhs == rhs


def test_brace_generator_elements():
    assert hh.brace_element(2) == ((1, 2), (2, 1))
    assert hh.brace_element(3) == ((1, 2, 3), (2, 1, 3), (2, 3, 1))
    assert hh.brace_surjection(2) == (1, 2, 1)
    assert hh.brace_surjection(4) == (1, 2, 1, 3, 1, 4, 1)


def test_table_reduction_identifies_brace_elements():
    for r in range(2, 6):
        w = hh.brace_element(r)
        target = hh.brace_surjection(r)
        assert tre.tr_basis(w).terms == {target: 1}
        assert tre.section(target) == w
        assert be.complexity(w) <= 2
        assert sj.complexity(target, r) <= 2
