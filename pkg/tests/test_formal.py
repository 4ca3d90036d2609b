import random

import pytest

from cochainops.formal import FormalSum, change_characteristic


def test_add_cancels():
    s = FormalSum([("b", 2)]) + FormalSum([("b", -2)])
    assert s == 0 and not s


def test_scale_zero():
    assert FormalSum([("b", 5), ("c", -1)]).scale(0) == FormalSum.zero()


def test_mod_two_addition():
    s = FormalSum([("b", 1)], 2) + FormalSum([("b", 1)], 2)
    assert not s
    assert FormalSum([("b", 3)], 2).terms == {"b": 1}


def test_characteristic_must_be_prime():
    with pytest.raises(ValueError):
        FormalSum((), 4)


def test_mixing_characteristics_rejected():
    with pytest.raises(ValueError):
        FormalSum([("b", 1)], 2) + FormalSum([("b", 1)], 3)


def test_commutative_group_laws():
    rng = random.Random(0)
    basis = ["a", "b", "c", "d"]
    for _ in range(50):
        x = FormalSum([(rng.choice(basis), rng.randint(-3, 3)) for _ in range(3)])
        y = FormalSum([(rng.choice(basis), rng.randint(-3, 3)) for _ in range(3)])
        z = FormalSum([(rng.choice(basis), rng.randint(-3, 3)) for _ in range(3)])
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x + FormalSum.zero() == x
        assert x - x == 0


def test_map_basis_is_linear():
    rng = random.Random(1)
    image = {"a": FormalSum([("u", 1), ("v", -1)]), "b": FormalSum([("v", 2)]), "c": None}
    fn = lambda b: image[b]
    for _ in range(20):
        x = FormalSum([(rng.choice("abc"), rng.randint(-2, 2)) for _ in range(3)])
        y = FormalSum([(rng.choice("abc"), rng.randint(-2, 2)) for _ in range(3)])
        assert (x + y).map_basis(fn) == x.map_basis(fn) + y.map_basis(fn)
        assert x.scale(3).map_basis(fn) == x.map_basis(fn).scale(3)


def test_change_characteristic():
    s = FormalSum([("a", 3), ("b", 2)])
    assert change_characteristic(s, 2).terms == {"a": 1}
    assert change_characteristic(s, 3).terms == {"b": 2}
