"""Sphere/cone closed forms, suspensions, tensor structures, path objects."""

import random
from itertools import product

import pytest

from cochainops import barratt_eccles as be
from cochainops import ealgebras as ea
from cochainops import simplicial as sim
from cochainops import table_reduction as tre
from cochainops import verify
from cochainops.formal import FormalSum
from cochainops.permutations import all_permutations

ID2, TAU = (1, 2), (2, 1)


def test_epsilon_examples():
    assert ea.epsilon(2, (ID2, TAU)) == 1
    assert ea.epsilon(2, (TAU, ID2)) == -1
    assert ea.epsilon(1, ((1, 2, 3),)) == 1
    assert ea.epsilon(1, ((2, 1, 3),)) == 0
    assert ea.epsilon(0, (ID2,)) == 1
    assert ea.epsilon(0, (ID2, TAU)) == 0
    assert ea.epsilon(2, (ID2,)) == 0  # degree mismatch


def test_cap_examples():
    w = (ID2, TAU, ID2)
    assert ea.cap_epsilon(0, w).terms == {w: 1}
    assert ea.cap_epsilon(2, w).terms == {(TAU, ID2): 1}
    # a top-degree cochain returns the last vertex, scaled
    got = ea.cap(lambda front: 5 if front == w else 0, 2, w)
    assert got.terms == {(ID2,): 5}
    # capping below the front degree gives zero
    assert ea.cap_epsilon(3, (ID2,)) == 0


def test_sphere_eval_examples():
    assert ea.sphere_eval(1, ((1,),)) == 1
    assert ea.sphere_eval(1, (ID2, TAU)) == -1
    assert ea.sphere_eval(1, (ID2,)) == 0
    assert ea.sphere_eval(1, (ID2, TAU, ID2)) == 0


def test_cone_eval_examples():
    coeff, label = ea.cone_eval((ID2,), "cc")
    assert (coeff, label) == (1, "c")
    coeff, label = ea.cone_eval((ID2,), "ec")
    assert (coeff, label) == (1, "e")
    coeff, label = ea.cone_eval(((2, 1),), "ec")
    assert coeff == 0
    coeff, label = ea.cone_eval((ID2, TAU), "ee")
    assert (coeff, label) == (-1, "e")
    coeff, label = ea.cone_eval((ID2, TAU), "cc")
    assert coeff == 0


def test_closed_forms_match_engine_small():
    cone_engine = ea.CochainAlgebra(sim.PointedInterval(), 0, reduced=True)
    circle_engine = ea.CochainAlgebra(sim.SphereModel(1), 0, reduced=True)
    cone = ea.ConeAlgebra(0)
    circle = ea.CircleAlgebra(0)
    back = {"c": (1,), "e": (0, 1)}
    relabel = {(1,): "c", (0, 1): "e"}
    for r in (1, 2):
        for d in range(0, 4):
            for w in be.all_basis(r, d):
                for pattern in product("ec", repeat=r):
                    args = tuple(back[p] for p in pattern)
                    got = {relabel[k]: v for k, v in cone_engine.evaluate_basis(w, args).items() if v}
                    assert got == cone.evaluate_basis(w, pattern)
                got = circle_engine.evaluate_basis(w, ((0, 1),) * r)
                want = circle.evaluate_basis(w, ("e",) * r)
                assert {k: v for k, v in got.items() if v} == (
                    {(0, 1): want["e"]} if want else {}
                )


def test_higher_sphere_tensor_identification():
    engine = ea.CochainAlgebra(sim.SphereModel(2), 0, reduced=True)
    top = (0, 1, 2)
    for r in (1, 2):
        for d in range(0, 4):
            for w in be.all_basis(r, d):
                assert engine.evaluate_basis(w, (top,) * r).get(top, 0) == ea.sphere_eval(2, w)


def test_cone_formula_standard_matches_tensor():
    A = ea.CochainAlgebra(sim.SphereModel(1), 0, reduced=True)
    coneA = ea.cone_of_algebra(A)
    for r in (1, 2, 3):
        for d in range(0, 3):
            for w in be.all_basis(r, d):
                for s in range(0, r + 1):
                    args = tuple(("e" if i < s else "c", (0, 1)) for i in range(r))
                    assert coneA.evaluate_basis(w, args) == ea.cone_formula_standard(A, w, args)


def test_cone_differential():
    # delta(c (x) x + e (x) y) = c (x) dx + e (x) (x - dy)
    A = ea.CochainAlgebra(sim.PointedInterval(), 0, reduced=True)
    coneA = ea.cone_of_algebra(A)
    for a in A.basis():
        d_c = coneA.differential_basis(("c", a))
        expected = {("e", a): 1}
        for a2, coeff in A.differential_basis(a).items():
            expected[("c", a2)] = coeff
        assert d_c == expected
        d_e = coneA.differential_basis(("e", a))
        assert d_e == {("e", a2): -c for a2, c in A.differential_basis(a).items()}


def test_cone_exact_sequence():
    # 0 -> suspension -> cone -> algebra -> 0 degreewise, with chain maps
    A = ea.CochainAlgebra(sim.SphereModel(1), 0, reduced=True)
    coneA = ea.cone_of_algebra(A)
    for label in coneA.basis():
        image = ea.cone_projection(label)
        if label[0] == "e":
            assert image == {}
        else:
            assert image == {label[1]: 1}
    # projection is a chain map
    for label in coneA.basis():
        lhs = {}
        for l2, c in coneA.differential_basis(label).items():
            for a, c2 in ea.cone_projection(l2).items():
                lhs[a] = lhs.get(a, 0) + c * c2
        rhs = {}
        for a, c in ea.cone_projection(label).items():
            for a2, c2 in A.differential_basis(a).items():
                rhs[a2] = rhs.get(a2, 0) + c * c2
        assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def test_suspension_morphism_x_examples():
    assert ea.suspension_morphism_x((1, 2, 1), 2).terms == {(2, 1): 1}
    assert ea.suspension_morphism_x((2, 1, 2), 2).terms == {(1, 2): -1}
    assert ea.suspension_morphism_x((1, 2, 1, 2), 2).terms == {(2, 1, 2): 1}
    # prefix with a repeated value kills the cap
    assert ea.suspension_morphism_x((1, 2, 1, 3, 1), 3) == 0
    # a degree-0 input leaves a non-surjective tail except in arity one
    assert ea.suspension_morphism_x((1, 2), 2) == 0
    assert ea.suspension_morphism_x((1,), 1).terms == {(1,): 1}


def test_suspension_square_commutes_small():
    for r in (1, 2, 3):
        for d in range(0, 4):
            for w in be.all_basis(r, d):
                lhs = FormalSum.zero()
                for seq, c in tre.tr_basis(w).terms.items():
                    lhs = lhs + ea.suspension_morphism_x(seq, r).scale(c)
                assert lhs == tre.tr(ea.suspension_morphism_e(w))


def test_lambda_rule_small():
    A = ea.CochainAlgebra(sim.PointedInterval(), 0, reduced=True)
    susp = ea.suspension_of_algebra(A)
    for r in (1, 2):
        for d in range(0, 5):
            for w in be.all_basis(r, d):
                for tails in product([(1,), (0, 1)], repeat=r):
                    args = tuple(("e", t) for t in tails)
                    got = susp.evaluate_basis(w, args)
                    capped = ea.cap_epsilon(r, w)
                    want = ea.lambda_eval(A, capped, args) if capped.terms else {}
                    assert got == want


def test_ground_algebra_augmentation_action():
    g = ea.GroundAlgebra(0)
    assert g.evaluate_basis((ID2,), ("1", "1")) == {"1": 1}
    assert g.evaluate_basis((ID2, TAU), ("1", "1")) == {}


def test_path_object_identities():
    for char in (0, 3):
        A = ea.CochainAlgebra(sim.SphereModel(1), char, reduced=True)
        po = ea.PathObject(A)
        for a in A.basis():
            v = po.section(a)
            assert po.face(0, v) == {a: 1}
            assert po.face(1, v) == {a: 1}
        assert verify.section_is_quasi_iso(po, char)


def test_path_object_of_ground_field_has_interval_ranks():
    po = ea.PathObject(ea.GroundAlgebra(0))
    alg = po.algebra
    assert sorted(alg.degrees()) == [0, 1]
    assert len(alg.basis_in(0)) == 2 and len(alg.basis_in(1)) == 1
    assert verify.section_is_quasi_iso(po, 0)


def test_path_object_faces_differ():
    A = ea.CochainAlgebra(sim.SphereModel(1), 0, reduced=True)
    po = ea.PathObject(A)
    assert any(
        po.face(0, {b: 1}) != po.face(1, {b: 1}) for b in po.algebra.basis()
    )


def test_tensor_rejects_mixed_characteristics():
    with pytest.raises(ValueError):
        ea.TensorAlgebra(ea.CircleAlgebra(2), ea.GroundAlgebra(3))


def test_stable_sort_to_front():
    assert ea.stable_sort_to_front(("c", "e", "e"), "e") == (2, 3, 1)
    assert ea.stable_sort_to_front(("e", "e"), "e") == (1, 2)
