"""Interval-cut operations on normalized chains, and the cochain operations.

A surjection u of arity r and degree d acts on an n-simplex by cutting
{0,...,n} at r+d-1 monotone positions, grouping the closed intervals by the
labels of u, and evaluating the underlying simplex on each group.  Signs
combine a Koszul shuffle (interval lengths as degrees, intervals sorted by
label) with a position sign over the caesura intervals.  Dualizing gives
the cup product, the higher cup-i products and the Steenrod squares.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .formal import FormalSum, add_term
from .simplicial import Cochain, dual_pairing
from .surjections import final_flags, theta
from .table_reduction import tr


def is_esimplex(basis):
    return bool(basis) and isinstance(basis[0], tuple)


def cuts(length, n):
    """All monotone cut tuples (n_1, ..., n_{length-1}) with values in 0..n,
    in lexicographic order."""
    return combinations_with_replacement(range(n + 1), length - 1)


def interval_lengths(u, cut, n):
    """Per-position interval lengths: an interval at a caesura counts its
    right endpoint as well."""
    flags = final_flags(u)
    bounds = (0,) + tuple(cut) + (n,)
    return [
        bounds[i + 1] - bounds[i] + (0 if flags[i] else 1)
        for i in range(len(u))
    ]


def cut_sign(u, cut, n):
    """Product of the label-sorting Koszul sign and the caesura position sign."""
    flags = final_flags(u)
    bounds = (0,) + tuple(cut) + (n,)
    lengths = [
        bounds[i + 1] - bounds[i] + (0 if flags[i] else 1)
        for i in range(len(u))
    ]
    exponent = 0
    for i in range(len(u)):
        li = lengths[i]
        if li:
            ui = u[i]
            for j in range(i + 1, len(u)):
                if ui > u[j]:
                    exponent += li * lengths[j]
    for i in range(len(u)):
        if not flags[i]:
            exponent += bounds[i + 1]
    return -1 if exponent & 1 else 1


def aw_terms(u, vseq, model, r=None):
    """Interval-cut expansion of u on the simplex with vertex list `vseq`.

    Yields (sign, factors) with `factors` an r-tuple of canonical simplices;
    terms with a degenerate factor are dropped.
    """
    r = r if r is not None else max(u)
    n = len(vseq) - 1
    flags = final_flags(u)
    positions_of = [[] for _ in range(r + 1)]
    for i, value in enumerate(u):
        positions_of[value].append(i)

    for cut in cuts(len(u), n):
        bounds = (0,) + cut + (n,)
        factors = []
        dead = False
        for k in range(1, r + 1):
            vertices = []
            for i in positions_of[k]:
                vertices.extend(vseq[t] for t in range(bounds[i], bounds[i + 1] + 1))
            simplex = model.normalize(tuple(vertices))
            if simplex is None:
                dead = True
                break
            factors.append(simplex)
        if dead:
            continue

        lengths = [
            bounds[i + 1] - bounds[i] + (0 if flags[i] else 1)
            for i in range(len(u))
        ]
        exponent = 0
        for i in range(len(u)):
            li = lengths[i]
            if li:
                ui = u[i]
                for j in range(i + 1, len(u)):
                    if ui > u[j]:
                        exponent += li * lengths[j]
        for i in range(len(u)):
            if not flags[i]:
                exponent += bounds[i + 1]
        yield (-1 if exponent & 1 else 1), tuple(factors)


def aw_apply(u, simplex, model, char=0, r=None):
    """AW(u) of a canonical nondegenerate simplex, as a sum of factor tuples."""
    data = {}
    for sign, factors in aw_terms(u, model.vertex_list(simplex), model, r):
        add_term(data, factors, sign, char)
    return FormalSum(data, char)


def aw_apply_chain(u, chain, model, r=None):
    """Linear extension of aw_apply to chains."""
    return chain.map_basis(lambda x: aw_apply(u, x, model, chain.char, r))


def tensor_differential(model, tensor_sum):
    """Differential of a sum of simplex tuples, by the graded derivation rule."""
    from .simplicial import boundary

    char = tensor_sum.char
    data = {}
    for factors, coeff in tensor_sum.terms.items():
        sign = 1
        for k, x in enumerate(factors):
            for face, c in boundary(model, x, char).terms.items():
                add_term(data, factors[:k] + (face,) + factors[k + 1:], sign * coeff * c, char)
            if (len(model.vertex_list(x)) - 1) & 1:
                sign = -sign
    return FormalSum(data, char)


def element_to_surjections(element, char=0):
    """Coerce an operad element to a surjection-operad FormalSum.

    Barratt-Eccles input (tuples of permutations) is sent through table
    reduction; surjection input is passed through.
    """
    if not isinstance(element, FormalSum):
        element = FormalSum.single(element, 1, char)
    if not element.terms:
        return element
    sample = next(iter(element.terms))
    if is_esimplex(sample):
        return tr(element)
    return element


def cochain_eval(element, cochains, model, char=None):
    """Evaluate an operad element on cochains of a model.

    The element (arity r, degree d) eats r homogeneous cochains and returns
    a cochain of degree sum(deg f_k) - d; the value on a simplex x pairs the
    argument tensor against the interval-cut expansion of x, with the global
    sign (-1)^(d * sum deg f_k) for commuting the operation past its
    arguments.
    """
    if char is None:
        char = cochains[0].char if cochains else 0
    reduced = any(f.reduced for f in cochains)
    if not isinstance(element, FormalSum):
        element = FormalSum.single(element, 1, char)
    if not element.terms:
        raise ValueError("evaluating the zero operation is ambiguous")
    sample = next(iter(element.terms))
    if is_esimplex(sample):
        shapes = {(len(w[0]), len(w) - 1) for w in element.terms}
    else:
        shapes = {(max(seq), len(seq) - max(seq)) for seq in element.terms}
    if len(shapes) > 1:
        raise ValueError("element is not homogeneous")
    r, d = shapes.pop()
    if len(cochains) != r:
        raise ValueError("element of arity %d applied to %d cochains" % (r, len(cochains)))
    surj = element_to_surjections(element, char)

    total_f = sum(f.degree for f in cochains)
    out_degree = total_f - d
    values = {}
    global_sign = -1 if (d * total_f) & 1 else 1
    for x in model.simplices(out_degree, reduced=reduced):
        vseq = model.vertex_list(x)
        acc = 0
        for u, cu in surj.terms.items():
            for sign, factors in aw_terms(u, vseq, model, r):
                pairing = dual_pairing(cochains, factors, char)
                if pairing:
                    acc += cu * sign * pairing
        acc *= global_sign
        if char:
            acc %= char
        if acc:
            values[x] = acc
    return Cochain(model, out_degree, values, char, reduced)


def cup(f, g, model=None):
    """The cup product: the arity-2, degree-0 operation (1, 2)."""
    model = model or f.model
    return cochain_eval(FormalSum.single((1, 2), 1, f.char), [f, g], model)


def cup_i(f, g, i, model=None):
    """The cup-i product: the alternating operation (1,2,1,2,...) of degree i."""
    if i < 0:
        raise ValueError("cup-i needs i >= 0")
    model = model or f.model
    return cochain_eval(FormalSum.single(theta(i), 1, f.char), [f, g], model)


def steenrod_square(k, f, model=None):
    """Sq^k of a mod-2 cocycle, represented as f cup_{deg f - k} f."""
    if f.char != 2:
        raise ValueError("Steenrod squares are mod-2 operations")
    if not 0 <= k <= f.degree:
        raise ValueError("need 0 <= k <= deg f = %d" % f.degree)
    if not f.is_cocycle():
        raise ValueError("Steenrod squares are defined on cocycles")
    return cup_i(f, f, f.degree - k, model)
