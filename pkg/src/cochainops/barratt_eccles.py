"""The differential graded Barratt-Eccles operad.

A basis element of arity r and degree d is a (d+1)-tuple of permutations
of 1..r with no two consecutive entries equal (the normalized homogeneous
bar complex of the symmetric group).  Elements are FormalSums of such
tuples.
"""

from __future__ import annotations

from itertools import combinations, product

from .formal import FormalSum, add_term
from .permutations import (
    all_permutations,
    compose,
    compose_partial as perm_compose_partial,
    identity,
    koszul_sign,
)


def arity(simplex):
    return len(simplex[0])


def degree(simplex):
    return len(simplex) - 1


def is_degenerate(simplex):
    return any(simplex[i] == simplex[i + 1] for i in range(len(simplex) - 1))


def check_simplex(simplex):
    r = arity(simplex)
    if any(len(w) != r or sorted(w) != list(range(1, r + 1)) for w in simplex):
        raise ValueError("not a tuple of permutations of equal arity: %r" % (simplex,))
    return simplex


def normalize(element):
    """Drop degenerate basis simplices from a FormalSum."""
    data = {w: c for w, c in element.terms.items() if not is_degenerate(w)}
    return FormalSum(data, element.char)


def check_homogeneous(element):
    shapes = {(arity(w), degree(w)) for w in element.terms}
    if len(shapes) > 1:
        raise ValueError("element is not homogeneous in arity and degree: %r" % (shapes,))


def differential_basis(simplex, char=0):
    """Alternating sum of face tuples, with degenerate faces dropped."""
    d = len(simplex) - 1
    data = {}
    if d == 0:
        return FormalSum.zero(char)
    for i in range(d + 1):
        if 0 < i < d and simplex[i - 1] == simplex[i + 1]:
            continue
        face = simplex[:i] + simplex[i + 1:]
        add_term(data, face, -1 if i & 1 else 1, char)
    return FormalSum(data, char)


def differential(element):
    check_homogeneous(element)
    return element.map_basis(lambda w: differential_basis(w, element.char))


def diagonal_basis(simplex, char=0):
    """Alexander-Whitney diagonal: sum of (front face, back face) pairs."""
    n = len(simplex) - 1
    data = {}
    for d in range(n + 1):
        front = simplex[: d + 1]
        back = simplex[d:]
        if is_degenerate(front) or is_degenerate(back):
            continue
        add_term(data, (front, back), 1, char)
    return FormalSum(data, char)


def diagonal(element):
    return element.map_basis(lambda w: diagonal_basis(w, element.char))


def sigma_action_basis(sigma, simplex):
    if len(sigma) != arity(simplex):
        raise ValueError("arity mismatch between %r and %r" % (sigma, simplex))
    return tuple(compose(sigma, w) for w in simplex)


def sigma_action(sigma, element):
    return element.map_basis(lambda w: sigma_action_basis(sigma, w))


def augmentation(element):
    """Coefficient sum in degree 0; zero in positive degrees."""
    total = 0
    for w, c in element.terms.items():
        if degree(w) == 0:
            total += c
    return total % element.char if element.char else total


def lattice_paths(d, e):
    """Monotone paths (0,0) -> (d,e), ordered by their horizontal step sets.

    Each path is returned as the vertex list ((x_0,y_0), ..., (x_{d+e},y_{d+e})).
    """
    steps = d + e
    paths = []
    for h_positions in combinations(range(steps), d):
        hset = set(h_positions)
        x = y = 0
        vertices = [(0, 0)]
        for t in range(steps):
            if t in hset:
                x += 1
            else:
                y += 1
            vertices.append((x, y))
        paths.append(tuple(vertices))
    return paths


def path_sign(vertices):
    """Koszul sign of the shuffle taking the path's degree-1 segments to
    horizontals-first order: parity of (vertical, later horizontal) pairs."""
    steps = []
    for (x0, _y0), (x1, _y1) in zip(vertices, vertices[1:]):
        steps.append(x1 > x0)  # True = horizontal
    inversions = 0
    verticals_seen = 0
    for horizontal in steps:
        if horizontal:
            inversions += verticals_seen
        else:
            verticals_seen += 1
    return -1 if inversions & 1 else 1


def compose_partial_basis(u, k, v, char=0):
    """Composition of basis simplices via monotone lattice paths."""
    d, e = degree(u), degree(v)
    if not 1 <= k <= arity(u):
        raise ValueError("slot %d out of range for arity %d" % (k, arity(u)))
    data = {}
    for vertices in lattice_paths(d, e):
        simplex = tuple(perm_compose_partial(u[x], k, v[y]) for x, y in vertices)
        if is_degenerate(simplex):
            continue
        add_term(data, simplex, path_sign(vertices), char)
    return FormalSum(data, char)


def compose_partial(u_elt, k, v_elt):
    """Bilinear extension of the partial composition."""
    if u_elt.char != v_elt.char:
        raise ValueError("cannot mix characteristics")
    char = u_elt.char
    data = {}
    for u, cu in u_elt.terms.items():
        for v, cv in v_elt.terms.items():
            for w, c in compose_partial_basis(u, k, v, char).terms.items():
                add_term(data, w, cu * cv * c, char)
    return FormalSum(data, char)


def compose_full_basis(u, vs, char=0):
    """u(v_1, ..., v_r) by iterated partial compositions, right to left."""
    result = FormalSum.single(u, 1, char)
    for k in range(arity(u), 0, -1):
        result = compose_partial(result, k, FormalSum.single(vs[k - 1], 1, char))
    return result


def pair_sequence(simplex, i, j):
    """The sequence of (i,j)-projections of the permutations of the simplex."""
    out = []
    for w in simplex:
        out.append((i, j) if w.index(i) < w.index(j) else (j, i))
    return out


def variation_count(seq):
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def complexity(simplex):
    """Smallest n with at most n-1 variations in every two-value projection."""
    r = arity(simplex)
    worst = 0
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            worst = max(worst, variation_count(pair_sequence(simplex, i, j)))
    return worst + 1


def sigma_pair(sigma, i, j):
    return (i, j) if sigma.index(i) < sigma.index(j) else (j, i)


def cell_member(simplex, mu, sigma):
    """Membership in the cell attached to (mu, sigma).

    mu maps each pair (i, j), i < j, to a non-negative integer; for every
    pair the projected sequence must have fewer than mu[i,j] variations, or
    exactly mu[i,j] variations and end at the projection of sigma.
    """
    r = arity(simplex)
    if len(sigma) != r:
        raise ValueError("arity mismatch")
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            seq = pair_sequence(simplex, i, j)
            var = variation_count(seq)
            bound = mu[(i, j)]
            if var <= bound - 1:
                continue
            if var == bound and seq[-1] == sigma_pair(sigma, i, j):
                continue
            return False
    return True


def filtration_member(simplex, n):
    return complexity(simplex) <= n


def all_basis(r, d, first=None):
    """All nondegenerate basis simplices of E(r)_d.

    With `first` set, only the simplices whose initial permutation equals
    `first` are produced (the rest of the basis is recovered by the free
    left translation action).
    """
    perms = all_permutations(r)
    heads = [first] if first is not None else perms
    for w0 in heads:
        if d == 0:
            yield (w0,)
            continue
        for tail in product(perms, repeat=d):
            prev = w0
            ok = True
            for w in tail:
                if w == prev:
                    ok = False
                    break
                prev = w
            if ok:
                yield (w0,) + tail


def mu_cup(d, arity_two_identity=None):
    """The alternating simplex (id, tau, id, ...) of degree d in arity 2."""
    ident = identity(2)
    tau = (2, 1)
    return tuple(ident if i % 2 == 0 else tau for i in range(d + 1))
