"""Permutations, block permutations, partial composition, Koszul signs.

A permutation of arity r is the tuple (s(1), ..., s(r)) of its values,
always 1-based.  These are the combinatorial atoms for everything else:
the permutation operad, the Barratt-Eccles operad and the interval-cut
sign rules.
"""

from __future__ import annotations

from itertools import permutations as iter_permutations


def identity(r):
    return tuple(range(1, r + 1))


def is_permutation(seq):
    return sorted(seq) == list(range(1, len(seq) + 1))


def check_permutation(seq):
    if not is_permutation(seq):
        raise ValueError("not a permutation of 1..%d: %r" % (len(seq), seq))
    return tuple(seq)


def compose(u, v):
    """(u o v)(i) = u(v(i)).  Left action convention: sigma . w = compose(sigma, w)."""
    if len(u) != len(v):
        raise ValueError("arity mismatch: %r vs %r" % (u, v))
    return tuple(u[x - 1] for x in v)


def inverse(u):
    inv = [0] * len(u)
    for i, x in enumerate(u):
        inv[x - 1] = i + 1
    return tuple(inv)


def sign(u):
    """Signature, by counting inversions."""
    inv = 0
    for i in range(len(u)):
        ui = u[i]
        for j in range(i + 1, len(u)):
            if ui > u[j]:
                inv += 1
    return -1 if inv & 1 else 1


def all_permutations(r):
    return list(iter_permutations(range(1, r + 1)))


def block_permutation(sigma, sizes):
    """Replace each value k of sigma by the k-th run of consecutive integers.

    The runs partition 1..sum(sizes) with lengths sizes[0], sizes[1], ...
    """
    if len(sigma) != len(sizes):
        raise ValueError("need one block size per value of the permutation")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    out = []
    for k in sigma:
        base = offsets[k - 1]
        out.extend(range(base + 1, base + sizes[k - 1] + 1))
    return tuple(out)


def direct_sum(*perms):
    """v_1 (+) v_2 (+) ... : concatenation with shifts."""
    out = []
    shift = 0
    for v in perms:
        out.extend(x + shift for x in v)
        shift += len(v)
    return tuple(out)


def compose_partial(u, k, v):
    """Partial composition u o_k v in the permutation operad.

    The occurrence of k in u is replaced by (v(1)+k-1, ..., v(s)+k-1) and
    the entries of u above k are shifted up by s-1.
    """
    r, s = len(u), len(v)
    if not 1 <= k <= r:
        raise ValueError("slot %d out of range for arity %d" % (k, r))
    out = []
    for x in u:
        if x == k:
            out.extend(y + k - 1 for y in v)
        elif x > k:
            out.append(x + s - 1)
        else:
            out.append(x)
    return tuple(out)


def compose_full(u, vs):
    """u(v_1, ..., v_r) by iterated partial compositions (right to left)."""
    if len(vs) != len(u):
        raise ValueError("need one argument per slot")
    out = u
    for k in range(len(u), 0, -1):
        out = compose_partial(out, k, vs[k - 1])
    return out


def compose_full_direct(u, vs):
    """u(v_1, ..., v_r) = (v_1 (+) ... (+) v_r) . u_*(s_1, ..., s_r)."""
    sizes = tuple(len(v) for v in vs)
    return compose(direct_sum(*vs), block_permutation(u, sizes))


def koszul_sign(degrees, reordering):
    """Sign of rearranging graded symbols.

    `degrees` are the degrees of symbols in their original order and
    `reordering` is the permutation p with reordered[i] = original[p(i)];
    each transposed pair of symbols of degrees d, e contributes (-1)^(d e).
    """
    if len(degrees) != len(reordering):
        raise ValueError("degree list and reordering must have equal length")
    check_permutation(reordering)
    exponent = 0
    n = len(reordering)
    for i in range(n):
        di = degrees[reordering[i] - 1]
        if di == 0:
            continue
        for j in range(i + 1, n):
            if reordering[i] > reordering[j]:
                exponent += di * degrees[reordering[j] - 1]
    return -1 if exponent & 1 else 1


def koszul_sign_of_sort(keys, degrees):
    """Koszul sign of the stable sort of `keys` (ties keep original order)."""
    exponent = 0
    n = len(keys)
    for i in range(n):
        ki, di = keys[i], degrees[i]
        if di == 0:
            continue
        for j in range(i + 1, n):
            if ki > keys[j]:
                exponent += di * degrees[j]
    return -1 if exponent & 1 else 1


def pair_projection(perm, i, j):
    """The permutation of (i, j) read off from the values of `perm`."""
    pos_i = perm.index(i)
    pos_j = perm.index(j)
    return (i, j) if pos_i < pos_j else (j, i)
