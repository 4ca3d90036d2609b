"""The surjection operad.

A basis element of arity r and degree d is a sequence (u(1), ..., u(r+d))
taking every value in 1..r, with no two consecutive entries equal.  The
table arrangement splits the sequence into rows ending at its caesuras
(the entries that are not the last occurrence of their value); it drives
both the signs of the differential and of the composition product.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .formal import FormalSum, add_term


def degree(seq, r=None):
    r = r if r is not None else max(seq)
    return len(seq) - r


def is_nondegenerate(seq):
    return all(seq[i] != seq[i + 1] for i in range(len(seq) - 1))


def is_surjective(seq, r):
    return set(seq) == set(range(1, r + 1))


def is_basis_surjection(seq, r=None):
    r = r if r is not None else (max(seq) if seq else 0)
    return bool(seq) and is_surjective(seq, r) and is_nondegenerate(seq)


def check_surjection(seq, r=None):
    if not is_basis_surjection(seq, r):
        raise ValueError("not a nondegenerate surjection: %r" % (seq,))
    return tuple(seq)


def final_flags(seq):
    """flags[i] is True when position i holds the last occurrence of its value."""
    seen = set()
    flags = [False] * len(seq)
    for i in range(len(seq) - 1, -1, -1):
        if seq[i] not in seen:
            flags[i] = True
            seen.add(seq[i])
    return flags


def caesura_positions(seq):
    flags = final_flags(seq)
    return [i for i in range(len(seq)) if not flags[i]]


def table_rows(seq):
    """Rows of the table arrangement: each row ends just after a caesura."""
    caesuras = caesura_positions(seq)
    rows = []
    start = 0
    for c in caesuras:
        rows.append(tuple(seq[start:c + 1]))
        start = c + 1
    rows.append(tuple(seq[start:]))
    return rows


def row_of_position(seq):
    """row[i] = index of the table row containing position i."""
    flags = final_flags(seq)
    rows = [0] * len(seq)
    current = 0
    for i in range(len(seq)):
        rows[i] = current
        if not flags[i]:
            current += 1
    return rows


def table_arrangement(seq):
    """Rows, caesura values and caesura positions of a surjection."""
    caesuras = caesura_positions(seq)
    return {
        "rows": table_rows(seq),
        "caesura_positions": caesuras,
        "caesuras": tuple(seq[c] for c in caesuras),
    }


def differential_signs(seq):
    """The +-1 mark of every position, per the table-arrangement sign rule.

    Caesuras alternate +, -, +, ... in reading order; the last occurrence of
    a value that occurs more than once gets the sign opposite to the value's
    last caesura; positions of once-occurring values get None (their omission
    is not surjective).
    """
    flags = final_flags(seq)
    signs = [None] * len(seq)
    caesura_count = 0
    last_caesura_sign = {}
    for i, value in enumerate(seq):
        if not flags[i]:
            s = -1 if caesura_count & 1 else 1
            signs[i] = s
            last_caesura_sign[value] = s
            caesura_count += 1
        elif value in last_caesura_sign:
            signs[i] = -last_caesura_sign[value]
    return signs


def differential_basis(seq, char=0):
    """Signed sum of the one-entry omissions of the sequence."""
    signs = differential_signs(seq)
    data = {}
    for i, s in enumerate(signs):
        if s is None:
            continue
        face = seq[:i] + seq[i + 1:]
        if not is_nondegenerate(face):
            continue
        add_term(data, face, s, char)
    return FormalSum(data, char)


def differential(element):
    return element.map_basis(lambda u: differential_basis(u, element.char))


def sigma_action_basis(sigma, seq):
    if max(seq) > len(sigma):
        raise ValueError("arity mismatch between %r and %r" % (sigma, seq))
    return tuple(sigma[x - 1] for x in seq)


def sigma_action(sigma, element):
    return element.map_basis(lambda u: sigma_action_basis(sigma, u))


def component_degrees(seq, cut_positions):
    """Degrees of the closed blocks seq[c_m .. c_{m+1}] between cut positions.

    A block's degree is the number of table rows it meets, minus one.
    `cut_positions` are 0-based, increasing, starting with 0 and ending with
    len(seq)-1.
    """
    rows = row_of_position(seq)
    return [rows[b] - rows[a] for a, b in zip(cut_positions, cut_positions[1:])]


def splittings(length, n):
    """All 1 = j_0 <= j_1 <= ... <= j_n = length (1-based, n blocks)."""
    for mids in combinations_with_replacement(range(1, length + 1), n - 1):
        yield (1,) + mids + (length,)


def compose_partial_basis(u, k, v, r=None, s=None, char=0):
    """Substitute the occurrences of k in u by the blocks of a splitting of v.

    Summed over all splittings; the sign interleaves the blocks of v with
    the blocks of u by the Koszul rule, the degree of a block being the
    number of table rows it meets minus one.
    """
    r = r if r is not None else max(u)
    s = s if s is not None else max(v)
    if not 1 <= k <= r:
        raise ValueError("slot %d out of range for arity %d" % (k, r))
    occurrences = [i for i, x in enumerate(u) if x == k]
    n = len(occurrences)
    u_cuts = [0] + occurrences + [len(u) - 1]
    # closed blocks of u between consecutive occurrences of k
    u_degrees = component_degrees(u, u_cuts)
    # suffix sums: moving v-block m into its slot passes u-blocks m+1..n+1
    suffix = [0] * (n + 2)
    for m in range(n, 0, -1):
        suffix[m] = suffix[m + 1] + u_degrees[m]

    data = {}
    for js in splittings(len(v), n):
        v_cuts = [j - 1 for j in js]
        v_degrees = component_degrees(v, v_cuts)
        exponent = sum(v_degrees[m] * suffix[m + 1] for m in range(n))
        sign = -1 if exponent & 1 else 1

        out = []
        prev = 0
        for m, pos in enumerate(occurrences):
            out.extend(x + s - 1 if x > k else x for x in u[prev:pos])
            out.extend(x + k - 1 for x in v[v_cuts[m]:v_cuts[m + 1] + 1])
            prev = pos + 1
        out.extend(x + s - 1 if x > k else x for x in u[prev:])
        result = tuple(out)
        if not is_nondegenerate(result):
            continue
        add_term(data, result, sign, char)
    return FormalSum(data, char)


def compose_partial(u_elt, k, v_elt, r=None, s=None):
    if u_elt.char != v_elt.char:
        raise ValueError("cannot mix characteristics")
    char = u_elt.char
    data = {}
    for u, cu in u_elt.terms.items():
        for v, cv in v_elt.terms.items():
            for w, c in compose_partial_basis(u, k, v, r, s, char).terms.items():
                add_term(data, w, cu * cv * c, char)
    return FormalSum(data, char)


def pair_projection(seq, i, j):
    """Subsequence of the occurrences of i and j."""
    if not 1 <= i < j:
        raise ValueError("need 1 <= i < j")
    return tuple(x for x in seq if x == i or x == j)


def variation_count(seq):
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def complexity(seq, r=None):
    """Smallest n with at most n variations in every two-value projection."""
    r = r if r is not None else max(seq)
    worst = 1
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            worst = max(worst, variation_count(pair_projection(seq, i, j)))
    return worst


def final_occurrence_pair(seq, i, j):
    """(i, j) or (j, i), ordered by the final occurrences in the sequence."""
    last_i = len(seq) - 1 - seq[::-1].index(i)
    last_j = len(seq) - 1 - seq[::-1].index(j)
    return (i, j) if last_i < last_j else (j, i)


def sigma_pair(sigma, i, j):
    return (i, j) if sigma.index(i) < sigma.index(j) else (j, i)


def cell_member(seq, mu, sigma, r=None):
    """Membership in the cell attached to (mu, sigma).

    For every pair i < j, the (i,j)-projection must have at most mu[i,j]
    variations, or exactly mu[i,j]+1 variations with the final occurrences
    of i and j ordered like the projection of sigma.
    """
    r = r if r is not None else max(seq)
    if len(sigma) != r:
        raise ValueError("arity mismatch")
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            var = variation_count(pair_projection(seq, i, j))
            bound = mu[(i, j)]
            if var <= bound:
                continue
            if var == bound + 1 and final_occurrence_pair(seq, i, j) == sigma_pair(sigma, i, j):
                continue
            return False
    return True


def filtration_member(seq, n, r=None):
    return complexity(seq, r) <= n


def all_basis(r, d):
    """All nondegenerate surjections of arity r and degree d."""
    length = r + d
    values = range(1, r + 1)
    for seq in product(values, repeat=length):
        if is_basis_surjection(seq, r):
            yield seq


def theta(d):
    """The alternating sequence (1,2,1,2,...) of degree d in arity 2."""
    return tuple(1 if i % 2 == 0 else 2 for i in range(d + 2))
