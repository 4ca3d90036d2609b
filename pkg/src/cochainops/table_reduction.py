"""Table reduction from the Barratt-Eccles to the surjection operad.

A tuple of permutations (w_0, ..., w_d) is reduced against every choice of
row lengths (r_0, ..., r_d): row i takes the first r_i values of w_i that
were not consumed as a non-final entry of an earlier row.  The sum of the
nondegenerate reduced sequences, all with coefficient +1, is the image of
the simplex; the construction also has an explicit one-sided inverse.
"""

from __future__ import annotations

from itertools import combinations

from .formal import FormalSum, add_term
from .barratt_eccles import arity, degree, is_degenerate
from .surjections import (
    caesura_positions,
    is_nondegenerate,
    row_of_position,
    table_rows,
)


def row_length_choices(r, d):
    """All (r_0, ..., r_d) with every r_i >= 1 summing to r + d."""
    total = r + d
    for cuts in combinations(range(1, total), d):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def reduce_against(simplex, row_lengths):
    """The single table-reduced sequence for one choice of row lengths."""
    excluded = set()
    out = []
    for row_index, r_i in enumerate(row_lengths):
        taken = 0
        last_value = None
        for value in simplex[row_index]:
            if value in excluded:
                continue
            out.append(value)
            last_value = value
            taken += 1
            if taken == r_i:
                break
        if row_index < len(row_lengths) - 1:
            row = out[len(out) - r_i:]
            excluded.update(row[:-1])
    return tuple(out)


def tr_basis(simplex, char=0):
    """Table reduction of a basis simplex: all row-length choices, signs +1."""
    if is_degenerate(simplex):
        return FormalSum.zero(char)
    r, d = arity(simplex), degree(simplex)
    data = {}
    for row_lengths in row_length_choices(r, d):
        seq = reduce_against(simplex, row_lengths)
        if is_nondegenerate(seq):
            add_term(data, seq, 1, char)
    return FormalSum(data, char)


def tr(element_or_simplex, char=0):
    """Table reduction, accepting a basis simplex or a FormalSum of them."""
    if isinstance(element_or_simplex, FormalSum):
        element = element_or_simplex
        return element.map_basis(lambda w: tr_basis(w, element.char))
    return tr_basis(element_or_simplex, char)


tr_linear = tr


def section(seq):
    """A tuple of permutations reducing to the given surjection.

    The last permutation lists the final occurrences in reading order; each
    earlier permutation moves the value of the corresponding caesura back to
    the caesura's position.
    """
    rows = table_rows(seq)
    caesuras = [row[-1] for row in rows[:-1]]
    finals = []
    for row_index, row in enumerate(rows):
        finals.extend(row if row_index == len(rows) - 1 else row[:-1])
    d = len(caesuras)

    # caesura i sits immediately before the (insert_at[i]+1)-th final entry
    insert_at = []
    consumed = 0
    for row_index in range(d):
        consumed += len(rows[row_index]) - 1
        insert_at.append(consumed)

    perms = [tuple(finals)]
    current = list(finals)
    for i in range(d - 1, -1, -1):
        current.remove(caesuras[i])
        current.insert(insert_at[i], caesuras[i])
        perms.append(tuple(current))
    perms.reverse()
    return tuple(perms)
