"""A walk through the two operads and the table reduction between them.

Run:  python demos/operad_identities.py
"""

from cochainops import barratt_eccles as be
from cochainops import surjections as sj
from cochainops import table_reduction as tre
from cochainops.formal import FormalSum
from cochainops.permutations import compose_partial


def show(title, value):
    print("%-52s %s" % (title + ":", value))


print("=" * 72)
print("Permutations compose by substitution with shifts")
print("=" * 72)
show("(3,2,1) o_2 (1,3,2)", compose_partial((3, 2, 1), 2, (1, 3, 2)))

print()
print("=" * 72)
print("The bar-construction operad: tuples of permutations")
print("=" * 72)
w = ((1, 2), (2, 1), (1, 2))
show("differential of ((1,2),(2,1),(1,2))", be.differential_basis(w))
show("its Alexander-Whitney diagonal", be.diagonal_basis(w))
show("its two-value complexity", be.complexity(w))

u = FormalSum.single(((1, 2), (2, 1)))
show("((1,2),(2,1)) o_1 ((1,2),(2,1))", be.compose_partial(u, 1, u))

print()
print("=" * 72)
print("The surjection operad: sequences, caesuras, signed faces")
print("=" * 72)
seq = (1, 3, 2, 1, 4, 2, 1)
show("table rows of (1,3,2,1,4,2,1)", sj.table_rows(seq))
show("caesuras", sj.table_arrangement(seq)["caesuras"])
show("differential", sj.differential_basis(seq))
show("(1,2,1,3) o_1 (1,2,1)", sj.compose_partial_basis((1, 2, 1, 3), 1, (1, 2, 1)))

print()
print("=" * 72)
print("Table reduction and its explicit section")
print("=" * 72)
w = ((1, 2, 3, 4), (1, 4, 3, 2), (1, 2, 4, 3))
show("TR of the three-row table", tre.tr_basis(w))
show("section of (1,2,1,3,1)", tre.section((1, 2, 1, 3, 1)))
show("TR of that section (exactly the input)", tre.tr_basis(tre.section((1, 2, 1, 3, 1))))

print()
print("Morphism checks on this sample:")
lhs = sj.differential(tre.tr_basis(w))
rhs = tre.tr(be.differential_basis(w))
show("  TR commutes with the differentials", lhs == rhs)
a = ((1, 2), (2, 1))
b = ((2, 1), (1, 2))
lhs = tre.tr(be.compose_partial_basis(a, 2, b))
rhs = sj.compose_partial(tre.tr_basis(a), 2, tre.tr_basis(b), 2, 2)
show("  TR commutes with composition at slot 2", lhs == rhs)
