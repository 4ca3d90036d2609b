"""Normalized Hochschild cochains with cup, braces and the Gerstenhaber bracket.

Cochains on a finite-dimensional unital algebra are stored as coordinate
tables indexed by tuples of basis indices; normalization (vanishing when
any argument is the unit) is kept as an invariant of the table.  The brace
operations insert cochains into a cochain's slots with Koszul signs in the
shifted grading |f| = arity(f) - 1; the operations realize the images of
the degree-two filtration generators of the surjection operad, whose
preimages under table reduction are also constructed here.
"""

from __future__ import annotations

from itertools import product

from .formal import add_term, check_characteristic


class AssociativeAlgebra:
    """A finite-dimensional unital associative algebra by structure constants.

    The unit must be the first basis element; associativity and the unit
    laws are checked on all basis pairs and triples at construction.
    """

    def __init__(self, basis_names, mult, char=0, name="algebra"):
        check_characteristic(char)
        self.char = char
        self.name = name
        self.basis_names = list(basis_names)
        self.dim = len(self.basis_names)
        # mult[i][j] = coordinates of e_i * e_j
        self.mult = [
            [tuple((c % char if char else c) for c in mult[i][j]) for j in range(self.dim)]
            for i in range(self.dim)
        ]
        self._check()

    def _check(self):
        n = self.dim
        unit = tuple(1 if t == 0 else 0 for t in range(n))
        for i in range(n):
            if self.product_coords(unit, self.basis_vector(i)) != self.basis_vector(i):
                raise ValueError("first basis element is not a left unit")
            if self.product_coords(self.basis_vector(i), unit) != self.basis_vector(i):
                raise ValueError("first basis element is not a right unit")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.product_coords(self.mult[i][j], self.basis_vector(k))
                    right = self.product_coords(self.basis_vector(i), self.mult[j][k])
                    if left != right:
                        raise ValueError(
                            "structure constants are not associative at (%d,%d,%d)" % (i, j, k)
                        )

    def basis_vector(self, i):
        return tuple(1 if t == i else 0 for t in range(self.dim))

    def product_coords(self, x, y):
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] += xi * yj * c
        if self.char:
            out = [c % self.char for c in out]
        return tuple(out)

    def __repr__(self):
        return "AssociativeAlgebra(%s, dim %d)" % (self.name, self.dim)


def upper_triangular():
    """2x2 upper-triangular matrices, basis (1, E11, E12)."""
    # u = identity, a = E11, b = E12:
    #   a a = a, a b = b, b a = 0, b b = 0
    names = ["u", "a", "b"]
    z = (0, 0, 0)
    u, a, b = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    mult = [
        [u, a, b],
        [a, a, b],
        [b, z, z],
    ]
    return AssociativeAlgebra(names, mult, name="upper triangular 2x2")


def truncated_polynomial(char=0):
    """F[x]/x^3, basis (1, x, x^2)."""
    names = ["u", "x", "x2"]
    z = (0, 0, 0)
    u, x, x2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    mult = [
        [u, x, x2],
        [x, x2, z],
        [x2, z, z],
    ]
    return AssociativeAlgebra(names, mult, char=char, name="F[x]/x^3")


class HochschildCochain:
    """A normalized multilinear map A^(x m) -> A as a coordinate table.

    table[(i_1, ..., i_m)] = coordinate tuple of f(e_{i_1}, ..., e_{i_m});
    entries with any unit index (index 0) are projected away.
    """

    __slots__ = ("algebra", "arity", "table")

    def __init__(self, algebra, arity, table=()):
        self.algebra = algebra
        self.arity = arity
        data = {}
        items = table.items() if isinstance(table, dict) else table
        zero = (0,) * algebra.dim
        for key, coords in items:
            if len(key) != arity:
                raise ValueError("key arity mismatch: %r" % (key,))
            if 0 in key:
                continue
            coords = tuple(
                (c % algebra.char if algebra.char else c) for c in coords
            )
            if coords != zero:
                data[key] = coords
        self.table = data

    @property
    def shifted_degree(self):
        return self.arity - 1

    def __call__(self, *indices):
        return self.table.get(tuple(indices), (0,) * self.algebra.dim)

    def value_on_coords(self, arg_coords):
        """Evaluate on a tuple of coordinate vectors, multilinearly."""
        A = self.algebra
        out = [0] * A.dim
        for key, coords in self.table.items():
            factor = 1
            for slot, i in enumerate(key):
                factor *= arg_coords[slot][i]
                if not factor:
                    break
            if not factor:
                continue
            for k, c in enumerate(coords):
                out[k] += factor * c
        if A.char:
            out = [c % A.char for c in out]
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, HochschildCochain)
            and self.algebra is other.algebra
            and self.arity == other.arity
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.table.items())))

    def __bool__(self):
        return bool(self.table)

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("cannot add cochains of different arities")
        data = dict(self.table)
        zero = (0,) * self.algebra.dim
        for key, coords in other.table.items():
            cur = data.get(key, zero)
            new = tuple(a + b for a, b in zip(cur, coords))
            if self.algebra.char:
                new = tuple(c % self.algebra.char for c in new)
            if new == zero:
                data.pop(key, None)
            else:
                data[key] = new
        return HochschildCochain(self.algebra, self.arity, data)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, n):
        return HochschildCochain(
            self.algebra,
            self.arity,
            {k: tuple(n * c for c in v) for k, v in self.table.items()},
        )

    def __repr__(self):
        return "HochschildCochain(arity %d, %d entries)" % (self.arity, len(self.table))


def zero_cochain(algebra, arity):
    return HochschildCochain(algebra, arity, ())


def identity_cochain(algebra):
    """The arity-1 identity map (normalized: it kills the unit slot)."""
    table = {(i,): algebra.basis_vector(i) for i in range(1, algebra.dim)}
    return HochschildCochain(algebra, 1, table)


def multiplication_cochain(algebra):
    table = {}
    for i in range(1, algebra.dim):
        for j in range(1, algebra.dim):
            table[(i, j)] = algebra.mult[i][j]
    return HochschildCochain(algebra, 2, table)


def random_cochain(algebra, arity, rng, bound=2, unit_free=False):
    """A random normalized cochain; with unit_free the values avoid the unit
    coordinate, which keeps brackets against the multiplication cochain
    inside the normalized subcomplex."""
    table = {}
    for key in product(range(1, algebra.dim), repeat=arity):
        coords = [rng.randint(-bound, bound) for _ in range(algebra.dim)]
        if unit_free:
            coords[0] = 0
        table[key] = tuple(coords)
    return HochschildCochain(algebra, arity, table)


def differential(f):
    """The Hochschild coboundary.

    (delta f)(a_1, ..., a_{m+1}) = a_1 f(a_2, ...) + sum_i (-1)^i
    f(..., a_i a_{i+1}, ...) + (-1)^(m+1) f(a_1, ..., a_m) a_{m+1}.
    """
    A = f.algebra
    m = f.arity
    out = {}
    for key in product(range(1, A.dim), repeat=m + 1):
        acc = [0] * A.dim
        left = A.product_coords(A.basis_vector(key[0]), f.value_on_coords(
            tuple(A.basis_vector(i) for i in key[1:])))
        for k, c in enumerate(left):
            acc[k] += c
        for i in range(1, m + 1):
            prod_coords = A.mult[key[i - 1]][key[i]]
            args = tuple(
                A.basis_vector(key[t]) for t in range(i - 1)
            ) + (prod_coords,) + tuple(A.basis_vector(key[t]) for t in range(i + 1, m + 1))
            val = f.value_on_coords(args)
            sgn = -1 if i & 1 else 1
            for k, c in enumerate(val):
                acc[k] += sgn * c
        right = A.product_coords(
            f.value_on_coords(tuple(A.basis_vector(i) for i in key[:m])),
            A.basis_vector(key[m]),
        )
        sgn = -1 if (m + 1) & 1 else 1
        for k, c in enumerate(right):
            acc[k] += sgn * c
        out[key] = tuple(acc)
    return HochschildCochain(A, m + 1, out)


def cup(f, g):
    """(f cup g)(a_1, ..., a_{m+n}) = f(a_1..a_m) g(a_{m+1}..a_{m+n})."""
    A = f.algebra
    out = {}
    for kf, vf in f.table.items():
        for kg, vg in g.table.items():
            coords = A.product_coords(vf, vg)
            if any(coords):
                key = kf + kg
                cur = out.get(key)
                if cur is None:
                    out[key] = coords
                else:
                    out[key] = tuple(a + b for a, b in zip(cur, coords))
    return HochschildCochain(A, f.arity + g.arity, out)


def brace(f, *gs):
    """The brace f{g_1, ..., g_n}: order-preserving insertions with Koszul
    signs (-1)^(sum |g_p| * (number of free slots before g_p's slot))."""
    A = f.algebra
    m = f.arity
    n = len(gs)
    if n > m:
        return zero_cochain(A, m + sum(g.arity for g in gs) - n)
    out_arity = m - n + sum(g.arity for g in gs)
    out = {}

    def insertions(next_slot, chosen):
        if len(chosen) == n:
            yield tuple(chosen)
            return
        p = len(chosen)
        for slot in range(next_slot, m - (n - p - 1) + 1):
            yield from insertions(slot + 1, chosen + [slot])

    for slots in insertions(1, []):
        # slot p (1-based position in f's arguments) receives g_p
        exponent = 0
        offset = 0
        for p, slot in enumerate(slots):
            # arguments standing before g_p in the output
            before = slot - 1 + offset
            exponent += gs[p].shifted_degree * before
            offset += gs[p].arity - 1
        sgn = -1 if exponent & 1 else 1
        for key in product(range(1, A.dim), repeat=out_arity):
            args = []
            pos = 0
            used = 0
            for slot in range(1, m + 1):
                if used < n and slots[used] == slot:
                    g = gs[used]
                    block = key[pos: pos + g.arity]
                    args.append(g.value_on_coords(tuple(A.basis_vector(i) for i in block)))
                    pos += g.arity
                    used += 1
                else:
                    args.append(A.basis_vector(key[pos]))
                    pos += 1
            val = f.value_on_coords(tuple(args))
            if any(val):
                cur = out.get(key)
                if cur is None:
                    out[key] = tuple(sgn * c for c in val)
                else:
                    out[key] = tuple(a + sgn * c for a, c in zip(cur, val))
    return HochschildCochain(A, out_arity, out)


def gerstenhaber_bracket(f, g):
    """[f, g] = f{g} - (-1)^(|f| |g|) g{f} in the shifted grading."""
    sgn = -1 if (f.shifted_degree * g.shifted_degree) & 1 else 1
    return brace(f, g) - brace(g, f).scale(sgn)


def brace_surjection(r):
    """The filtration-two generator (1,2,1,3,1,...,1,r,1) of arity r."""
    if r < 2:
        raise ValueError("brace generators start at arity 2")
    seq = [1]
    for v in range(2, r + 1):
        seq.extend((v, 1))
    return tuple(seq)


def brace_element(r):
    """The tuple of permutations whose table reduction is the brace
    generator: row i cycles the value 1 forward to position i+1."""
    if r < 2:
        raise ValueError("brace elements start at arity 2")
    perms = []
    for i in range(r):
        row = list(range(2, i + 2)) + [1] + list(range(i + 2, r + 1))
        perms.append(tuple(row))
    return tuple(perms)
