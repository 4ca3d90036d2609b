"""Finite simplicial models and their normalized (co)chains.

Shipped models: the standard simplex, the one-point-collapse spheres
S^n = Delta^n / boundary, the interval pointed at its first vertex, and
ordered simplicial complexes (including the six-vertex projective plane).

A nondegenerate simplex is canonically a monotone vertex tuple; applying a
simplicial operator means selecting vertex positions and renormalizing, so
evaluation, boundaries and interval cuts all run through `normalize`.
"""

from __future__ import annotations

from itertools import combinations

from .formal import FormalSum, add_term
from .linalg import ChainComplexData, rank


BASE_POINT = ("pt",)


class StandardSimplex:
    """The simplicial set Delta^n; simplices are increasing vertex tuples."""

    def __init__(self, n):
        self.n = n
        self.base_point = None

    def __repr__(self):
        return "StandardSimplex(%d)" % self.n

    def top_dim(self):
        return self.n

    def simplices(self, dim, reduced=False):
        if dim < 0 or dim > self.n:
            return []
        out = [tuple(c) for c in combinations(range(self.n + 1), dim + 1)]
        if reduced and dim == 0 and self.base_point is not None:
            out = [s for s in out if s != self.base_point]
        return out

    def vertex_list(self, simplex):
        return simplex

    def normalize(self, vseq):
        for a, b in zip(vseq, vseq[1:]):
            if a == b:
                return None
        return tuple(vseq)


class PointedInterval(StandardSimplex):
    """Delta^1 pointed at the vertex (0); reduced simplices are (1) and (0,1)."""

    def __init__(self):
        super().__init__(1)
        self.base_point = (0,)

    def __repr__(self):
        return "PointedInterval()"


class SphereModel:
    """S^n = Delta^n with its whole boundary collapsed to a point (n >= 1)."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("use TwoPointModel for the 0-sphere")
        self.n = n
        self.base_point = BASE_POINT
        self._top = tuple(range(n + 1))

    def __repr__(self):
        return "SphereModel(%d)" % self.n

    def top_dim(self):
        return self.n

    def simplices(self, dim, reduced=False):
        if dim == 0 and not reduced:
            return [BASE_POINT]
        if dim == self.n:
            return [self._top]
        return []

    def vertex_list(self, simplex):
        if simplex == BASE_POINT:
            return (0,)
        return simplex

    def normalize(self, vseq):
        if len(vseq) == 1:
            return BASE_POINT
        if tuple(vseq) == self._top:
            return self._top
        return None


class OrderedComplex:
    """A finite ordered simplicial complex given by vertices and facets."""

    def __init__(self, vertices, facets, base_point=None):
        self.vertices = list(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("vertices must be distinct")
        self._faces = set()
        top = 0
        for facet in facets:
            idx = sorted(self._index[v] for v in facet)
            if len(set(idx)) != len(idx):
                raise ValueError("facet with repeated vertex: %r" % (facet,))
            top = max(top, len(idx) - 1)
            for m in range(1, len(idx) + 1):
                for face in combinations(idx, m):
                    self._faces.add(tuple(self.vertices[i] for i in face))
        self._top_dim = top
        self.base_point = base_point

    def __repr__(self):
        return "OrderedComplex(%d vertices, top dim %d)" % (len(self.vertices), self._top_dim)

    def top_dim(self):
        return self._top_dim

    def simplices(self, dim, reduced=False):
        out = sorted(
            (s for s in self._faces if len(s) == dim + 1),
            key=lambda s: tuple(self._index[v] for v in s),
        )
        if reduced and dim == 0 and self.base_point is not None:
            out = [s for s in out if s != self.base_point]
        return out

    def vertex_list(self, simplex):
        return simplex

    def normalize(self, vseq):
        for a, b in zip(vseq, vseq[1:]):
            if a == b:
                return None
        simplex = tuple(vseq)
        if simplex not in self._faces:
            raise ValueError("%r is not a simplex of the complex" % (simplex,))
        return simplex


class TwoPointModel(OrderedComplex):
    """The 0-sphere: a base point and one other vertex."""

    def __init__(self):
        super().__init__(["pt", "x"], [["pt"], ["x"]], base_point=("pt",))

    def __repr__(self):
        return "TwoPointModel()"


def projective_plane():
    """The minimal six-vertex triangulation of the real projective plane."""
    facets = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ]
    return OrderedComplex(range(1, 7), facets)


def sphere(n):
    return TwoPointModel() if n == 0 else SphereModel(n)


def evaluate(model, simplex, ops):
    """Apply the simplicial operator (c_0 <= ... <= c_m) to a simplex.

    Returns the canonical nondegenerate image, or None when the image is
    degenerate (or collapses into the base point's degeneracies).
    """
    vseq = model.vertex_list(simplex)
    top = len(vseq) - 1
    prev = 0
    for c in ops:
        if not 0 <= c <= top or c < prev:
            raise ValueError("operator %r out of range for a %d-simplex" % (ops, top))
        prev = c
    return model.normalize(tuple(vseq[c] for c in ops))


def boundary(model, simplex, char=0):
    """Alternating sum of faces, normalized in the model."""
    vseq = model.vertex_list(simplex)
    data = {}
    if len(vseq) == 1:
        return FormalSum.zero(char)
    for i in range(len(vseq)):
        face = model.normalize(vseq[:i] + vseq[i + 1:])
        if face is None:
            continue
        add_term(data, face, -1 if i & 1 else 1, char)
    return FormalSum(data, char)


def chain_differential(model, chain):
    return chain.map_basis(lambda s: boundary(model, s, chain.char))


class Cochain:
    """A normalized cochain of one degree on a model, as a value table."""

    __slots__ = ("model", "degree", "char", "reduced", "values")

    def __init__(self, model, degree, values=(), char=0, reduced=False):
        self.model = model
        self.degree = degree
        self.char = char
        self.reduced = reduced
        data = {}
        items = values.items() if isinstance(values, dict) else values
        for simplex, coeff in items:
            add_term(data, simplex, coeff, char)
        self.values = data

    def __call__(self, simplex):
        return self.values.get(simplex, 0)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.char == other.char
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.degree, self.char, frozenset(self.values.items())))

    def __bool__(self):
        return bool(self.values)

    def __add__(self, other):
        if self.degree != other.degree or self.char != other.char:
            raise ValueError("cochain mismatch")
        data = dict(self.values)
        for s, c in other.values.items():
            add_term(data, s, c, self.char)
        return Cochain(self.model, self.degree, data, self.char, self.reduced)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, n):
        return Cochain(
            self.model,
            self.degree,
            {s: c * n for s, c in self.values.items()},
            self.char,
            self.reduced,
        )

    def pair_chain(self, chain):
        total = 0
        for simplex, coeff in chain.terms.items():
            total += coeff * self.values.get(simplex, 0)
        return total % self.char if self.char else total

    def differential(self):
        """Transpose of the chain differential: (delta f)(x) = f(boundary x)."""
        out = {}
        model = self.model
        for x in model.simplices(self.degree + 1, reduced=self.reduced):
            value = 0
            for face, c in boundary(model, x, self.char).terms.items():
                value += c * self.values.get(face, 0)
            if self.char:
                value %= self.char
            if value:
                out[x] = value
        return Cochain(model, self.degree + 1, out, self.char, self.reduced)

    def is_cocycle(self):
        return not self.differential()

    def __repr__(self):
        terms = sorted(self.values.items(), key=lambda t: repr(t[0]))
        body = " + ".join("%d*%r" % (c, s) for s, c in terms) or "0"
        return "Cochain(deg %d: %s)" % (self.degree, body)


def zero_cochain(model, degree, char=0, reduced=False):
    return Cochain(model, degree, (), char, reduced)


def dual_cochain(model, simplex, char=0, reduced=False):
    return Cochain(model, len(model.vertex_list(simplex)) - 1, [(simplex, 1)], char, reduced)


def unit_cochain(model, char=0):
    return Cochain(model, 0, [(v, 1) for v in model.simplices(0)], char)


def dual_pairing(cochains, simplices, char=0):
    """<f_1 x ... x f_r, x_1 x ... x x_r> with the graded interchange sign.

    Zero unless degrees match pairwise; the sign exponent is
    sum over i < j of deg(f_j) * dim(x_i).
    """
    dims = []
    for f, x in zip(cochains, simplices):
        dim = len(f.model.vertex_list(x)) - 1
        if f.degree != dim:
            return 0
        dims.append(dim)
    exponent = 0
    total = 1
    behind = 0
    for i, (f, x) in enumerate(zip(cochains, simplices)):
        if i:
            exponent += f.degree * behind
        behind += dims[i]
        total *= f(x)
        if not total:
            return 0
    if exponent & 1:
        total = -total
    return total % char if char else total


def chain_complex_data(model, char=0, reduced=False):
    top = model.top_dim()
    bases = [model.simplices(d, reduced=reduced) for d in range(top + 1)]
    dims = [len(b) for b in bases]
    boundaries = {}
    for d in range(1, top + 1):
        index = {s: i for i, s in enumerate(bases[d - 1])}
        mat = [[0] * dims[d] for _ in range(dims[d - 1])]
        for j, s in enumerate(bases[d]):
            for face, c in boundary(model, s, char).terms.items():
                mat[index[face]][j] = c % char if char else c
        boundaries[d] = mat
    return ChainComplexData(dims, boundaries)


def homology_ranks(model, char=0, reduced=False):
    """Betti numbers of the model's normalized chains over the given field."""
    return chain_complex_data(model, char, reduced).betti(char)
