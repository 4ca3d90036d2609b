"""Closed-form sphere and cone algebras, suspensions, and path objects.

The first-column cochains eps_s detect, up to sign, the only surviving
evaluations on the reduced cochains of the circle and of the pointed
interval; capping against eps_r realizes the operadic suspension.  Tensor
products of algebras carry the diagonal-induced structure, which yields
cones, suspensions and path objects of any finite algebra.
"""

from __future__ import annotations

from .barratt_eccles import (
    arity as e_arity,
    degree as e_degree,
    diagonal_basis,
    is_degenerate,
    sigma_action_basis,
)
from .formal import FormalSum, add_term
from .interval_cut import cochain_eval
from .linalg import ChainComplexData
from .permutations import compose, inverse, sign as perm_sign
from .simplicial import Cochain, PointedInterval, SphereModel, StandardSimplex, boundary
from .surjections import is_basis_surjection
from .table_reduction import tr_basis


def epsilon(s, simplex):
    """The first-column cochain: signature of (w_0(1), ..., w_{s-1}(1)).

    Nonzero only in degree s-1, and only when the first-column values form
    a permutation of 1..s.  eps_0 is the augmentation.
    """
    if s == 0:
        return 1 if len(simplex) == 1 else 0
    if len(simplex) != s:
        return 0
    first = tuple(w[0] for w in simplex)
    if sorted(first) != list(range(1, s + 1)):
        return 0
    return perm_sign(first)


def cap(phi, phi_degree, simplex, char=0):
    """phi cap (w_0..w_n) = phi(w_0..w_d) . (w_d..w_n), normalized."""
    n = len(simplex) - 1
    if phi_degree > n:
        return FormalSum.zero(char)
    coeff = phi(simplex[: phi_degree + 1])
    back = simplex[phi_degree:]
    if not coeff or is_degenerate(back):
        return FormalSum.zero(char)
    return FormalSum.single(back, coeff, char)


def cap_epsilon(s, simplex, char=0):
    """eps_s cap w; for s = arity this is the suspension morphism on E."""
    return cap(lambda front: epsilon(s, front), max(s - 1, 0), simplex, char)


def suspension_morphism_e(simplex, char=0):
    return cap_epsilon(e_arity(simplex), simplex, char)


def suspension_morphism_x(seq, r=None, char=0):
    """eps_r cap u in the surjection operad: the sign of the length-r prefix
    times the tail starting at position r, when the prefix is a permutation."""
    r = r if r is not None else max(seq)
    prefix = seq[:r]
    if sorted(prefix) != list(range(1, r + 1)):
        return FormalSum.zero(char)
    tail = seq[r - 1:]
    if not is_basis_surjection(tail, r):
        return FormalSum.zero(char)
    return FormalSum.single(tail, perm_sign(prefix), char)


def stable_sort_to_front(pattern, front_label):
    """The permutation sigma with sigma(i) = position of the i-th slot whose
    label equals front_label (then the remaining slots in order)."""
    firsts = [i + 1 for i, a in enumerate(pattern) if a == front_label]
    rest = [i + 1 for i, a in enumerate(pattern) if a != front_label]
    return tuple(firsts + rest)


class FiniteEAlgebra:
    """Interface to a finite-dimensional-in-each-degree algebra over the
    Barratt-Eccles operad: a graded basis, a differential table and an
    evaluation oracle for basis simplices on basis arguments."""

    char = 0
    name = "?"

    def basis(self):
        raise NotImplementedError

    def degree(self, label):
        raise NotImplementedError

    def differential_basis(self, label):
        """dict label -> coeff."""
        raise NotImplementedError

    def evaluate_basis(self, simplex, args):
        """dict label -> coeff for the evaluation of a basis simplex."""
        raise NotImplementedError

    # derived structure -------------------------------------------------

    def degrees(self):
        return sorted({self.degree(b) for b in self.basis()})

    def basis_in(self, d):
        return [b for b in self.basis() if self.degree(b) == d]

    def differential(self, vec):
        out = {}
        for label, coeff in vec.items():
            for l2, c2 in self.differential_basis(label).items():
                add_term(out, l2, coeff * c2, self.char)
        return out

    def evaluate(self, element, args):
        """Multilinear extension: `element` is an ESimplex or FormalSum of
        them, each argument a basis label or a dict label -> coeff."""
        if not isinstance(element, FormalSum):
            element = FormalSum.single(element, 1, self.char)
        vecs = [a if isinstance(a, dict) else {a: 1} for a in args]
        out = {}
        for simplex, cw in element.terms.items():
            for combo, factor in _combinations(vecs):
                for label, c in self.evaluate_basis(simplex, combo).items():
                    add_term(out, label, cw * factor * c, self.char)
        return out

    def cochain_complex(self):
        """The underlying complex, reindexed as a chain complex by reversing
        degrees so that standard Betti machinery applies."""
        degs = self.degrees()
        lo, hi = min(degs + [0]), max(degs + [0])
        bases = [self.basis_in(hi - i) for i in range(hi - lo + 1)]
        dims = [len(b) for b in bases]
        boundaries = {}
        for i in range(1, len(bases)):
            index = {b: t for t, b in enumerate(bases[i - 1])}
            mat = [[0] * dims[i] for _ in range(dims[i - 1])]
            for j, b in enumerate(bases[i]):
                for l2, c in self.differential_basis(b).items():
                    mat[index[l2]][j] = c % self.char if self.char else c
            boundaries[i] = mat
        return ChainComplexData(dims, boundaries), bases, hi

    def betti(self, char=None):
        """Betti numbers indexed by cochain degree min..max."""
        data, bases, hi = self.cochain_complex()
        rev = data.betti(self.char if char is None else char)
        return tuple(reversed(rev))


def _combinations(vecs):
    if not vecs:
        yield (), 1
        return
    head, tail = vecs[0], vecs[1:]
    for rest, factor in _combinations(tail):
        for label, coeff in head.items():
            yield (label,) + rest, coeff * factor


class GroundAlgebra(FiniteEAlgebra):
    """The ground ring in degree 0, with the augmentation action."""

    name = "ground"

    def __init__(self, char=0):
        self.char = char

    def basis(self):
        return ["1"]

    def degree(self, label):
        return 0

    def differential_basis(self, label):
        return {}

    def evaluate_basis(self, simplex, args):
        return {"1": 1} if len(simplex) == 1 else {}


class CircleAlgebra(FiniteEAlgebra):
    """The one-generator circle algebra: a single class e in degree 1."""

    name = "circle"

    def __init__(self, char=0):
        self.char = char

    def basis(self):
        return ["e"]

    def degree(self, label):
        return 1

    def differential_basis(self, label):
        return {}

    def evaluate_basis(self, simplex, args):
        r = e_arity(simplex)
        sigma = (r * (r - 1) // 2) & 1
        eps = epsilon(r, simplex)
        if not eps:
            return {}
        coeff = -eps if sigma else eps
        return {"e": coeff % self.char if self.char else coeff}


class ConeAlgebra(FiniteEAlgebra):
    """The cone algebra: c in degree 0, e in degree 1, delta(c) = e.

    Standard patterns (all copies of e first) follow the closed form
    (-1)^(s(s-1)/2) eps_s; other argument orders are reduced to it through
    the stable-sort equivariance, whose Koszul sign is +1.
    """

    name = "cone"

    def __init__(self, char=0):
        self.char = char

    def basis(self):
        return ["c", "e"]

    def degree(self, label):
        return 0 if label == "c" else 1

    def differential_basis(self, label):
        return {"e": 1} if label == "c" else {}

    def evaluate_basis(self, simplex, args):
        s = sum(1 for a in args if a == "e")
        if s == 0:
            return {"c": 1} if len(simplex) == 1 else {}
        sigma_perm = stable_sort_to_front(args, "e")
        w = sigma_action_basis(inverse(sigma_perm), simplex)
        eps = epsilon(s, w)
        if not eps:
            return {}
        coeff = -eps if (s * (s - 1) // 2) & 1 else eps
        return {"e": coeff % self.char if self.char else coeff}


class CochainAlgebra(FiniteEAlgebra):
    """Normalized cochains of a simplicial model, via interval cuts."""

    def __init__(self, model, char=0, reduced=False):
        self.model = model
        self.char = char
        self.reduced = reduced
        self.name = "N*(%r)%s" % (model, " reduced" if reduced else "")
        self._basis = []
        for d in range(model.top_dim() + 1):
            self._basis.extend(model.simplices(d, reduced=reduced))
        self._cache = {}

    def basis(self):
        return list(self._basis)

    def degree(self, label):
        return len(self.model.vertex_list(label)) - 1

    def differential_basis(self, label):
        d = self.degree(label)
        out = {}
        for y in self.model.simplices(d + 1, reduced=self.reduced):
            c = boundary(self.model, y, self.char)[label]
            if c:
                out[y] = c
        return out

    def to_cochain(self, vec, degree):
        return Cochain(self.model, degree, vec, self.char, self.reduced)

    def evaluate_basis(self, simplex, args):
        key = (simplex, tuple(args))
        hit = self._cache.get(key)
        if hit is None:
            fs = [
                Cochain(self.model, self.degree(a), [(a, 1)], self.char, self.reduced)
                for a in args
            ]
            hit = dict(cochain_eval(simplex, fs, self.model, self.char).values)
            self._cache[key] = hit
        return dict(hit)


class TensorAlgebra(FiniteEAlgebra):
    """K (x) A with the diagonal-induced structure.

    Evaluation routes the front diagonal factor to K and the back one to A;
    the Koszul sign moves the back operation past the K-arguments and each
    A-argument past the later K-arguments.
    """

    def __init__(self, K, A):
        if K.char != A.char:
            raise ValueError("cannot mix characteristics")
        self.K = K
        self.A = A
        self.char = K.char
        self.name = "%s (x) %s" % (K.name, A.name)
        self._cache = {}

    def basis(self):
        return [(k, a) for k in self.K.basis() for a in self.A.basis()]

    def degree(self, label):
        return self.K.degree(label[0]) + self.A.degree(label[1])

    def differential_basis(self, label):
        k, a = label
        out = {}
        for k2, c in self.K.differential_basis(k).items():
            add_term(out, (k2, a), c, self.char)
        sgn = -1 if self.K.degree(k) & 1 else 1
        for a2, c in self.A.differential_basis(a).items():
            add_term(out, (k, a2), sgn * c, self.char)
        return out

    def evaluate_basis(self, simplex, args):
        key = (simplex, tuple(args))
        hit = self._cache.get(key)
        if hit is None:
            hit = self._evaluate_basis(simplex, tuple(args))
            self._cache[key] = hit
        return dict(hit)

    def _evaluate_basis(self, simplex, args):
        ks = tuple(x[0] for x in args)
        as_ = tuple(x[1] for x in args)
        kdegs = [self.K.degree(k) for k in ks]
        adegs = [self.A.degree(a) for a in as_]
        total_k = sum(kdegs)
        suffix_k = [0] * (len(args) + 1)
        for i in range(len(args) - 1, -1, -1):
            suffix_k[i] = suffix_k[i + 1] + kdegs[i]
        cross = sum(adegs[i] * suffix_k[i + 1] for i in range(len(args)))

        out = {}
        for (w1, w2), cd in diagonal_basis(simplex, self.char).terms.items():
            exp = (e_degree(w1) * e_degree(w2) + e_degree(w2) * total_k + cross) & 1
            front = self.K.evaluate_basis(w1, ks)
            if not front:
                continue
            back = self.A.evaluate_basis(w2, as_)
            if not back:
                continue
            for kb, ck in front.items():
                for ab, ca in back.items():
                    coeff = cd * ck * ca
                    add_term(out, (kb, ab), -coeff if exp else coeff, self.char)
        return out


def cone_of_algebra(A):
    """C(1) (x) A, together with the suspension-to-cone-to-A exact sequence."""
    return TensorAlgebra(ConeAlgebra(A.char), A)


def suspension_of_algebra(A):
    return TensorAlgebra(CircleAlgebra(A.char), A)


def cone_inclusion(label):
    """Suspension basis ('e', a) viewed inside the cone."""
    return {label: 1}


def cone_projection(label):
    """Cone basis -> A: kills ('e', a), sends ('c', a) to a."""
    k, a = label
    return {a: 1} if k == "c" else {}


def cone_formula_standard(A, simplex, args):
    """Direct evaluation of the cone algebra on standard-order arguments
    ('e', a_1), ..., ('e', a_s), ('c', a_{s+1}), ..., ('c', a_r):
    +-(-1)^(s(s-1)/2) e (x) (eps_s cap w)(a_1, ..., a_r), the leading sign
    commuting the degree-1 class past the operation and the first arguments.
    """
    labels = [x[0] for x in args]
    as_ = tuple(x[1] for x in args)
    s = sum(1 for l in labels if l == "e")
    if labels != ["e"] * s + ["c"] * (len(args) - s):
        raise ValueError("arguments must list the e-copies first")
    if s == 0:
        inner = A.evaluate(FormalSum.single(simplex, 1, A.char), as_)
        return {("c", a): c for a, c in inner.items()}
    capped = cap_epsilon(s, simplex, A.char)
    if not capped.terms:
        return {}
    exp = s * (s - 1) // 2
    exp += e_degree(simplex) * s
    adegs = [A.degree(a) for a in as_]
    exp += sum(adegs[i] * (s - 1 - i) for i in range(s - 1))
    # the degree-(s-1) front cochain also commutes past the capped back face
    exp += (s - 1) * (e_degree(simplex) - s + 1)
    inner = A.evaluate(capped, as_)
    sgn = -1 if exp & 1 else 1
    return {("e", a): sgn * c for a, c in inner.items()}


def lambda_eval(A, w_element, args):
    """Evaluation of a suspended operation on the suspension S(1) (x) A:
    (L w)(e (x) a_1, ..., e (x) a_r) = +- e (x) w(a_1, ..., a_r).

    The sign exponent r(r-1)/2 + deg(w) + sum deg(a_i) (r-1-i) is the s = r
    instance of the cone formula, i.e. what coherence with the tensor-product
    structure on S(1) (x) A forces.
    """
    if isinstance(w_element, FormalSum):
        items = list(w_element.terms.items())
    else:
        items = [(w_element, 1)]
    out = {}
    for w, cw in items:
        r = e_arity(w)
        if len(args) != r:
            raise ValueError("arity mismatch")
        as_ = tuple(x[1] for x in args)
        if any(x[0] != "e" for x in args):
            raise ValueError("suspension arguments are e-tensors")
        adegs = [A.degree(a) for a in as_]
        exp = r * (r - 1) // 2 + e_degree(w)
        exp += sum(adegs[i] * (r - 1 - i) for i in range(r - 1))
        inner = A.evaluate(FormalSum.single(w, cw, A.char), as_)
        sgn = -1 if exp & 1 else 1
        for a, c in inner.items():
            add_term(out, ("e", a), sgn * c, A.char)
    return out


def sphere_algebra(n, char=0):
    """The reduced cochains of the n-sphere as an iterated tensor of circles."""
    if n < 1:
        raise ValueError("n >= 1")
    alg = CircleAlgebra(char)
    for _ in range(n - 1):
        alg = TensorAlgebra(CircleAlgebra(char), alg)
    return alg


def sphere_generator(n):
    label = "e"
    for _ in range(n - 1):
        label = ("e", label)
    return label


def sphere_eval(n, simplex, char=0):
    """The scalar l with w(e^n, ..., e^n) = l . e^n on the n-sphere."""
    alg = sphere_algebra(n, char)
    gen = sphere_generator(n)
    r = e_arity(simplex)
    out = alg.evaluate_basis(simplex, (gen,) * r)
    return out.get(gen, 0)


def cone_eval(simplex, pattern, char=0):
    """The scalar value of a basis simplex on a mixed e/c argument pattern
    in the cone algebra; returns (coeff, label)."""
    out = ConeAlgebra(char).evaluate_basis(simplex, tuple(pattern))
    if not out:
        return 0, None
    (label, coeff), = out.items()
    return coeff, label


class PathObject:
    """N*(interval) (x) A with the collapse section and the two vertex maps."""

    def __init__(self, A):
        self.A = A
        self.model = StandardSimplex(1)
        self.K = CochainAlgebra(self.model, A.char, reduced=False)
        self.algebra = TensorAlgebra(self.K, A)

    def section(self, vec):
        """s_0: A -> path object, a |-> (sum of vertex duals) (x) a."""
        vec = vec if isinstance(vec, dict) else {vec: 1}
        out = {}
        for a, c in vec.items():
            for v in ((0,), (1,)):
                add_term(out, (v, a), c, self.A.char)
        return out

    def face(self, i, vec):
        """d_0, d_1: path object -> A, restriction to a vertex (d_i reads the
        vertex opposite to the i-th coface)."""
        vertex = (1,) if i == 0 else (0,)
        vec = vec if isinstance(vec, dict) else {vec: 1}
        out = {}
        for (k, a), c in vec.items():
            if k == vertex:
                add_term(out, a, c, self.A.char)
        return out
