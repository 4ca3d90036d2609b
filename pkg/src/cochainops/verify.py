"""The acceptance battery: every identity the package asserts, machine-checked.

Each suite returns a list of Check records; `run` executes suites by name and
`run_all` the whole battery.  Randomized checks derive their generators from
a single master seed through stable string seeding, so failures reproduce
from the printed seed.
"""

from __future__ import annotations

import random
import time
from itertools import combinations, product

from . import barratt_eccles as be
from . import ealgebras as ea
from . import hochschild as hh
from . import interval_cut as ic
from . import linalg
from . import simplicial as sim
from . import surjections as sj
from . import table_reduction as tre
from .formal import FormalSum
from .permutations import all_permutations, identity, koszul_sign


class Check:
    __slots__ = ("name", "passed", "detail")

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        return "[%s] %s%s" % (
            "PASS" if self.passed else "FAIL",
            self.name,
            (" -- " + self.detail) if self.detail and not self.passed else "",
        )


def _rng(seed, label):
    return random.Random("%s:%s" % (seed, label))


def _cap(values, limit):
    return [v for v in values if limit is None or v <= limit]


def _rand_esimplex(rng, r, d):
    if r == 1:
        d = 0
    perms = all_permutations(r)
    while True:
        w = tuple(rng.choice(perms) for _ in range(d + 1))
        if not be.is_degenerate(w):
            return w


def _rand_surjection(rng, r, d):
    if r == 1:
        d = 0
    while True:
        seq = tuple(rng.randint(1, r) for _ in range(r + d))
        if sj.is_basis_surjection(seq, r):
            return seq


# ---------------------------------------------------------------------------
# criterion 1: golden vectors


def suite_golden(seed=0, max_arity=None, max_degree=None):
    from .permutations import compose_partial as pcp

    checks = []
    checks.append(Check(
        "permutation composition (3,2,1) o_2 (1,3,2) = (5,2,4,3,1)",
        pcp((3, 2, 1), 2, (1, 3, 2)) == (5, 2, 4, 3, 1),
    ))

    d = sj.differential_basis((1, 3, 2, 1, 4, 2, 1))
    expected = {
        (3, 2, 1, 4, 2, 1): 1, (1, 3, 1, 4, 2, 1): -1, (1, 3, 2, 4, 2, 1): 1,
        (1, 3, 2, 1, 4, 1): 1, (1, 3, 2, 1, 4, 2): -1,
    }
    checks.append(Check(
        "surjection differential of (1,3,2,1,4,2,1), five signed terms",
        d.terms == expected, repr(d.terms),
    ))

    c = sj.compose_partial_basis((1, 2, 1, 3), 1, (1, 2, 1))
    expected = {(1, 3, 1, 2, 1, 4): 1, (1, 2, 3, 2, 1, 4): -1, (1, 2, 1, 3, 1, 4): -1}
    checks.append(Check(
        "surjection composition (1,2,1,3) o_1 (1,2,1) with signs (+,-,-)",
        c.terms == expected, repr(c.terms),
    ))

    t = tre.tr_basis(((1, 2, 3, 4), (1, 4, 3, 2), (1, 2, 4, 3)))
    checks.append(Check(
        "table reduction of the 4x3 table: two terms, coefficients +1",
        t.terms == {(1, 2, 4, 2, 4, 3): 1, (1, 2, 4, 3, 2, 3): 1}, repr(t.terms),
    ))

    # The recorded worked-example value for the seven-segment shuffle.  The
    # sign rules the rest of this battery enforces compute +1 for this
    # shuffle (see the companion check), so this recorded value fails.
    shuffle = (1, 2, 4, 7, 3, 5, 6)
    recorded = koszul_sign([1] * 7, shuffle)
    checks.append(Check(
        "recorded seven-segment path-shuffle sign equals -1",
        recorded == -1,
        "computed %+d; inconsistent with the shuffle's own inversion count "
        "(4 transposed pairs) and with the Leibniz identity at bidegree (4,3) "
        "checked by the companion test" % recorded,
    ))

    path = ((0, 0), (1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3))
    forced = be.path_sign(path)
    rng = _rng(seed, "golden-leibniz-4-3")
    ok = forced == koszul_sign([1] * 7, shuffle)
    for _ in range(3):
        u = _rand_esimplex(rng, 2, 4)
        v = _rand_esimplex(rng, 2, 3)
        fu, fv = FormalSum.single(u), FormalSum.single(v)
        lhs = be.differential(be.compose_partial(fu, 1, fv))
        rhs = be.compose_partial(be.differential_basis(u), 1, fv) + be.compose_partial(fu, 1, be.differential_basis(v))
        ok = ok and lhs == rhs
    checks.append(Check(
        "companion: path sign is forced to +1 by the Leibniz rule at bidegree (4,3)",
        ok and forced == 1,
    ))
    return checks


# ---------------------------------------------------------------------------
# criterion 2: d squared = 0


def _d_squared_zero_e(w):
    acc = {}
    d = len(w) - 1
    for i in range(d + 1):
        if 0 < i < d and w[i - 1] == w[i + 1]:
            continue
        face = w[:i] + w[i + 1:]
        si = -1 if i & 1 else 1
        dd = d - 1
        for j in range(dd + 1):
            if 0 < j < dd and face[j - 1] == face[j + 1]:
                continue
            f2 = face[:j] + face[j + 1:]
            c = acc.get(f2, 0) + (-si if j & 1 else si)
            if c:
                acc[f2] = c
            else:
                acc.pop(f2, None)
    return not acc


def suite_d_squared(seed=0, max_arity=None, max_degree=None):
    checks = []

    ok = True
    for r in _cap((1, 2, 3, 4), max_arity):
        for d in _cap(range(0, 6), max_degree):
            for u in sj.all_basis(r, d):
                if sj.differential(sj.differential_basis(u)):
                    ok = False
    checks.append(Check("surjection d^2 = 0, arity <= 4, degree <= 5 (exhaustive)", ok))

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 5), max_degree):
            for w in be.all_basis(r, d):
                if not _d_squared_zero_e(w):
                    ok = False
    for d in _cap(range(0, 4), max_degree) if 4 in _cap((4,), max_arity) else []:
        for w in be.all_basis(4, d):
            if not _d_squared_zero_e(w):
                ok = False
    checks.append(Check("bar complex d^2 = 0, arity <= 4 degree <= 3 and arity <= 3 degree <= 4 (exhaustive)", ok))

    # top stratum (4,4): the identity-led slice, plus the left-translation
    # lemma that transports it over the whole basis
    ok = True
    if 4 in _cap((4,), max_arity) and 4 in _cap((4,), max_degree):
        for w in be.all_basis(4, 4, first=identity(4)):
            if not _d_squared_zero_e(w):
                ok = False
    checks.append(Check("bar complex d^2 = 0 on the identity-led slice of E(4)_4", ok))

    ok = True
    for r in (2, 3):
        for d in range(0, 4):
            for w in be.all_basis(r, d):
                for sigma in all_permutations(r):
                    lhs = be.differential_basis(be.sigma_action_basis(sigma, w))
                    rhs = be.sigma_action(sigma, be.differential_basis(w))
                    if lhs != rhs:
                        ok = False
    rng = _rng(seed, "d2-equivariance")
    for _ in range(200):
        w = _rand_esimplex(rng, 4, 4)
        sigma = tuple(rng.sample(range(1, 5), 4))
        if be.differential_basis(be.sigma_action_basis(sigma, w)) != be.sigma_action(sigma, be.differential_basis(w)):
            ok = False
    checks.append(Check("left-translation equivariance of the bar differential", ok))
    return checks


# ---------------------------------------------------------------------------
# criterion 3: table reduction is a filtered dg-operad morphism


def suite_tr_morphism(seed=0, max_arity=None, max_degree=None):
    checks = []

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 4), max_degree):
            for w in be.all_basis(r, d):
                if sj.differential(tre.tr_basis(w)) != tre.tr(be.differential_basis(w)):
                    ok = False
    checks.append(Check("chain map, exhaustive arity <= 3 degree <= 3", ok))

    rng = _rng(seed, "tr-chain-map-4")
    ok = True
    for _ in range(100):
        w = _rand_esimplex(rng, 4, rng.choice([1, 2, 3]))
        if sj.differential(tre.tr_basis(w)) != tre.tr(be.differential_basis(w)):
            ok = False
    checks.append(Check("chain map, 100 seeded samples at arity 4, degree <= 3", ok))

    rng = _rng(seed, "tr-composition")
    ok = True
    for _ in range(200):
        r, s = rng.choice([2, 3]), rng.choice([2, 3])
        u = _rand_esimplex(rng, r, rng.choice([0, 1, 2]))
        v = _rand_esimplex(rng, s, rng.choice([0, 1, 2]))
        for k in range(1, r + 1):
            lhs = tre.tr(be.compose_partial_basis(u, k, v))
            rhs = sj.compose_partial(tre.tr_basis(u), k, tre.tr_basis(v), r, s)
            if lhs != rhs:
                ok = False
    checks.append(Check("operad morphism, 200 seeded samples, all slots", ok))

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 4), max_degree):
            for w in be.all_basis(r, d):
                n = be.complexity(w)
                for seq in tre.tr_basis(w).terms:
                    if sj.complexity(seq, r) > n:
                        ok = False
    checks.append(Check("filtration preservation, exhaustive arity <= 3 degree <= 3", ok))

    rng = _rng(seed, "tr-cells")
    ok = True
    trials = 0
    while trials < 200:
        r = rng.choice([2, 3])
        w = _rand_esimplex(rng, r, rng.choice([1, 2, 3]))
        sigma = tuple(rng.sample(range(1, r + 1), r))
        mu = {}
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                mu[(i, j)] = rng.randint(0, 3)
        if not be.cell_member(w, mu, sigma):
            continue
        trials += 1
        for seq in tre.tr_basis(w).terms:
            if not sj.cell_member(seq, mu, sigma, r):
                ok = False
    checks.append(Check("cell preservation, 200 seeded member samples", ok))

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 4), max_degree):
            for u in sj.all_basis(r, d):
                w = tre.section(u)
                if tre.tr_basis(w).terms != {u: 1}:
                    ok = False
                for i in range(1, r + 1):
                    for j in range(i + 1, r + 1):
                        mu_ij = sj.variation_count(sj.pair_projection(u, i, j))
                        seq_w = be.pair_sequence(w, i, j)
                        if be.variation_count(seq_w) > mu_ij:
                            ok = False
    checks.append(Check("TR(section(u)) = u exactly, and the section stays in u's cell", ok))
    return checks


# ---------------------------------------------------------------------------
# criterion 4: interval cuts form an operad morphism into natural cooperations


def _tensor_map(factors, fn):
    out = tuple(fn(x) for x in factors)
    return None if any(x is None for x in out) else out


def suite_aw_morphism(seed=0, max_arity=None, max_degree=None):
    checks = []

    ok = True
    for n in (0, 1, 2, 3):
        model = sim.StandardSimplex(n)
        top = tuple(range(n + 1))
        for r in (1, 2):
            for s in (1, 2):
                for d in range(0, 2):
                    for e in range(0, 2):
                        for u in sj.all_basis(r, d):
                            for v in sj.all_basis(s, e):
                                for k in range(1, r + 1):
                                    comp = sj.compose_partial_basis(u, k, v, r, s)
                                    lhs = {}
                                    for seq, c in comp.terms.items():
                                        for sign, factors in ic.aw_terms(seq, top, model, r + s - 1):
                                            key = factors
                                            cur = lhs.get(key, 0) + c * sign
                                            if cur:
                                                lhs[key] = cur
                                            else:
                                                lhs.pop(key, None)
                                    rhs = {}
                                    for su, fu in ic.aw_terms(u, top, model, r):
                                        # the inner cooperation passes the outer
                                        # one and the leading output factors
                                        head_dim = sum(len(x) - 1 for x in fu[:k - 1])
                                        inner_sign = -1 if (e * (d + head_dim)) & 1 else 1
                                        for sv, fv in ic.aw_terms(v, model.vertex_list(fu[k - 1]), model, s):
                                            key = fu[:k - 1] + fv + fu[k:]
                                            cur = rhs.get(key, 0) + su * sv * inner_sign
                                            if cur:
                                                rhs[key] = cur
                                            else:
                                                rhs.pop(key, None)
                                    if lhs != rhs:
                                        ok = False
    checks.append(Check("operad morphism on the standard simplex, n <= 3, arities <= 2, degrees <= 1", ok))

    ok = True
    for n in (1, 2, 3):
        model = sim.StandardSimplex(n)
        top = tuple(range(n + 1))
        for j in range(n + 1):
            degenerate = top[: j + 1] + top[j:]
            for r in (1, 2, 3):
                for d in range(0, 3):
                    for u in sj.all_basis(r, d):
                        if list(ic.aw_terms(u, degenerate, model, r)):
                            ok = False
    checks.append(Check("degeneracy kernel: interval cuts kill degenerate simplices, arity <= 3 degree <= 2 n <= 3", ok))

    ok = True
    for n in range(0, 5):
        model = sim.StandardSimplex(n)
        top = tuple(range(n + 1))
        for r in (1, 2, 3):
            for d in range(0, 3):
                for u in sj.all_basis(r, d):
                    lhs = ic.tensor_differential(model, ic.aw_apply(u, top, model, r=r))
                    rhs = FormalSum.zero()
                    for seq, c in sj.differential_basis(u).terms.items():
                        rhs = rhs + ic.aw_apply(seq, top, model, r=r).scale(c)
                    for face, c in sim.boundary(model, top).terms.items():
                        rhs = rhs + ic.aw_apply(u, face, model, r=r).scale(c * (-1 if d & 1 else 1))
                    if lhs != rhs:
                        ok = False
    checks.append(Check("chain map on top cells, arity <= 3 degree <= 2 n <= 4", ok))

    ok = True
    for n in (1, 2, 3, 4):
        model_n = sim.StandardSimplex(n)
        for m in range(0, n):
            model_m = sim.StandardSimplex(m)
            top_m = tuple(range(m + 1))
            for phi in combinations(range(n + 1), m + 1):
                for r in (1, 2):
                    for d in range(0, 3):
                        for u in sj.all_basis(r, d):
                            direct = {}
                            for sign, factors in ic.aw_terms(u, phi, model_n, r):
                                direct[factors] = direct.get(factors, 0) + sign
                            pushed = {}
                            for sign, factors in ic.aw_terms(u, top_m, model_m, r):
                                image = _tensor_map(factors, lambda x: model_n.normalize(tuple(phi[i] for i in x)))
                                if image is not None:
                                    pushed[image] = pushed.get(image, 0) + sign
                            direct = {k: v for k, v in direct.items() if v}
                            pushed = {k: v for k, v in pushed.items() if v}
                            if direct != pushed:
                                ok = False
    checks.append(Check("naturality along monotone injections, n <= 4", ok))

    rng = _rng(seed, "aw-equivariance")
    ok = True
    for _ in range(200):
        r = rng.choice([2, 3])
        d = rng.choice([0, 1, 2])
        u = _rand_surjection(rng, r, d)
        sigma = tuple(rng.sample(range(1, r + 1), r))
        n = rng.choice([1, 2, 3])
        model = sim.StandardSimplex(n)
        top = tuple(range(n + 1))
        lhs = {}
        for sign, factors in ic.aw_terms(sj.sigma_action_basis(sigma, u), top, model, r):
            lhs[factors] = lhs.get(factors, 0) + sign
        rhs = {}
        for sign, factors in ic.aw_terms(u, top, model, r):
            dims = [len(x) - 1 for x in factors]
            permuted = [None] * r
            for kslot in range(r):
                permuted[sigma[kslot] - 1] = factors[kslot]
            reorder = tuple(sigma.index(i + 1) + 1 for i in range(r))
            eps = koszul_sign(dims, reorder)
            key = tuple(permuted)
            rhs[key] = rhs.get(key, 0) + sign * eps
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            ok = False
    checks.append(Check("equivariance with the factor-permutation Koszul sign, 200 seeded samples", ok))
    return checks


# ---------------------------------------------------------------------------
# criterion 5: cup-i structure and Steenrod squares


def classical_cup_one(f, g, model):
    """Independent mod-2 oracle: Steenrod's original cup-1 sum."""
    assert f.char == 2 and g.char == 2
    out_degree = f.degree + g.degree - 1
    values = {}
    for x in model.simplices(out_degree):
        vseq = model.vertex_list(x)
        n = len(vseq) - 1
        total = 0
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                outer = model.normalize(vseq[: i + 1] + vseq[j:])
                inner = model.normalize(vseq[i: j + 1])
                if outer is None or inner is None:
                    continue
                total += f.values.get(outer, 0) * g.values.get(inner, 0)
        if total % 2:
            values[x] = 1
    return sim.Cochain(model, out_degree, values, 2)


def classical_cup(f, g, model):
    """Independent oracle: front-face/back-face cup product (mod 2 use)."""
    out_degree = f.degree + g.degree
    values = {}
    for x in model.simplices(out_degree):
        vseq = model.vertex_list(x)
        front = model.normalize(vseq[: f.degree + 1])
        back = model.normalize(vseq[f.degree:])
        if front is None or back is None:
            continue
        total = f.values.get(front, 0) * g.values.get(back, 0)
        if total % f.char if f.char else total:
            values[x] = total
    return sim.Cochain(model, out_degree, values, f.char)


def _rand_cochain(rng, model, deg, char=0):
    values = [(s, rng.randint(-2, 2)) for s in model.simplices(deg)]
    return sim.Cochain(model, deg, values, char)


def _coboundary_space(model, degree, char):
    """Row space of the coboundary into the given degree."""
    simplices = model.simplices(degree)
    index = {s: i for i, s in enumerate(simplices)}
    rows = []
    for y in model.simplices(degree - 1):
        f = sim.dual_cochain(model, y, char)
        row = [0] * len(simplices)
        for s, c in f.differential().values.items():
            row[index[s]] = c
        rows.append(row)
    return rows, index


def _nonzero_in_cohomology(cochain):
    """True when the cocycle is not a coboundary."""
    model, char = cochain.model, cochain.char
    rows, index = _coboundary_space(model, cochain.degree, char)
    target = [0] * len(index)
    for s, c in cochain.values.items():
        target[index[s]] = c
    base = linalg.rank(rows, char)
    return linalg.rank(rows + [target], char) > base


def suite_cup_structure(seed=0, max_arity=None, max_degree=None):
    checks = []

    ok = True
    for n in range(0, 5):
        model = sim.StandardSimplex(n)
        top = tuple(range(n + 1))
        got = ic.aw_apply((1, 2), top, model)
        expected = {}
        for i in range(n + 1):
            expected[(top[: i + 1], top[i:])] = 1
        if got.terms != expected:
            ok = False
    checks.append(Check("interval cut of (1,2) is the Alexander-Whitney diagonal, n <= 4", ok))

    rng = _rng(seed, "cup-assoc")
    ok = True
    for model in (sim.StandardSimplex(3), sim.projective_plane()):
        for _ in range(20):
            f = _rand_cochain(rng, model, rng.choice([0, 1]))
            g = _rand_cochain(rng, model, rng.choice([0, 1]))
            h = _rand_cochain(rng, model, rng.choice([0, 1, 2]))
            if ic.cup(ic.cup(f, g), h) != ic.cup(f, ic.cup(g, h)):
                ok = False
    checks.append(Check("cup associativity on the 3-simplex and the projective plane", ok))

    rng = _rng(seed, "cup-leibniz")
    ok = True
    for model in (sim.StandardSimplex(3), sim.projective_plane()):
        for _ in range(20):
            p = rng.choice([0, 1])
            q = rng.choice([0, 1])
            f = _rand_cochain(rng, model, p)
            g = _rand_cochain(rng, model, q)
            lhs = ic.cup(f, g).differential()
            rhs = ic.cup(f.differential(), g).scale(-1 if q & 1 else 1) + ic.cup(f, g.differential())
            if lhs != rhs:
                ok = False
    checks.append(Check("cup coboundary rule d(f u g) = (-1)^|g| df u g + f u dg", ok))

    ok = True
    detail = ""
    for d in range(1, 6):
        terms = sj.differential_basis(sj.theta(d)).terms
        lower = sj.theta(d - 1)
        flipped = sj.sigma_action_basis((2, 1), lower)
        if set(terms) != {lower, flipped} or any(abs(c) != 1 for c in terms.values()):
            ok = False
            detail = "d=%d gives %r" % (d, terms)
    checks.append(Check("two-term boundary of the alternating sequences, degree <= 5", ok, detail))

    rng = _rng(seed, "cupi-coboundary")
    ok = True
    for model in (sim.StandardSimplex(3), sim.projective_plane()):
        for _ in range(12):
            i = rng.choice([1, 2])
            p = rng.choice([1, 2])
            q = rng.choice([1, 2])
            f = _rand_cochain(rng, model, p)
            g = _rand_cochain(rng, model, q)
            F = p + q
            lhs = ic.cup_i(f, g, i).differential()
            rhs = ic.cochain_eval(sj.differential_basis(sj.theta(i)), [f, g], model).scale(
                -1 if (F + i + 1) & 1 else 1
            )
            rhs = rhs + ic.cup_i(f.differential(), g, i).scale(-1 if q & 1 else 1)
            rhs = rhs + ic.cup_i(f, g.differential(), i)
            if lhs != rhs:
                ok = False
    checks.append(Check("cup-i coboundary identity, with the boundary of the alternating sequence", ok))

    # Steenrod squares on the projective plane
    model = sim.projective_plane()
    rows, index = _coboundary_space(model, 1, 2)
    edge_list = model.simplices(1)
    cocycle = None
    for bits in product((0, 1), repeat=len(edge_list)):
        if not any(bits):
            continue
        cand = sim.Cochain(model, 1, list(zip(edge_list, bits)), 2)
        if cand.is_cocycle() and _nonzero_in_cohomology(cand):
            cocycle = cand
            break
    checks.append(Check("found a generator of H^1(RP2; F2)", cocycle is not None))

    if cocycle is not None:
        x = cocycle
        sq1 = ic.steenrod_square(1, x)
        checks.append(Check("Sq^1 of the degree-1 generator is a cocycle", sq1.is_cocycle()))
        checks.append(Check(
            "Sq^1 of the degree-1 generator is nonzero in H^2(RP2; F2)",
            _nonzero_in_cohomology(sq1),
        ))
        checks.append(Check(
            "Sq^(deg f) f = f cup f, against the front/back oracle",
            ic.steenrod_square(x.degree, x) == ic.cup(x, x) == classical_cup(x, x, model),
        ))
        cup1 = ic.cup_i(x, x, 1)
        oracle = classical_cup_one(x, x, model)
        checks.append(Check(
            "the cup-1 self-product matches the classical interval formula",
            cup1 == oracle,
        ))
        # x u_1 x represents x itself (the squaring operation of complementary
        # index is the identity on H^1 mod 2)
        diff = cup1 - x
        checks.append(Check(
            "x cup_1 x is cohomologous to x, hence nonzero in H^1(RP2; F2)",
            diff.is_cocycle() and not _nonzero_in_cohomology(diff) if diff else True,
        ))
    return checks


# ---------------------------------------------------------------------------
# criterion 6: sphere and cone evaluations match the closed forms


def _cone_models():
    pointed = sim.PointedInterval()
    circle = sim.SphereModel(1)
    cone_engine = ea.CochainAlgebra(pointed, 0, reduced=True)
    circle_engine = ea.CochainAlgebra(circle, 0, reduced=True)
    return cone_engine, circle_engine


_CONE_LABEL = {(1,): "c", (0, 1): "e"}
_CONE_BACK = {"c": (1,), "e": (0, 1)}


def _cone_engine_value(engine, w, pattern):
    args = tuple(_CONE_BACK[p] for p in pattern)
    return {
        _CONE_LABEL[k]: v for k, v in engine.evaluate_basis(w, args).items() if v
    }


def _check_sphere_cone_for(cone_engine, circle_engine, cone_closed, circle_closed, w, r):
    for pattern in product("ec", repeat=r):
        got = _cone_engine_value(cone_engine, w, pattern)
        want = cone_closed.evaluate_basis(w, pattern)
        if got != want:
            return False
    got = circle_engine.evaluate_basis(w, ((0, 1),) * r)
    got = {k: v for k, v in got.items() if v}
    want_scalar = circle_closed.evaluate_basis(w, ("e",) * r)
    want = {(0, 1): want_scalar["e"]} if want_scalar else {}
    return got == want


def suite_sphere_cone(seed=0, max_arity=None, max_degree=None):
    checks = []
    cone_engine, circle_engine = _cone_models()
    cone_closed = ea.ConeAlgebra(0)
    circle_closed = ea.CircleAlgebra(0)

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 5), max_degree):
            for w in be.all_basis(r, d):
                if not _check_sphere_cone_for(cone_engine, circle_engine, cone_closed, circle_closed, w, r):
                    ok = False
    checks.append(Check("closed forms match the engine, arity <= 3, degree <= 4, all patterns (exhaustive)", ok))

    ok = True
    for d in _cap(range(0, 4), max_degree) if 4 in _cap((4,), max_arity) else []:
        for w in be.all_basis(4, d, first=identity(4)):
            if not _check_sphere_cone_for(cone_engine, circle_engine, cone_closed, circle_closed, w, 4):
                ok = False
    checks.append(Check("closed forms match the engine on the identity-led slice of E(4)_d, d <= 3, all patterns", ok))

    rng = _rng(seed, "sphere-cone-transport")
    ok = True
    for _ in range(150):
        w = _rand_esimplex(rng, 4, rng.choice([0, 1, 2, 3]))
        if not _check_sphere_cone_for(cone_engine, circle_engine, cone_closed, circle_closed, w, 4):
            ok = False
    checks.append(Check("closed forms match the engine on 150 seeded arity-4 samples off the slice", ok))

    # degree-4 stratum of arity 4: the only pattern whose target module is
    # nonzero is all-e against the vertex, and every interval cut of a vertex
    # by a positive-degree surjection has a repeated-vertex factor; the
    # closed form vanishes there too since the first-column cochain is
    # supported in degree 3.
    ok = True
    pointed = sim.PointedInterval()
    for u in (sj.all_basis(4, 4) if (4 in _cap((4,), max_arity) and 4 in _cap((4,), max_degree)) else []):
        if list(ic.aw_terms(u, (1,), pointed, 4)):
            ok = False
    rng = _rng(seed, "sphere-cone-top")
    for _ in range(50):
        w = _rand_esimplex(rng, 4, 4)
        if cone_closed.evaluate_basis(w, ("e", "e", "e", "e")):
            ok = False
    checks.append(Check("degree-4 stratum of arity 4: cuts of a vertex all degenerate, closed form zero", ok))

    ok = True
    for n in (1, 2, 3):
        engine = ea.CochainAlgebra(sim.SphereModel(n), 0, reduced=True)
        top = tuple(range(n + 1))
        for r in _cap((1, 2, 3), max_arity):
            for d in _cap(range(0, 4), max_degree):
                for w in be.all_basis(r, d):
                    got = engine.evaluate_basis(w, (top,) * r).get(top, 0)
                    if got != ea.sphere_eval(n, w):
                        ok = False
    checks.append(Check("tensor-power spheres match the engine, n <= 3, arity <= 3, degree <= 3", ok))
    return checks


# ---------------------------------------------------------------------------
# criterion 7: suspension


def suite_suspension(seed=0, max_arity=None, max_degree=None):
    checks = []
    A = ea.CochainAlgebra(sim.PointedInterval(), 0, reduced=True)
    susp = ea.suspension_of_algebra(A)

    rng = _rng(seed, "suspension-morphism")
    ok = True
    for _ in range(150):
        r, s = rng.choice([1, 2, 3]), rng.choice([1, 2, 3])
        u = _rand_esimplex(rng, r, rng.choice([0, 1, 2]))
        v = _rand_esimplex(rng, s, rng.choice([0, 1, 2]))
        k = rng.randint(1, r)
        comp = be.compose_partial_basis(u, k, v)
        args = tuple(("e", rng.choice([(1,), (0, 1)])) for _ in range(r + s - 1))
        got = {kk: vv for kk, vv in (susp.evaluate(comp, args) if comp.terms else {}).items() if vv}
        capped = comp.map_basis(lambda w: ea.suspension_morphism_e(w))
        want = {kk: vv for kk, vv in ea.lambda_eval(A, capped, args).items() if vv} if capped.terms else {}
        if got != want:
            ok = False
    checks.append(Check(
        "capping a composite still realizes the suspended action, 150 seeded samples", ok,
    ))

    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 5), max_degree):
            for w in be.all_basis(r, d):
                for tails in product([(1,), (0, 1)], repeat=r):
                    args = tuple(("e", t) for t in tails)
                    got = susp.evaluate_basis(w, args)
                    capped = ea.cap_epsilon(r, w)
                    want = ea.lambda_eval(A, capped, args) if capped.terms else {}
                    if got != want:
                        ok = False
    checks.append(Check(
        "cap against the first-column cochain realizes the suspension rule "
        "(exhaustive, arity <= 3, degree <= 4, all argument mixes)", ok,
    ))

    rng = _rng(seed, "suspension-square")
    ok = True
    for r in _cap((1, 2, 3), max_arity):
        for d in _cap(range(0, 4), max_degree):
            for w in be.all_basis(r, d):
                lhs = FormalSum.zero()
                for seq, c in tre.tr_basis(w).terms.items():
                    lhs = lhs + ea.suspension_morphism_x(seq, r).scale(c)
                if lhs != tre.tr(ea.suspension_morphism_e(w)):
                    ok = False
    for _ in range(100):
        w = _rand_esimplex(rng, 4, rng.choice([0, 1, 2, 3, 4]))
        lhs = FormalSum.zero()
        for seq, c in tre.tr_basis(w).terms.items():
            lhs = lhs + ea.suspension_morphism_x(seq, 4).scale(c)
        if lhs != tre.tr(ea.suspension_morphism_e(w)):
            ok = False
    checks.append(Check("table reduction commutes with the suspension caps (exhaustive arity <= 3 + samples)", ok))
    return checks


# ---------------------------------------------------------------------------
# criterion 8: path objects


def _reversed_complex(algebra, hi, char):
    bases = [algebra.basis_in(hi - i) for i in range(hi + 1)]
    dims = [len(b) for b in bases]
    boundaries = {}
    for i in range(1, hi + 1):
        index = {b: t for t, b in enumerate(bases[i - 1])}
        mat = [[0] * dims[i] for _ in range(dims[i - 1])]
        for j, b in enumerate(bases[i]):
            for l2, c in algebra.differential_basis(b).items():
                mat[index[l2]][j] = c % char if char else c
        boundaries[i] = mat
    return linalg.ChainComplexData(dims, boundaries), bases


def section_is_quasi_iso(path_object, char):
    """Betti numbers agree and the collapse section induces full-rank maps."""
    A, T = path_object.A, path_object.algebra
    hi = max(T.degrees() + [0])
    ca, bases_a = _reversed_complex(A, hi, char)
    ct, bases_t = _reversed_complex(T, hi, char)
    if ca.betti(char) != ct.betti(char):
        return False
    fmats = {}
    for i in range(hi + 1):
        index = {b: t for t, b in enumerate(bases_t[i])}
        mat = [[0] * len(bases_a[i]) for _ in range(len(bases_t[i]))]
        for j, a in enumerate(bases_a[i]):
            for lbl, c in path_object.section(a).items():
                mat[index[lbl]][j] = c % char if char else c
        fmats[i] = mat
    betti = ca.betti(char)
    for d in range(hi + 1):
        if linalg.induced_homology_rank(ca, ct, fmats, d, char) != betti[d]:
            return False
    return True


def suite_path_object(seed=0, max_arity=None, max_degree=None):
    checks = []

    for char in (0, 2, 3):
        algebras = [
            ("ground field", ea.GroundAlgebra(char)),
            ("circle cochains", ea.CochainAlgebra(sim.SphereModel(1), char, reduced=True)),
            ("projective plane cochains", ea.CochainAlgebra(sim.projective_plane(), char)),
        ]
        ok_id = ok_surj = ok_qi = ok_chain = True
        for _name, A in algebras:
            po = ea.PathObject(A)
            for a in A.basis():
                v = po.section(a)
                if po.face(0, v) != {a: 1} or po.face(1, v) != {a: 1}:
                    ok_id = False
                if po.algebra.differential(v) != po.section(A.differential({a: 1})):
                    ok_chain = False
            for b in po.algebra.basis():
                for i in (0, 1):
                    if po.face(i, po.algebra.differential({b: 1})) != A.differential(po.face(i, {b: 1})):
                        ok_chain = False
            # (d0, d1): path object -> A x A has full rank in every degree
            for d in sorted(set(A.degrees()) | {0}):
                a_basis = A.basis_in(d)
                t_basis = po.algebra.basis_in(d)
                a_index = {a: i for i, a in enumerate(a_basis)}
                mat = [[0] * len(t_basis) for _ in range(2 * len(a_basis))]
                for j, b in enumerate(t_basis):
                    for a, c in po.face(0, {b: 1}).items():
                        mat[a_index[a]][j] = c
                    for a, c in po.face(1, {b: 1}).items():
                        mat[len(a_basis) + a_index[a]][j] = c
                if linalg.rank(mat, char) != 2 * len(a_basis):
                    ok_surj = False
            if not section_is_quasi_iso(po, char):
                ok_qi = False
        checks.append(Check("d0 s0 = d1 s0 = id exactly, characteristic %d" % char, ok_id))
        checks.append(Check("s0, d0, d1 are chain maps, characteristic %d" % char, ok_chain))
        checks.append(Check("(d0, d1) is degreewise surjective, characteristic %d" % char, ok_surj))
        checks.append(Check("s0 is a quasi-isomorphism, characteristic %d" % char, ok_qi))

    A = ea.CochainAlgebra(sim.SphereModel(1), 0, reduced=True)
    po = ea.PathObject(A)
    different = False
    for b in po.algebra.basis():
        if po.face(0, {b: 1}) != po.face(1, {b: 1}):
            different = True
    checks.append(Check("d0 and d1 differ on the path object of a nonzero algebra", different))
    return checks


# ---------------------------------------------------------------------------
# criterion 9: the filtration stages of arity 2 are quasi-isomorphic under TR


def _filtered_arity2_complexes(n, max_degree):
    e_basis = {}
    x_basis = {}
    for d in range(0, max_degree + 2):
        e_basis[d] = [w for w in be.all_basis(2, d) if be.complexity(w) <= n]
        x_basis[d] = [u for u in sj.all_basis(2, d) if sj.complexity(u, 2) <= n]
    return e_basis, x_basis


def suite_filtration_qiso(seed=0, max_arity=None, max_degree=None):
    checks = []
    max_degree = 6
    for n in (1, 2, 3, 4):
        e_basis, x_basis = _filtered_arity2_complexes(n, max_degree)
        dims_e = [len(e_basis[d]) for d in range(max_degree + 2)]
        dims_x = [len(x_basis[d]) for d in range(max_degree + 2)]

        def boundary_mats(basis, dims, diff):
            mats = {}
            for d in range(1, max_degree + 2):
                index = {b: i for i, b in enumerate(basis[d - 1])}
                mat = [[0] * dims[d] for _ in range(dims[d - 1])]
                for j, b in enumerate(basis[d]):
                    for b2, c in diff(b).terms.items():
                        mat[index[b2]][j] = c
                mats[d] = mat
            return mats

        ce = linalg.ChainComplexData(dims_e, boundary_mats(e_basis, dims_e, be.differential_basis))
        cx = linalg.ChainComplexData(dims_x, boundary_mats(x_basis, dims_x, sj.differential_basis))

        tr_mats = {}
        for d in range(max_degree + 2):
            index = {u: i for i, u in enumerate(x_basis[d])}
            mat = [[0] * dims_e[d] for _ in range(dims_x[d])]
            for j, w in enumerate(e_basis[d]):
                for u, c in tre.tr_basis(w).terms.items():
                    mat[index[u]][j] = c
            tr_mats[d] = mat

        for char in (2, 3, 0):
            be_betti = ce.betti(char)[: max_degree + 1]
            bx_betti = cx.betti(char)[: max_degree + 1]
            ok = be_betti == bx_betti
            if ok:
                for d in range(max_degree + 1):
                    rk = linalg.induced_homology_rank(ce, cx, tr_mats, d, char)
                    if rk != be_betti[d]:
                        ok = False
            checks.append(Check(
                "filtration stage %d, characteristic %d: equal Betti numbers %s and full induced ranks"
                % (n, char, be_betti),
                ok,
            ))
    return checks


# ---------------------------------------------------------------------------
# criterion 10: Hochschild braces


def suite_hochschild(seed=0, max_arity=None, max_degree=None):
    checks = []
    algebras = [hh.upper_triangular(), hh.truncated_polynomial()]
    rng = _rng(seed, "hochschild")

    ok = True
    for A in algebras:
        for m in (0, 1, 2, 3):
            for _ in range(4):
                f = hh.random_cochain(A, m, rng)
                if hh.differential(hh.differential(f)):
                    ok = False
    checks.append(Check("Hochschild d^2 = 0 on both algebras, arity <= 3", ok))

    ok = True
    for A in algebras:
        for _ in range(6):
            f = hh.random_cochain(A, rng.choice([1, 2]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            h = hh.random_cochain(A, rng.choice([1, 2]), rng)
            if hh.cup(hh.cup(f, g), h) != hh.cup(f, hh.cup(g, h)):
                ok = False
    checks.append(Check("cup associativity", ok))

    ok = True
    for A in algebras:
        for _ in range(6):
            f = hh.random_cochain(A, rng.choice([1, 2]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            h = hh.random_cochain(A, rng.choice([1, 2]), rng)
            lhs = hh.brace(hh.brace(f, g), h) - hh.brace(f, hh.brace(g, h))
            sgn = -1 if (g.shifted_degree * h.shifted_degree) & 1 else 1
            rhs = hh.brace(f, g, h) + hh.brace(f, h, g).scale(sgn)
            if lhs != rhs:
                ok = False
    checks.append(Check("brace pre-Lie identity", ok))

    ok = True
    for A in algebras:
        mu = hh.multiplication_cochain(A)
        if hh.gerstenhaber_bracket(mu, mu) or hh.brace(mu, mu):
            ok = False
    for _ in range(10):
        A = algebras[0]
        mu = hh.multiplication_cochain(A)
        pert = hh.random_cochain(A, 2, rng, unit_free=True)
        mu2 = mu + pert
        associator = hh.brace(mu2, mu2)
        assoc_holds = True
        for i in range(1, A.dim):
            for j in range(1, A.dim):
                for k in range(1, A.dim):
                    left = tuple(mu2.value_on_coords((mu2.value_on_coords((A.basis_vector(i), A.basis_vector(j))), A.basis_vector(k))))
                    right = tuple(mu2.value_on_coords((A.basis_vector(i), mu2.value_on_coords((A.basis_vector(j), A.basis_vector(k))))))
                    if left != right:
                        assoc_holds = False
        if bool(associator) == assoc_holds:
            ok = False
    checks.append(Check("[mu, mu] = 0 exactly for associative multiplications", ok))

    ok = True
    for A in algebras:
        for _ in range(8):
            f = hh.random_cochain(A, rng.choice([1, 2, 3]), rng)
            g = hh.random_cochain(A, rng.choice([1, 2]), rng)
            p, q = f.shifted_degree, g.shifted_degree
            lhs = hh.differential(hh.brace(f, g))
            rhs = hh.brace(hh.differential(f), g).scale(-1 if q & 1 else 1)
            rhs = rhs + hh.brace(f, hh.differential(g))
            rhs = rhs + hh.cup(f, g).scale(-1 if (p * q + p + 1) & 1 else 1)
            rhs = rhs + hh.cup(g, f).scale(-1 if (q + 1) & 1 else 1)
            if lhs != rhs:
                ok = False
    checks.append(Check("cup commutativity homotopy via the one-slot brace", ok))

    ok = True
    for r in range(2, 6):
        w = hh.brace_element(r)
        target = hh.brace_surjection(r)
        if tre.tr_basis(w).terms != {target: 1}:
            ok = False
        if tre.section(target) != w:
            ok = False
        if be.complexity(w) > 2 or sj.complexity(target, r) > 2:
            ok = False
    checks.append(Check("table reduction identifies the brace elements, arity <= 5, inside stage 2", ok))
    return checks


# ---------------------------------------------------------------------------
# runner


SUITES = [
    ("golden", "criterion 1: golden worked examples", suite_golden),
    ("d-squared", "criterion 2: differentials square to zero", suite_d_squared),
    ("tr-morphism", "criterion 3: table reduction is a filtered dg-operad morphism", suite_tr_morphism),
    ("aw-morphism", "criterion 4: interval cuts form a normalized operad morphism", suite_aw_morphism),
    ("cup-structure", "criterion 5: cup-i products and Steenrod squares", suite_cup_structure),
    ("sphere-cone", "criterion 6: sphere and cone closed forms", suite_sphere_cone),
    ("suspension", "criterion 7: operadic suspension", suite_suspension),
    ("path-object", "criterion 8: path objects", suite_path_object),
    ("filtration-qiso", "criterion 9: filtration stages under table reduction", suite_filtration_qiso),
    ("hochschild", "criterion 10: Hochschild braces", suite_hochschild),
]


def suite_names():
    return [name for name, _desc, _fn in SUITES]


def run(name, seed=0, max_arity=None, max_degree=None):
    for key, _desc, fn in SUITES:
        if key == name:
            return fn(seed, max_arity=max_arity, max_degree=max_degree)
    raise KeyError("unknown suite %r (have: %s)" % (name, ", ".join(suite_names())))


def run_all(seed=0, out=None, max_arity=None, max_degree=None):
    """Run the whole battery; returns (all_passed, lines)."""
    lines = []
    all_ok = True
    for key, desc, fn in SUITES:
        start = time.time()
        checks = fn(seed, max_arity=max_arity, max_degree=max_degree)
        elapsed = time.time() - start
        ok = all(c.passed for c in checks)
        all_ok = all_ok and ok
        new = ["%-5s %-16s %s (%d checks, %.1fs)" % (
            "PASS" if ok else "FAIL", key, desc, len(checks), elapsed,
        )]
        for c in checks:
            if not c.passed:
                new.append("      failed: %s%s" % (c.name, (" -- " + c.detail) if c.detail else ""))
        lines.extend(new)
        if out is not None:
            for line in new:
                print(line, file=out, flush=True)
    return all_ok, lines
