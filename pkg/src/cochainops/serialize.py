"""JSON encodings for the symbolic values.

Formal sums are enveloped as {"characteristic": n, "terms": [...]} with the
terms sorted by their encoded basis, so output is deterministic.
"""

from __future__ import annotations

import json

from .formal import FormalSum
from .hochschild import AssociativeAlgebra, HochschildCochain
from .simplicial import (
    Cochain,
    OrderedComplex,
    PointedInterval,
    SphereModel,
    StandardSimplex,
    TwoPointModel,
    projective_plane,
)


def encode_permutation(perm):
    return list(perm)


def encode_esimplex(simplex):
    return {"arity": len(simplex[0]), "perms": [list(w) for w in simplex]}


def decode_esimplex(obj):
    perms = tuple(tuple(w) for w in obj["perms"])
    if "arity" in obj and any(len(w) != obj["arity"] for w in perms):
        raise ValueError("permutation arity does not match the declared arity")
    return perms


def encode_surjection(seq):
    return {"arity": max(seq), "seq": list(seq)}


def decode_surjection(obj):
    return tuple(obj["seq"])


def decode_operad_element(obj):
    """An E-simplex ({"perms": ...}) or a surjection ({"seq": ...})."""
    if "perms" in obj:
        return decode_esimplex(obj)
    if "seq" in obj:
        return decode_surjection(obj)
    raise ValueError("expected a 'perms' or 'seq' object, got %r" % (obj,))


def encode_basis(basis):
    if isinstance(basis, tuple) and basis and isinstance(basis[0], tuple):
        if all(isinstance(x, int) for w in basis for x in w):
            return encode_esimplex(basis)
        return [encode_basis(b) for b in basis]
    if isinstance(basis, tuple):
        return list(basis)
    return basis


def formal_sum_to_json(element, encoder=encode_basis):
    terms = [
        {"coeff": coeff, "basis": encoder(basis)}
        for basis, coeff in element.terms.items()
    ]
    terms.sort(key=lambda t: json.dumps(t["basis"], sort_keys=True))
    return {"characteristic": element.char, "terms": terms}


def formal_sum_from_json(obj, decoder):
    char = obj.get("characteristic", 0)
    return FormalSum(
        [(decoder(t["basis"]), t["coeff"]) for t in obj["terms"]], char
    )


def cochain_to_json(cochain):
    values = [
        {"coeff": c, "simplex": list(s)} for s, c in cochain.values.items()
    ]
    values.sort(key=lambda t: t["simplex"])
    return {
        "characteristic": cochain.char,
        "degree": cochain.degree,
        "values": values,
    }


def cochain_from_json(model, obj, reduced=False):
    return Cochain(
        model,
        obj["degree"],
        [(tuple(v["simplex"]), v["coeff"]) for v in obj["values"]],
        obj.get("characteristic", 0),
        reduced,
    )


def model_from_json(obj):
    """{"model": "standard"|"sphere"|"interval"|"rp2", "n": k} or an ordered
    complex {"vertices": [...], "facets": [[...], ...]}."""
    if "vertices" in obj:
        return OrderedComplex(obj["vertices"], obj["facets"])
    kind = obj.get("model")
    if kind == "standard":
        return StandardSimplex(obj["n"])
    if kind == "sphere":
        n = obj["n"]
        return TwoPointModel() if n == 0 else SphereModel(n)
    if kind == "interval":
        return PointedInterval()
    if kind == "rp2":
        return projective_plane()
    raise ValueError("unknown model description: %r" % (obj,))


def algebra_from_json(obj, char=0):
    """{"dim": n, "basis": [...], "unit": [coords], "mult": [[[...]]]}.

    The unit must be the first basis vector.
    """
    dim = obj["dim"]
    unit = tuple(obj["unit"])
    if unit != tuple(1 if i == 0 else 0 for i in range(dim)):
        raise ValueError("the unit must be the first basis element")
    return AssociativeAlgebra(obj["basis"], obj["mult"], char=char)


def hochschild_cochain_from_json(algebra, obj):
    table = {tuple(e["args"]): tuple(e["value"]) for e in obj["entries"]}
    return HochschildCochain(algebra, obj["arity"], table)


def hochschild_cochain_to_json(cochain):
    entries = [
        {"args": list(k), "value": list(v)} for k, v in sorted(cochain.table.items())
    ]
    return {"arity": cochain.arity, "entries": entries}
