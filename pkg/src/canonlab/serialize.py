"""JSON schemas for ideals, Petri systems, Betti diagrams and Hilbert data.

Field elements serialise as ints when integral, else as "a/b" strings;
everything round-trips bit-exactly.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .fields import GF, QQ, PrimeField, RationalField
from .groebner import Ideal
from .petri import PetriSystemG5, PetriSystemG6
from .rings import PolynomialRing, parse_poly


def field_to_json(field):
    if isinstance(field, RationalField):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    raise ValueError(f"unknown field {field!r}")


def field_from_json(obj):
    if obj.get("kind") == "Q":
        return QQ
    if obj.get("kind") == "Fp":
        return GF(int(obj["p"]))
    raise ValueError(f"unknown field spec {obj!r}")


def scalar_to_json(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return int(value)


def scalar_from_json(field, value):
    if isinstance(value, str) and "/" in value:
        num, den = value.split("/")
        return field.div(field.from_int(int(num)), field.from_int(int(den)))
    return field.normalize(int(value))


def ideal_to_json(I: Ideal) -> dict:
    return {
        "variables": list(I.ring.variables),
        "field": field_to_json(I.ring.field),
        "generators": [str(g) for g in I.generators],
    }


def ideal_from_json(obj) -> Ideal:
    field = field_from_json(obj["field"])
    ring = PolynomialRing(tuple(obj["variables"]), field)
    gens = [parse_poly(text, ring) for text in obj["generators"]]
    return Ideal(ring, gens)


def petri_to_json(system) -> dict:
    out = {"genus": system.genus, "field": field_to_json(system.field)}
    if system.genus == 5:
        out["rho"] = {"123": scalar_to_json(system.rho123)}
    else:
        out["rho"] = {"".join(map(str, t)): scalar_to_json(v)
                      for t, v in sorted(system.rho_map.items())
                      if not system.field.is_zero(v)}
    out["alpha"] = [str(a) for a in system.alpha]
    out["a_diag"] = {f"{s},{i},{j}": str(form)
                     for (s, i, j), form in sorted(system.a_diag.items())}
    q = {}
    b = {}
    for pair, form in sorted(system.q.items()):
        if system.genus == 6 and pair in system.b:
            b[f"{pair[0]},{pair[1]}"] = scalar_to_json(system.b[pair])
        elif form:
            q[f"{pair[0]},{pair[1]}"] = str(form)
    out["q"] = q
    if b:
        out["b"] = b
    return out


def petri_from_json(obj):
    field = field_from_json(obj["field"])
    genus = int(obj["genus"])

    def parse_pairs(table):
        return {tuple(int(c) for c in key.split(",")): val
                for key, val in (table or {}).items()}

    a_diag = parse_pairs(obj.get("a_diag"))
    q = parse_pairs(obj.get("q"))
    if genus == 5:
        rho = obj.get("rho") or {}
        return PetriSystemG5(field,
                             rho123=scalar_from_json(field, rho.get("123", 0)),
                             alpha=tuple(obj.get("alpha") or (None,) * 3) or None,
                             a=a_diag, q=q)
    if genus == 6:
        rho = {key: scalar_from_json(field, val)
               for key, val in (obj.get("rho") or {}).items()}
        b = {k: scalar_from_json(field, v) for k, v in parse_pairs(obj.get("b")).items()}
        return PetriSystemG6(field, rho=rho,
                             alpha=tuple(obj.get("alpha") or (None,) * 4),
                             a_diag=a_diag, q=q, b=b)
    raise ValueError("genus must be 5 or 6")


def betti_to_json(diagram) -> dict:
    return {
        "rows": diagram.rows(),
        "row_offset": 0,
        "convention": "entry r,c = beta_{c, c+r}",
    }


def betti_from_json(obj):
    from .invariants import BettiDiagram
    return BettiDiagram.from_rows(obj["rows"], obj.get("row_offset", 0))


def hilbert_to_json(hd) -> dict:
    return {
        "proj_dimension": hd.proj_dimension,
        "degree": hd.degree,
        "hilbert_polynomial": [scalar_to_json(c) for c in hd.hilbert_polynomial],
        "arithmetic_genus": hd.arithmetic_genus,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
