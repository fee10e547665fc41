"""JSON encoding and decoding of the library's value types.

All maps use the sparse normalized encoding: a list of
{"args": [[...], ...], "value": [...]} entries, omitted tuples meaning
zero. Groups are descriptor strings like "Z/2xZ/4". Every decoder
validates shapes and raises ValueError with a readable message.
"""

from __future__ import annotations

import json
from typing import Any

from .groups import FinAbGroup, parse_group
from .picard import PicardGroupoid, make_picard
from .cohomology import Cochain
from .extension import MonBicatExtension, MonCatExtension
from .biextension import (
    BiextCocycle,
    CatBiextCocycle,
    MultiMap,
    SkeletalMonoidalDatum,
    SymBiextDatum,
)
from .qcomplex import BiQData, ThetaMatrix


def load_file(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _entries_to_dict(entries, arity: int) -> dict:
    out = {}
    for e in entries or []:
        args = e.get("args")
        val = e.get("value")
        if not isinstance(args, list) or len(args) != arity:
            raise ValueError(f"entry args {args!r} must be a list of {arity} tuples")
        out[tuple(tuple(a) for a in args)] = tuple(val)
    return out


def group_from_json(obj) -> FinAbGroup:
    if not isinstance(obj, str):
        raise ValueError(f"group descriptor must be a string, got {obj!r}")
    return parse_group(obj)


def cochain_from_json(obj) -> Cochain:
    G = group_from_json(obj["group"])
    coeff = group_from_json(obj["coeff"])
    degree = int(obj["degree"])
    vals = _entries_to_dict(obj.get("values"), degree)
    return Cochain.make(G, coeff, degree, vals)


def cochain_to_json(f: Cochain) -> dict:
    return {
        "group": str(f.G),
        "coeff": str(f.coeff),
        "degree": f.degree,
        "values": [
            {"args": [list(a) for a in key], "value": list(v)}
            for key, v in f.values
        ],
    }


def picard_from_json(obj) -> PicardGroupoid:
    B = group_from_json(obj["B"])
    A = group_from_json(obj["A"])
    return make_picard(B, A, obj.get("c"))


def picard_to_json(pic: PicardGroupoid) -> dict:
    return {
        "B": str(pic.B),
        "A": str(pic.A),
        "c": [[list(row) for row in mat] for mat in pic.c_tensor],
    }


def multimap_from_json(entries, domains, coeff) -> MultiMap:
    return MultiMap.make(
        domains, coeff, _entries_to_dict(entries, len(domains))
    )


def multimap_to_json(m: MultiMap) -> list:
    return [
        {"args": [list(a) for a in key], "value": list(v)} for key, v in m.values
    ]


def biext_from_json(obj) -> BiextCocycle:
    G = group_from_json(obj["G"])
    H = group_from_json(obj["H"])
    A = group_from_json(obj["A"])
    return BiextCocycle(
        G,
        H,
        A,
        multimap_from_json(obj.get("Afun"), (G, G, H), A),
        multimap_from_json(obj.get("Bfun"), (G, H, H), A),
    )


def biext_to_json(E: BiextCocycle) -> dict:
    return {
        "kind": "biext",
        "G": str(E.G),
        "H": str(E.H),
        "A": str(E.A),
        "Afun": multimap_to_json(E.Afun),
        "Bfun": multimap_to_json(E.Bfun),
    }


def cat_biext_from_json(obj) -> CatBiextCocycle:
    G = group_from_json(obj["G"])
    H = group_from_json(obj["H"])
    pic = picard_from_json(obj["picard"])
    B, A = pic.B, pic.A
    return CatBiextCocycle(
        G,
        H,
        pic,
        multimap_from_json(obj.get("Afun"), (G, G, H), B),
        multimap_from_json(obj.get("Bfun"), (G, H, H), B),
        multimap_from_json(obj.get("theta1"), (G, G, G, H), A),
        multimap_from_json(obj.get("theta2"), (G, H, H, H), A),
        multimap_from_json(obj.get("chi"), (G, G, H, H), A),
    )


def sym_biext_from_json(obj) -> SymBiextDatum:
    bi = cat_biext_from_json(obj)
    G, H, A = bi.G, bi.H, bi.base.A
    return SymBiextDatum(
        bi,
        multimap_from_json(obj.get("mu1"), (G, G, H), A),
        multimap_from_json(obj.get("mu2"), (G, H, H), A),
        multimap_from_json(obj.get("gamma1"), (G, G, H), A),
        multimap_from_json(obj.get("gamma2"), (G, H, H), A),
    )


def moncat_ext_from_json(obj) -> MonCatExtension:
    G = group_from_json(obj["G"])
    A = group_from_json(obj["A"])
    return MonCatExtension(G, A, cochain_from_json(obj["f"]))


def bicat_ext_from_json(obj) -> MonBicatExtension:
    pic = picard_from_json(obj["picard"])
    G = group_from_json(obj["G"])
    return MonBicatExtension(
        pic, G, cochain_from_json(obj["f"]), cochain_from_json(obj["theta"])
    )


def monoidal_datum_from_json(obj) -> SkeletalMonoidalDatum:
    G = group_from_json(obj["G"])
    A = group_from_json(obj["A"])
    braiding = None
    shift = None
    if obj.get("braiding") is not None:
        braiding = multimap_from_json(obj["braiding"], (G, G), A)
    if obj.get("sectionShift") is not None:
        shift = multimap_from_json(obj["sectionShift"], (G, G), A)
    return SkeletalMonoidalDatum(
        G, A, cochain_from_json(obj["a"]), braiding, shift
    )


def theta_matrix_from_json(obj) -> ThetaMatrix:
    G = group_from_json(obj["G"])
    A = group_from_json(obj["A"])
    vals = {}
    for e in obj.get("theta") or []:
        args = e["args"]
        if len(args) != 4:
            raise ValueError("theta entry needs 4 args in row-major order")
        m = ((tuple(args[0]), tuple(args[1])), (tuple(args[2]), tuple(args[3])))
        vals[m] = tuple(e["value"])
    return ThetaMatrix.make(G, A, vals)


def biq_from_json(obj) -> BiQData:
    G = group_from_json(obj["G"])
    H = group_from_json(obj["H"])
    A = group_from_json(obj["A"])
    rows = {}
    for e in obj.get("thetaRow") or []:
        args = e["args"]
        if len(args) != 5:
            raise ValueError("thetaRow entry needs 4 matrix args plus the spectator")
        m = ((tuple(args[0]), tuple(args[1])), (tuple(args[2]), tuple(args[3])))
        rows[(m, tuple(args[4]))] = tuple(e["value"])
    return BiQData.make(
        G,
        H,
        A,
        f=_entries_to_dict(obj.get("f"), 3),
        g=_entries_to_dict(obj.get("g"), 3),
        theta_row=rows,
        chi=_entries_to_dict(obj.get("chi"), 4),
    )
