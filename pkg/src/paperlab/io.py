"""JSON formats for simplicial sets, finite categories, presentations and reports.

Keys of simplices, objects and morphisms are arbitrary hashables (mostly
nested tuples).  They are written as strings holding a tagged JSON encoding,
so reading a file back reproduces the exact keys.

* ``.sset.json``: ``{"simplices": {dim: [name, ...]}, "faces": {name: [[surjection values, base name], ...]}}``
* ``.fincat.json``: ``{"objects": [...], "morphisms": {name: [src, tgt]}, "identities": {obj: mor}, "composition": [[g, f, gf], ...]}``
* ``.catpres.json``: ``{"vertices": [...], "edges": {name: [src, tgt]}, "relations": [[lhs, rhs, src, tgt], ...]}``
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Hashable, Union

from .category import FinCat
from .delta import MonotoneMap
from .presentation import CatPresentation, Relation
from .sset import NSimplex, SSet

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def encode(x: Any) -> Any:
    """Tagged JSON value for a hashable key."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, tuple):
        return {"tuple": [encode(y) for y in x]}
    if isinstance(x, frozenset):
        return {"frozenset": sorted((encode(y) for y in x), key=_sort_key)}
    if isinstance(x, Fraction):
        return {"fraction": [x.numerator, x.denominator]}
    if isinstance(x, MonotoneMap):
        return {"map": [list(x.values), x.dst]}
    if isinstance(x, NSimplex):
        return {"simplex": [encode(x.degeneracy), encode(x.base)]}
    raise FormatError(f"cannot encode {x!r} of type {type(x).__name__}")


def decode(v: Any) -> Any:
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, dict) and len(v) == 1:
        (tag, body), = v.items()
        if tag == "tuple":
            return tuple(decode(y) for y in body)
        if tag == "frozenset":
            return frozenset(decode(y) for y in body)
        if tag == "fraction":
            return Fraction(body[0], body[1])
        if tag == "map":
            return MonotoneMap(tuple(body[0]), body[1])
        if tag == "simplex":
            return NSimplex(decode(body[0]), decode(body[1]))
    raise FormatError(f"cannot decode {v!r}")


def _sort_key(v):
    return json.dumps(v, sort_keys=True)


def name(x: Hashable) -> str:
    """Stable string name of a key."""
    return json.dumps(encode(x), sort_keys=True, separators=(",", ":"))


def unname(s: str) -> Hashable:
    return decode(json.loads(s))


# ---------------------------------------------------------------------------
# Simplicial sets


def sset_to_dict(S: SSet) -> dict:
    simplices = {str(n): [name(k) for k in S.simplices(n)] for n in range(S.dimension + 1)} if len(S) else {}
    faces = {name(k): [[list(f.degeneracy.values), name(f.base)] for f in S.faces(k)] for k in S.keys()}
    return {"simplices": simplices, "faces": faces}


def sset_from_dict(d: dict, check: bool = True) -> SSet:
    try:
        dims = {k: int(n) for n, ks in d["simplices"].items() for k in ks}
        faces = {}
        for k, fs in d["faces"].items():
            out = []
            for vals, base in fs:
                if base not in dims:
                    raise FormatError(f"face {base} of {k} is not a listed simplex")
                out.append(NSimplex(MonotoneMap(tuple(vals), dims[base]), unname(base)))
            faces[unname(k)] = out
        for k in dims:
            faces.setdefault(unname(k), [])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed simplicial set: {exc}") from exc
    return SSet(faces, check=check)


# ---------------------------------------------------------------------------
# Finite categories


def fincat_to_dict(C: FinCat) -> dict:
    comp = [[name(g), name(f), name(C.comp(g, f))] for g, f in C.composable_pairs()
            if not C.is_identity(g) and not C.is_identity(f)]
    return {
        "name": C.name,
        "objects": [name(o) for o in C.objects],
        "morphisms": {name(m): [name(a), name(b)] for m, (a, b) in C.morphisms.items()},
        "identities": {name(o): name(i) for o, i in C.identities.items()},
        "composition": comp,
    }


def fincat_from_dict(d: dict, check: bool = True) -> FinCat:
    try:
        objs = [unname(o) for o in d["objects"]]
        mors = {unname(m): (unname(a), unname(b)) for m, (a, b) in d["morphisms"].items()}
        ids = {unname(o): unname(i) for o, i in d["identities"].items()}
        comp = {(unname(g), unname(f)): unname(h) for g, f, h in d["composition"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed category: {exc}") from exc
    return FinCat(objs, mors, ids, comp, check=check, name=d.get("name", ""))


# ---------------------------------------------------------------------------
# Presentations


def catpres_to_dict(P: CatPresentation) -> dict:
    return {
        "vertices": [name(v) for v in P.vertices],
        "edges": {name(e): [name(a), name(b)] for e, (a, b) in P.edges.items()},
        "relations": [[[name(e) for e in r.lhs], [name(e) for e in r.rhs], name(r.source), name(r.target)]
                      for r in P.relations],
    }


def catpres_from_dict(d: dict) -> CatPresentation:
    try:
        P = CatPresentation([unname(v) for v in d["vertices"]],
                            {unname(e): (unname(a), unname(b)) for e, (a, b) in d["edges"].items()})
        for lhs, rhs, s, t in d["relations"]:
            P.relations.append(Relation(tuple(unname(e) for e in lhs), tuple(unname(e) for e in rhs),
                                        unname(s), unname(t)))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed presentation: {exc}") from exc
    P.validate()
    return P


# ---------------------------------------------------------------------------
# Files


def _write(path: PathLike, data: dict):
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=True, default=repr) + "\n")


def _read(path: PathLike) -> dict:
    return json.loads(Path(path).read_text())


def save_sset(S: SSet, path: PathLike):
    _write(path, sset_to_dict(S))


def load_sset(path: PathLike) -> SSet:
    return sset_from_dict(_read(path))


def save_fincat(C: FinCat, path: PathLike):
    _write(path, fincat_to_dict(C))


def load_fincat(path: PathLike) -> FinCat:
    return fincat_from_dict(_read(path))


def save_catpres(P: CatPresentation, path: PathLike):
    _write(path, catpres_to_dict(P))


def load_catpres(path: PathLike) -> CatPresentation:
    return catpres_from_dict(_read(path))


def dump_report(report: dict, path: PathLike = None) -> str:
    """Serialize a report; keys that are not JSON-native are written with ``repr``."""
    text = json.dumps(report, indent=2, sort_keys=True, default=repr)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
