"""JSON interchange documents for objects, morphisms and reports.

Atoms are written as JSON strings and integers, tuples as arrays, subsets as
``{"set": [...]}``, function atoms as ``{"map": [[x, y], ...]}`` and
morphism atoms as ``{"hom": [[sort, map], ...]}``.  Collections appear in
canonical atom order, so serialising is deterministic and
``parse(serialize(x)) == x``.
"""

from __future__ import annotations

import json
from typing import Any

from .finset import FiniteFunction, FiniteSet, HomAtom, MapAtom, atom_text
from .incidence import IncidenceHypergraph, IncidenceMorphism
from .laws import LawReport
from .multigraph import MultigraphView
from .presheaf import MorphismError
from .quiver import Quiver, QuiverMorphism
from .set_system import HyperMorphism, SetSystemHypergraph

KINDS = ("quiver", "hypergraph", "multigraph", "incidence", "morphism", "report")


class DocumentError(ValueError):
    """A document is malformed or violates an invariant; ``path`` locates the field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# --------------------------------------------------------------------------
# atoms


def encode_atom(a) -> Any:
    if isinstance(a, bool):
        raise TypeError("booleans are not atoms")
    if isinstance(a, (str, int)):
        return a
    if isinstance(a, tuple):
        return [encode_atom(x) for x in a]
    if isinstance(a, frozenset):
        return {"set": [encode_atom(x) for x in sorted(a, key=atom_text)]}
    if isinstance(a, MapAtom):
        return {"map": [[encode_atom(x), encode_atom(y)] for x, y in a.pairs]}
    if isinstance(a, HomAtom):
        return {"hom": [[s, encode_atom(m)] for s, m in a.parts]}
    raise TypeError(f"not an atom: {a!r}")


def decode_atom(x, path: str = "$"):
    if isinstance(x, bool) or x is None or isinstance(x, float):
        raise DocumentError(path, f"{json.dumps(x)} is not an atom")
    if isinstance(x, (str, int)):
        return x
    if isinstance(x, list):
        return tuple(decode_atom(y, f"{path}[{k}]") for k, y in enumerate(x))
    if isinstance(x, dict):
        if len(x) != 1:
            raise DocumentError(path, "an encoded atom object has exactly one key: set, map or hom")
        (key, body), = x.items()
        if not isinstance(body, list):
            raise DocumentError(f"{path}.{key}", "expected an array")
        if key == "set":
            return frozenset(decode_atom(y, f"{path}.set[{k}]") for k, y in enumerate(body))
        if key == "map":
            pairs = []
            for k, p in enumerate(body):
                _pair(p, f"{path}.map[{k}]")
                pairs.append((decode_atom(p[0], f"{path}.map[{k}][0]"), decode_atom(p[1], f"{path}.map[{k}][1]")))
            return MapAtom(tuple(pairs))
        if key == "hom":
            parts = []
            for k, p in enumerate(body):
                _pair(p, f"{path}.hom[{k}]")
                if not isinstance(p[0], str):
                    raise DocumentError(f"{path}.hom[{k}][0]", "sort names are strings")
                m = decode_atom(p[1], f"{path}.hom[{k}][1]")
                if not isinstance(m, MapAtom):
                    raise DocumentError(f"{path}.hom[{k}][1]", "expected a map atom")
                parts.append((p[0], m))
            return HomAtom(tuple(parts))
        raise DocumentError(path, f"unknown atom encoding {key!r}")
    raise DocumentError(path, f"{json.dumps(x)} is not an atom")


def _pair(p, path: str) -> None:
    if not isinstance(p, list) or len(p) != 2:
        raise DocumentError(path, "expected a two-element array")


# --------------------------------------------------------------------------
# documents


def _atoms(X: FiniteSet) -> list:
    return [encode_atom(x) for x in X]


def _pairs(f: FiniteFunction) -> list:
    return [[encode_atom(x), encode_atom(y)] for x, y in f.items()]


def to_document(x) -> dict:
    if isinstance(x, Quiver):
        return {
            "kind": "quiver",
            "vertices": _atoms(x.V),
            "edges": _atoms(x.E),
            "endpoints": [[encode_atom(e), encode_atom(x.src(e)), encode_atom(x.tgt(e))] for e in x.E],
        }
    if isinstance(x, (SetSystemHypergraph, MultigraphView)):
        kind = "multigraph" if isinstance(x, MultigraphView) else "hypergraph"
        G = x.carrier if isinstance(x, MultigraphView) else x
        return {
            "kind": kind,
            "vertices": _atoms(G.V),
            "edges": _atoms(G.E),
            "endpoints": [[encode_atom(e), [encode_atom(v) for v in sorted(G.eps[e], key=atom_text)]] for e in G.E],
        }
    if isinstance(x, IncidenceHypergraph):
        return {
            "kind": "incidence",
            "vertices": _atoms(x.V),
            "edges": _atoms(x.E),
            "incidences": [[encode_atom(i), encode_atom(x.port(i)), encode_atom(x.att(i))] for i in x.I],
        }
    if isinstance(x, (QuiverMorphism, HyperMorphism, IncidenceMorphism)):
        category = {QuiverMorphism: "Q", HyperMorphism: "H", IncidenceMorphism: "R"}[type(x)]
        doc = {
            "kind": "morphism",
            "category": category,
            "domain": to_document(x.dom),
            "codomain": to_document(x.cod),
            "vertex_map": _pairs(x.comps["V"]),
            "edge_map": _pairs(x.comps["E"]),
        }
        if category == "R":
            doc["incidence_map"] = _pairs(x.comps["I"])
        return doc
    if isinstance(x, LawReport):
        return {"kind": "report", **x.to_dict()}
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _compact(x) -> str:
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def _layout(doc, indent: str = "") -> str:
    """Objects one field per line, arrays one compact row per element."""
    inner = indent + "  "
    if isinstance(doc, dict):
        body = ",\n".join(f"{inner}{_compact(k)}: {_layout(v, inner)}" for k, v in doc.items())
        return "{\n" + body + "\n" + indent + "}"
    if isinstance(doc, list) and doc and any(isinstance(x, (list, dict)) for x in doc):
        rows = ",\n".join(inner + (_layout(x, inner) if isinstance(x, dict) else _compact(x)) for x in doc)
        return "[\n" + rows + "\n" + indent + "]"
    return _compact(doc)


def serialize(x) -> str:
    return _layout(to_document(x)) + "\n"


_FIELDS = {
    "quiver": {"kind", "vertices", "edges", "endpoints"},
    "hypergraph": {"kind", "vertices", "edges", "endpoints"},
    "multigraph": {"kind", "vertices", "edges", "endpoints"},
    "incidence": {"kind", "vertices", "edges", "incidences"},
    "morphism": {"kind", "category", "domain", "codomain", "vertex_map", "edge_map", "incidence_map"},
    "report": {"kind", "law_name", "instance_description", "verdict", "evidence"},
}
_REQUIRED = {k: v - ({"incidence_map"} if k == "morphism" else set()) for k, v in _FIELDS.items()}


def _check_fields(doc, path: str) -> str:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"{path}.kind", f"expected one of {', '.join(KINDS)}")
    unknown = sorted(set(doc) - _FIELDS[kind])
    if unknown:
        raise DocumentError(f"{path}.{unknown[0]}", f"unknown field for a {kind} document")
    missing = sorted(_REQUIRED[kind] - set(doc))
    if missing:
        raise DocumentError(f"{path}.{missing[0]}", "missing field")
    return kind


def _atom_list(doc, key: str, path: str) -> FiniteSet:
    xs = doc[key]
    if not isinstance(xs, list):
        raise DocumentError(f"{path}.{key}", "expected an array")
    atoms = [decode_atom(x, f"{path}.{key}[{k}]") for k, x in enumerate(xs)]
    if len(set(atoms)) != len(atoms):
        raise DocumentError(f"{path}.{key}", "duplicate element")
    return FiniteSet(atoms)


def _member(X: FiniteSet, raw, path: str, what: str):
    a = decode_atom(raw, path)
    if a not in X:
        raise DocumentError(path, f"unknown {what} {atom_text(a)}")
    return a


def _rows(doc, key: str, path: str, width: int) -> list:
    rows = doc[key]
    if not isinstance(rows, list):
        raise DocumentError(f"{path}.{key}", "expected an array")
    for k, r in enumerate(rows):
        if not isinstance(r, list) or len(r) != width:
            raise DocumentError(f"{path}.{key}[{k}]", f"expected a {width}-element array")
    return rows


def _table(rows, keys: FiniteSet, path: str, what: str) -> dict:
    out = {}
    for k, r in enumerate(rows):
        x = _member(keys, r[0], f"{path}[{k}][0]", what)
        if x in out:
            raise DocumentError(f"{path}[{k}][0]", f"{what} {atom_text(x)} listed twice")
        out[x] = r
    missing = [x for x in keys if x not in out]
    if missing:
        raise DocumentError(path, f"no entry for {what} {atom_text(missing[0])}")
    return out


def from_document(doc, path: str = "$"):
    kind = _check_fields(doc, path)
    if kind == "report":
        try:
            return LawReport(doc["law_name"], doc["instance_description"], doc["verdict"], list(doc["evidence"]))
        except (TypeError, ValueError) as exc:
            raise DocumentError(path, str(exc)) from None
    if kind == "morphism":
        return _morphism(doc, path)
    V = _atom_list(doc, "vertices", path)
    E = _atom_list(doc, "edges", path)
    if kind == "quiver":
        rows = _table(_rows(doc, "endpoints", path, 3), E, f"{path}.endpoints", "edge")
        src, tgt = {}, {}
        for e, r in rows.items():
            k = doc["endpoints"].index(r)
            src[e] = _member(V, r[1], f"{path}.endpoints[{k}][1]", "vertex")
            tgt[e] = _member(V, r[2], f"{path}.endpoints[{k}][2]", "vertex")
        return Quiver(V, E, FiniteFunction(E, V, src), FiniteFunction(E, V, tgt))
    if kind in ("hypergraph", "multigraph"):
        rows = _table(_rows(doc, "endpoints", path, 2), E, f"{path}.endpoints", "edge")
        eps = {}
        for e, r in rows.items():
            k = doc["endpoints"].index(r)
            if not isinstance(r[1], list):
                raise DocumentError(f"{path}.endpoints[{k}][1]", "expected an array of vertices")
            eps[e] = frozenset(_member(V, v, f"{path}.endpoints[{k}][1][{j}]", "vertex") for j, v in enumerate(r[1]))
        G = SetSystemHypergraph(V, E, eps)
        if kind == "multigraph":
            try:
                return MultigraphView(G)
            except ValueError as exc:
                raise DocumentError(f"{path}.endpoints", str(exc)) from None
        return G
    I = FiniteSet(decode_atom(r[0], f"{path}.incidences[{k}][0]") for k, r in enumerate(_rows(doc, "incidences", path, 3)))
    rows = _table(doc["incidences"], I, f"{path}.incidences", "incidence")
    port, att = {}, {}
    for i, r in rows.items():
        k = doc["incidences"].index(r)
        port[i] = _member(V, r[1], f"{path}.incidences[{k}][1]", "vertex")
        att[i] = _member(E, r[2], f"{path}.incidences[{k}][2]", "edge")
    if len(I) != len(doc["incidences"]):
        raise DocumentError(f"{path}.incidences", "duplicate incidence")
    return IncidenceHypergraph(V, E, I, FiniteFunction(I, V, port), FiniteFunction(I, E, att))


def _map(doc, key: str, path: str, X: FiniteSet, Y: FiniteSet, what: str) -> FiniteFunction:
    rows = _table(_rows(doc, key, path, 2), X, f"{path}.{key}", what)
    out = {}
    for x, r in rows.items():
        k = doc[key].index(r)
        out[x] = _member(Y, r[1], f"{path}.{key}[{k}][1]", what + " of the codomain")
    return FiniteFunction(X, Y, out)


def _morphism(doc, path: str):
    category = doc["category"]
    if category not in ("Q", "H", "M", "R"):
        raise DocumentError(f"{path}.category", "expected Q, H, M or R")
    A = from_document(doc["domain"], f"{path}.domain")
    B = from_document(doc["codomain"], f"{path}.codomain")
    A = A.carrier if isinstance(A, MultigraphView) else A
    B = B.carrier if isinstance(B, MultigraphView) else B
    expected = {"Q": Quiver, "H": SetSystemHypergraph, "M": SetSystemHypergraph, "R": IncidenceHypergraph}[category]
    for X, where in ((A, "domain"), (B, "codomain")):
        if not isinstance(X, expected):
            raise DocumentError(f"{path}.{where}", f"not an object of category {category}")
    if category == "M":
        for X, where in ((A, "domain"), (B, "codomain")):
            try:
                MultigraphView(X)
            except ValueError as exc:
                raise DocumentError(f"{path}.{where}", str(exc)) from None
    if category != "R" and "incidence_map" in doc:
        raise DocumentError(f"{path}.incidence_map", "only incidence morphisms carry an incidence map")
    if category == "R" and "incidence_map" not in doc:
        raise DocumentError(f"{path}.incidence_map", "missing field")
    fV = _map(doc, "vertex_map", path, A.sets["V"] if category in "QR" else A.V, B.sets["V"] if category in "QR" else B.V, "vertex")
    fE = _map(doc, "edge_map", path, A.sets["E"] if category in "QR" else A.E, B.sets["E"] if category in "QR" else B.E, "edge")
    try:
        if category == "Q":
            return QuiverMorphism(A, B, fV, fE)
        if category == "R":
            fI = _map(doc, "incidence_map", path, A.I, B.I, "incidence")
            return IncidenceMorphism(A, B, fV, fE, fI)
        return HyperMorphism(A, B, fV, fE)
    except MorphismError as exc:
        raise DocumentError(path, str(exc)) from None


def parse(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_document(doc)
