"""JSON file formats for presentations, Leibniz algebras, tables and symmetric forms."""

from __future__ import annotations

import json

from .constructions import LeibnizAlgebra, MultiplicationTable, SymmetricForm
from .core import Alphabet, DiPoly, Diword
from .field import field_from_json
from .rewrite import Presentation


class FormatError(ValueError):
    pass


def _need(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing key {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise FormatError(f"key {key!r} must be {kind.__name__}")
    return val


def _field(doc):
    try:
        return field_from_json(doc.get("field"))
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from exc


def _alphabet(doc):
    names = _need(doc, "generators", list)
    try:
        return Alphabet(names)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _scalar(field, raw):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise FormatError(f"coefficient {raw!r} must be an integer or a string")
    try:
        return field(raw if isinstance(raw, (int, str)) else str(raw))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad coefficient {raw!r}") from exc


# -- presentations -----------------------------------------------------------

def presentation_from_json(doc) -> Presentation:
    A = _alphabet(doc)
    F = _field(doc)
    rels = []
    for r, terms in enumerate(_need(doc, "relations", list)):
        if not isinstance(terms, list):
            raise FormatError(f"relation {r} must be a list of terms")
        acc = []
        for t in terms:
            word = _need(t, "word", list)
            center = _need(t, "center", int)
            try:
                u = Diword([A.index(x) for x in word], center)
            except ValueError as exc:
                raise FormatError(f"relation {r}: {exc}") from exc
            acc.append((u, _scalar(F, t.get("coeff", "1"))))
        f = DiPoly(acc, F)
        if not f:
            raise FormatError(f"relation {r} is zero")
        rels.append(f)
    return Presentation(A, rels, F)


def presentation_to_json(S: Presentation) -> dict:
    names = S.alphabet.names
    rels = []
    for f in S.relations:
        rels.append([{"coeff": S.field.format(c), "word": [names[x] for x in u.word],
                      "center": u.center} for u, c in f.items()])
    return {"generators": list(names), "field": S.field.to_json(), "relations": rels}


def canonical(doc) -> dict:
    """Canonical form of a presentation document: monic relations, sorted terms."""
    return presentation_to_json(presentation_from_json(doc))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- structure constant files -------------------------------------------------

def _pair(key, A):
    parts = key.split(",")
    if len(parts) != 2:
        raise FormatError(f"pair key {key!r} must read 'x,y'")
    i, j = (p.strip() for p in parts)
    for nm in (i, j):
        if nm not in A:
            raise FormatError(f"undeclared generator {nm!r}")
    return i, j


def _products(doc, key, A, F):
    out = {}
    for pk, terms in (doc.get(key) or {}).items():
        i, j = _pair(pk, A)
        vec = {}
        if not isinstance(terms, list):
            raise FormatError(f"{key}[{pk!r}] must be a list of terms")
        for t in terms:
            k = _need(t, "k")
            if k not in A:
                raise FormatError(f"undeclared generator {k!r}")
            vec[k] = vec.get(k, F.zero()) + _scalar(F, t.get("coeff", "1"))
        out[(i, j)] = vec
    return out


def _render_products(tab, names, F):
    out = {}
    for i, row in enumerate(tab):
        for j, vec in enumerate(row):
            terms = [{"k": names[k], "coeff": F.format(c)} for k, c in enumerate(vec) if c]
            if terms:
                out[f"{names[i]},{names[j]}"] = terms
    return out


def leibniz_from_json(doc) -> LeibnizAlgebra:
    A = _alphabet(doc)
    F = _field(doc)
    i0 = doc.get("i0", [])
    for nm in i0:
        if nm not in A:
            raise FormatError(f"undeclared generator {nm!r} in i0")
    return LeibnizAlgebra(A, _products(doc, "bracket", A, F), i0, F)


def leibniz_to_json(L: LeibnizAlgebra) -> dict:
    names = L.names
    return {"generators": names, "field": L.field.to_json(), "i0": [names[k] for k in L.i0],
            "bracket": _render_products(L.table, names, L.field)}


def table_from_json(doc) -> MultiplicationTable:
    A = _alphabet(doc)
    F = _field(doc)
    return MultiplicationTable(A, _products(doc, "vdash", A, F), _products(doc, "dashv", A, F), F)


def table_to_json(T: MultiplicationTable) -> dict:
    return {"generators": T.names, "field": T.field.to_json(),
            "vdash": _render_products(T.tables["vdash"], T.names, T.field),
            "dashv": _render_products(T.tables["dashv"], T.names, T.field)}


def form_from_json(doc):
    """Return ``(SymmetricForm, names or None)``."""
    F = _field(doc)
    n = _need(doc, "n", int)
    matrix = _need(doc, "matrix", list)
    if len(matrix) != n or any(not isinstance(r, list) or len(r) != n for r in matrix):
        raise FormatError("matrix must be n x n")
    form = SymmetricForm([[_scalar(F, c) for c in row] for row in matrix], F)
    return form, doc.get("names")


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc.msg})") from exc
