"""JSON documents for groups, complexes, maps and suites.

Group::

    {"kind": "group", "names": [...], "table": [[...], ...],
     "subgroup_names": [{"elements": [...], "name": "C3"}]}     # optional

Complex::

    {"kind": "complex", "group": <path or inline group>,
     "cells": [{"id": "c1", "dim": 1, "type": [0, 3]}, ...],
     "differential": [{"from": "c1", "to": "c0",
                       "terms": [{"coeff": -1, "rep": 2}, ...]}, ...]}

Map::

    {"kind": "map", "domain": <path or inline complex>,
     "codomain": <path or inline complex>, "blocks": [<entry>, ...]}

Suite::

    {"kind": "suite", "maps": [<path or inline map>, ...]}

Paths are relative to the referring file.  Parsing canonicalizes: cells
sorted by (dim, id), cell types retyped to their class representative,
representatives reduced to coset minima, entries sorted and zero terms
dropped.  :func:`emit` writes sorted-key JSON, so parse then emit is the
identity on canonical documents.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .complexes import Cell, CellComplex, CellMap, normalize_complex, normalize_map
from .errors import NonCanonicalSubgroup, SchemaError, UnresolvedReference
from .groups import FiniteGroup, load_group
from .orbits import MorphismSum
from .rings import TomDieckElement

KINDS = ("group", "complex", "map", "suite")


@dataclass
class Document:
    kind: str
    body: dict
    path: str | None = None
    obj: object = field(default=None, repr=False)


def emit(doc) -> str:
    body = doc.body if isinstance(doc, Document) else doc
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _expect(cond, message, path):
    if not cond:
        raise SchemaError(message, path)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


class _Loader:
    """Resolves references and caches documents by absolute path."""

    def __init__(self):
        self.cache = {}

    def load_path(self, path, expected=None, where=()):
        full = os.path.abspath(path)
        if full in self.cache:
            doc = self.cache[full]
        else:
            try:
                with open(full, encoding="utf-8") as fh:
                    raw = json.load(fh)
            except FileNotFoundError:
                raise UnresolvedReference(f"{'/'.join(map(str, where)) or '<root>'}: no such file {path!r}") from None
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON in {path}: {exc}", where) from None
            doc = self.load_raw(raw, os.path.dirname(full), where=())
            doc.path = full
            self.cache[full] = doc
        if expected and doc.kind != expected:
            raise SchemaError(f"{path!r} is a {doc.kind} document, expected {expected}", where)
        return doc

    def resolve(self, ref, base_dir, expected, where):
        if isinstance(ref, str):
            return self.load_path(os.path.join(base_dir, ref), expected, where)
        if isinstance(ref, dict):
            doc = self.load_raw(ref, base_dir, where)
            if doc.kind != expected:
                raise SchemaError(f"inline {doc.kind} document where a {expected} is expected", where)
            return doc
        raise SchemaError(f"expected a path or an inline {expected} document", where)

    def load_raw(self, raw, base_dir, where=()):
        _expect(isinstance(raw, dict), "document must be a JSON object", where)
        kind = raw.get("kind")
        _expect(kind in KINDS, f"unknown kind {kind!r}", where + ("kind",))
        return getattr(self, f"_{kind}")(raw, base_dir, where)

    # -- group

    def _group(self, raw, base_dir, where):
        _expect(set(raw) <= {"kind", "names", "table", "subgroup_names"}, f"unexpected keys {sorted(set(raw) - {'kind', 'names', 'table', 'subgroup_names'})}", where)
        table = raw.get("table")
        _expect(isinstance(table, list) and table, "table must be a non-empty list of rows", where + ("table",))
        for i, row in enumerate(table):
            _expect(isinstance(row, list) and all(_is_int(x) for x in row), "rows must be lists of integers", where + ("table", i))
        names = raw.get("names")
        if names is not None:
            _expect(isinstance(names, list) and all(isinstance(x, str) for x in names), "names must be a list of strings", where + ("names",))
        G = load_group(table, names)
        sub_names = {}
        for k, item in enumerate(raw.get("subgroup_names", [])):
            w = where + ("subgroup_names", k)
            _expect(isinstance(item, dict) and set(item) == {"elements", "name"}, "expected {elements, name}", w)
            H = _subgroup(G, item["elements"], w + ("elements",))
            sub_names[G.class_of(H).representative.elements] = item["name"]
        if sub_names:
            G = FiniteGroup(G.table, G.names, G.identity, subgroup_names=sub_names)
        return Document("group", group_body(G), obj=G)

    # -- complex

    def _complex(self, raw, base_dir, where):
        allowed = {"kind", "group", "cells", "differential"}
        _expect(set(raw) <= allowed, f"unexpected keys {sorted(set(raw) - allowed)}", where)
        _expect("group" in raw, "missing group", where)
        gdoc = self.resolve(raw["group"], base_dir, "group", where + ("group",))
        G = gdoc.obj
        cells_raw = raw.get("cells", [])
        _expect(isinstance(cells_raw, list), "cells must be a list", where + ("cells",))
        cells = []
        for k, c in enumerate(cells_raw):
            w = where + ("cells", k)
            _expect(isinstance(c, dict) and set(c) == {"id", "dim", "type"}, "cell needs exactly id, dim, type", w)
            _expect(isinstance(c["id"], str) and c["id"], "id must be a non-empty string", w + ("id",))
            _expect(_is_int(c["dim"]) and c["dim"] >= 0, "dim must be a non-negative integer", w + ("dim",))
            cells.append(Cell(c["id"], c["dim"], _subgroup(G, c["type"], w + ("type",))))
        ids = {c.id for c in cells}
        _expect(len(ids) == len(cells), "duplicate cell ids", where + ("cells",))
        by_id = {c.id: c for c in cells}
        diff = _entries(raw.get("differential", []), by_id, by_id, where + ("differential",))
        C = normalize_complex(CellComplex(G, cells, diff))
        ref = raw["group"] if isinstance(raw["group"], str) else gdoc.body
        return Document("complex", complex_body(C, ref), obj=C)

    # -- map

    def _map(self, raw, base_dir, where):
        allowed = {"kind", "domain", "codomain", "blocks"}
        _expect(set(raw) <= allowed, f"unexpected keys {sorted(set(raw) - allowed)}", where)
        _expect("domain" in raw, "missing domain", where)
        ddoc = self.resolve(raw["domain"], base_dir, "complex", where + ("domain",))
        cref = raw.get("codomain", raw["domain"])
        cdoc = self.resolve(cref, base_dir, "complex", where + ("codomain",))
        X, Y = ddoc.obj, cdoc.obj
        # entries were written against the domain/codomain as stored, which
        # are already canonical; raw types are only needed for inline retyping
        blocks = _entries(raw.get("blocks", []), {c.id: c for c in X.cells}, {c.id: c for c in Y.cells}, where + ("blocks",), same_dim=True)
        f = normalize_map(CellMap(X, Y, blocks))
        dref = raw["domain"] if isinstance(raw["domain"], str) else ddoc.body
        cref_out = cref if isinstance(cref, str) else cdoc.body
        return Document("map", map_body(f, dref, cref_out), obj=f)

    # -- suite

    def _suite(self, raw, base_dir, where):
        _expect(set(raw) <= {"kind", "maps"}, "suite takes only kind and maps", where)
        maps = raw.get("maps", [])
        _expect(isinstance(maps, list), "maps must be a list", where + ("maps",))
        docs = [self.resolve(m, base_dir, "map", where + ("maps", k)) for k, m in enumerate(maps)]
        refs = [m if isinstance(m, str) else d.body for m, d in zip(maps, docs)]
        return Document("suite", {"kind": "suite", "maps": refs}, obj=[d.obj for d in docs])


def _subgroup(G, elements, where):
    _expect(isinstance(elements, list) and elements and all(_is_int(x) for x in elements), "type must be a non-empty list of element indices", where)
    if any(not 0 <= x < G.order for x in elements):
        raise SchemaError(f"element index out of range 0..{G.order - 1}", where)
    canonical = sorted(set(elements))
    if list(elements) != canonical:
        raise NonCanonicalSubgroup(f"{'/'.join(map(str, where))}: {elements} is not sorted and duplicate-free; use {canonical}", suggestion=canonical)
    closure = G.generated(canonical)
    if list(closure.elements) != canonical:
        raise NonCanonicalSubgroup(
            f"{'/'.join(map(str, where))}: {elements} is not a subgroup; the subgroup it generates is {list(closure.elements)}",
            suggestion=list(closure.elements),
        )
    return closure


def _entries(items, sources, targets, where, same_dim=False):
    _expect(isinstance(items, list), "expected a list of entries", where)
    out = {}
    for k, e in enumerate(items):
        w = where + (k,)
        _expect(isinstance(e, dict) and set(e) == {"from", "to", "terms"}, "entry needs exactly from, to, terms", w)
        src, tgt = e["from"], e["to"]
        if src not in sources:
            raise UnresolvedReference(f"{'/'.join(map(str, w))}: unknown cell id {src!r}")
        if tgt not in targets:
            raise UnresolvedReference(f"{'/'.join(map(str, w))}: unknown cell id {tgt!r}")
        s, t = sources[src], targets[tgt]
        if same_dim:
            _expect(s.dim == t.dim, f"block {src}->{tgt} changes dimension", w)
        else:
            _expect(t.dim == s.dim - 1, f"differential {src}->{tgt} must lower dimension by one", w)
        terms = e["terms"]
        _expect(isinstance(terms, list), "terms must be a list", w + ("terms",))
        pairs = []
        G = s.cell_type.parent
        for j, term in enumerate(terms):
            tw = w + ("terms", j)
            _expect(isinstance(term, dict) and set(term) == {"coeff", "rep"}, "term needs exactly coeff, rep", tw)
            _expect(_is_int(term["coeff"]), "coeff must be an integer", tw + ("coeff",))
            _expect(_is_int(term["rep"]) and 0 <= term["rep"] < G.order, "rep must be an element index", tw + ("rep",))
            pairs.append((term["rep"], term["coeff"]))
        m = MorphismSum.build(s.cell_type, t.cell_type, pairs, check=False)
        key = (tgt, src)
        out[key] = out[key] + m if key in out else m
    return out


# -- bodies ---------------------------------------------------------------------


def group_body(G: FiniteGroup):
    body = {"kind": "group", "names": list(G.names), "table": [list(r) for r in G.table]}
    if G.subgroup_names:
        body["subgroup_names"] = [{"elements": list(k), "name": v} for k, v in sorted(G.subgroup_names.items())]
    return body


def _entry_list(entries):
    out = []
    for (t, s) in sorted(entries, key=lambda k: (k[1], k[0])):
        m = entries[(t, s)]
        if m:
            out.append({"from": s, "to": t, "terms": [{"coeff": c, "rep": r} for r, c in m.terms]})
    return out


def _sorted_cells(C):
    return sorted(C.cells, key=lambda c: (c.dim, c.id))


def complex_body(C: CellComplex, group_ref):
    return {
        "kind": "complex",
        "group": group_ref,
        "cells": [{"id": c.id, "dim": c.dim, "type": list(c.cell_type.elements)} for c in _sorted_cells(C)],
        "differential": _entry_list(C.differential),
    }


def map_body(f: CellMap, domain_ref, codomain_ref):
    body = {"kind": "map", "domain": domain_ref, "blocks": _entry_list(f.blocks)}
    if codomain_ref != domain_ref:
        body["codomain"] = codomain_ref
    return body


# -- public entry points ---------------------------------------------------------


def parse(path) -> Document:
    return _Loader().load_path(path)


def parse_text(text, base_dir=".") -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return _Loader().load_raw(raw, base_dir)


def load(path):
    """Parse a file and return the loaded object (group, complex, map or list of maps)."""
    return parse(path).obj


def write(path, body):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(body))


def parse_tom_dieck(text: str, group: FiniteGroup) -> TomDieckElement:
    """Inverse of ``str(TomDieckElement)``: ``-1*(H1_0) + 2*(H2_0)`` or ``0``."""
    s = text.strip()
    if s == "0":
        return TomDieckElement.zero(group)
    labels = {c.label: c for c in group.subgroup_classes()}
    coeffs = {}
    tokens = s.replace(" - ", " + -").split(" + ")
    for tok in tokens:
        tok = tok.strip()
        try:
            num, rest = tok.split("*", 1)
            c = int(num)
        except ValueError:
            raise SchemaError(f"bad term {tok!r}") from None
        if not (rest.startswith("(") and rest.endswith(")")) or rest[1:-1] not in labels:
            raise SchemaError(f"unknown class in term {tok!r}")
        cls = labels[rest[1:-1]]
        coeffs[cls] = coeffs.get(cls, 0) + c
    return TomDieckElement.from_dict(group, coeffs)
