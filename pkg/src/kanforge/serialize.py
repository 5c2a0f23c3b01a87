"""JSON interchange for every structure the CLI reads or writes.

Canonical form: sorted keys, compact separators, UTF-8, newline
terminated.  Operator maps are keyed "k.i" (or "p.q.i") with arrays
aligned to the id order of the source level.  Unknown keys are rejected.
"""

import json

from . import simplicial as sp
from . import catalg as ca
from . import nerves as nv
from .groups import FiniteGroup


class ParseError(Exception):
    pass


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False) + "\n"


def _reject_unknown(doc, allowed, where):
    extra = set(doc) - set(allowed)
    if extra:
        raise ParseError("unknown keys %s in %s" % (sorted(extra), where))


def _need(doc, key, where):
    if key not in doc:
        raise ParseError("missing key %r in %s" % (key, where))
    return doc[key]


# -- truncated simplicial sets ----------------------------------------------


def sset_to_doc(x):
    doc = {"format": 1, "kind": "sset", "dim": x.dim,
           "levels": [list(l) for l in x.levels]}
    face = {}
    for (k, i), m in sorted(x.face.items()):
        face["%d.%d" % (k, i)] = [m[s] for s in x.levels[k]]
    degen = {}
    for (k, j), m in sorted(x.degen.items()):
        degen["%d.%d" % (k, j)] = [m[s] for s in x.levels[k]]
    doc["face"] = face
    doc["degen"] = degen
    if x.coskeletal_at is not None:
        doc["coskeletal_at"] = x.coskeletal_at
    if x.base is not None:
        doc["base"] = x.base
    return doc


def sset_from_doc(doc):
    _reject_unknown(doc, {"format", "kind", "dim", "levels", "face", "degen",
                          "coskeletal_at", "base"}, "sset")
    if doc.get("format") != 1 or doc.get("kind") != "sset":
        raise ParseError("not a format-1 sset document")
    dim = _need(doc, "dim", "sset")
    levels = _need(doc, "levels", "sset")
    if len(levels) != dim + 1:
        raise ParseError("levels length disagrees with dim")
    face = {}
    for key, arr in _need(doc, "face", "sset").items():
        k, i = (int(t) for t in key.split("."))
        if len(arr) != len(levels[k]):
            raise ParseError("face %s misaligned" % key)
        face[(k, i)] = dict(zip(levels[k], arr))
    degen = {}
    for key, arr in _need(doc, "degen", "sset").items():
        k, j = (int(t) for t in key.split("."))
        if len(arr) != len(levels[k]):
            raise ParseError("degen %s misaligned" % key)
        degen[(k, j)] = dict(zip(levels[k], arr))
    return sp.TruncatedSSet(dim, levels, face, degen,
                            coskeletal_at=doc.get("coskeletal_at"),
                            base=doc.get("base"))


# -- groups -------------------------------------------------------------------


def group_to_doc(g):
    return {"format": 1, "kind": "group",
            "elements": [str(e) for e in g.elements],
            "table": [[str(a), str(b), str(g.mul(a, b))]
                      for a in g.elements for b in g.elements],
            "unit": str(g.unit)}


def group_from_doc(doc):
    _reject_unknown(doc, {"format", "kind", "elements", "table", "unit"},
                    "group")
    if doc.get("kind") != "group":
        raise ParseError("not a group document")
    els = _need(doc, "elements", "group")
    table = {(a, b): c for a, b, c in _need(doc, "table", "group")}
    g = FiniteGroup(els, table, _need(doc, "unit", "group"))
    errs = g.validate()
    if errs:
        raise ParseError("group axioms fail: %s" % errs[0])
    return g


# -- categories, groupoids, monoidal structures, 2-groups ---------------------


def category_to_doc(c):
    doc = {"format": 1,
           "kind": "groupoid" if isinstance(c, ca.FinGroupoid) else "category",
           "objects": list(c.objects),
           "morphisms": [{"id": f, "src": c.src[f], "tgt": c.tgt[f]}
                         for f in c.morphisms],
           "identity": {x: c.ident[x] for x in c.objects},
           "comp": [[g, f, gf] for (g, f), gf in sorted(c.comp_table.items())]}
    if isinstance(c, ca.FinGroupoid):
        doc["inv"] = {f: c.inv_table[f] for f in c.morphisms}
    return doc


def category_from_doc(doc):
    _reject_unknown(doc, {"format", "kind", "objects", "morphisms", "identity",
                          "comp", "inv"}, "category")
    kind = doc.get("kind")
    if kind not in ("category", "groupoid"):
        raise ParseError("not a category document")
    objects = _need(doc, "objects", "category")
    morphs = _need(doc, "morphisms", "category")
    ids = [m["id"] for m in morphs]
    src = {m["id"]: m["src"] for m in morphs}
    tgt = {m["id"]: m["tgt"] for m in morphs}
    ident = _need(doc, "identity", "category")
    comp = {(g, f): gf for g, f, gf in _need(doc, "comp", "category")}
    if kind == "groupoid":
        cat = ca.FinGroupoid(objects, ids, src, tgt, ident, comp,
                             inv=doc.get("inv"))
    else:
        cat = ca.FinCategory(objects, ids, src, tgt, ident, comp)
    errs = cat.validate()
    if errs:
        raise ParseError("category axioms fail: %s" % errs[0])
    return cat


def two_group_to_doc(g):
    doc = {"format": 1, "kind": "two_group",
           "base": category_to_doc(g.base),
           "unit_object": g.unit,
           "tensor": {
               "objects": [[x, y, g.t(x, y)]
                           for x in g.base.objects for y in g.base.objects],
               "morphisms": [[f, k, g.tm(f, k)]
                             for f in g.base.morphisms
                             for k in g.base.morphisms]},
           "assoc": [[x, y, z, g.a(x, y, z)]
                     for x in g.base.objects for y in g.base.objects
                     for z in g.base.objects],
           "lunit": {x: g.l(x) for x in g.base.objects},
           "runit": {x: g.r(x) for x in g.base.objects}}
    return doc


def two_group_from_doc(doc):
    _reject_unknown(doc, {"format", "kind", "base", "unit_object", "tensor",
                          "assoc", "lunit", "runit"}, "two_group")
    if doc.get("kind") not in ("two_group", "monoidal"):
        raise ParseError("not a 2-group document")
    base = category_from_doc(_need(doc, "base", "two_group"))
    tensor = _need(doc, "tensor", "two_group")
    tobj = {(x, y): t for x, y, t in tensor["objects"]}
    tmor = {(f, k): t for f, k, t in tensor["morphisms"]}
    assoc = {(x, y, z): m for x, y, z, m in _need(doc, "assoc", "two_group")}
    mon = ca.MonoidalStructure(base, tobj, tmor,
                               _need(doc, "unit_object", "two_group"),
                               assoc, _need(doc, "lunit", "two_group"),
                               _need(doc, "runit", "two_group"))
    if doc.get("kind") == "monoidal":
        errs = mon.validate()
        if errs:
            raise ParseError("monoidal axioms fail: %s" % errs[0])
        return mon
    try:
        return ca.certify_two_group(mon)
    except ca.CatError as exc:
        raise ParseError("2-group certification fails: %s" % exc)


# -- bisimplicial (rectangular truncations only) ------------------------------


def bisimplicial_to_doc(bx):
    pmax = bx.P
    qmax = bx.Q
    region = nv.rectangle(pmax, qmax)
    if region - set(bx.region):
        raise ParseError("only rectangular truncations serialize")
    doc = {"format": 1, "kind": "bisimplicial", "P": pmax, "Q": qmax,
           "levels": [[list(bx.level(p, q)) for q in range(qmax + 1)]
                      for p in range(pmax + 1)]}
    hface, vface, hdegen, vdegen = {}, {}, {}, {}
    for (p, q, i), m in sorted(bx.hface.items()):
        hface["%d.%d.%d" % (p, q, i)] = [m[s] for s in bx.level(p, q)]
    for (p, q, i), m in sorted(bx.vface.items()):
        vface["%d.%d.%d" % (p, q, i)] = [m[s] for s in bx.level(p, q)]
    for (p, q, j), m in sorted(bx.hdegen.items()):
        hdegen["%d.%d.%d" % (p, q, j)] = [m[s] for s in bx.level(p, q)]
    for (p, q, j), m in sorted(bx.vdegen.items()):
        vdegen["%d.%d.%d" % (p, q, j)] = [m[s] for s in bx.level(p, q)]
    doc.update({"hface": hface, "vface": vface,
                "hdegen": hdegen, "vdegen": vdegen})
    return doc


def bisimplicial_from_doc(doc):
    _reject_unknown(doc, {"format", "kind", "P", "Q", "levels", "hface",
                          "vface", "hdegen", "vdegen"}, "bisimplicial")
    if doc.get("kind") != "bisimplicial":
        raise ParseError("not a bisimplicial document")
    pmax, qmax = _need(doc, "P", "bi"), _need(doc, "Q", "bi")
    rows = _need(doc, "levels", "bi")
    region = nv.rectangle(pmax, qmax)
    levels = {(p, q): rows[p][q] for (p, q) in region}

    def read(table, where):
        out = {}
        for key, arr in table.items():
            p, q, i = (int(t) for t in key.split("."))
            if len(arr) != len(levels[(p, q)]):
                raise ParseError("%s %s misaligned" % (where, key))
            out[(p, q, i)] = dict(zip(levels[(p, q)], arr))
        return out

    return nv.BisimplicialTrunc(region, levels,
                                read(_need(doc, "hface", "bi"), "hface"),
                                read(_need(doc, "vface", "bi"), "vface"),
                                read(_need(doc, "hdegen", "bi"), "hdegen"),
                                read(_need(doc, "vdegen", "bi"), "vdegen"))


# -- front door ----------------------------------------------------------------


_KINDS = {
    "sset": sset_from_doc,
    "group": group_from_doc,
    "category": category_from_doc,
    "groupoid": category_from_doc,
    "two_group": two_group_from_doc,
    "monoidal": two_group_from_doc,
    "bisimplicial": bisimplicial_from_doc,
}


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("format") != 1:
        raise ParseError("unsupported format (want 1)")
    kind = doc.get("kind")
    if kind not in _KINDS:
        raise ParseError("unknown kind %r" % kind)
    return _KINDS[kind](doc), kind


def dumps(obj):
    if isinstance(obj, sp.TruncatedSSet):
        return canonical_dumps(sset_to_doc(obj))
    if isinstance(obj, FiniteGroup):
        return canonical_dumps(group_to_doc(obj))
    if isinstance(obj, ca.TwoGroup):
        return canonical_dumps(two_group_to_doc(obj))
    if isinstance(obj, ca.FinCategory):
        return canonical_dumps(category_to_doc(obj))
    if isinstance(obj, nv.BisimplicialTrunc):
        return canonical_dumps(bisimplicial_to_doc(obj))
    raise ParseError("cannot serialize %r" % type(obj))


def roundtrip_text(text):
    """parse -> canonical serialize -> parse; returns the canonical text
    and whether re-serialization is byte-stable."""
    obj, _ = loads(text)
    out = dumps(obj)
    obj2, _ = loads(out)
    return out, dumps(obj2) == out
