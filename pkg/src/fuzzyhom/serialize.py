"""Reading and writing relation, mapping and system documents.

Two formats are supported.  The JSON document::

    {"universe": ["x1", "x2"],
     "relations": {"R": [["x1", "x2", "0.8"]]}}

and a line-oriented text format using Zadeh notation::

    universe: x1 x2
    R = 0.8/(x1,x2)

Grades are always decimal strings so that values survive exactly.
Unlisted pairs have grade 0.  Mapping documents are JSON only::

    {"domain": [...], "codomain": [...], "map": [["x1", "y1"], ...]}
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .core import FuzzyRelation, FuzzySet, Universe
from .errors import DocumentError, FuzzyError, GradeError
from .grades import DEFAULT_DIGITS, parse_units
from .mappings import UniverseMapping

_BAD_TEXT_LABEL = re.compile(r"[\s,()+/=:#]")
_REL_TERM = re.compile(r"^\s*([^/\s]+)\s*/\s*\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)\s*$")
_SET_TERM = re.compile(r"^\s*([^/\s]+)\s*/\s*([^,()\s+]+)\s*$")
EMPTY = "∅"


# --------------------------------------------------------------------------
# JSON relation documents


def relations_to_dict(relations: dict[str, FuzzyRelation]) -> dict:
    if not relations:
        raise FuzzyError("a relation document needs at least one relation")
    universe = next(iter(relations.values())).universe
    out = {"universe": list(universe), "relations": {}}
    for name, rel in relations.items():
        if rel.universe != universe:
            raise FuzzyError("all relations in a document must share one universe")
        out["relations"][name] = [[x, y, str(g)] for (x, y), g in rel.terms()]
    return out


def _fmt(value, indent):
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_fmt(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
        items = [pad + _fmt(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False)


def dump_json(doc: dict) -> str:
    """Deterministic JSON with scalar lists (labels, triples) kept on one line."""
    return _fmt(doc, 0) + "\n"


def emit_relations(relations: dict[str, FuzzyRelation]) -> str:
    return dump_json(relations_to_dict(relations))


def _load_json(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", source=source, line=exc.lineno) from None


def _labels(value, field, source):
    if not isinstance(value, list) or not value:
        raise DocumentError("expected a nonempty list of labels", source=source, field=field)
    for k, lab in enumerate(value):
        if not isinstance(lab, str) or not lab:
            raise DocumentError("labels must be nonempty strings", source=source, field=f"{field}[{k}]")
    if len(set(value)) != len(value):
        dup = next(lab for lab in value if value.count(lab) > 1)
        raise DocumentError(f"duplicate label {dup!r}", source=source, field=field)
    return Universe(value)


def _grade(value, digits, field, source):
    try:
        return parse_units(value, digits)
    except GradeError as exc:
        raise DocumentError(str(exc), source=source, field=field) from None


def relations_from_dict(doc, source=None, digits=None) -> tuple[Universe, dict[str, FuzzyRelation]]:
    digits = DEFAULT_DIGITS if digits is None else digits
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", source=source)
    for key in ("universe", "relations"):
        if key not in doc:
            raise DocumentError("missing required field", source=source, field=key)
    universe = _labels(doc["universe"], "universe", source)
    rels = doc["relations"]
    if not isinstance(rels, dict) or not rels:
        raise DocumentError("expected a nonempty object of relations", source=source, field="relations")
    n = len(universe)
    out = {}
    for name, triples in rels.items():
        base = f"relations.{name}"
        if not isinstance(triples, list):
            raise DocumentError("expected a list of [from, to, grade] triples", source=source, field=base)
        units = np.zeros((n, n), dtype=np.int64)
        seen = set()
        for k, t in enumerate(triples):
            field = f"{base}[{k}]"
            if not isinstance(t, list) or len(t) != 3:
                raise DocumentError("expected [from, to, grade]", source=source, field=field)
            x, y, g = t
            for pos, lab in ((0, x), (1, y)):
                if not isinstance(lab, str) or lab not in universe:
                    raise DocumentError(f"label {lab!r} is not in the universe", source=source, field=f"{field}[{pos}]")
            if (x, y) in seen:
                raise DocumentError(f"pair ({x},{y}) listed twice", source=source, field=field)
            seen.add((x, y))
            units[universe.index(x), universe.index(y)] = _grade(g, digits, f"{field}[2]", source)
        out[name] = FuzzyRelation(universe, units, digits)
    return universe, out


# --------------------------------------------------------------------------
# Zadeh text format


def _check_text_label(label):
    if _BAD_TEXT_LABEL.search(label) or label == EMPTY:
        raise FuzzyError(f"label {label!r} cannot be written in Zadeh notation")
    return label


def relation_to_zadeh(rel: FuzzyRelation) -> str:
    """``g/(x,y) + ...`` over nonzero entries in row-major universe order."""
    for lab in rel.universe:
        _check_text_label(lab)
    return str(rel)


def set_to_zadeh(s: FuzzySet) -> str:
    for lab in s.universe:
        _check_text_label(lab)
    return str(s)


def emit_zadeh(relations: dict[str, FuzzyRelation]) -> str:
    universe = next(iter(relations.values())).universe
    lines = ["universe: " + " ".join(_check_text_label(x) for x in universe)]
    for name, rel in relations.items():
        if rel.universe != universe:
            raise FuzzyError("all relations in a document must share one universe")
        _check_text_label(name)
        lines.append(f"{name} = {relation_to_zadeh(rel)}")
    return "\n".join(lines) + "\n"


def _split_terms(expr):
    expr = expr.strip()
    if expr in ("", EMPTY, "0"):
        return []
    return expr.split("+")


def parse_relation_zadeh(expr: str, universe: Universe, digits=None, source=None, line=None) -> FuzzyRelation:
    digits = DEFAULT_DIGITS if digits is None else digits
    n = len(universe)
    units = np.zeros((n, n), dtype=np.int64)
    seen = set()
    for k, term in enumerate(_split_terms(expr)):
        m = _REL_TERM.match(term)
        if not m:
            raise DocumentError(f"cannot parse term {term.strip()!r}; expected g/(x,y)", source=source, line=line, field=f"term {k + 1}")
        g, x, y = m.groups()
        for lab in (x, y):
            if lab not in universe:
                raise DocumentError(f"label {lab!r} is not in the universe", source=source, line=line, field=f"term {k + 1}")
        if (x, y) in seen:
            raise DocumentError(f"pair ({x},{y}) listed twice", source=source, line=line, field=f"term {k + 1}")
        seen.add((x, y))
        try:
            units[universe.index(x), universe.index(y)] = parse_units(g, digits)
        except GradeError as exc:
            raise DocumentError(str(exc), source=source, line=line, field=f"term {k + 1}") from None
    return FuzzyRelation(universe, units, digits)


def parse_set_zadeh(expr: str, universe: Universe, digits=None) -> FuzzySet:
    digits = DEFAULT_DIGITS if digits is None else digits
    units = np.zeros(len(universe), dtype=np.int64)
    for k, term in enumerate(_split_terms(expr)):
        m = _SET_TERM.match(term)
        if not m:
            raise DocumentError(f"cannot parse term {term.strip()!r}; expected g/x", field=f"term {k + 1}")
        g, x = m.groups()
        if x not in universe:
            raise DocumentError(f"label {x!r} is not in the universe", field=f"term {k + 1}")
        try:
            units[universe.index(x)] = parse_units(g, digits)
        except GradeError as exc:
            raise DocumentError(str(exc), field=f"term {k + 1}") from None
    return FuzzySet(universe, units, digits)


def parse_zadeh_document(text: str, source=None, digits=None) -> tuple[Universe, dict[str, FuzzyRelation]]:
    universe = None
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("universe:"):
            if universe is not None:
                raise DocumentError("universe declared twice", source=source, line=lineno)
            labels = line[len("universe:"):].split()
            if not labels:
                raise DocumentError("universe is empty", source=source, line=lineno, field="universe")
            if len(set(labels)) != len(labels):
                raise DocumentError("duplicate label in universe", source=source, line=lineno, field="universe")
            universe = Universe(labels)
            continue
        if "=" not in line:
            raise DocumentError("expected 'universe: ...' or 'NAME = terms'", source=source, line=lineno)
        if universe is None:
            raise DocumentError("relation given before the universe line", source=source, line=lineno)
        name, expr = (p.strip() for p in line.split("=", 1))
        if not name or _BAD_TEXT_LABEL.search(name):
            raise DocumentError(f"invalid relation name {name!r}", source=source, line=lineno)
        if name in out:
            raise DocumentError(f"relation {name!r} defined twice", source=source, line=lineno)
        out[name] = parse_relation_zadeh(expr, universe, digits, source, lineno)
    if universe is None:
        raise DocumentError("missing 'universe:' line", source=source)
    if not out:
        raise DocumentError("no relations defined", source=source)
    return universe, out


# --------------------------------------------------------------------------
# dispatch on content


def parse_relations(text: str, source=None, digits=None) -> tuple[Universe, dict[str, FuzzyRelation]]:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return relations_from_dict(_load_json(text, source), source, digits)
    return parse_zadeh_document(text, source, digits)


def read_relations(path, digits=None):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read file: {exc.strerror}", source=str(path)) from None
    return parse_relations(text, str(path), digits)


# --------------------------------------------------------------------------
# mapping documents


def mapping_to_dict(f: UniverseMapping) -> dict:
    return {
        "domain": list(f.domain),
        "codomain": list(f.codomain),
        "map": [[x, y] for x, y in f.as_dict().items()],
    }


def emit_mapping(f: UniverseMapping) -> str:
    return dump_json(mapping_to_dict(f))


def mapping_from_dict(doc, source=None) -> UniverseMapping:
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", source=source)
    if "domain" not in doc and isinstance(doc.get("projection"), dict):
        doc = doc["projection"]  # output of `compress -o`
    for key in ("domain", "codomain", "map"):
        if key not in doc:
            raise DocumentError("missing required field", source=source, field=key)
    domain = _labels(doc["domain"], "domain", source)
    codomain = _labels(doc["codomain"], "codomain", source)
    pairs = doc["map"]
    if not isinstance(pairs, list):
        raise DocumentError("expected a list of [domain, codomain] pairs", source=source, field="map")
    table = {}
    for k, p in enumerate(pairs):
        field = f"map[{k}]"
        if not isinstance(p, list) or len(p) != 2:
            raise DocumentError("expected [domain-label, codomain-label]", source=source, field=field)
        x, y = p
        if not isinstance(x, str) or x not in domain:
            raise DocumentError(f"label {x!r} is not in the domain", source=source, field=f"{field}[0]")
        if not isinstance(y, str) or y not in codomain:
            raise DocumentError(f"label {y!r} is not in the codomain", source=source, field=f"{field}[1]")
        if x in table:
            raise DocumentError(f"{x!r} is mapped twice", source=source, field=field)
        table[x] = y
    missing = [x for x in domain if x not in table]
    if missing:
        raise DocumentError(f"mapping is not total; no image for {', '.join(missing)}", source=source, field="map")
    return UniverseMapping.from_dict(domain, codomain, table)


def parse_mapping(text: str, source=None) -> UniverseMapping:
    return mapping_from_dict(_load_json(text, source), source)


def read_mapping(path) -> UniverseMapping:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read file: {exc.strerror}", source=str(path)) from None
    return parse_mapping(text, str(path))
