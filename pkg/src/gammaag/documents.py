"""JSON documents for groupoids, IFS and verdicts, plus the bundled fixtures.

Documents name elements 1-based, like printed Cayley tables.  Grades are
read from ``"p/q"`` strings or finite decimals and always written as reduced
``"p/q"``.  Verdict documents have a fixed key order so they can be compared
against golden files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .carrier import (
    GammaGroupoid,
    IntraRegularityReport,
    LawReport,
    derive_power_gamma,
    validate_groupoid,
)
from .crisp import CrispSubset, CrispVerdict, DuoVerdict
from .errors import GammaAGError
from .ideals import IfsVerdict
from .ifs import IFS, format_grade, make_ifs
from .lab import HuntReport, TheoremVerdict

GROUPOID_FORMAT = "gammaag.groupoid"
IFS_FORMAT = "gammaag.ifs"
VERDICT_FORMAT = "gammaag.verdict"


def _parse_error(message, where=None):
    return GammaAGError("PARSE_ERROR", message, where)


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _parse_error(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}", (exc.lineno, exc.colno)) from None


def _field(doc, key, kind, source):
    if not isinstance(doc, dict) or key not in doc:
        raise _parse_error(f"{source}: missing field '{key}'", key)
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise _parse_error(f"{source}: field '{key}' must be {kind.__name__}", key)
    return value


def _read(source) -> tuple[str, str]:
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        path = Path(source)
        try:
            return path.read_text(encoding="utf-8"), str(path)
        except OSError as exc:
            raise _parse_error(f"cannot read {path}: {exc.strerror}", str(path)) from None
    return source, "<text>"


# --------------------------------------------------------------------------
# groupoids


def parse_groupoid(doc: dict, source: str = "<document>") -> GammaGroupoid:
    n = _field(doc, "n", int, source)
    g = _field(doc, "gamma", int, source)
    tables = _field(doc, "tables", list, source)
    if len(tables) != g:
        raise _parse_error(f"{source}: 'tables' holds {len(tables)} tables, 'gamma' says {g}", "tables")
    raw = []
    for t, table in enumerate(tables):
        if not isinstance(table, list) or len(table) != n:
            raise _parse_error(f"{source}: tables[{t}] must have {n} rows", f"tables[{t}]")
        rows = []
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                length = len(row) if isinstance(row, list) else "no"
                raise _parse_error(
                    f"{source}: tables[{t}][{r}] (row {r + 1}) has length {length}, expected {n}", f"tables[{t}][{r}]"
                )
            for c, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise _parse_error(f"{source}: tables[{t}][{r}][{c}] is not an integer", f"tables[{t}][{r}][{c}]")
            rows.append([v - 1 for v in row])
        raw.append(rows)
    labels = doc.get("labels")
    gamma_labels = doc.get("gamma_labels")
    return validate_groupoid(n, g, raw, labels, gamma_labels)


def groupoid_document(G: GammaGroupoid, name: str | None = None, description: str | None = None) -> dict:
    doc = {"format": GROUPOID_FORMAT}
    if name is not None:
        doc["name"] = name
    if description is not None:
        doc["description"] = description
    doc.update({"n": G.n, "gamma": G.g, "gamma_labels": list(G.gamma_labels)})
    if G.labels != tuple(str(i + 1) for i in range(G.n)):
        doc["labels"] = list(G.labels)
    doc["tables"] = G.to_lists(one_based=True)
    return doc


def load_groupoid(source) -> GammaGroupoid:
    """Groupoid from a file path, JSON text, or bundled fixture name."""
    if isinstance(source, str) and source in FIXTURES and FIXTURES[source][0] == "groupoid":
        return load_fixture(source)
    text, where = _read(source)
    return parse_groupoid(_load_json(text, where), where)


def save_groupoid(G: GammaGroupoid, path, **meta) -> None:
    Path(path).write_text(dumps(groupoid_document(G, **meta)), encoding="utf-8")


# --------------------------------------------------------------------------
# IFS


def parse_ifs(doc: dict, source: str = "<document>") -> IFS:
    mu = _field(doc, "mu", list, source)
    nu = _field(doc, "nu", list, source)
    n = doc.get("n", len(mu))
    for key, grades in (("mu", mu), ("nu", nu)):
        for i, v in enumerate(grades):
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise _parse_error(f"{source}: {key}[{i}] must be a grade string like \"3/10\" or \"0.3\"", f"{key}[{i}]")
    try:
        return make_ifs(n, mu, nu, strict=not doc.get("unchecked", False))
    except GammaAGError as exc:
        if exc.code == "BAD_GRADE":
            raise _parse_error(f"{source}: {exc.message}", exc.where) from None
        raise


def ifs_document(A: IFS, name: str | None = None, description: str | None = None) -> dict:
    doc = {"format": IFS_FORMAT}
    if name is not None:
        doc["name"] = name
    if description is not None:
        doc["description"] = description
    doc.update({"n": A.n, "mu": [format_grade(g) for g in A.mu], "nu": [format_grade(g) for g in A.nu]})
    if not A.is_valid():
        doc["unchecked"] = True
    return doc


def load_ifs(source) -> IFS:
    if isinstance(source, str) and source in FIXTURES and FIXTURES[source][0] == "ifs":
        return load_fixture(source)
    text, where = _read(source)
    return parse_ifs(_load_json(text, where), where)


def save_ifs(A: IFS, path, **meta) -> None:
    Path(path).write_text(dumps(ifs_document(A, **meta)), encoding="utf-8")


# --------------------------------------------------------------------------
# serialization


def _pretty(value, indent: int) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}  {json.dumps(k, ensure_ascii=False)}: {_pretty(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
        items = [f"{pad}  {_pretty(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(doc: dict) -> str:
    """Indented JSON with flat lists (table rows, grade lists) on one line."""
    return _pretty(doc, 0) + "\n"


# --------------------------------------------------------------------------
# verdict documents


def _elements(xs):
    return [int(x) + 1 for x in xs]


def _value(v):
    if isinstance(v, Fraction):
        return format_grade(v)
    if isinstance(v, CrispSubset):
        return _elements(v.elements())
    if isinstance(v, tuple):
        return [_value(x) for x in v]
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    return str(v)


def verdict_document(v) -> dict:
    """Machine-readable form of any verdict or report; elements are 1-based."""
    doc = {"format": VERDICT_FORMAT}
    if isinstance(v, LawReport):
        doc.update({"check": "law", "id": v.law.value, "holds": v.holds, "witness": None})
        if v.witness is not None:
            w = v.witness
            doc["witness"] = {
                "elements": _elements(w.elements),
                "gammas": _elements(w.gammas),
                "lhs": w.lhs + 1,
                "rhs": None if w.rhs is None else w.rhs + 1,
            }
    elif isinstance(v, IntraRegularityReport):
        doc.update({
            "check": "intra-regular",
            "id": "intra-regular",
            "holds": v.regular,
            "witnesses": {
                str(a + 1): {"x": w.x + 1, "y": w.y + 1, "gammas": _elements((w.alpha, w.beta, w.gamma))}
                for a, w in sorted(v.witnesses.items())
            },
            "failures": _elements(v.failures),
        })
    elif isinstance(v, CrispVerdict):
        doc.update({"check": "crisp", "id": v.kind.value, "holds": v.holds, "nonempty": v.nonempty, "witness": None})
        if v.witness is not None:
            w = v.witness
            doc["witness"] = {"product": w.product + 1, "elements": _elements(w.elements), "gammas": _elements(w.gammas)}
    elif isinstance(v, DuoVerdict):
        doc.update({"check": "duo", "id": v.side, "holds": v.holds, "ideals": v.ideals,
                    "witness": None if v.witness is None else _elements(v.witness.elements())})
    elif isinstance(v, IfsVerdict):
        doc.update({"check": "ifs", "id": v.kind.value, "holds": v.holds, "witness": None})
        if v.witness is not None:
            w = v.witness
            doc["witness"] = {
                "component": w.component,
                "elements": _elements(w.elements),
                "gammas": _elements(w.gammas),
                "at": w.at + 1,
                "grades": [format_grade(w.value), format_grade(w.bound)],
            }
            if w.extra:
                doc["witness"]["compositions"] = [format_grade(g) for g in w.extra]
    elif isinstance(v, TheoremVerdict):
        doc.update({
            "check": "theorem",
            "id": v.id.value,
            "relaxed": v.relaxed,
            "hypotheses": dict(v.hypotheses),
            "hypotheses_hold": v.hypotheses_hold,
            "holds": v.conclusion_holds,
            "parts": dict(v.parts),
            "observed": {k: _value(x) for k, x in v.observed.items()},
            "witness": None,
        })
        if v.witness is not None:
            w = v.witness
            doc["witness"] = {
                "part": w.part,
                "direction": w.direction,
                "element": None if w.element is None else w.element + 1,
                "values": _value(w.values),
            }
    elif isinstance(v, HuntReport):
        c = v.config
        doc.update({
            "check": "hunt",
            "id": v.theorem.value,
            "holds": not v.found,
            "config": {
                "sizes": list(c.sizes), "gammas": list(c.gammas), "denominator": c.denominator,
                "budget": c.budget, "seed": c.seed, "relax_hypotheses": c.relax_hypotheses,
            },
            "groupoids": v.groupoid_count,
            "tried": v.tried,
            "qualified": v.qualified,
            "sample_index": v.sample_index,
            "counterexample": None,
        })
        if v.found:
            b = v.counterexample
            doc["counterexample"] = {
                "groupoid": groupoid_document(b.G),
                "ifs": [ifs_document(A) for A in b.ifs],
                "verdict": verdict_document(v.verdict),
            }
    else:
        raise TypeError(f"no verdict document for {type(v).__name__}")
    return doc


# --------------------------------------------------------------------------
# fixtures

FIXTURES = {
    "F1": ("groupoid", "F1.json"),
    "F1-gamma": ("groupoid", None),
    "F2": ("groupoid", "F2.json"),
    "F3": ("groupoid", "F3.json"),
    "A-ex": ("ifs", "A-ex.json"),
    "A-cut": ("ifs", "A-cut.json"),
    "A-fgh": ("ifs", "A-fgh.json"),
    "B-fgh": ("ifs", "B-fgh.json"),
}


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise GammaAGError("UNKNOWN_FIXTURE", f"no fixture named {name!r}; have {', '.join(FIXTURES)}")
    kind, filename = FIXTURES[name]
    if filename is None:
        G = derive_power_gamma(load_fixture("F1").tables[0])
        G = GammaGroupoid(G.tables, gamma_labels=("α", "β"))
        return dumps(groupoid_document(G, "F1-gamma", "F1 with a α b = (ab)^2 and a β b = a^3 b^2"))
    return resources.files("gammaag").joinpath("data").joinpath(filename).read_text(encoding="utf-8")


def load_fixture(name: str):
    kind = FIXTURES.get(name, (None,))[0]
    text = fixture_text(name)
    doc = _load_json(text, name)
    return parse_groupoid(doc, name) if kind == "groupoid" else parse_ifs(doc, name)
