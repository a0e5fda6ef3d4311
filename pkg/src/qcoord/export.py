"""Deterministic JSON export of the catalog, verification reports and the poset."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Union

from .catalog import Binomial, Catalog, CatalogEntry, Rewrite, SymmetryTableEntry, validate
from .hopf import parse_composite
from .ideals import Poset, all_w, parse_w, w_key
from .notation import factor_spec, parse_monomial
from .qmatrix import MinorSpec
from .suites import VerificationReport

SCHEMA_VERSION = 1
DQ = MinorSpec((1, 2, 3), (1, 2, 3))


def _factor_json(name: str, power: int = 1) -> Dict[str, object]:
    spec = factor_spec(name)
    if spec == "Dq":
        spec = DQ
    out = spec.to_json()
    if power != 1:
        out["power"] = power
    return out


def product_json(text: str) -> List[Dict[str, object]]:
    """A product as a list of minors with optional powers; '1' is the empty list."""
    return [_factor_json(name, e) for name, e in parse_monomial(text) if name != "1"]


def product_text(factors: List[Dict[str, object]]) -> str:
    if not factors:
        return "1"
    parts = []
    for f in factors:
        spec = MinorSpec.from_json(f)
        name = "Dq" if spec.size == 3 else str(spec)
        p = f.get("power", 1)
        parts.append(name if p == 1 else f"{name}^{p}")
    return "*".join(parts)


def _binomial_json(b: Binomial) -> Dict[str, object]:
    return {
        "e": product_json(b.e),
        "parameter": b.parameter,
        "f": product_json(b.f),
        "text": b.render(),
        "element": b.element().to_json(),
    }


def _binomial_from(d) -> Binomial:
    return Binomial(product_text(d["e"]), d["parameter"], product_text(d["f"]))


def entry_json(e: CatalogEntry) -> Dict[str, object]:
    return {
        "w": e.key,
        "hprime_generators": [s.to_json() for s in e.hprime_generators],
        "denominators": {
            "plus": [_factor_json(g) for g in e.denominators_plus],
            "minus": [_factor_json(g) for g in e.denominators_minus],
        },
        "torus": {
            "labels": [_factor_json(g) for g in e.torus_labels],
            "rewrites": [
                {"factor": _factor_json(r.factor), "multiplier": product_json(r.multiplier or "1"), "target": product_json(r.target), "q_power": r.q_power}
                for r in e.rewrites
            ],
            "center": [{"display": product_json(d), "vector": list(v)} for d, v in zip(e.center_displays, e.center_vectors)],
        },
        "primitive_generators": [_binomial_json(b) for b in e.primitive_generators],
        "sl3_generators": [_binomial_json(b) for b in e.sl3_generators],
        "sl3_substitution": dict(sorted(e.sl3_substitution.items())),
        "dq_decomposition": None
        if e.dq_decomposition is None
        else {"product": product_json(e.dq_decomposition[0]), "sign": e.dq_decomposition[1]},
    }


def _entry_from(d) -> CatalogEntry:
    name = lambda f: product_text([f])
    torus = d["torus"]
    return CatalogEntry(
        w=parse_w(d["w"]),
        hprime_generators=[MinorSpec.from_json(s) for s in d["hprime_generators"]],
        denominators_plus=[name(f) for f in d["denominators"]["plus"]],
        denominators_minus=[name(f) for f in d["denominators"]["minus"]],
        torus_labels=[name(f) for f in torus["labels"]],
        center_displays=[product_text(c["display"]) for c in torus["center"]],
        center_vectors=[tuple(c["vector"]) for c in torus["center"]],
        rewrites=[
            Rewrite(name(r["factor"]), "" if not r["multiplier"] else product_text(r["multiplier"]), product_text(r["target"]), r["q_power"])
            for r in torus["rewrites"]
        ],
        primitive_generators=[_binomial_from(b) for b in d["primitive_generators"]],
        sl3_generators=[_binomial_from(b) for b in d["sl3_generators"]],
        sl3_substitution=dict(d["sl3_substitution"]),
        dq_decomposition=None if d["dq_decomposition"] is None else (product_text(d["dq_decomposition"]["product"]), d["dq_decomposition"]["sign"]),
    )


def catalog_json(cat: Catalog) -> Dict[str, object]:
    return {
        "kind": "catalog",
        "schema_version": SCHEMA_VERSION,
        "entries": [entry_json(cat.entries[k]) for k in sorted(cat.entries)],
        "symmetries": [
            {"source": s.source, "target": s.target, "map": s.name, "applied": list(s.maps), "anti": s.anti} for s in cat.symmetries
        ],
        "permutation_table": [list(r) for r in cat.permutation_table],
        "fraction_identities": [
            {"label": label, "lhs": product_json(lhs), "rhs": [{"coefficient": c, "product": product_json(p)} for c, p in rhs], "ideal": key or None}
            for label, lhs, rhs, key in cat.fraction_identities
        ],
        "minor_decompositions": [
            {"minor": _factor_json(m), "product": product_json(p), "sign": sign, "y": y} for m, p, sign, y in cat.minor_decompositions
        ],
        "dq_decompositions": {
            y: {"plus": product_json(a), "minus": product_json(b)} for y, (a, b) in sorted(cat.dq_decompositions.items())
        },
    }


def catalog_from_json(data) -> Catalog:
    """Rebuild a catalog from its export and re-run the load-time validation."""
    # Restore the canonical orders that JSON key sorting discards.
    parsed = {d["w"]: _entry_from(d) for d in data["entries"]}
    entries = {k: parsed[k] for k in map(w_key, all_w()) if k in parsed}
    entries.update(parsed)
    y_order = [row[0] for row in data["permutation_table"]]
    dq = data["dq_decompositions"]
    cat = Catalog(
        entries=entries,
        symmetries=[SymmetryTableEntry(s["source"], s["target"], parse_composite(s["map"]), s["anti"]) for s in data["symmetries"]],
        permutation_table=[tuple(r) for r in data["permutation_table"]],
        fraction_identities=[
            (f["label"], product_text(f["lhs"]), [(r["coefficient"], product_text(r["product"])) for r in f["rhs"]], f["ideal"] or "")
            for f in data["fraction_identities"]
        ],
        minor_decompositions=[
            (product_text([m["minor"]]), product_text(m["product"]), m["sign"], m["y"]) for m in data["minor_decompositions"]
        ],
        dq_decompositions={y: (product_text(dq[y]["plus"]), product_text(dq[y]["minus"])) for y in sorted(dq, key=y_order.index)},
    )
    validate(cat)
    return cat


def report_json(report: VerificationReport) -> Dict[str, object]:
    out = report.to_json()
    out["kind"] = "report"
    out["schema_version"] = SCHEMA_VERSION
    return out


def poset_json(poset: Poset) -> Dict[str, object]:
    out = poset.to_json()
    out["kind"] = "poset"
    out["schema_version"] = SCHEMA_VERSION
    return out


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def export_json(what: str, obj, path: Optional[Union[str, Path]] = None) -> str:
    """Serialize a catalog, report or poset; write it to ``path`` when given."""
    builders = {"catalog": catalog_json, "report": report_json, "poset": poset_json}
    if what not in builders:
        raise ValueError(f"cannot export {what!r}")
    text = dumps(builders[what](obj))
    if path is not None:
        Path(path).write_text(text)
    return text


def load_schema(what: str) -> Dict[str, object]:
    return json.loads(resources.files("qcoord").joinpath("schemas", f"{what}.schema.json").read_text())
