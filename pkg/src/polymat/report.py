"""Structured verdict reports for a single ideal.

``report(I, checks)`` returns a JSON-ready dict; ``render_text`` prints the
same information line by line.  Check names are validated up front, so a
typo costs nothing.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Callable

from . import cm, codim1, decompose as dec, polymatroid as pm
from .errors import HypothesisError, PolymatError
from .ideal import MonomialIdeal
from .reisner import is_cm_reisner
from .verdict import Verdict

SCHEMA_VERSION = 1


class UnknownCheckError(PolymatError, ValueError):
    pass


def _polymatroidal(I, ctx):
    v = pm.is_polymatroidal(I)
    if v.witness is None:
        return v.value, None, v.reason
    u, w, i = v.witness
    return False, {"u": I.monomial_str(u), "v": I.monomial_str(w), "i": I.vars.names[i]}, v.reason


def _matroidal(I, ctx):
    if not I.is_squarefree():
        return False, None, "not squarefree"
    return _polymatroidal(I, ctx)


def _unmixed(I, ctx):
    ass = dec.associated_primes(I)
    return dec.is_unmixed(I), {"associated_primes": [str(p) for p in ass]}, None


def _equidimensional(I, ctx):
    mins = dec.minimal_primes(I)
    return dec.is_equidimensional(I), {"minimal_primes": [str(p) for p in mins]}, None


def _codim1(I, ctx):
    v = codim1.is_connected_codim_one(I)
    return v.value, (v.witness if ctx["certificate"] else None), v.reason


def _cm_shape(I, ctx):
    shape = pm.recognize_cm_shape(I)
    if shape is None:
        return False, None, None
    return True, {"kind": shape.kind, "prime": str(shape.prime), "degree": shape.degree}, None


def _cm(I, ctx):
    if pm.is_polymatroidal(I):
        shape = pm.recognize_cm_shape(I)
        return shape is not None, {"method": "shape", "shape": shape.kind if shape else None}, None
    v = is_cm_reisner(I, ctx["field"])
    witness = {"method": "reisner", **(v.witness or {})}
    return v.value, witness, v.reason


def _cm_oracle(I, ctx):
    v = is_cm_reisner(I, ctx["field"])
    return v.value, v.witness, v.reason


def _gcm(I, ctx):
    if not pm.is_polymatroidal(I):
        return _gcm_general(I, ctx["field"])
    v = cm.is_generalized_cm(I)
    if v.witness is None:
        return v.value, None, v.reason
    w = v.witness
    return False, {"prime": str(w["prime"]), "killed": [I.vars.names[i] for i in w["killed"]],
                   "localization": str(w["localization"])}, v.reason


def _gcm_general(I: MonomialIdeal, field):
    # same operational definition, with the Reisner oracle deciding each localization
    if not dec.is_equidimensional(I):
        return False, {"method": "reisner"}, "not-equidimensional"
    seen = {}
    supp = I.support()
    for k in range(1, I.n + 1):
        for killed in combinations(range(I.n), k):
            key = frozenset(killed) & supp
            if key not in seen:
                L = I.substitute_one(key)
                seen[key] = L.is_unit() or bool(is_cm_reisner(L, field))
            if not seen[key]:
                L = I.substitute_one(key)
                p = dec.MonomialPrime.killing(I.vars, killed)
                return False, {"method": "reisner", "prime": str(p),
                               "killed": [I.vars.names[i] for i in killed], "localization": str(L)}, \
                    "localization-not-cm"
    return True, {"method": "reisner"}, None


def _theorem_th(I, ctx):
    J, s = cm.canonical_split(I) if pm.is_polymatroidal(I) else (I, 0)
    try:
        r = cm.theorem_th_classify(J, s)
    except HypothesisError as exc:
        return None, None, str(exc)
    witness = {"J": str(J), "s": s, "clauses": sorted(r.clauses),
               "polymatroidal": r.polymatroidal, "gcm": r.gcm, "consistent": r.consistent}
    return bool(r.clauses), witness, None


CHECKS: dict[str, Callable] = {
    "polymatroidal": _polymatroidal,
    "matroidal": _matroidal,
    "unmixed": _unmixed,
    "equidimensional": _equidimensional,
    "codim1": _codim1,
    "cm-shape": _cm_shape,
    "cm": _cm,
    "gcm": _gcm,
    "theorem-th": _theorem_th,
    "cm-oracle": _cm_oracle,
}


def validate_checks(checks) -> list[str]:
    checks = list(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UnknownCheckError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return checks


def run_check(I: MonomialIdeal, name: str, field="Q", certificate: bool = True) -> Verdict:
    value, witness, reason = CHECKS[validate_checks([name])[0]](I, {"field": field, "certificate": certificate})
    return Verdict(value, witness, reason)


def report(I: MonomialIdeal, checks=None, field="Q", certificate: bool = True, source: str | None = None) -> dict:
    """Run the named checks (all of them by default) and collect a JSON document."""
    checks = validate_checks(CHECKS if checks is None else checks)
    I.require_proper("report")
    ctx = {"field": field, "certificate": certificate}
    start = time.perf_counter()
    results = {}
    for name in checks:
        t0 = time.perf_counter()
        value, witness, reason = CHECKS[name](I, ctx)
        entry = {"verdict": value, "seconds": round(time.perf_counter() - t0, 6)}
        if witness is not None:
            entry["witness"] = witness
        if reason is not None:
            entry["reason"] = reason
        results[name] = entry
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"vars": list(I.vars.names), "text": source if source is not None else I.to_text()},
        "normalized_generators": [I.monomial_str(g) for g in I.gens],
        "field": str(field),
        "checks": results,
        "timings": {"total_seconds": round(time.perf_counter() - start, 6)},
    }


def render_text(doc: dict) -> str:
    lines = [f"vars {','.join(doc['input']['vars'])}",
             f"generators ({', '.join(doc['normalized_generators'])})"]
    for name, entry in doc["checks"].items():
        verdict = {True: "yes", False: "no", None: "n/a"}[entry["verdict"]]
        line = f"{name}: {verdict}"
        if "reason" in entry:
            line += f" ({entry['reason']})"
        lines.append(line)
        for key, val in (entry.get("witness") or {}).items():
            lines.append(f"  {key}: {val}")
    lines.append(f"total {doc['timings']['total_seconds']:.3f}s")
    return "\n".join(lines)


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "polymat check report",
    "type": "object",
    "required": ["schema_version", "input", "normalized_generators", "checks", "timings"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "input": {
            "type": "object",
            "required": ["vars", "text"],
            "properties": {"vars": {"type": "array", "items": {"type": "string"}}, "text": {"type": "string"}},
        },
        "normalized_generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "field": {"type": "string"},
        "checks": {
            "type": "object",
            "propertyNames": {"enum": list(CHECKS)},
            "additionalProperties": {
                "type": "object",
                "required": ["verdict", "seconds"],
                "properties": {
                    "verdict": {"type": ["boolean", "null"]},
                    "seconds": {"type": "number", "minimum": 0},
                    "witness": {"type": "object"},
                    "reason": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "timings": {
            "type": "object",
            "required": ["total_seconds"],
            "properties": {"total_seconds": {"type": "number", "minimum": 0}},
        },
    },
}
