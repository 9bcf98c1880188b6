"""JSON presentations in, JSON result documents out.

Input coefficients are exact rational strings ("a/b" or "a"); anything
else, floats in particular, is rejected before it can reach the number
tower.  Words are lists of generator names, never concatenated strings,
so multi-character names stay unambiguous.  Output documents contain only
JSON-native values and are rendered with sorted keys, making equal runs
byte-identical.
"""

from __future__ import annotations

import json
import re
from typing import Dict, List, Optional, Tuple

from .field import Field, prime_field, rationals
from .freealg import (AlgebraPresentation, ModulePresentation, NcModElem,
                      NcPoly, validate_presentation)
from .resolver import Resolution, betti_summary

COEFF_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
RESERVED_NAME = "t"


class InputError(ValueError):
    """Malformed or invalid input document."""


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def parse_coeff(field: Field, text) -> object:
    _expect(isinstance(text, str),
            f"coefficient must be a string, got {text!r}")
    _expect(COEFF_RE.match(text) is not None,
            f"coefficient {text!r} is not an exact integer or a/b ratio")
    if "/" in text:
        num, den = text.split("/")
        num, den = int(num), int(den)
    else:
        num, den = int(text), 1
    if field.char:
        _expect(den % field.char != 0,
                f"coefficient {text!r} has denominator divisible by "
                f"{field.char}")
    return field.from_ratio(num, den)


def parse_field(obj) -> Field:
    if obj == "Q":
        return rationals()
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        p = obj["Fp"]
        _expect(isinstance(p, int) and p >= 2, f"bad modulus {p!r}")
        try:
            return prime_field(p)
        except ValueError as e:
            raise InputError(str(e))
    raise InputError(f'field must be "Q" or {{"Fp": p}}, got {obj!r}')


def _parse_word(names_index: Dict[str, int], obj, where: str) -> Tuple[int, ...]:
    _expect(isinstance(obj, list), f"{where}: word must be a list of names")
    letters = []
    for name in obj:
        _expect(name in names_index, f"{where}: unknown generator {name!r}")
        letters.append(names_index[name])
    return tuple(letters)


def _parse_poly(field: Field, names_index: Dict[str, int], obj,
                where: str) -> NcPoly:
    _expect(isinstance(obj, list), f"{where}: polynomial must be a term list")
    poly: NcPoly = {}
    for k, term in enumerate(obj):
        slot = f"{where}, term {k + 1}"
        _expect(isinstance(term, dict) and set(term) == {"coeff", "word"},
                f"{slot}: expected keys coeff and word")
        c = parse_coeff(field, term["coeff"])
        w = _parse_word(names_index, term["word"], slot)
        s = field.add(poly.get(w, field.zero), c)
        if s == field.zero:
            poly.pop(w, None)
        else:
            poly[w] = s
    return poly


def _parse_module_elem(field: Field, names_index: Dict[str, int], rank: int,
                       obj, where: str) -> NcModElem:
    _expect(isinstance(obj, list), f"{where}: generator must be a term list")
    elem: NcModElem = {}
    for k, term in enumerate(obj):
        slot = f"{where}, term {k + 1}"
        _expect(isinstance(term, dict)
                and set(term) == {"coeff", "component", "word"},
                f"{slot}: expected keys coeff, component and word")
        comp = term["component"]
        _expect(isinstance(comp, int) and 0 <= comp < rank,
                f"{slot}: component {comp!r} outside 0..{rank - 1}")
        c = parse_coeff(field, term["coeff"])
        w = _parse_word(names_index, term["word"], slot)
        s = field.add(elem.get((comp, w), field.zero), c)
        if s == field.zero:
            elem.pop((comp, w), None)
        else:
            elem[(comp, w)] = s
    return elem


def module_from_document(doc) -> ModulePresentation:
    _expect(isinstance(doc, dict), "top level must be an object")
    extra = set(doc) - {"field", "generators", "relations", "module"}
    _expect(not extra, f"unknown top-level keys {sorted(extra)}")
    for key in ("field", "generators", "relations", "module"):
        _expect(key in doc, f"missing top-level key {key!r}")

    field = parse_field(doc["field"])
    names = doc["generators"]
    _expect(isinstance(names, list) and names, "generators must be nonempty")
    for name in names:
        _expect(isinstance(name, str) and name, f"bad generator name {name!r}")
        _expect(name != RESERVED_NAME,
                f"generator name {RESERVED_NAME!r} is reserved")
    _expect(len(set(names)) == len(names), "generator names must be unique")
    names_index = {name: i for i, name in enumerate(names)}

    relations = []
    for k, rel in enumerate(doc["relations"]):
        poly = _parse_poly(field, names_index, rel, f"relation {k + 1}")
        _expect(bool(poly), f"relation {k + 1} is zero")
        relations.append(poly)
    alg = AlgebraPresentation(field, tuple(names), relations)

    mod = doc["module"]
    _expect(isinstance(mod, dict) and set(mod) == {"shifts", "generators"},
            "module must have exactly the keys shifts and generators")
    shifts = mod["shifts"]
    _expect(isinstance(shifts, list) and shifts
            and all(isinstance(s, int) for s in shifts),
            "module shifts must be a nonempty list of integers")
    gens = []
    for k, g in enumerate(mod["generators"]):
        elem = _parse_module_elem(field, names_index, len(shifts), g,
                                  f"module generator {k + 1}")
        _expect(bool(elem), f"module generator {k + 1} is zero")
        gens.append(elem)
    return ModulePresentation(alg, tuple(shifts), gens)


def parse_input(text: str, validate: bool = True) -> ModulePresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {e}")
    module = module_from_document(doc)
    if validate:
        problems = validate_presentation(module)
        if problems:
            raise InputError("; ".join(problems))
    return module


# --- output documents -------------------------------------------------------

def field_document(field: Field):
    return "Q" if field.char == 0 else {"Fp": field.char}


def poly_terms(alg: AlgebraPresentation, poly: NcPoly) -> List[dict]:
    out = []
    for w in sorted(poly):
        out.append({"coeff": alg.field.to_str(poly[w]),
                    "word": [alg.names[a] for a in w]})
    return out


def elem_terms(alg: AlgebraPresentation, elem: NcModElem) -> List[dict]:
    out = []
    for comp, w in sorted(elem):
        out.append({"coeff": alg.field.to_str(elem[(comp, w)]),
                    "component": comp,
                    "word": [alg.names[a] for a in w]})
    return out


def resolution_document(res: Resolution,
                        oracle: Optional[dict] = None,
                        timings: Optional[dict] = None) -> dict:
    alg = res.module.algebra
    summary = betti_summary(res.table)
    betti = [{"homological": i, "slanted": j, "value": v}
             for (i, j), v in sorted(res.table.entries.items()) if v]
    steps = []
    for step in res.steps:
        steps.append({
            "index": step.index,
            "ambient_shifts": list(step.ambient_shifts),
            "window": step.window,
            "offset": step.offset,
            "homogenized": step.homogenized,
            "shifts": list(step.degrees),
            "generators": [elem_terms(alg, g) for g in step.generators],
        })
    doc = {
        "field": field_document(alg.field),
        "generators": list(alg.names),
        "module_shifts": list(res.module.shifts),
        "minimal_input": [elem_terms(alg, g) for g in res.minimal_input],
        "steps": steps,
        "betti": betti,
        "regularity": summary["regularity"],
        "global_dimension": summary["global_dimension"],
        "status": res.status,
        "windows": list(res.windows),
        "window_policy": res.window_policy,
        "oracle": oracle,
        "timings": timings,
    }
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
