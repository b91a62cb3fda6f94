"""JSON and TSV serialization for matrices, domains, representations and spectra.

Malformed documents raise ParseError, which the CLI maps to exit status 2.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .exact.ring import format_scalar, to_rational
from .hilbert import ConvexDomain, Ellipsoid, Halfspace, Polytope
from .spectral.matrix import SquareMatrix
from .structures.representation import Representation
from .structures.spectrum import SpectrumEntry, SpectrumTable


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _require(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise ParseError(f"field {key!r} must be {kind.__name__}")
    return val


def _float(v) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"expected a number, got {v!r}")
    return float(v)


# -- matrices ---------------------------------------------------------------


def _entry(v):
    # JSON floats make the matrix floating; strings and ints stay exact
    if isinstance(v, float):
        return v
    return to_rational(v)


def matrix_from_json(obj) -> SquareMatrix:
    dim = _require(obj, "dim", int)
    rows = _require(obj, "entries", list)
    if len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise ParseError(f"entries must be a {dim}x{dim} array")
    try:
        return SquareMatrix([[_entry(v) for v in r] for r in rows])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def matrix_to_json(m: SquareMatrix) -> dict:
    if m.exact:
        entries = [[format_scalar(v) for v in r] for r in m.rows]
    else:
        entries = [[float(v) for v in r] for r in m.rows]
    return {"dim": m.dim, "entries": entries}


# -- domains ----------------------------------------------------------------


def domain_from_json(obj) -> ConvexDomain:
    kind = _require(obj, "type", str)
    try:
        if kind == "ellipsoid":
            center = [_float(v) for v in _require(obj, "center", list)]
            shape = [[_float(v) for v in row] for row in _require(obj, "shape", list)]
            return Ellipsoid(np.array(center), np.array(shape))
        if kind == "polytope":
            hs = []
            for h in _require(obj, "halfspaces", list):
                normal = [_float(v) for v in _require(h, "normal", list)]
                hs.append(Halfspace(np.array(normal), _float(_require(h, "offset"))))
            point = obj.get("interior_point")
            if point is not None:
                point = np.array([_float(v) for v in point])
            return Polytope(tuple(hs), point)
    except (TypeError, IndexError) as exc:
        raise ParseError(f"malformed domain: {exc}") from exc
    raise ParseError(f"unknown domain type {kind!r}")


def domain_to_json(d: ConvexDomain) -> dict:
    if isinstance(d, Ellipsoid):
        return {"type": "ellipsoid", "center": d.center.tolist(), "shape": d.shape.tolist()}
    return {
        "type": "polytope",
        "halfspaces": [{"normal": h.normal.tolist(), "offset": h.offset} for h in d.halfspaces],
        "interior_point": d.interior_point.tolist(),
    }


# -- representations --------------------------------------------------------


def rep_from_json(obj) -> Representation:
    gens_obj = _require(obj, "generators", dict)
    dim = _require(obj, "dim", int)
    gens = {}
    for label, rows in gens_obj.items():
        if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
            raise ParseError(f"generator {label!r} must be a {dim}x{dim} array")
        gens[label] = np.array([[_float(v) if not isinstance(v, str) else float(to_rational(v)) for v in r] for r in rows])
    relators = obj.get("relators", [])
    if not isinstance(relators, list) or not all(isinstance(r, str) for r in relators):
        raise ParseError("relators must be a list of strings")
    torsion = obj.get("torsion_lcm")
    if torsion is not None and (isinstance(torsion, bool) or not isinstance(torsion, int) or torsion < 1):
        raise ParseError("torsion_lcm must be a positive integer or null")
    try:
        return Representation(gens, tuple(relators), torsion)
    except ValueError as exc:
        if isinstance(exc, ParseError) or type(exc) is not ValueError:
            raise
        raise ParseError(str(exc)) from exc


def rep_to_json(rep: Representation) -> dict:
    return {
        "dim": rep.dim,
        "generators": {k: v.tolist() for k, v in rep.generators.items()},
        "relators": list(rep.relators),
        "torsion_lcm": rep.torsion_lcm,
    }


# -- spectra ----------------------------------------------------------------

SPECTRUM_FIELDS = ("word", "length", "trace", "trace_inv")


def spectrum_to_json(table: SpectrumTable) -> list:
    return [{"word": e.word, "length": e.length, "trace": e.trace, "trace_inv": e.trace_inv} for e in table.entries]


def spectrum_from_json(obj) -> SpectrumTable:
    if not isinstance(obj, list):
        raise ParseError("spectrum must be a JSON array")
    entries = []
    for item in obj:
        word = _require(item, "word", str)
        entries.append(SpectrumEntry(word, *(_float(_require(item, k)) for k in SPECTRUM_FIELDS[1:])))
    depth = max((len(e.word) for e in entries), default=0)
    return SpectrumTable(tuple(entries), depth)


def spectrum_to_tsv(table: SpectrumTable, digits: int = 12) -> str:
    lines = ["\t".join(SPECTRUM_FIELDS)]
    for e in table.entries:
        lines.append("\t".join([e.word, *(f"{v:.{digits}f}" for v in (e.length, e.trace, e.trace_inv))]))
    return "\n".join(lines) + "\n"
