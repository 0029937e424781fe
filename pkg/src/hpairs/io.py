"""JSON file formats for H-pairs, Young diagrams and polynomials.

Rationals are always written as strings ("3", "-1/2").  Readers accept
strings and integers but reject floats.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import FiniteLocalAlgebra, HPair
from .poly import Poly, PolySyntaxError, identifiers, parse
from .young import YoungDiagram

_FRACTION = re.compile(r"-?\d+(/\d+)?")
_CELL_KEY = re.compile(r"\(\s*(\d+(\s*,\s*\d+)*)\s*,?\s*\)")


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Source:
    path: str
    sha256: str
    kind: str


def source_of(path: str | Path, data: bytes, kind: str) -> Source:
    return Source(str(path), hashlib.sha256(data).hexdigest(), kind)


def fmt_q(x: Fraction) -> str:
    return str(Fraction(x))


def read_q(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise FormatError(f"rational must be a string 'p/q' or an integer, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _FRACTION.fullmatch(x.strip()):
        q = Fraction(x.strip())
        return q
    raise FormatError(f"malformed rational {x!r}")


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# -- H-pairs ----------------------------------------------------------------


def hpair_to_json(H: HPair) -> dict:
    A = H.algebra
    table = []
    for (i, j) in sorted(A.products):
        if 1 <= i <= j:
            coords = A.products[(i, j)]
            table.append([i, j, [[k, fmt_q(c)] for k, c in sorted(coords.items())]])
    return {
        "dim": A.dim,
        "labels": list(A.labels),
        "table": table,
        "U": [[fmt_q(x) for x in u[1:]] for u in H.U.basis],
        "w": [fmt_q(x) for x in H.w[1:]],
    }


def hpair_from_json(doc: dict) -> HPair:
    try:
        dim = doc["dim"]
        labels = doc.get("labels") or ["1"] + [f"e{i}" for i in range(1, dim)]
        if not isinstance(dim, int) or dim < 1:
            raise FormatError("dim must be a positive integer")
        if len(labels) != dim:
            raise FormatError(f"{len(labels)} labels for dim {dim}")
        products = {}
        for entry in doc["table"]:
            i, j, coords = entry
            if not (0 <= i < dim and 0 <= j < dim):
                raise FormatError(f"table entry ({i}, {j}) out of range")
            if i > j:
                raise FormatError(f"table entry ({i}, {j}) must have i <= j")
            vec = {}
            for k, c in coords:
                if not 0 <= k < dim:
                    raise FormatError(f"coordinate index {k} out of range")
                vec[k] = read_q(c)
            products[(i, j)] = vec
        A = FiniteLocalAlgebra.build(labels, products)
        U = [[read_q(x) for x in row] for row in doc["U"]]
        w = [read_q(x) for x in doc["w"]]
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"malformed H-pair file: {e!r}") from None
    from .algebra import AlgebraError
    try:
        return HPair.from_ideal_coords(A, U, w)
    except AlgebraError as e:
        raise FormatError(str(e)) from None


def parse_hpair(text: str) -> HPair:
    return hpair_from_json(_load_json(text))


# -- diagrams -----------------------------------------------------------------


def cell_key_text(c: tuple) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


def _parse_cell_key(s: str) -> tuple:
    m = _CELL_KEY.fullmatch(s.strip())
    if not m:
        raise FormatError(f"malformed cell key {s!r}; expected e.g. '(3,1)'")
    return tuple(int(x) for x in m.group(1).split(","))


def diagram_to_json(D: YoungDiagram, B: dict) -> dict:
    return {
        "k": D.k,
        "corners": [list(c) for c in D.corners],
        "b": {cell_key_text(c): fmt_q(B[c]) for c in D.corners},
    }


def diagram_from_json(doc: dict) -> tuple:
    """(diagram, b); corners without an explicit b get b = 1."""
    try:
        k = doc["k"]
        corners = [tuple(c) for c in doc["corners"]]
        if not all(isinstance(x, int) and not isinstance(x, bool) for c in corners for x in c):
            raise FormatError("corner entries must be integers")
        raw_b = doc.get("b", {})
        if not isinstance(raw_b, dict):
            raise FormatError("b must be an object keyed by '(i,j,...)'")
        b = {_parse_cell_key(key): read_q(v) for key, v in raw_b.items()}
    except (KeyError, TypeError) as e:
        raise FormatError(f"malformed diagram file: {e!r}") from None
    D = YoungDiagram(k, tuple(corners))
    for c in D.corners:
        b.setdefault(c, Fraction(1))
    return D, b


def parse_diagram(text: str) -> tuple:
    return diagram_from_json(_load_json(text))


# -- polynomials --------------------------------------------------------------


def poly_to_json(f: Poly) -> dict:
    return {
        "vars": list(f.vars),
        "terms": [{"exps": list(m), "coeff": fmt_q(c)} for m, c in f.sorted_terms()],
    }


def poly_from_json(doc: dict) -> Poly:
    try:
        vars = list(doc["vars"])
        terms = {}
        for t in doc["terms"]:
            exps = tuple(t["exps"])
            if len(exps) != len(vars) or any(not isinstance(e, int) or e < 0 for e in exps):
                raise FormatError(f"bad exponent vector {list(exps)}")
            terms[exps] = terms.get(exps, 0) + read_q(t["coeff"])
    except (KeyError, TypeError) as e:
        raise FormatError(f"malformed polynomial file: {e!r}") from None
    return Poly(vars, {m: c for m, c in terms.items() if c})


def parse_polynomial(text: str) -> Poly:
    """JSON document, or plain text whose variables are inferred in natural order."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return poly_from_json(_load_json(stripped))
    try:
        return parse(stripped, identifiers(stripped))
    except PolySyntaxError as e:
        raise FormatError(str(e)) from None
