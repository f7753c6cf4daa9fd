"""Reading and writing algebras as JSON structure-constant files.

Layout (indices are 0-based)::

    {
      "format": "supercohom-algebra", "version": 1,
      "header": {"name": ..., "n_even": ..., "n_odd": ..., "grade_range": [lo, hi],
                 "lowest_grade": ..., "family": ..., "n": ...},
      "elements": [{"label": "O_1", "parity": 1, "grade": -2, "gen_fn": "theta*psi"}, ...],
      "brackets": [{"i": 0, "j": 6, "terms": [{"k": 1, "num": -1, "den": 1}]}, ...]
    }

``gen_fn`` is optional.  Every load runs :func:`validate_structure`.
"""

import json
from fractions import Fraction

from .algebra import (
    BasisElement,
    InvalidAlgebra,
    StructureTable,
    Superalgebra,
    validate_structure,
)
from .errors import ParseError
from .superpoly import SuperPolynomial

__all__ = ["algebra_to_dict", "algebra_from_dict", "dumps", "loads", "save", "load"]

FORMAT = "supercohom-algebra"
VERSION = 1


def algebra_to_dict(alg):
    n = alg.n
    if alg.family == "H":
        n_even, n_odd = n, 0
    elif n is not None:
        n_even = n_odd = n
    else:
        n_even = n_odd = None
    header = {
        "name": alg.name,
        "n_even": n_even,
        "n_odd": n_odd,
        "grade_range": [alg.grade_min, alg.grade_max],
        "lowest_grade": alg.lowest_grade,
        "family": alg.family,
        "n": n,
    }
    elements = []
    for e in alg.elements:
        rec = {"label": e.label, "parity": e.parity, "grade": e.grade}
        if e.gen_fn is not None:
            rec["gen_fn"] = e.gen_fn.to_string()
        elements.append(rec)
    brackets = []
    for (i, j), terms in sorted(alg.table.forward.items()):
        brackets.append({
            "i": i, "j": j,
            "terms": [{"k": k, "num": Fraction(c).numerator, "den": Fraction(c).denominator}
                      for k, c in terms],
        })
    return {"format": FORMAT, "version": VERSION, "header": header,
            "elements": elements, "brackets": brackets}


def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    v = obj[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise ParseError(f"{where}.{key}: expected an integer, got {v!r}")
    if kind is not int and not isinstance(v, kind):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}, got {v!r}")
    return v


def algebra_from_dict(doc, validate=True):
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("format", FORMAT) != FORMAT:
        raise ParseError(f"unknown format {doc.get('format')!r}")
    if doc.get("version", VERSION) != VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    header = _need(doc, "header", dict, "document")
    name = _need(header, "name", str, "header")
    gr = _need(header, "grade_range", list, "header")
    if len(gr) != 2 or not all(isinstance(x, int) for x in gr):
        raise ParseError("header.grade_range must be [lo, hi]")
    n = header.get("n")
    elements = []
    for idx, rec in enumerate(_need(doc, "elements", list, "document")):
        where = f"elements[{idx}]"
        label = _need(rec, "label", str, where)
        parity = _need(rec, "parity", int, where)
        if parity not in (0, 1):
            raise ParseError(f"{where}.parity must be 0 or 1")
        grade = _need(rec, "grade", int, where)
        gen = None
        if rec.get("gen_fn") is not None and n:
            gen = SuperPolynomial.parse(rec["gen_fn"], n)
        elements.append(BasisElement(idx, parity, grade, label, gen))
    N = len(elements)
    forward = {}
    for idx, rec in enumerate(_need(doc, "brackets", list, "document")):
        where = f"brackets[{idx}]"
        i, j = _need(rec, "i", int, where), _need(rec, "j", int, where)
        terms = []
        for t_idx, t in enumerate(_need(rec, "terms", list, where)):
            tw = f"{where}.terms[{t_idx}]"
            k = _need(t, "k", int, tw)
            num = _need(t, "num", int, tw)
            den = t.get("den", 1)
            if not isinstance(den, int) or den == 0:
                raise ParseError(f"{tw}.den must be a nonzero integer")
            terms.append((k, Fraction(num, den)))
        if (i, j) in forward:
            raise ParseError(f"{where}: duplicate bracket ({i}, {j})")
        forward[(i, j)] = terms
    labels = [e.label for e in elements]
    if len(set(labels)) != len(labels):
        raise InvalidAlgebra(["duplicate element labels"])
    bad = [f"bracket ({i}, {j}) references a missing element"
           for (i, j), terms in forward.items()
           if not (0 <= i < N and 0 <= j < N) or any(not 0 <= k < N for k, _ in terms)]
    if bad:
        raise InvalidAlgebra(bad)
    table = StructureTable(forward, [e.grade for e in elements])
    alg = Superalgebra(name, elements, table, gr[0], gr[1],
                       lowest_grade=header.get("lowest_grade"),
                       family=header.get("family"), n=n)
    if validate:
        violations = validate_structure(alg)
        if violations:
            raise InvalidAlgebra(violations)
    return alg


def dumps(alg):
    return json.dumps(algebra_to_dict(alg), indent=1) + "\n"


def loads(text, validate=True):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return algebra_from_dict(doc, validate=validate)


def save(alg, path):
    with open(path, "w") as fh:
        fh.write(dumps(alg))


def load(path, validate=True):
    with open(path) as fh:
        return loads(fh.read(), validate=validate)
