"""Result documents: versioned JSON, per-subcomplex CSV and a text grid.

Documents contain no wall-clock data unless asked for, so identical runs
give byte-identical output.
"""

import csv
import io
import json
from fractions import Fraction

from .cochain import format_monomial

__all__ = ["SCHEMA_VERSION", "result_to_dict", "document", "to_json", "to_csv", "to_table"]

SCHEMA_VERSION = 1


def _num(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cochain_to_dict(c):
    return {
        "terms": [
            {"monomial": format_monomial(c.alg, m), "indices": list(m), "coef": _num(v)}
            for m, v in sorted(c.terms.items())
        ]
    }


def result_to_dict(res, timings=False):
    stats = {"backend": res.stats.get("backend"), "survivors": res.stats.get("survivors"),
             "modp_ops": res.stats.get("modp_ops")}
    if timings:
        stats["time_partition"] = res.stats.get("time_partition")
        stats["time_exact"] = res.stats.get("time_exact")
    return {
        "k": res.k,
        "g": res.g,
        "dim": res.dim,
        "n_subcomplexes": res.n_subcomplexes,
        "max_dim": res.max_dim,
        "betti": res.betti,
        "dim_p": res.dim_p,
        "prime": res.prime,
        "torsion": list(res.torsion),
        "subcomplexes": [
            {"id": r.id, "dims": list(r.dims), "dim_p": r.dim_p, "dim_q": r.dim_q,
             "torsion": list(r.torsion)}
            for r in res.subcomplexes
        ],
        "representatives": [cochain_to_dict(c) for c in res.representatives],
        "events": list(res.events),
        "stats": stats,
    }


def document(alg, config, results, timings=False):
    cfg = {
        "prime": config.prime,
        "fallback_prime": config.fallback_prime,
        "strategy": config.strategy,
        "seed": config.seed,
        "field": config.field,
        "exact_mode": config.exact_mode,
        "crt_primes": list(config.crt_primes),
        "emit_representatives": config.emit_representatives,
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": {"name": alg.name, "grade_range": [alg.grade_min, alg.grade_max],
                    "dim": len(alg)},
        "config": cfg,
        "cells": [result_to_dict(r, timings) for r in results],
    }


def to_json(doc):
    return json.dumps(doc, indent=1) + "\n"


CSV_FIELDS = ("algebra", "k", "g", "subcomplex", "dim_lower", "dim_middle", "dim_upper",
              "dim_p", "dim_q", "torsion")


def to_csv(alg, results):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for res in results:
        for r in res.subcomplexes:
            w.writerow([alg.name, res.k, res.g, r.id, *r.dims, r.dim_p,
                        "" if r.dim_q is None else r.dim_q,
                        " ".join(str(t) for t in r.torsion)])
    return buf.getvalue()


def _cell_text(res):
    box = f"{res.dim}/{res.n_subcomplexes}/{res.max_dim}"
    if res.betti:
        box += f" [{res.betti}]"
    elif res.betti is None and res.dim_p:
        box += f" [{res.dim_p}_{res.prime}]"
    return box


def to_table(alg, results):
    """Grid with one row per g - lowest*k, one column per k.

    A box reads ``dim C / #subcomplexes / max subcomplex dim`` followed by
    the cohomology dimension in brackets when it is nonzero.  A box equal
    to its left neighbour in the same row is drawn as an arrow.
    """
    if not results:
        return "(empty)\n"
    lo = alg.lowest_grade
    cells = {(r.k, r.g - lo * r.k): r for r in results}
    ks = sorted({k for k, _ in cells})
    rows = sorted({row for _, row in cells}, reverse=True)
    label = f"g{'+' if lo < 0 else '-'}{abs(lo)}k"
    grid = [[label] + [f"k={k}" for k in ks]]
    for row in rows:
        line = [str(row)]
        for k in ks:
            r = cells.get((k, row))
            if r is None:
                line.append("")
                continue
            left = cells.get((k - 1, row))
            same = left is not None and (left.dim, left.n_subcomplexes, left.max_dim,
                                         left.betti, left.dim_p) == (
                r.dim, r.n_subcomplexes, r.max_dim, r.betti, r.dim_p)
            line.append("->" if same and r.dim else _cell_text(r))
        grid.append(line)
    widths = [max(len(line[i]) for line in grid) for i in range(len(grid[0]))]
    out = []
    for line in grid:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"
