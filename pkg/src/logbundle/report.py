"""Report assembly: classification, splitting table, audit, serial form.

Reports are plain dicts with a fixed key order so serialized output is
byte-identical across runs.  The timing field is always null in the JSON
(wall-clock goes to stderr instead); anything time-dependent would break
the determinism contract.
"""

from typing import Optional, Union

from .geometry import Arrangement, HomPoly, lattice, lattice_isomorphic, product_form
from .io_formats import line_to_json, point_to_json
from .resolution import (
    DegreeBoundExceeded,
    JacobianNotFinite,
    chern_data,
    classify,
    minimal_presentation,
    stability_class,
)
from .splitting import jump_report


def _class_dict(c, in_arrangement: Optional[bool]):
    out = {
        "kind": c.kind,
        "a": c.a,
        "b": c.b,
        "jumping_point": point_to_json(c.jumping_point) if c.jumping_point else None,
    }
    if c.kind in ("Free", "NearlyFree"):
        out["stability"] = stability_class(c)
    else:
        out["stability"] = None
    out["jumping_point_in_arrangement"] = in_arrangement
    return out


def _audit(degree, c, cd, p, rep, rows):
    failures = []
    d = degree

    def check(cond, label):
        if not cond:
            failures.append(label)

    check(cd.c1 == -(d - 1), "c1 = -(d-1)")
    check(p.chern() == (cd.c1, cd.c2), "presentation Chern classes match curve data")
    if c.kind == "Free":
        check(c.a + c.b == d - 1, "free exponent sum")
        check(cd.c2 == c.a * c.b, "free c2 = ab")
        check(cd.tjurina == (d - 1) ** 2 - c.a * c.b, "free tjurina identity")
    elif c.kind == "NearlyFree":
        check(c.a + c.b == d, "nearly free exponent sum")
        check(cd.c2 == c.a * c.b - c.a + 1, "nearly free c2 = ab - a + 1")
        check(
            cd.tjurina == (d - 1) ** 2 - (c.a * c.b - c.a + 1),
            "nearly free tjurina identity",
        )
    check(rep.generic.u + rep.generic.v == d - 1, "generic u + v = d - 1")
    for row in rows:
        check(row["split"][0] + row["split"][1] == d - 1, "row u + v = d - 1")
        check(row["order"] >= 0, "row order is non-negative")
    if c.jumping_point is not None:
        for row, rrow in zip(rows, rep.rows):
            on_p = rrow.line.contains(c.jumping_point)
            check(on_p == rrow.jumping, "jumping rows are exactly the lines through P")
    return {"ok": not failures, "failures": failures}


def build_report(obj: Union[Arrangement, HomPoly], echo) -> dict:
    """Full analysis of an arrangement or curve as a serializable dict."""
    arr = obj if isinstance(obj, Arrangement) else None
    f = product_form(arr) if arr is not None else obj
    cd = chern_data(f)
    p = minimal_presentation(f)
    c = classify(f)
    rep = jump_report(p, arr)

    rows = []
    for row in rep.rows:
        entry = {
            "line": line_to_json(row.line),
            "split": [row.split.u, row.split.v],
            "order": row.order,
            "jumping": row.jumping,
            "tag": row.tag,
            "contains_jumping_point": (
                row.line.contains(c.jumping_point) if c.jumping_point else None
            ),
        }
        rows.append(entry)

    if arr is not None:
        lat = lattice(arr)
        lattice_summary = {
            "point_count": len(lat.points),
            "multiplicities": lat.multiplicity_multiset(),
        }
        in_arr = (
            any(L.contains(c.jumping_point) for L in arr)
            if c.jumping_point is not None
            else None
        )
    else:
        lattice_summary = None
        in_arr = None

    return {
        "input": echo,
        "degree": f.degree,
        "class": _class_dict(c, in_arr),
        "chern": {"c1": cd.c1, "c2": cd.c2},
        "tjurina": cd.tjurina,
        "presentation": {
            "generator_degrees": list(p.gen_degrees),
            "relation_degrees": list(p.rel_degrees),
        },
        "generic_split": [rep.generic.u, rep.generic.v],
        "generic_confirmed": rep.generic_confirmed,
        "lines": rows,
        "lattice": lattice_summary,
        "audit": _audit(f.degree, c, cd, p, rep, rows),
        "timing_ms": None,
    }


def classify_brief(obj: Union[Arrangement, HomPoly]) -> dict:
    """Classification summary without the splitting table or tjurina."""
    arr = obj if isinstance(obj, Arrangement) else None
    f = product_form(arr) if arr is not None else obj
    c = classify(f)
    in_arr = None
    if arr is not None and c.jumping_point is not None:
        in_arr = any(L.contains(c.jumping_point) for L in arr)
    return _class_dict(c, in_arr)


def build_compare(a: Arrangement, b: Arrangement) -> dict:
    iso, _ = lattice_isomorphic(a, b)
    ca = classify_brief(a)
    cb = classify_brief(b)
    same = (ca["kind"], ca["a"], ca["b"]) == (cb["kind"], cb["a"], cb["b"])
    return {
        "lattice_isomorphic": iso,
        "class_a": ca,
        "class_b": cb,
        "same_class": same,
    }


def build_sweep(family: str, param: str, values, make) -> dict:
    """Classify a family member per parameter value, tolerating bad rows.

    make(value) returns the arrangement or curve; rows that raise are kept
    as error rows.  Rows whose class differs from the majority class get an
    exceptional flag.
    """
    rows = []
    tally = {}
    for value in values:
        key = str(value)
        try:
            obj = make(value)
            cls = classify_brief(obj)
        except (ValueError, DegreeBoundExceeded, JacobianNotFinite) as e:
            rows.append({
                "param": key,
                "class": None,
                "jumping_point": None,
                "error": str(e),
            })
            continue
        except KeyError as e:
            rows.append({
                "param": key,
                "class": None,
                "jumping_point": None,
                "error": f"missing parameter {e.args[0]!r}",
            })
            continue
        rows.append({
            "param": key,
            "class": {"kind": cls["kind"], "a": cls["a"], "b": cls["b"]},
            "jumping_point": cls["jumping_point"],
            "error": None,
        })
        tag = (cls["kind"], cls["a"], cls["b"])
        tally[tag] = tally.get(tag, 0) + 1
    generic = max(tally, key=lambda t: (tally[t], str(t))) if tally else None
    for row in rows:
        if row["error"] is not None:
            row["exceptional"] = True
        else:
            tag = (row["class"]["kind"], row["class"]["a"], row["class"]["b"])
            row["exceptional"] = tag != generic
    return {
        "family": family,
        "param": param,
        "generic_class": (
            {"kind": generic[0], "a": generic[1], "b": generic[2]} if generic else None
        ),
        "rows": rows,
        "timing_ms": None,
    }
