"""JSON exchange formats: complexes, twisting labels, simplicial maps, and
group cochains.  Parsing reports the offending field on malformed input;
serialization is canonical so equal presentations produce identical bytes.
"""

import json

from .groups import FiniteGroup, FreeAbelianGroup, cyclic, klein_four, symmetric3
from .presentation import SimplicialMap, SimplicialSetPresentation
from .words import SimplexWord
from .bundles import TwistingFunction
from .charclass import GroupCochain


class FormatError(ValueError):
    """Malformed document; the message names the field."""


def _fail(path, message):
    raise FormatError(f"{path}: {message}")


def _expect(obj, kind, path):
    if not isinstance(obj, kind):
        _fail(path, f"expected {kind.__name__}, got {type(obj).__name__}")
    return obj


def _get(obj, key, kind, path, default=_fail):
    if key not in obj:
        if default is _fail:
            _fail(path, f"missing field {key!r}")
        return default
    return _expect(obj[key], kind, f"{path}.{key}")


# -- complexes ----------------------------------------------------------------


def _parse_face_ref(obj, dim, path):
    _expect(obj, dict, path)
    base = _get(obj, "base", str, path)
    degens = _get(obj, "degens", list, path, default=[])
    for pos, d in enumerate(degens):
        if not isinstance(d, int) or isinstance(d, bool):
            _fail(f"{path}.degens[{pos}]", "degeneracy indices are integers")
    return base, tuple(degens), path


def parse_complex_obj(obj, path="complex"):
    _expect(obj, dict, path)
    name = _get(obj, "name", str, path, default="complex")
    cells_obj = _get(obj, "cells", dict, path)
    cells = {}
    face_specs = {}
    for key in sorted(cells_obj, key=lambda k: (len(k), k)):
        try:
            dim = int(key)
        except ValueError:
            _fail(f"{path}.cells", f"dimension key {key!r} is not an integer")
        if dim < 0:
            _fail(f"{path}.cells", f"negative dimension {key!r}")
        entries = _expect(cells_obj[key], list, f"{path}.cells[{key!r}]")
        ids = []
        for pos, entry in enumerate(entries):
            here = f"{path}.cells[{key!r}][{pos}]"
            if dim == 0:
                ids.append(_expect(entry, str, here))
                continue
            _expect(entry, dict, here)
            cid = _get(entry, "id", str, here)
            faces = _get(entry, "faces", list, here)
            if len(faces) != dim + 1:
                _fail(f"{here}.faces", f"a {dim}-cell needs {dim + 1} faces, got {len(faces)}")
            refs = []
            for fpos, ref in enumerate(faces):
                base, degens, _ = _parse_face_ref(ref, dim - 1, f"{here}.faces[{fpos}]")
                refs.append((base, degens, f"{here}.faces[{fpos}]"))
            ids.append(cid)
            face_specs[cid] = (dim, refs)
        cells[dim] = tuple(ids)

    dim_of = {}
    for dim, ids in cells.items():
        for cid in ids:
            if cid in dim_of:
                _fail(f"{path}.cells", f"duplicate cell id {cid!r}")
            dim_of[cid] = dim

    faces = {}
    for cid, (dim, refs) in face_specs.items():
        for i, (base, degens, here) in enumerate(refs):
            if base not in dim_of:
                _fail(here, f"unknown base cell {base!r}")
            if dim_of[base] + len(degens) != dim - 1:
                _fail(
                    here,
                    f"face of a {dim}-cell must have dimension {dim - 1}; "
                    f"base {base!r} has dimension {dim_of[base]} with {len(degens)} degeneracies",
                )
            try:
                faces[(cid, i)] = SimplexWord(base, degens, dim - 1)
            except ValueError as exc:
                _fail(f"{here}.degens", str(exc))

    basepoint = _get(obj, "basepoint", str, path, default=None)
    truncated = obj.get("truncated_above")
    if truncated is not None and (not isinstance(truncated, int) or isinstance(truncated, bool)):
        _fail(f"{path}.truncated_above", "expected an integer")
    try:
        K = SimplicialSetPresentation(
            name=name,
            cells=cells,
            faces=faces,
            basepoint=basepoint,
            truncated_above=truncated,
        )
        K.assert_valid()
    except FormatError:
        raise
    except ValueError as exc:
        _fail(path, str(exc))
    return K


def parse_complex(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON: {exc}") from exc
    return parse_complex_obj(obj, path=str(path))


def parse_complex_text(text, path="complex"):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc}") from exc
    return parse_complex_obj(obj, path=path)


def complex_to_obj(K):
    cells = {}
    for dim in sorted(K.dims()):
        if dim == 0:
            cells["0"] = list(K.cell_ids(0))
            continue
        entries = []
        for cid in K.cell_ids(dim):
            refs = []
            for i in range(dim + 1):
                w = K.face(cid, i)
                refs.append({"base": w.base, "degens": list(w.degens)})
            entries.append({"id": cid, "faces": refs})
        cells[str(dim)] = entries
    obj = {"name": K.name, "cells": cells}
    if K.basepoint is not None:
        obj["basepoint"] = K.basepoint
    if K.truncated_above is not None:
        obj["truncated_above"] = K.truncated_above
    return obj


def serialize_complex(K):
    return json.dumps(complex_to_obj(K), indent=1) + "\n"


def same_presentation(a, b):
    """Structural equality: same cells per dimension in order, same faces,
    same basepoint and truncation."""
    if sorted(a.dims()) != sorted(b.dims()):
        return False
    for dim in a.dims():
        if tuple(a.cell_ids(dim)) != tuple(b.cell_ids(dim)):
            return False
        if dim > 0:
            for cid in a.cell_ids(dim):
                for i in range(dim + 1):
                    if a.face(cid, i) != b.face(cid, i):
                        return False
    return a.basepoint == b.basepoint and a.truncated_above == b.truncated_above


# -- groups and twists ---------------------------------------------------------


def parse_group_obj(obj, path="group"):
    _expect(obj, dict, path)
    kind = _get(obj, "kind", str, path)
    if kind == "cyclic":
        n = _get(obj, "n", int, path)
        if n < 1:
            _fail(f"{path}.n", "order must be positive")
        return cyclic(n)
    if kind == "klein_four":
        return klein_four()
    if kind == "symmetric3":
        return symmetric3()
    if kind == "free_abelian":
        rank = _get(obj, "rank", int, path)
        if rank < 1:
            _fail(f"{path}.rank", "rank must be positive")
        return FreeAbelianGroup(rank)
    if kind == "finite":
        name = _get(obj, "name", str, path, default="G")
        elements = _get(obj, "elements", list, path)
        for pos, e in enumerate(elements):
            _expect(e, str, f"{path}.elements[{pos}]")
        table_obj = _get(obj, "table", dict, path)
        table = {}
        for key, value in table_obj.items():
            parts = key.split(",")
            if len(parts) != 2:
                _fail(f"{path}.table[{key!r}]", "keys are 'g,h' pairs")
            _expect(value, str, f"{path}.table[{key!r}]")
            table[(parts[0], parts[1])] = value
        try:
            return FiniteGroup(name, tuple(elements), table)
        except ValueError as exc:
            _fail(f"{path}.table", str(exc))
    _fail(f"{path}.kind", f"unknown group kind {kind!r}")


def parse_twist_obj(obj, base, path="twist"):
    _expect(obj, dict, path)
    group = parse_group_obj(_get(obj, "group", dict, path), f"{path}.group")
    labels_obj = _get(obj, "labels", dict, path)
    labels = {}
    for edge, word in labels_obj.items():
        if isinstance(group, FreeAbelianGroup):
            labels[edge] = group.parse_element(
                _expect(word, str, f"{path}.labels[{edge!r}]")
            )
        else:
            labels[edge] = _expect(word, str, f"{path}.labels[{edge!r}]")
    try:
        twist = TwistingFunction(base, group, labels)
        twist.assert_valid()
    except ValueError as exc:
        _fail(path, str(exc))
    return twist


def parse_twist(path, base):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON: {exc}") from exc
    return parse_twist_obj(obj, base, path=str(path))


def twist_to_obj(twist):
    group = twist.group
    if isinstance(group, FreeAbelianGroup):
        gobj = {"kind": "free_abelian", "rank": group.rank}
        labels = {e: group.format_element(g) for e, g in twist.labels.items()}
    else:
        gobj = {
            "kind": "finite",
            "name": group.name,
            "elements": list(group.elements),
            "table": {f"{g},{h}": group.mul(g, h) for g in group.elements for h in group.elements},
        }
        labels = dict(twist.labels)
    return {"group": gobj, "labels": labels}


def serialize_twist(twist):
    return json.dumps(twist_to_obj(twist), indent=1) + "\n"


# -- maps ----------------------------------------------------------------------


def parse_map_obj(obj, path="map"):
    """A self-contained map file: inline source and target complexes plus a
    cell assignment {cell-id: FaceRef into the target}."""
    _expect(obj, dict, path)
    source = parse_complex_obj(_get(obj, "source", dict, path), f"{path}.source")
    target = parse_complex_obj(_get(obj, "target", dict, path), f"{path}.target")
    assign_obj = _get(obj, "assignment", dict, path)
    assignment = {}
    for cid, ref in assign_obj.items():
        here = f"{path}.assignment[{cid!r}]"
        if not source.has_cell(cid):
            _fail(here, f"unknown source cell {cid!r}")
        base, degens, _ = _parse_face_ref(_expect(ref, dict, here), None, here)
        if not target.has_cell(base):
            _fail(f"{here}.base", f"unknown target cell {base!r}")
        if target.dim_of(base) + len(degens) != source.dim_of(cid):
            _fail(
                here,
                f"image must have dimension {source.dim_of(cid)}; base {base!r} "
                f"has dimension {target.dim_of(base)} with {len(degens)} degeneracies",
            )
        try:
            assignment[cid] = SimplexWord(base, degens, source.dim_of(cid))
        except ValueError as exc:
            _fail(f"{here}.degens", str(exc))
    name = _get(obj, "name", str, path, default="map")
    try:
        f = SimplicialMap(source, target, assignment, name=name)
        f.assert_valid()
    except ValueError as exc:
        _fail(path, str(exc))
    return f


def parse_map(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON: {exc}") from exc
    return parse_map_obj(obj, path=str(path))


def map_to_obj(f):
    return {
        "name": f.name,
        "source": complex_to_obj(f.source),
        "target": complex_to_obj(f.target),
        "assignment": {
            cid: {"base": w.base, "degens": list(w.degens)}
            for cid, w in f.assignment.items()
        },
    }


def serialize_map(f):
    return json.dumps(map_to_obj(f), indent=1) + "\n"


# -- group cochains --------------------------------------------------------------


def parse_cocycle_obj(obj, group, path="cocycle"):
    """{"degree": k, "modulus": m, "values": {"g1,g2,...": int}} for finite
    groups, or {"degree": 1, "modulus": m, "linear": [int...]} for free
    abelian coefficients."""
    _expect(obj, dict, path)
    degree = _get(obj, "degree", int, path)
    modulus = _get(obj, "modulus", int, path, default=0)
    if "linear" in obj:
        coeffs = _get(obj, "linear", list, path)
        for pos, c in enumerate(coeffs):
            if not isinstance(c, int) or isinstance(c, bool):
                _fail(f"{path}.linear[{pos}]", "coefficients are integers")
        try:
            return GroupCochain(group, degree, tuple(coeffs), modulus=modulus, linear=True)
        except ValueError as exc:
            _fail(path, str(exc))
    values_obj = _get(obj, "values", dict, path)
    values = {}
    for key, value in values_obj.items():
        if not isinstance(value, int) or isinstance(value, bool):
            _fail(f"{path}.values[{key!r}]", "values are integers")
        parts = tuple(key.split(",")) if key else ()
        if len(parts) != degree:
            _fail(f"{path}.values[{key!r}]", f"expected {degree} group elements")
        values[parts] = value
    try:
        return GroupCochain(group, degree, values, modulus=modulus)
    except ValueError as exc:
        _fail(path, str(exc))


def parse_cocycle(path, group):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: malformed JSON: {exc}") from exc
    return parse_cocycle_obj(obj, group, path=str(path))
