"""Exact JSON documents, float mesh documents and OBJ export."""

from __future__ import annotations

import decimal
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np

from .exactfield import RADICANDS, Point3, QuadRat
from .polymodel import Polyhedron, validate
from .variants import MeshComponent, TriangleMesh

__all__ = [
    "SCHEMA_VERSION",
    "DecodeError",
    "encode",
    "decode",
    "decode_document",
    "encode_mesh",
    "decode_mesh",
    "to_obj",
    "format_exact",
    "format_float",
    "write_atomic",
]

SCHEMA_VERSION = "1.0"
MESH_SCHEMA_VERSION = "mesh-1.0"


class DecodeError(ValueError):
    """Malformed or defective document; ``location`` points at the offending item."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def _rational(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def encode(p: Polyhedron, metadata: dict | None = None) -> bytes:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "d": p.d,
        "convex": p.convex,
        "vertices": [[{"a": _rational(c.a), "b": _rational(c.b)} for c in v] for v in p.vertices],
        "faces": [list(f) for f in p.faces],
        "metadata": metadata or {},
    }
    return (json.dumps(doc, indent=1) + "\n").encode("utf-8")


def _int(x, loc: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DecodeError(f"expected an integer, got {x!r}", loc)
    return x


def _read_rational(pair, loc: str) -> Fraction:
    if not isinstance(pair, list) or len(pair) != 2:
        raise DecodeError("expected [numerator, denominator]", loc)
    num, den = _int(pair[0], loc + "[0]"), _int(pair[1], loc + "[1]")
    if den <= 0:
        raise DecodeError("denominator must be positive", loc + "[1]")
    return Fraction(num, den)


def decode_document(data: bytes | str) -> tuple[Polyhedron, dict]:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DecodeError(f"malformed JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise DecodeError("document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DecodeError(f"unknown schema_version {version!r}", "$.schema_version")
    d = doc.get("d")
    if isinstance(d, bool) or d not in RADICANDS:
        raise DecodeError(f"unsupported radicand {d!r}", "$.d")
    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, list):
        raise DecodeError("vertices must be a list", "$.vertices")
    vertices = []
    for i, rv in enumerate(raw_vertices):
        loc = f"$.vertices[{i}]"
        if not isinstance(rv, list) or len(rv) != 3:
            raise DecodeError("vertex must have three components", loc)
        comps = []
        for j, rc in enumerate(rv):
            cloc = f"{loc}[{j}]"
            if not isinstance(rc, dict) or "a" not in rc:
                raise DecodeError("component must be an object with 'a' and 'b'", cloc)
            if "d" in rc and rc["d"] != d:
                raise DecodeError(f"mixed radicands: {rc['d']!r} in a Q(sqrt {d}) document", cloc + ".d")
            a = _read_rational(rc["a"], cloc + ".a")
            b = _read_rational(rc.get("b", [0, 1]), cloc + ".b")
            comps.append(QuadRat(a, b, d))
        vertices.append(Point3(*comps, d=d))
    raw_faces = doc.get("faces")
    if not isinstance(raw_faces, list):
        raise DecodeError("faces must be a list", "$.faces")
    faces = []
    for k, rf in enumerate(raw_faces):
        loc = f"$.faces[{k}]"
        if not isinstance(rf, list):
            raise DecodeError("face must be a list of vertex indices", loc)
        face = []
        for j, idx in enumerate(rf):
            idx = _int(idx, f"{loc}[{j}]")
            if not 0 <= idx < len(vertices):
                raise DecodeError(f"vertex index {idx} out of range (0..{len(vertices) - 1})", f"{loc}[{j}]")
            face.append(idx)
        faces.append(tuple(face))
    convex = doc.get("convex", False)
    if not isinstance(convex, bool):
        raise DecodeError("convex must be a boolean", "$.convex")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DecodeError("metadata must be an object", "$.metadata")
    p = Polyhedron(tuple(vertices), tuple(faces), convex)
    report = validate(p)
    if not report.ok:
        raise DecodeError("invalid polyhedron: " + "; ".join(report.defects), "$.faces")
    if convex and not report.convexity_verified:
        raise DecodeError("document claims convexity but the solid is not convex", "$.convex")
    return p, metadata


def decode(data: bytes | str) -> Polyhedron:
    return decode_document(data)[0]


# ---------------------------------------------------------------------------
# float meshes


def encode_mesh(m: TriangleMesh, metadata: dict | None = None) -> bytes:
    doc = {
        "schema_version": MESH_SCHEMA_VERSION,
        "label": m.label,
        "components": [
            {
                "name": c.name,
                "vertices": [[float(x) for x in row] for row in c.vertices],
                "triangles": [[int(x) for x in row] for row in c.triangles],
            }
            for c in m.components
        ],
        "metadata": metadata or {},
    }
    return (json.dumps(doc) + "\n").encode("utf-8")


def decode_mesh(data: bytes | str) -> TriangleMesh:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DecodeError(f"malformed JSON ({exc})") from None
    if not isinstance(doc, dict) or doc.get("schema_version") != MESH_SCHEMA_VERSION:
        raise DecodeError("not a mesh document", "$.schema_version")
    comps = []
    for k, rc in enumerate(doc.get("components", [])):
        try:
            verts = np.asarray(rc["vertices"], dtype=float).reshape(-1, 3)
            tris = np.asarray(rc["triangles"], dtype=np.int64).reshape(-1, 3)
        except (KeyError, TypeError, ValueError) as exc:
            raise DecodeError(f"bad component ({exc})", f"$.components[{k}]") from None
        if tris.size and (tris.min() < 0 or tris.max() >= len(verts)):
            raise DecodeError("triangle index out of range", f"$.components[{k}].triangles")
        comps.append(MeshComponent(verts, tris, rc.get("name", f"face_{k}")))
    return TriangleMesh(comps, doc.get("label", ""))


# ---------------------------------------------------------------------------
# OBJ


def _check_precision(precision: int) -> None:
    if isinstance(precision, bool) or not isinstance(precision, int) or not 6 <= precision <= 17:
        raise ValueError(f"precision must be an integer in 6..17, got {precision!r}")


def _round_sig(x: decimal.Decimal, precision: int) -> str:
    out = decimal.Context(prec=precision, rounding=decimal.ROUND_HALF_EVEN).plus(x)
    text = format(out, "f")
    return "0" if text.lstrip("-").strip("0.") == "" else text


def format_exact(q: QuadRat, precision: int = 15) -> str:
    """Decimal text of ``a + b*sqrt(d)`` rounded to ``precision`` significant digits.

    Integers print without a fractional part; the rounding is taken from a
    high-precision expansion of the exact value, not from a double.
    """
    if q.is_rational() and q.a.denominator == 1:
        return str(q.a.numerator)
    return _round_sig(q.to_decimal(precision + 25), precision)


def format_float(x: float, precision: int = 15) -> str:
    if x == int(x):
        return str(int(x))
    return _round_sig(decimal.Decimal(x), precision)


def to_obj(obj: Polyhedron | TriangleMesh, precision: int = 15) -> bytes:
    """Wavefront OBJ text: ``v`` records then 1-based ``f`` records.

    A polyhedron keeps its polygons as n-gon records; a triangle mesh writes
    one ``g`` group per component.
    """
    _check_precision(precision)
    lines = []
    if isinstance(obj, Polyhedron):
        for v in obj.vertices:
            lines.append("v " + " ".join(format_exact(c, precision) for c in v))
        for f in obj.faces:
            lines.append("f " + " ".join(str(i + 1) for i in f))
    elif isinstance(obj, TriangleMesh):
        for comp in obj.components:
            for row in comp.vertices:
                lines.append("v " + " ".join(format_float(float(c), precision) for c in row))
        offset = 1
        for k, comp in enumerate(obj.components):
            lines.append(f"g {comp.name or f'face_{k}'}")
            for tri in comp.triangles:
                lines.append("f " + " ".join(str(int(i) + offset) for i in tri))
            offset += len(comp.vertices)
    else:
        raise TypeError(f"cannot export {type(obj).__name__} as OBJ")
    return ("\n".join(lines) + "\n").encode("ascii")


def write_atomic(path: str | os.PathLike, data: bytes) -> None:
    """Write to a temporary file next to ``path`` and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
