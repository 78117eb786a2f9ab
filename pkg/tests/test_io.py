import json
import math
from fractions import Fraction

import mpmath
import pytest

from oracles import mp_value
from rcokit import Point3, QuadRat, build, decode, encode, skeleton, to_obj
from rcokit.constructors import SolidName
from rcokit.io import DecodeError, decode_document, decode_mesh, encode_mesh, format_exact

CATALOG = [n.value for n in SolidName]


@pytest.mark.parametrize("name", CATALOG)
def test_round_trip(name):
    p = build(name)
    q, meta = decode_document(encode(p, {"name": name}))
    assert q == p
    assert meta == {"name": name}


def test_round_trip_star(rco_solid):
    from rcokit import star

    s = star(rco_solid)
    assert decode(encode(s)) == s


def _doc(**changes):
    doc = json.loads(encode(build("cube")))
    doc.update(changes)
    return json.dumps(doc)


def test_unsupported_radicand():
    with pytest.raises(DecodeError, match="unsupported radicand"):
        decode(_doc(d=3))


def test_out_of_range_face_index():
    doc = json.loads(encode(build("rco")))
    doc["faces"][0][0] = 99
    with pytest.raises(DecodeError) as err:
        decode(json.dumps(doc))
    assert err.value.location == "$.faces[0][0]"


def test_mixed_radicands():
    doc = json.loads(encode(build("rco")))
    doc["vertices"][2][1]["d"] = 5
    with pytest.raises(DecodeError, match="mixed radicands"):
        decode(json.dumps(doc))


@pytest.mark.parametrize(
    "text",
    ["{not json", "[]", _doc(schema_version="0.9"), _doc(vertices="x"), _doc(faces=[[0, 1]])],
)
def test_malformed(text):
    with pytest.raises(DecodeError):
        decode(text)


def test_defective_solid_rejected():
    doc = json.loads(encode(build("cube")))
    doc["faces"] = doc["faces"][1:]
    with pytest.raises(DecodeError, match="invalid polyhedron"):
        decode(json.dumps(doc))


def test_zero_denominator():
    doc = json.loads(encode(build("cube")))
    doc["vertices"][0][0]["a"] = [1, 0]
    with pytest.raises(DecodeError):
        decode(json.dumps(doc))


def test_obj_vertex_line():
    top = QuadRat(1, 1, 2)
    assert format_exact(top, 15) == "2.41421356237310"
    p = build("rco")
    lines = to_obj(p, 15).decode().splitlines()
    assert "v 1 1 2.41421356237310" in lines


def test_obj_cube():
    text = to_obj(build("cube"), 9).decode().splitlines()
    v = [l for l in text if l.startswith("v ")]
    f = [l for l in text if l.startswith("f ")]
    assert len(v) == 8 and len(f) == 6
    assert all(len(l.split()) == 5 for l in f)
    assert text[0] == "v -1 -1 -1"


def test_obj_skeleton_groups(rco_solid):
    text = to_obj(skeleton(rco_solid), 12).decode().splitlines()
    assert sum(1 for l in text if l.startswith("g ")) == 26
    # 18 square frames (32 triangles, 16 vertices) and 8 triangle frames (24, 12)
    assert sum(1 for l in text if l.startswith("f ")) == 18 * 32 + 8 * 24
    idx = [int(i) for l in text if l.startswith("f ") for i in l.split()[1:]]
    assert min(idx) == 1 and max(idx) == 18 * 16 + 8 * 12


def test_obj_deterministic(pseudo_solid):
    assert to_obj(pseudo_solid, 17) == to_obj(build("pseudo-rco"), 17)
    mesh_a, mesh_b = skeleton(pseudo_solid), skeleton(build("pseudo_rco"))
    assert to_obj(mesh_a, 10) == to_obj(mesh_b, 10)


@pytest.mark.parametrize("precision", [5, 18, 1.5])
def test_obj_precision_range(cube, precision):
    with pytest.raises(ValueError):
        to_obj(cube, precision)


@pytest.mark.parametrize("name", CATALOG)
def test_obj_within_one_ulp(name):
    p = build(name)
    lines = [l for l in to_obj(p, 17).decode().splitlines() if l.startswith("v ")]
    for line, v in zip(lines, p.vertices):
        for text, q in zip(line.split()[1:], v):
            f = float(text)
            with mpmath.workprec(128):
                assert abs(mpmath.mpf(f) - mp_value(q)) <= mpmath.mpf(math.ulp(f))


@pytest.mark.parametrize("precision", [6, 10, 15])
def test_obj_low_precision_within_last_digit(precision):
    q = QuadRat(Fraction(1, 2), Fraction(1, 2), 5)  # golden ratio
    text = format_exact(q, precision)
    digits = len(text.replace(".", "").lstrip("0"))
    assert digits == precision
    with mpmath.workprec(128):
        err = abs(mpmath.mpf(text) - mp_value(q))
        assert err <= mpmath.mpf(10) ** (1 - precision) / 2


def test_mesh_document_round_trip(rco_solid):
    mesh = skeleton(rco_solid)
    back = decode_mesh(encode_mesh(mesh))
    assert len(back.components) == 26
    assert (back.components[3].triangles == mesh.components[3].triangles).all()
    assert (back.components[3].vertices == mesh.components[3].vertices).all()
