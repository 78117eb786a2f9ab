"""Exit criteria. Each test reports one ACCEPT line in the terminal summary."""

import contextlib
import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from oracles import mp_value, networkx_isomorphic, signed_permutation_symmetries
from rcokit import (
    are_isomorphic,
    build,
    canonical_code,
    cantellate,
    decode,
    encode,
    equal_edge_cantellation,
    face_census,
    gyrate_cap,
    platonic,
    pseudo_rco,
    rco,
    skeleton,
    star,
    symmetry_group,
    to_obj,
    truncate,
    validate,
)
from rcokit.constructors import SolidName
from rcokit.polymodel import squared_length
from rcokit.variants import FrameParams, check_component

RESULTS: dict[int, tuple[str, bool]] = {}


@contextlib.contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        RESULTS[number] = (title, False)
        raise
    RESULTS[number] = (title, True)


@pytest.fixture(scope="module")
def solids():
    return rco(), pseudo_rco()


def test_1_face_inventory(solids):
    with criterion(1, "face inventory: 18 squares + 8 regular triangles, both solids"):
        for p in solids:
            c = face_census(p)
            assert c.counts == {3: 8, 4: 18}
            assert c.regular == {3: True, 4: True}


def test_2_counts_and_closure(solids):
    with criterion(2, "V=24 E=48 F=26 euler=2 manifold; star(rco) V=50 E=144 F=96"):
        for p in solids:
            r = validate(p)
            assert (r.v_count, r.e_count, r.f_count, r.euler) == (24, 48, 26, 2)
            assert r.manifold and r.planar_faces and not r.defects
        r = validate(star(solids[0]))
        assert (r.v_count, r.e_count, r.f_count, r.euler) == (50, 144, 96, 2)
        assert r.manifold and r.planar_faces


def test_3_symmetry_gap(solids):
    with criterion(3, "symmetry order 48 (transitive) vs 16 (orbits 8+16), oracle-checked"):
        a, b = symmetry_group(solids[0]), symmetry_group(solids[1])
        assert a.order == 48 and a.vertex_transitive
        assert b.order == 16 and not b.vertex_transitive
        assert b.vertex_orbit_sizes == [8, 16]
        for name in ("cube", "octahedron", "tetrahedron"):
            p = platonic(name)
            assert symmetry_group(p).order == signed_permutation_symmetries(p)
        assert signed_permutation_symmetries(solids[0]) == 48


def test_4_construction_identities(solids):
    with criterion(4, "cantellate(cube,s*)~rco, gyrate(rco)~pseudo, double gyration~rco, truncated tetrahedron"):
        r, ps = solids
        cube = platonic("cube")
        s_star = equal_edge_cantellation(cube)
        assert are_isomorphic(cantellate(cube, s_star), r)
        g = gyrate_cap(r, "z", 1, 45)
        assert are_isomorphic(g, ps)
        assert are_isomorphic(gyrate_cap(g, "z", 1, 45), r)
        tt = truncate(platonic("tetrahedron"), Fraction(1, 3))
        assert face_census(tt).counts == {3: 4, 6: 4}
        assert len({squared_length(tt.vertices[u], tt.vertices[v]) for u, v in tt.edges}) == 1


def test_5_distinguishability(solids):
    with criterion(5, "not isomorphic, canonical codes differ, census-level statistics equal"):
        r, ps = solids
        assert not are_isomorphic(r, ps)
        assert not networkx_isomorphic(r, ps)
        assert canonical_code(r) != canonical_code(ps)
        assert face_census(r) == face_census(ps)
        vr, vp = validate(r), validate(ps)
        assert (vr.v_count, vr.e_count, vr.f_count, vr.euler) == (vp.v_count, vp.e_count, vp.f_count, vp.euler)


def test_6_variant_integrity(solids):
    with criterion(6, "skeleton components closed with chi=0; 26 for rco, 96 for star(rco)"):
        frame = FrameParams(Fraction(1, 4), 0.1)
        sk = skeleton(solids[0], frame)
        final = skeleton(star(solids[0]), frame)
        assert len(sk.components) == 26
        assert len(final.components) == 96
        for comp in sk.components + final.components:
            rep = check_component(comp)
            assert rep.euler == 0 and rep.closed and rep.oriented and rep.volume > 0


def test_7_platonic_regression():
    with criterion(7, "Platonic orders 24/48/48/120/120 with orbit-stabilizer divisibility"):
        expected = {"tetrahedron": 24, "cube": 48, "octahedron": 48, "dodecahedron": 120, "icosahedron": 120}
        for name, order in expected.items():
            rep = symmetry_group(platonic(name))
            assert rep.order == order
            assert rep.order % rep.rotation_order == 0
            for orbit in rep.vertex_orbits + rep.face_orbits:
                assert rep.order % len(orbit) == 0


def test_8_serialization():
    with criterion(8, "exact JSON round trip on catalog; OBJ deterministic; floats within 1 ulp"):
        for name in SolidName:
            p = build(name)
            assert decode(encode(p)) == p
            first, second = to_obj(p, 17), to_obj(build(name), 17)
            assert first == second
            lines = [l for l in first.decode().splitlines() if l.startswith("v ")]
            for line, v in zip(lines, p.vertices):
                for text, q in zip(line.split()[1:], v):
                    f = float(text)
                    with mpmath.workprec(128):
                        assert abs(mpmath.mpf(f) - mp_value(q)) <= mpmath.mpf(math.ulp(f))


def test_9_verdict_command():
    with criterion(9, "verdict completes in < 60 s with the contrast values"):
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "rcokit", "verdict", "--json"],
            capture_output=True, text=True, timeout=60,
        )
        elapsed = time.perf_counter() - start
        assert proc.returncode == 0, proc.stderr
        assert elapsed < 60
        res = json.loads(proc.stdout)
        rows = {r["quantity"]: r for r in res["rows"]}
        assert rows["face census"]["rco"] == rows["face census"]["pseudo_rco"] == {"3": 8, "4": 18}
        assert rows["all faces regular"]["rco"] and rows["all faces regular"]["pseudo_rco"]
        assert rows["V, E, F"]["rco"] == rows["V, E, F"]["pseudo_rco"] == [24, 48, 26]
        assert rows["Euler characteristic"]["rco"] == 2
        assert rows["star V, E, F"]["rco"] == [50, 144, 96]
        assert rows["symmetry order"]["rco"] == 48 and rows["symmetry order"]["pseudo_rco"] == 16
        assert rows["vertex-transitive"]["rco"] is True and rows["vertex-transitive"]["pseudo_rco"] is False
        assert rows["vertex orbit sizes"]["pseudo_rco"] == [8, 16]
        ids = res["identities"]
        assert ids["isomorphic(rco, pseudo_rco)"] is False
        assert ids["canonical codes differ"] is True
        assert ids["isomorphic(gyrate_cap(rco, z, 1, 45), pseudo_rco)"] is True
        assert ids["isomorphic(gyrate_cap twice, rco)"] is True
        assert ids["truncate(tetrahedron, 1/3) census"] == {"3": 4, "6": 4}
        assert any(k.startswith("isomorphic(cantellate(cube") and v is True for k, v in ids.items())
        assert res["consistent"] is True
