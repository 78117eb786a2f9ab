import random
from itertools import product

import pytest

from oracles import brute_force_facets
from rcokit import Point3, Polyhedron, QuadRat, canonical_code, convex_hull, face_census, validate
from rcokit.polymodel import DegenerateInputError, ValidationError, squared_length


def test_validate_rco(rco_solid):
    r = validate(rco_solid)
    assert (r.v_count, r.e_count, r.f_count, r.euler) == (24, 48, 26, 2)
    assert r.manifold and r.planar_faces and r.convexity_verified
    assert r.defects == []


def test_validate_cube(cube):
    r = validate(cube)
    assert (r.v_count, r.e_count, r.f_count, r.euler) == (8, 12, 6, 2)


def test_rco_edges_brute_force(rco_solid):
    # every pair at the minimal distance is an edge, and nothing else is
    verts = rco_solid.vertices
    d2 = {}
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            d2[(i, j)] = squared_length(verts[i], verts[j])
    shortest = min(d2.values())
    assert shortest == 4
    assert sorted(k for k, v in d2.items() if v == shortest) == rco_solid.edges


def test_repeated_vertex_is_reported(cube):
    faces = list(cube.faces)
    f = faces[0]
    faces[0] = (f[0], f[1], f[1], f[3])
    r = validate(Polyhedron(cube.vertices, faces))
    assert r.defects and not r.manifold


def test_open_surface_is_reported(cube):
    r = validate(Polyhedron(cube.vertices, cube.faces[1:]))
    assert not r.manifold
    assert any("only one face" in d for d in r.defects)


def test_out_of_range_index_is_reported(cube):
    faces = list(cube.faces)
    faces[0] = (0, 1, 99)
    r = validate(Polyhedron(cube.vertices, faces))
    assert not r.manifold


def test_nonplanar_face_is_reported(cube):
    verts = list(cube.vertices)
    verts[0] = Point3(verts[0].x, verts[0].y, verts[0].z * 2)
    r = validate(Polyhedron(verts, cube.faces, convex=True))
    assert not r.planar_faces


def test_wrong_orientation_is_reported(cube):
    faces = list(cube.faces)
    faces[0] = tuple(reversed(faces[0]))
    r = validate(Polyhedron(cube.vertices, faces))
    assert not r.manifold


def test_false_convexity_claim(cube):
    from rcokit import star

    st = star(cube)
    r = validate(Polyhedron(st.vertices, st.faces, convex=True))
    assert not r.convexity_verified


def test_census(rco_solid, pseudo_solid, cube):
    for p in (rco_solid, pseudo_solid):
        c = face_census(p)
        assert c.counts == {3: 8, 4: 18}
        assert c.regular == {3: True, 4: True}
    assert face_census(cube).counts == {4: 6}


def test_census_rejects_invalid(cube):
    with pytest.raises(ValidationError):
        face_census(Polyhedron(cube.vertices, cube.faces[1:]))


def test_rco_edge_lengths(rco_solid):
    lengths = {squared_length(rco_solid.vertices[u], rco_solid.vertices[v]) for u, v in rco_solid.edges}
    assert lengths == {QuadRat(4, 0, 2)}
    a = Point3(1, 1, QuadRat(1, 1, 2))
    b = Point3(-1, 1, QuadRat(1, 1, 2))
    assert squared_length(a, b) == 4


def cube_corners():
    return [Point3(*c) for c in product((-1, 1), repeat=3)]


def test_hull_cube():
    h = convex_hull(cube_corners())
    assert len(h.faces) == 6 and len(h.vertices) == 8


def test_hull_drops_interior_and_boundary_points():
    pts = cube_corners() + [Point3(0, 0, 0), Point3(1, 0, 0), Point3(1, 1, 0)]
    h = convex_hull(pts)
    assert len(h.vertices) == 8
    assert Point3(0, 0, 0) not in h.vertices
    assert validate(h).ok


def test_hull_degenerate_inputs():
    with pytest.raises(DegenerateInputError):
        convex_hull(cube_corners()[:3])
    with pytest.raises(DegenerateInputError):
        convex_hull([Point3(x, y, 0) for x in range(3) for y in range(3)])


def test_hull_matches_brute_force(rco_solid):
    facets = brute_force_facets(rco_solid.vertices)
    got = {frozenset(rco_solid.face_points(k)) for k in range(len(rco_solid.faces))}
    assert got == facets
    assert len(facets) == 26


def test_hull_pseudo_matches_brute_force(pseudo_solid):
    facets = brute_force_facets(pseudo_solid.vertices)
    got = {frozenset(pseudo_solid.face_points(k)) for k in range(len(pseudo_solid.faces))}
    assert got == facets


def test_hull_is_order_independent(rco_solid):
    pts = list(rco_solid.vertices)
    rng = random.Random(3)
    for _ in range(3):
        rng.shuffle(pts)
        assert convex_hull(pts) == rco_solid


def test_hull_idempotent(rco_solid, pseudo_solid):
    for p in (rco_solid, pseudo_solid):
        again = convex_hull(p.vertices)
        assert again == p
        assert canonical_code(again) == canonical_code(p)


def test_hull_faces_face_outward(rco_solid):
    from rcokit.polymodel import newell_normal
    from rcokit.exactfield import vdot

    for k in range(len(rco_solid.faces)):
        pts = rco_solid.face_points(k)
        assert vdot(newell_normal(pts), pts[0]).sign() > 0


def test_canonical_ordering(rco_solid):
    assert list(rco_solid.vertices) == sorted(rco_solid.vertices)
    for f in rco_solid.faces:
        assert f[0] == min(f)
    keys = [tuple(sorted(f)) for f in rco_solid.faces]
    assert keys == sorted(keys)


from hypothesis import given, settings  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from rcokit.exactfield import vdot  # noqa: E402
from rcokit.polymodel import newell_normal  # noqa: E402

grid = st.integers(-3, 3)
clouds = st.lists(st.builds(Point3, grid, grid, grid), min_size=4, max_size=14, unique=True)


@settings(max_examples=80, deadline=None)
@given(clouds, st.randoms(use_true_random=False))
def test_hull_properties(pts, rnd):
    try:
        h = convex_hull(pts)
    except DegenerateInputError:
        return
    r = validate(h)
    assert r.ok and r.convexity_verified and r.euler == 2
    for k in range(len(h.faces)):
        ring = h.face_points(k)
        nrm = newell_normal(ring)
        for q in pts:
            assert vdot(nrm, q - ring[0]).sign() <= 0
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    assert convex_hull(shuffled) == h
    assert convex_hull(h.vertices) == h
