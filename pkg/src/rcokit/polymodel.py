"""Polyhedron data model, structural validation, face census and exact hull."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .exactfield import (
    Point3,
    QuadRat,
    common_radicand,
    lift_point,
    orient3d,
    vadd,
    vcross,
    vdot,
    vscale,
    vsub,
)

__all__ = [
    "Polyhedron",
    "ValidationReport",
    "FaceCensus",
    "ValidationError",
    "DegenerateInputError",
    "validate",
    "face_census",
    "convex_hull",
    "newell_normal",
    "face_centroid",
    "edges_of",
    "squared_length",
]


class ValidationError(ValueError):
    """The polyhedron fails structural validation."""


class DegenerateInputError(ValueError):
    """Point set is too small or flat to bound a solid."""


@dataclass(frozen=True)
class Polyhedron:
    """Vertices plus faces given as counter-clockwise (from outside) index cycles.

    Edges are derived from the faces on demand.
    """

    vertices: tuple[Point3, ...]
    faces: tuple[tuple[int, ...], ...]
    convex: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))

    @property
    def d(self) -> int:
        return self.vertices[0].d if self.vertices else 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        return edges_of(self.faces)

    def face_points(self, k: int) -> list[Point3]:
        return [self.vertices[i] for i in self.faces[k]]

    def lift(self, d: int) -> "Polyhedron":
        """Same solid over the field Q(sqrt d); only rational solids can move."""
        if d == self.d:
            return self
        return Polyhedron(tuple(lift_point(v, d) for v in self.vertices), self.faces, self.convex)

    def transformed(self, fn) -> "Polyhedron":
        return Polyhedron(tuple(fn(v) for v in self.vertices), self.faces, self.convex)

    def canonical(self) -> "Polyhedron":
        """Vertices sorted lexicographically, faces sorted, each face rotated to its minimum."""
        order = sorted(range(len(self.vertices)), key=lambda i: self.vertices[i])
        relabel = {old: new for new, old in enumerate(order)}
        faces = []
        for f in self.faces:
            g = [relabel[i] for i in f]
            k = g.index(min(g))
            faces.append(tuple(g[k:] + g[:k]))
        faces.sort(key=lambda f: (tuple(sorted(f)), f))
        return Polyhedron(tuple(self.vertices[i] for i in order), tuple(faces), self.convex)

    def relabeled(self, perm: list[int]) -> "Polyhedron":
        """Copy where old vertex ``i`` becomes ``perm[i]``."""
        verts = [None] * len(self.vertices)
        for old, new in enumerate(perm):
            verts[new] = self.vertices[old]
        faces = tuple(tuple(perm[i] for i in f) for f in self.faces)
        return Polyhedron(tuple(verts), faces, self.convex)


def edges_of(faces) -> list[tuple[int, int]]:
    seen = set()
    for f in faces:
        n = len(f)
        for i in range(n):
            u, v = f[i], f[(i + 1) % n]
            seen.add((min(u, v), max(u, v)))
    return sorted(seen)


def squared_length(u: Point3, v: Point3) -> QuadRat:
    w = vsub(u, v)
    return vdot(w, w)


def newell_normal(pts: list[Point3]) -> Point3:
    """Unnormalized face normal, twice the vector area; exact in the coordinate field."""
    n = len(pts)
    acc = None
    for i in range(n):
        c = vcross(pts[i], pts[(i + 1) % n])
        acc = c if acc is None else vadd(acc, c)
    return acc


def face_centroid(pts: list[Point3]) -> Point3:
    acc = pts[0]
    for p in pts[1:]:
        acc = vadd(acc, p)
    return vscale(acc, QuadRat(1, 0, pts[0].d) / len(pts))


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    v_count: int
    e_count: int
    f_count: int
    euler: int
    manifold: bool
    planar_faces: bool
    convexity_verified: bool
    defects: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.manifold and self.planar_faces and not self.defects

    def as_dict(self) -> dict:
        return {
            "V": self.v_count,
            "E": self.e_count,
            "F": self.f_count,
            "euler": self.euler,
            "manifold": self.manifold,
            "planar_faces": self.planar_faces,
            "convexity_verified": self.convexity_verified,
            "defects": list(self.defects),
        }


def validate(p: Polyhedron) -> ValidationReport:
    """Check closure, orientation, planarity and (if claimed) convexity.

    Never raises on malformed input; problems are collected as defects.
    """
    defects: list[str] = []
    nv = len(p.vertices)
    manifold = True
    planar = True

    ds = {v.d for v in p.vertices}
    if len(ds) > 1:
        defects.append(f"vertices from several fields: {sorted(ds)}")
        manifold = planar = False

    good_faces = []
    for k, f in enumerate(p.faces):
        if len(f) < 3:
            defects.append(f"face {k} has {len(f)} vertices")
            manifold = False
            continue
        bad = [i for i in f if not (isinstance(i, int) and 0 <= i < nv)]
        if bad:
            defects.append(f"face {k} references missing vertices {bad}")
            manifold = False
            continue
        if len(set(f)) != len(f):
            defects.append(f"face {k} repeats a vertex: {list(f)}")
            manifold = False
            continue
        good_faces.append(k)

    directed: dict[tuple[int, int], list[int]] = defaultdict(list)
    for k in good_faces:
        f = p.faces[k]
        for i in range(len(f)):
            directed[(f[i], f[(i + 1) % len(f)])].append(k)
    for (u, v), owners in sorted(directed.items()):
        if len(owners) > 1:
            defects.append(f"directed edge {u}->{v} used by faces {owners}")
            manifold = False
        if (v, u) not in directed:
            defects.append(f"edge {u}-{v} has only one face (faces {owners})")
            manifold = False

    used = {i for k in good_faces for i in p.faces[k]}
    for i in range(nv):
        if i not in used:
            defects.append(f"vertex {i} lies on no face")
            manifold = False

    if manifold:
        # faces around each vertex must form one cycle
        nxt: dict[tuple[int, int], int] = {}
        for k in good_faces:
            f = p.faces[k]
            n = len(f)
            for i in range(n):
                # around vertex f[i]: incoming edge (prev, v) -> outgoing (v, next)
                nxt[(f[i], f[i - 1])] = f[(i + 1) % n]
        around: dict[int, list[int]] = defaultdict(list)
        for (v, w) in nxt:
            around[v].append(w)
        for v, nbrs in around.items():
            start = nbrs[0]
            w, steps = start, 0
            while True:
                w = nxt[(v, w)]
                steps += 1
                if w == start or steps > len(nbrs):
                    break
            if steps != len(nbrs):
                defects.append(f"vertex {v} is pinched (link is not one cycle)")
                manifold = False

    if len(ds) <= 1:
        for k in good_faces:
            pts = p.face_points(k)
            base = _noncollinear_triple(pts)
            if base is None:
                defects.append(f"face {k} is degenerate (collinear)")
                planar = False
                continue
            a, b, c = base
            if any(orient3d(a, b, c, q) != 0 for q in pts):
                defects.append(f"face {k} is not planar")
                planar = False

    convexity = False
    if p.convex and planar and manifold:
        convexity = True
        for k in good_faces:
            pts = p.face_points(k)
            nrm = newell_normal(pts)
            off = vdot(nrm, pts[0])
            for i, v in enumerate(p.vertices):
                if (vdot(nrm, v) - off).sign() > 0:
                    defects.append(f"vertex {i} lies outside the plane of face {k}")
                    convexity = False
                    break

    ne = len(edges_of([p.faces[k] for k in good_faces]))
    nf = len(p.faces)
    return ValidationReport(nv, ne, nf, nv - ne + nf, manifold, planar, convexity, defects)


def _noncollinear_triple(pts):
    a = pts[0]
    for i in range(1, len(pts)):
        b = pts[i]
        if b == a:
            continue
        ab = vsub(b, a)
        for c in pts[i + 1 :]:
            if any(vcross(ab, vsub(c, a))):
                return a, b, c
    return None


# ---------------------------------------------------------------------------
# census


@dataclass
class FaceCensus:
    counts: dict[int, int]
    regular: dict[int, bool]

    @property
    def all_regular(self) -> bool:
        return all(self.regular.values())

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.counts == other
        if isinstance(other, FaceCensus):
            return self.counts == other.counts and self.regular == other.regular
        return NotImplemented

    def __str__(self):
        parts = []
        for n in sorted(self.counts):
            tag = "regular" if self.regular[n] else "irregular"
            parts.append(f"{self.counts[n]}x{n}-gon ({tag})")
        return ", ".join(parts)


def is_regular_face(pts: list[Point3]) -> bool:
    """Equal exact side lengths and equal exact corner dot products."""
    n = len(pts)
    sides = [vsub(pts[(i + 1) % n], pts[i]) for i in range(n)]
    lengths = {vdot(s, s) for s in sides}
    if len(lengths) != 1:
        return False
    # with equal sides, equal dot products of consecutive sides means equal angles
    corners = {vdot(sides[i - 1], sides[i]) for i in range(n)}
    return len(corners) == 1


def face_census(p: Polyhedron) -> FaceCensus:
    report = validate(p)
    if not report.ok:
        raise ValidationError("; ".join(report.defects) or "invalid polyhedron")
    counts: Counter[int] = Counter()
    regular: dict[int, bool] = {}
    for k, f in enumerate(p.faces):
        n = len(f)
        counts[n] += 1
        regular[n] = regular.get(n, True) and is_regular_face(p.face_points(k))
    keys = sorted(counts)
    return FaceCensus({n: counts[n] for n in keys}, {n: regular[n] for n in keys})


# ---------------------------------------------------------------------------
# convex hull


def convex_hull(points) -> Polyhedron:
    """Exact 3D convex hull with coplanar facets merged into polygons.

    Incremental insertion over exact orientation tests.  Points on the hull
    boundary that are not corners (on an edge or inside a facet) are dropped.
    Output is in canonical order.
    """
    pts = list(points)
    if len(pts) < 4:
        raise DegenerateInputError(f"need at least 4 points, got {len(pts)}")
    d = common_radicand(*(q.d for q in pts))
    pts = sorted({lift_point(q, d) for q in pts})
    if len(pts) < 4:
        raise DegenerateInputError("fewer than 4 distinct points")

    seed = _initial_tetrahedron(pts)
    if seed is None:
        raise DegenerateInputError("all points are coplanar")
    i0, i1, i2, i3 = seed
    if orient3d(pts[i0], pts[i1], pts[i2], pts[i3]) > 0:
        i1, i2 = i2, i1
    # triangles oriented so orient3d(a, b, c, x) > 0 means x sees the face
    tris = {(i0, i1, i2), (i0, i3, i1), (i1, i3, i2), (i2, i3, i0)}
    for k, q in enumerate(pts):
        if k in seed:
            continue
        visible = [t for t in tris if orient3d(pts[t[0]], pts[t[1]], pts[t[2]], q) > 0]
        if not visible:
            continue
        vis = set(visible)
        edges = {}
        for t in visible:
            for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                edges[e] = t
        horizon = [e for e in edges if (e[1], e[0]) not in edges]
        tris -= vis
        for u, v in horizon:
            tris.add((u, v, k))

    faces = _merge_coplanar(pts, tris)
    used = sorted({i for f in faces for i in f})
    relabel = {old: new for new, old in enumerate(used)}
    hull = Polyhedron(
        tuple(pts[i] for i in used),
        tuple(tuple(relabel[i] for i in f) for f in faces),
        convex=True,
    )
    return hull.canonical()


def _initial_tetrahedron(pts):
    a = 0
    b = next((i for i in range(1, len(pts)) if pts[i] != pts[a]), None)
    if b is None:
        return None
    ab = vsub(pts[b], pts[a])
    c = next((i for i in range(len(pts)) if any(vcross(ab, vsub(pts[i], pts[a])))), None)
    if c is None:
        return None
    e = next((i for i in range(len(pts)) if orient3d(pts[a], pts[b], pts[c], pts[i]) != 0), None)
    if e is None:
        return None
    return (a, b, c, e)


def _plane_key(pts, t):
    a, b, c = pts[t[0]], pts[t[1]], pts[t[2]]
    nrm = vcross(vsub(b, a), vsub(c, a))
    quad = (nrm[0], nrm[1], nrm[2], vdot(nrm, a))
    lead = next(x for x in quad if x)
    # positive scaling only, so opposite orientations stay distinct
    scale = abs(lead).inverse()
    return tuple(x * scale for x in quad)


def _merge_coplanar(pts, tris):
    groups: dict[tuple, list] = defaultdict(list)
    for t in tris:
        groups[_plane_key(pts, t)].append(t)
    faces = []
    for group in groups.values():
        directed = set()
        for t in group:
            directed.update(((t[0], t[1]), (t[1], t[2]), (t[2], t[0])))
        succ = {u: v for (u, v) in directed if (v, u) not in directed}
        start = min(succ)
        ring = [start]
        while True:
            nxt = succ[ring[-1]]
            if nxt == start:
                break
            ring.append(nxt)
        faces.append(_drop_collinear(pts, ring))
    return faces


def _drop_collinear(pts, ring):
    changed = True
    while changed and len(ring) > 3:
        changed = False
        for i in range(len(ring)):
            u, v, w = ring[i - 1], ring[i], ring[(i + 1) % len(ring)]
            if not any(vcross(vsub(pts[v], pts[u]), vsub(pts[w], pts[v]))):
                del ring[i]
                changed = True
                break
    return ring
