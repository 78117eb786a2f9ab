"""Star (pyramids on faces) and strut-frame skeleton variants of a solid."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactfield import QuadRat, vadd, vscale
from .polymodel import Polyhedron, ValidationError, face_centroid, newell_normal, validate

__all__ = [
    "VariantError",
    "StarParams",
    "FrameParams",
    "MeshComponent",
    "TriangleMesh",
    "ComponentReport",
    "star",
    "default_star_params",
    "skeleton",
    "check_component",
]


class VariantError(ValueError):
    """Invalid star or frame parameters."""


@dataclass(frozen=True)
class StarParams:
    """Apex of each n-gon face sits at ``centroid + heights[n] * newell_normal``."""

    heights: dict[int, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "heights", {int(n): Fraction(t) for n, t in self.heights.items()})


@dataclass(frozen=True)
class FrameParams:
    inset: Fraction = Fraction(1, 4)
    thickness: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "inset", Fraction(self.inset))
        if not (0 < self.inset < Fraction(1, 2)):
            raise VariantError(f"inset must lie in (0, 1/2), got {self.inset}")
        if not (self.thickness > 0 and math.isfinite(self.thickness)):
            raise VariantError(f"thickness must be positive, got {self.thickness}")


def star(p: Polyhedron, params: StarParams | dict | None = None) -> Polyhedron:
    """Erect a pyramid on every face.

    Each n-gon is replaced by n triangles meeting at its apex, so the result
    has V+F vertices, E+sum(n) edges and sum(n) faces.  Coordinates stay in
    the field of ``p``.
    """
    report = validate(p)
    if not report.ok:
        raise ValidationError("; ".join(report.defects))
    if params is None:
        params = default_star_params(p)
    elif isinstance(params, dict):
        params = StarParams(params)
    sizes = {len(f) for f in p.faces}
    missing = sorted(sizes - set(params.heights))
    if missing:
        raise VariantError(f"no pyramid height given for face sizes {missing}")
    for n in sizes:
        if params.heights[n] == 0:
            raise VariantError(f"height for {n}-gons is zero (degenerate apex)")
        if params.heights[n] < 0:
            raise VariantError(f"height for {n}-gons is negative")

    verts = list(p.vertices)
    faces = []
    for k, f in enumerate(p.faces):
        ring = p.face_points(k)
        t = QuadRat(params.heights[len(f)], 0, p.d)
        apex = vadd(face_centroid(ring), vscale(newell_normal(ring), t))
        a = len(verts)
        verts.append(apex)
        n = len(f)
        faces.extend((f[i], f[(i + 1) % n], a) for i in range(n))
    return Polyhedron(tuple(verts), tuple(faces), convex=False).canonical()


def default_star_params(p: Polyhedron, denominator_limit: int = 10**6) -> StarParams:
    """Heights giving equilateral lateral triangles, rounded to nearby rationals.

    Exact equilateral apexes are generally not in the coordinate field, so the
    float height is approximated by a fraction.  Sizes whose circumradius
    reaches the edge length (hexagons and up) get half the edge length.
    """
    heights: dict[int, Fraction] = {}
    for k, f in enumerate(p.faces):
        n = len(f)
        if n in heights:
            continue
        ring = [np.array(v.to_floats()) for v in p.face_points(k)]
        side = float(np.linalg.norm(ring[1] - ring[0]))
        circum = side / (2 * math.sin(math.pi / n))
        h = math.sqrt(side * side - circum * circum) if circum < side * 0.999 else side / 2
        nrm = np.array(newell_normal(p.face_points(k)).to_floats())
        heights[n] = Fraction(h / float(np.linalg.norm(nrm))).limit_denominator(denominator_limit)
    return StarParams(heights)


# ---------------------------------------------------------------------------
# float meshes


@dataclass
class MeshComponent:
    vertices: np.ndarray  # (n, 3) float
    triangles: np.ndarray  # (m, 3) int
    name: str = ""


@dataclass
class TriangleMesh:
    components: list[MeshComponent] = field(default_factory=list)
    label: str = ""

    @property
    def n_vertices(self) -> int:
        return sum(len(c.vertices) for c in self.components)

    @property
    def n_triangles(self) -> int:
        return sum(len(c.triangles) for c in self.components)


@dataclass
class ComponentReport:
    v_count: int
    e_count: int
    f_count: int
    euler: int
    closed: bool
    oriented: bool
    volume: float

    @property
    def ok(self) -> bool:
        return self.closed and self.oriented and self.volume > 0


def check_component(c: MeshComponent) -> ComponentReport:
    """Closed-manifold and orientation check; positive volume means outward normals."""
    directed: dict[tuple[int, int], int] = {}
    oriented = True
    for tri in c.triangles:
        a, b, d = (int(x) for x in tri)
        for e in ((a, b), (b, d), (d, a)):
            if e in directed:
                oriented = False
            directed[e] = directed.get(e, 0) + 1
    closed = all((v, u) in directed for (u, v) in directed)
    undirected = {(min(u, v), max(u, v)) for (u, v) in directed}
    used = {int(i) for i in np.unique(c.triangles)}
    nv = len(c.vertices)
    closed = closed and len(used) == nv
    tri = c.vertices[c.triangles]
    volume = float(np.einsum("ij,ij->i", tri[:, 0], np.cross(tri[:, 1], tri[:, 2])).sum() / 6.0)
    ne, nf = len(undirected), len(c.triangles)
    return ComponentReport(nv, ne, nf, nv - ne + nf, closed, oriented, volume)


def _frame(ring: np.ndarray, inset: float, thickness: float, name: str) -> MeshComponent:
    """Solid ring for one face: outer polygon and inset polygon, pushed inward."""
    n = len(ring)
    centroid = ring.mean(axis=0)
    normal = np.zeros(3)
    for i in range(n):
        normal += np.cross(ring[i], ring[(i + 1) % n])
    normal /= np.linalg.norm(normal)
    inner = ring + inset * (centroid - ring)
    depth = -thickness * normal
    # rings: 0 outer top, 1 inner top, 2 outer bottom, 3 inner bottom
    verts = np.vstack([ring, inner, ring + depth, inner + depth])

    def idx(r, i):
        return r * n + i % n

    tris = []
    for i in range(n):
        j = i + 1
        quads = (
            (idx(0, i), idx(0, j), idx(1, j), idx(1, i)),  # top annulus, faces +normal
            (idx(2, i), idx(3, i), idx(3, j), idx(2, j)),  # bottom annulus
            (idx(0, i), idx(2, i), idx(2, j), idx(0, j)),  # outer wall
            (idx(1, i), idx(1, j), idx(3, j), idx(3, i)),  # inner wall
        )
        for a, b, c, d in quads:
            tris.append((a, b, c))
            tris.append((a, c, d))
    return MeshComponent(verts, np.array(tris, dtype=np.int64), name)


def skeleton(p: Polyhedron, params: FrameParams | None = None, label: str = "") -> TriangleMesh:
    """One closed frame per face; frames overlap along shared edges and are not fused."""
    report = validate(p)
    if not report.ok:
        raise ValidationError("; ".join(report.defects))
    params = params or FrameParams()
    inset = float(params.inset)
    coords = np.array([v.to_floats() for v in p.vertices])
    comps = [
        _frame(coords[list(f)], inset, params.thickness, f"face_{k}")
        for k, f in enumerate(p.faces)
    ]
    return TriangleMesh(comps, label)
