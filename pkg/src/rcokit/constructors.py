"""Catalog solids and the cutting / gyration operators that relate them."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import permutations, product

from .exactfield import (
    FieldMixError,
    Isometry,
    Point3,
    QuadRat,
    common_radicand,
    vadd,
    vscale,
    vsub,
)
from .polymodel import (
    Polyhedron,
    ValidationError,
    convex_hull,
    face_centroid,
    newell_normal,
    squared_length,
    validate,
)

__all__ = [
    "SolidName",
    "PLATONIC",
    "OperatorError",
    "GyrationError",
    "platonic",
    "rco",
    "pseudo_rco",
    "build",
    "truncate",
    "cantellate",
    "equal_edge_cantellation",
    "gyrate_cap",
    "axis_rotation",
]


class SolidName(str, Enum):
    TETRAHEDRON = "tetrahedron"
    CUBE = "cube"
    OCTAHEDRON = "octahedron"
    DODECAHEDRON = "dodecahedron"
    ICOSAHEDRON = "icosahedron"
    RCO = "rco"
    PSEUDO_RCO = "pseudo_rco"

    @classmethod
    def parse(cls, text: str) -> "SolidName":
        try:
            return cls(text.strip().lower().replace("-", "_"))
        except ValueError:
            raise ValueError(f"unknown solid {text!r}") from None


PLATONIC = (
    SolidName.TETRAHEDRON,
    SolidName.CUBE,
    SolidName.OCTAHEDRON,
    SolidName.DODECAHEDRON,
    SolidName.ICOSAHEDRON,
)


class OperatorError(ValueError):
    """Bad parameter or unsuitable input for a construction operator."""


class GyrationError(OperatorError):
    """The ring under the cap is not carried onto itself by the rotation."""


def _cyclic(x, y, z):
    return [(x, y, z), (z, x, y), (y, z, x)]


def platonic(name) -> Polyhedron:
    """Canonical exact realization of one of the five Platonic solids."""
    name = SolidName.parse(name) if isinstance(name, str) else name
    if name not in PLATONIC:
        raise OperatorError(f"{name.value} is not a Platonic solid")
    if name is SolidName.CUBE:
        pts = [Point3(*c) for c in product((-1, 1), repeat=3)]
    elif name is SolidName.TETRAHEDRON:
        pts = [Point3(*c) for c in product((-1, 1), repeat=3) if c[0] * c[1] * c[2] == 1]
    elif name is SolidName.OCTAHEDRON:
        pts = []
        for axis in range(3):
            for s in (-1, 1):
                c = [0, 0, 0]
                c[axis] = s
                pts.append(Point3(*c))
    else:
        phi = QuadRat(Fraction(1, 2), Fraction(1, 2), 5)
        if name is SolidName.ICOSAHEDRON:
            pts = [
                Point3(*c, d=5)
                for s1, s2 in product((-1, 1), repeat=2)
                for c in _cyclic(0, s1, s2 * phi)
            ]
        else:
            inv = phi.inverse()
            pts = [Point3(*c, d=5) for c in product((-1, 1), repeat=3)]
            pts += [
                Point3(*c, d=5)
                for s1, s2 in product((-1, 1), repeat=2)
                for c in _cyclic(0, s1 * inv, s2 * phi)
            ]
    return convex_hull(pts)


def rco() -> Polyhedron:
    """Rhombicuboctahedron: all permutations of (+-1, +-1, +-(1+sqrt2)), edge length 2."""
    big = QuadRat(1, 1, 2)
    pts = set()
    for sx, sy, sz in product((-1, 1), repeat=3):
        for c in permutations((sx, sy, sz * big)):
            pts.add(Point3(*c, d=2))
    return convex_hull(pts)


def pseudo_rco() -> Polyhedron:
    """Elongated square gyrobicupola: the RCO with its top square cupola turned 45 degrees."""
    return gyrate_cap(rco(), "z", 1)


def build(name) -> Polyhedron:
    name = SolidName.parse(name) if isinstance(name, str) else name
    if name is SolidName.RCO:
        return rco()
    if name is SolidName.PSEUDO_RCO:
        return pseudo_rco()
    return platonic(name)


def _require_convex(p: Polyhedron) -> None:
    if not p.convex:
        raise OperatorError("operator needs a convex polyhedron")
    report = validate(p)
    if not report.ok or not report.convexity_verified:
        raise ValidationError("; ".join(report.defects) or "input is not a valid convex solid")


def _to_field(x, d: int) -> QuadRat:
    if isinstance(x, QuadRat):
        return x.lift(common_radicand(x.d, d)) if x.d != d else x
    return QuadRat(Fraction(x), 0, d)


def _field_of(p: Polyhedron, param) -> tuple[Polyhedron, QuadRat]:
    pd = param.d if isinstance(param, QuadRat) else 1
    d = common_radicand(p.d, pd)
    return p.lift(d), _to_field(param, d)


def truncate(p: Polyhedron, t) -> Polyhedron:
    """Cut every vertex at fraction ``t`` of each incident edge (0 < t <= 1/2).

    At ``t = 1/2`` neighbouring cut points coincide and the result is the
    rectified solid.
    """
    p, t = _field_of(p, t)
    if not (t.sign() > 0 and t <= Fraction(1, 2)):
        raise OperatorError(f"truncation fraction must lie in (0, 1/2], got {t}")
    _require_convex(p)
    pts = set()
    for u, v in p.edges:
        a, b = p.vertices[u], p.vertices[v]
        pts.add(vadd(a, vscale(vsub(b, a), t)))
        pts.add(vadd(b, vscale(vsub(a, b), t)))
    return convex_hull(pts)


def cantellate(p: Polyhedron, s, lift=0) -> Polyhedron:
    """Shrink every face about its centroid by ``s`` (0 < s < 1) and hull the result.

    Each shrunk face may additionally be pushed outward by ``lift`` times its
    unnormalized Newell normal; ``lift = 0`` keeps faces in their own planes,
    which for regular faces already yields the expanded solid with one
    quadrilateral per edge and one polygon per vertex.
    """
    p, s = _field_of(p, s)
    if isinstance(lift, QuadRat) and lift.d != p.d:
        d = common_radicand(p.d, lift.d)
        p, s = p.lift(d), s.lift(d)
    lift = _to_field(lift, p.d)
    if not (s.sign() > 0 and s < 1):
        raise OperatorError(f"cantellation factor must lie in (0, 1), got {s}")
    if lift.sign() < 0:
        raise OperatorError("lift must be non-negative")
    _require_convex(p)
    pts = set()
    for k in range(len(p.faces)):
        ring = p.face_points(k)
        c = face_centroid(ring)
        shift = vscale(newell_normal(ring), lift)
        for v in ring:
            pts.add(vadd(vadd(c, vscale(vsub(v, c), s)), shift))
    return convex_hull(pts)


def equal_edge_cantellation(p: Polyhedron) -> QuadRat:
    """Exact factor ``s`` making all edges of ``cantellate(p, s)`` equal.

    Uses the first face: shrunk sides have length ``s*L`` and the new edges
    joining images of a shared vertex have length ``(1-s)*D`` with ``D`` the
    distance between adjacent face centroids, so ``s = D / (L + D)``.  This is
    the uniform value whenever all faces are congruent regular polygons.
    """
    faces = p.faces
    f0 = faces[0]
    u, v = f0[0], f0[1]
    f1 = next(k for k, f in enumerate(faces[1:], 1) if _has_directed(f, v, u))
    c0 = face_centroid(p.face_points(0))
    c1 = face_centroid(p.face_points(f1))
    side2 = squared_length(p.vertices[u], p.vertices[v])
    gap2 = squared_length(c0, c1)
    ratio = (side2 / gap2).sqrt()  # L / D
    one = QuadRat(1, 0, ratio.d)
    return one / (one + ratio)


def _has_directed(face, a, b) -> bool:
    n = len(face)
    return any(face[i] == a and face[(i + 1) % n] == b for i in range(n))


_AXES = {"x": 0, "y": 1, "z": 2}


def axis_rotation(axis: str, steps: int = 1, d: int = 2) -> Isometry:
    """Rotation by ``steps * 45`` degrees about a coordinate axis, exact over Q(sqrt2)."""
    if d != 2:
        raise FieldMixError("45 degree rotations need Q(sqrt 2)")
    k = steps % 8
    h = QuadRat(0, Fraction(1, 2), 2)
    zero, one = QuadRat(0, 0, 2), QuadRat(1, 0, 2)
    cs = [
        (one, zero),
        (h, h),
        (zero, one),
        (-h, h),
        (-one, zero),
        (-h, -h),
        (zero, -one),
        (h, -h),
    ]
    c, s = cs[k]
    i = _AXES[axis]
    j, l = (i + 1) % 3, (i + 2) % 3
    m = [[zero] * 3 for _ in range(3)]
    m[i][i] = one
    m[j][j], m[j][l] = c, -s
    m[l][j], m[l][l] = s, c
    return Isometry(m)


def gyrate_cap(p: Polyhedron, axis: str = "z", cut=1, angle: int = 45) -> Polyhedron:
    """Rotate every vertex whose ``axis`` coordinate exceeds ``cut`` by 45 degrees.

    The vertices lying exactly at the cut level must be carried onto
    themselves, otherwise the cap would tear away from the rest.
    """
    if angle != 45:
        raise OperatorError("only 45 degree gyration is supported")
    if axis not in _AXES:
        raise OperatorError(f"axis must be one of x, y, z; got {axis!r}")
    if p.d not in (1, 2):
        raise FieldMixError(f"45 degree rotation is not exact over Q(sqrt {p.d})")
    p = p.lift(2)
    cut = _to_field(cut, 2)
    if not p.convex:
        raise OperatorError("gyration needs a convex polyhedron")
    i = _AXES[axis]
    rot = axis_rotation(axis, 1)
    cap = [v for v in p.vertices if v[i] > cut]
    if not cap:
        raise OperatorError(f"no vertices above {axis} = {cut}")
    if len(cap) == len(p.vertices):
        raise OperatorError(f"every vertex lies above {axis} = {cut}")
    ring = {v for v in p.vertices if v[i] == cut}
    if {rot(v) for v in ring} != ring:
        raise GyrationError(f"the ring at {axis} = {cut} is not invariant under a 45 degree turn")
    moved = [rot(v) if v[i] > cut else v for v in p.vertices]
    return convex_hull(moved)

