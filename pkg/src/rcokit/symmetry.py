"""Exact symmetry groups, combinatorial isomorphism and RCO / Pseudo-RCO classification."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

from .exactfield import (
    FieldError,
    Isometry,
    Point3,
    QuadRat,
    common_radicand,
    vcross,
    vdot,
    vscale,
    vsub,
)
from .polymodel import Polyhedron, ValidationError, face_census, validate

__all__ = [
    "SymmetryReport",
    "SolidTag",
    "Classification",
    "DegenerateSymmetryError",
    "symmetry_group",
    "similarities",
    "congruent_up_to_scale",
    "are_isomorphic",
    "isomorphism",
    "canonical_code",
    "classify",
    "centered",
]


class DegenerateSymmetryError(ValueError):
    """Vertex set spans less than three dimensions."""


@dataclass
class SymmetryReport:
    elements: list[Isometry]
    permutations: list[tuple[int, ...]]
    order: int
    rotation_order: int
    vertex_orbits: list[list[int]]
    face_orbits: list[list[int]]
    vertex_transitive: bool

    @property
    def vertex_orbit_sizes(self) -> list[int]:
        return sorted(len(o) for o in self.vertex_orbits)

    @property
    def face_orbit_sizes(self) -> list[int]:
        return sorted(len(o) for o in self.face_orbits)


def _require_valid(p: Polyhedron) -> None:
    report = validate(p)
    if not report.ok:
        raise ValidationError("; ".join(report.defects))


def centered(p: Polyhedron) -> Polyhedron:
    """Translate so the vertex centroid sits at the origin."""
    acc = p.vertices[0]
    for v in p.vertices[1:]:
        acc = acc + v
    if not any(acc):
        return p
    c = vscale(acc, QuadRat(1, 0, p.d) / len(p.vertices))
    return p.transformed(lambda v: vsub(v, c))


def _cycle_key(cycle) -> tuple:
    """Canonical form of a face cycle up to rotation and reversal."""
    n = len(cycle)
    best = None
    for seq in (list(cycle), list(reversed(cycle))):
        k = seq.index(min(seq))
        cand = tuple(seq[k:] + seq[:k])
        if best is None or cand < best:
            best = cand
    return best if n else ()


def _pick_basis(verts: list[Point3], classes: dict) -> tuple[int, int, int]:
    # prefer vertices in small norm classes to keep the candidate search short
    order = sorted(range(len(verts)), key=lambda i: (len(classes[vdot(verts[i], verts[i])]), i))
    order = [i for i in order if any(verts[i])]
    for a in order:
        for b in order:
            ab = vcross(verts[a], verts[b])
            if not any(ab):
                continue
            for c in order:
                if vdot(ab, verts[c]):
                    return a, b, c
    raise DegenerateSymmetryError("vertices do not span three dimensions")


def similarities(a: Polyhedron, b: Polyhedron, scale2=None):
    """All linear maps ``A`` with ``A^T A = k^2 I`` carrying ``a`` onto ``b``.

    Both solids must already be centered.  ``scale2`` is ``k^2``; by default
    it is inferred from the sums of squared vertex norms.  Yields
    ``(matrix, vertex_permutation)`` pairs; the permutation maps vertex
    indices of ``a`` to those of ``b`` and carries faces to faces.
    """
    if len(a.vertices) != len(b.vertices) or len(a.faces) != len(b.faces):
        return
    d = common_radicand(a.d, b.d)
    a, b = a.lift(d), b.lift(d)
    va, vb = list(a.vertices), list(b.vertices)
    if scale2 is None:
        sa = sum((vdot(v, v) for v in va), QuadRat(0, 0, d))
        sb = sum((vdot(v, v) for v in vb), QuadRat(0, 0, d))
        if not sa:
            raise DegenerateSymmetryError("all vertices at the origin")
        scale2 = sb / sa
    else:
        scale2 = scale2 if isinstance(scale2, QuadRat) else QuadRat(scale2, 0, d)

    classes_a = defaultdict(list)
    for i, v in enumerate(va):
        classes_a[vdot(v, v)].append(i)
    classes_b = defaultdict(list)
    for i, v in enumerate(vb):
        classes_b[vdot(v, v)].append(i)
    if sorted(len(c) for c in classes_a.values()) != sorted(len(c) for c in classes_b.values()):
        return

    i1, i2, i3 = _pick_basis(va, classes_a)
    basis = [va[i1], va[i2], va[i3]]
    gram = [[vdot(x, y) * scale2 for y in basis] for x in basis]
    vmat = Isometry([[basis[c][r] for c in range(3)] for r in range(3)])
    vinv = vmat.inverse()
    index_b = {v: i for i, v in enumerate(vb)}
    faces_b = {_cycle_key(f) for f in b.faces}

    for w1 in classes_b.get(gram[0][0], ()):
        x1 = vb[w1]
        for w2 in classes_b.get(gram[1][1], ()):
            x2 = vb[w2]
            if w2 == w1 or vdot(x1, x2) != gram[0][1]:
                continue
            for w3 in classes_b.get(gram[2][2], ()):
                x3 = vb[w3]
                if vdot(x1, x3) != gram[0][2] or vdot(x2, x3) != gram[1][2]:
                    continue
                wmat = Isometry([[(x1, x2, x3)[c][r] for c in range(3)] for r in range(3)])
                m = wmat @ vinv
                perm = []
                for v in va:
                    j = index_b.get(m.apply(v))
                    if j is None:
                        break
                    perm.append(j)
                else:
                    if all(_cycle_key([perm[i] for i in f]) in faces_b for f in a.faces):
                        yield m, tuple(perm)


def _orbits(n: int, perms) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for perm in perms:
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(i)
    return sorted(groups.values())


def symmetry_group(p: Polyhedron) -> SymmetryReport:
    """Every orthogonal map sending the vertex set and the faces onto themselves.

    The solid is recentered on its vertex centroid first.  Candidates come
    from matching the Gram matrix of a fixed vertex basis; each candidate
    matrix is then checked against the full vertex set and face list.
    """
    _require_valid(p)
    p = centered(p)
    found = sorted(similarities(p, p, scale2=1), key=lambda mp: mp[0].key())
    elements = [m for m, _ in found]
    perms = [perm for _, perm in found]
    face_index = {_cycle_key(f): k for k, f in enumerate(p.faces)}
    face_perms = [
        [face_index[_cycle_key([perm[i] for i in f])] for f in p.faces] for perm in perms
    ]
    vorb = _orbits(len(p.vertices), perms)
    forb = _orbits(len(p.faces), face_perms)
    rotations = sum(1 for m in elements if m.det() == 1)
    return SymmetryReport(
        elements=elements,
        permutations=perms,
        order=len(elements),
        rotation_order=rotations,
        vertex_orbits=vorb,
        face_orbits=forb,
        vertex_transitive=len(vorb) == 1,
    )


def congruent_up_to_scale(a: Polyhedron, b: Polyhedron):
    """A similarity carrying ``a`` onto ``b`` (matrix, vertex map) or ``None``."""
    _require_valid(a)
    _require_valid(b)
    try:
        common_radicand(a.d, b.d)
    except FieldError:
        return None
    return next(similarities(centered(a), centered(b)), None)


# ---------------------------------------------------------------------------
# oriented maps: darts are directed face edges, i.e. flags with a fixed side


class _Map:
    __slots__ = ("origin", "nxt", "twin", "n_vertices")

    def __init__(self, faces, n_vertices: int, mirror: bool = False):
        if mirror:
            faces = [tuple(reversed(f)) for f in faces]
        origin, nxt = [], []
        where = {}
        for f in faces:
            base = len(origin)
            n = len(f)
            for i in range(n):
                where[(f[i], f[(i + 1) % n])] = base + i
                origin.append(f[i])
                nxt.append(base + (i + 1) % n)
        twin = [0] * len(origin)
        for (u, v), dart in where.items():
            twin[dart] = where[(v, u)]
        self.origin, self.nxt, self.twin = origin, nxt, twin
        self.n_vertices = n_vertices


def _propagate(ma: _Map, mb: _Map, start_a: int, start_b: int):
    n = len(ma.origin)
    fwd = [-1] * n
    back = [-1] * n
    fwd[start_a], back[start_b] = start_b, start_a
    queue = [start_a]
    for x in queue:
        y = fwd[x]
        for xa, yb in ((ma.nxt[x], mb.nxt[y]), (ma.twin[x], mb.twin[y])):
            if fwd[xa] == -1:
                if back[yb] != -1:
                    return None
                fwd[xa], back[yb] = yb, xa
                queue.append(xa)
            elif fwd[xa] != yb:
                return None
    if len(queue) != n:
        return None
    vmap = {}
    for x in range(n):
        u, w = ma.origin[x], mb.origin[fwd[x]]
        if vmap.setdefault(u, w) != w:
            return None
    return vmap


def isomorphism(a: Polyhedron, b: Polyhedron):
    """Vertex bijection carrying faces of ``a`` to faces of ``b``, or ``None``.

    Cyclic order may be reversed (mirror images count as isomorphic).  One
    dart of ``a`` is fixed and tried against every dart of ``b`` in both
    orientations; the rest of the map is forced by propagation.
    """
    _require_valid(a)
    _require_valid(b)
    if (len(a.vertices), len(a.faces), len(a.edges)) != (len(b.vertices), len(b.faces), len(b.edges)):
        return None
    if sorted(len(f) for f in a.faces) != sorted(len(f) for f in b.faces):
        return None
    ma = _Map(a.faces, len(a.vertices))
    for mirror in (False, True):
        mb = _Map(b.faces, len(b.vertices), mirror)
        for start in range(len(mb.origin)):
            vmap = _propagate(ma, mb, 0, start)
            if vmap is not None:
                return vmap
    return None


def are_isomorphic(a: Polyhedron, b: Polyhedron) -> bool:
    return isomorphism(a, b) is not None


def _bfs_code(m: _Map, start: int) -> tuple[int, ...]:
    label = {start: 0}
    order = [start]
    for x in order:
        for y in (m.nxt[x], m.twin[x]):
            if y not in label:
                label[y] = len(order)
                order.append(y)
    out = []
    for x in order:
        out.append(label[m.nxt[x]])
        out.append(label[m.twin[x]])
    return tuple(out)


def canonical_code(p: Polyhedron) -> str:
    """Relabeling-invariant string; equal codes iff the solids are isomorphic."""
    _require_valid(p)
    best = None
    for mirror in (False, True):
        m = _Map(p.faces, len(p.vertices), mirror)
        for start in range(len(m.origin)):
            code = _bfs_code(m, start)
            if best is None or code < best:
                best = code
    n_e = len(p.edges)
    return f"V{len(p.vertices)}E{n_e}F{len(p.faces)}:" + ".".join(map(str, best))


# ---------------------------------------------------------------------------
# classification


class SolidTag(str, Enum):
    RCO = "RCO"
    PSEUDO_RCO = "PseudoRCO"
    OTHER = "Other"


@dataclass
class Classification:
    tag: SolidTag
    census: dict[int, int]
    v_count: int
    order: int
    vertex_transitive: bool
    evidence: list[str] = field(default_factory=list)

    def __eq__(self, other):
        if isinstance(other, (SolidTag, str)):
            return self.tag == other
        if isinstance(other, Classification):
            return (self.tag, self.census, self.v_count, self.order) == (
                other.tag,
                other.census,
                other.v_count,
                other.order,
            )
        return NotImplemented


_RCO_CENSUS = {3: 8, 4: 18}


def classify(p: Polyhedron) -> Classification:
    census = face_census(p)
    report = symmetry_group(p)
    nv = len(p.vertices)
    evidence = [
        f"census {census.counts}",
        f"V={nv}",
        f"symmetry order {report.order}",
        f"vertex orbits {report.vertex_orbit_sizes}",
    ]
    tag = SolidTag.OTHER
    if census.counts == _RCO_CENSUS and nv == 24:
        if report.order == 48:
            tag = SolidTag.RCO
        elif report.order == 16:
            tag = SolidTag.PSEUDO_RCO
    return Classification(tag, census.counts, nv, report.order, report.vertex_transitive, evidence)
