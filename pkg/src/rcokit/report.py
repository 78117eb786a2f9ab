"""Analysis summaries and the RCO versus Pseudo-RCO contrast table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructors import cantellate, equal_edge_cantellation, gyrate_cap, platonic, pseudo_rco, rco, truncate
from .polymodel import Polyhedron, face_census, squared_length, validate
from .symmetry import canonical_code, classify, isomorphism, symmetry_group
from .variants import FrameParams, check_component, skeleton, star

__all__ = ["analyze", "Row", "contrast", "format_table"]


def analyze(p: Polyhedron) -> dict:
    """Everything the ``analyze`` command reports, as plain data."""
    report = validate(p)
    out = report.as_dict()
    if not report.ok:
        return out
    census = face_census(p)
    sym = symmetry_group(p)
    out.update(
        census={str(n): c for n, c in census.counts.items()},
        regular={str(n): r for n, r in census.regular.items()},
        symmetry_order=sym.order,
        rotation_order=sym.rotation_order,
        vertex_orbits=sym.vertex_orbit_sizes,
        face_orbits=sym.face_orbit_sizes,
        vertex_transitive=sym.vertex_transitive,
        classification=classify(p).tag.value,
    )
    return out


@dataclass
class Row:
    quantity: str
    rco: object
    pseudo: object
    expect_equal: bool

    @property
    def equal(self) -> bool:
        return self.rco == self.pseudo

    @property
    def as_expected(self) -> bool:
        return self.equal == self.expect_equal


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}:{v}" for k, v in x.items()) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(map(str, x)) + "]"
    return str(x)


def contrast(frame: FrameParams | None = None) -> dict:
    """Build both final polyhedra and collect the side-by-side comparison."""
    frame = frame or FrameParams(Fraction(1, 4), 0.1)
    solids = {"rco": rco(), "pseudo": pseudo_rco()}
    facts = {}
    for key, p in solids.items():
        rep = validate(p)
        census = face_census(p)
        sym = symmetry_group(p)
        st = star(p)
        st_rep = validate(st)
        final = skeleton(st, frame)
        comps = [check_component(c) for c in final.components]
        edge_lengths = {squared_length(p.vertices[u], p.vertices[v]) for u, v in p.edges}
        facts[key] = {
            "census": census.counts,
            "all_regular": census.all_regular,
            "edge_length2": sorted(str(x) for x in edge_lengths),
            "VEF": (rep.v_count, rep.e_count, rep.f_count),
            "euler": rep.euler,
            "manifold": rep.manifold,
            "star_VEF": (st_rep.v_count, st_rep.e_count, st_rep.f_count),
            "star_euler": st_rep.euler,
            "final_components": len(final.components),
            "final_components_ok": all(c.ok and c.euler == 0 for c in comps),
            "order": sym.order,
            "rotation_order": sym.rotation_order,
            "vertex_transitive": sym.vertex_transitive,
            "vertex_orbits": sym.vertex_orbit_sizes,
            "star_order": symmetry_group(st).order,
            "tag": classify(p).tag.value,
            "code": canonical_code(p),
        }
    a, b = facts["rco"], facts["pseudo"]
    rows = [
        Row("face census", a["census"], b["census"], True),
        Row("all faces regular", a["all_regular"], b["all_regular"], True),
        Row("squared edge lengths", a["edge_length2"], b["edge_length2"], True),
        Row("V, E, F", a["VEF"], b["VEF"], True),
        Row("Euler characteristic", a["euler"], b["euler"], True),
        Row("closed 2-manifold", a["manifold"], b["manifold"], True),
        Row("star V, E, F", a["star_VEF"], b["star_VEF"], True),
        Row("star Euler characteristic", a["star_euler"], b["star_euler"], True),
        Row("final polyhedron frames", a["final_components"], b["final_components"], True),
        Row("frames closed, chi = 0", a["final_components_ok"], b["final_components_ok"], True),
        Row("symmetry order", a["order"], b["order"], False),
        Row("rotation order", a["rotation_order"], b["rotation_order"], False),
        Row("vertex-transitive", a["vertex_transitive"], b["vertex_transitive"], False),
        Row("vertex orbit sizes", a["vertex_orbits"], b["vertex_orbits"], False),
        Row("star symmetry order", a["star_order"], b["star_order"], False),
        Row("classification", a["tag"], b["tag"], False),
    ]

    cube = platonic("cube")
    s_star = equal_edge_cantellation(cube)
    gyro = gyrate_cap(solids["rco"], "z", 1)
    tt = truncate(platonic("tetrahedron"), Fraction(1, 3))
    tt_census = face_census(tt)
    identities = {
        "isomorphic(rco, pseudo_rco)": isomorphism(solids["rco"], solids["pseudo"]) is not None,
        "canonical codes differ": a["code"] != b["code"],
        f"isomorphic(cantellate(cube, {s_star}), rco)": isomorphism(cantellate(cube, s_star), solids["rco"]) is not None,
        "isomorphic(gyrate_cap(rco, z, 1, 45), pseudo_rco)": isomorphism(gyro, solids["pseudo"]) is not None,
        "isomorphic(gyrate_cap twice, rco)": isomorphism(gyrate_cap(gyro, "z", 1), solids["rco"]) is not None,
        "truncate(tetrahedron, 1/3) census": tt_census.counts,
        "truncate(tetrahedron, 1/3) equal edges": len({squared_length(tt.vertices[u], tt.vertices[v]) for u, v in tt.edges}) == 1,
    }
    expected_identities = {
        "isomorphic(rco, pseudo_rco)": False,
        "canonical codes differ": True,
        f"isomorphic(cantellate(cube, {s_star}), rco)": True,
        "isomorphic(gyrate_cap(rco, z, 1, 45), pseudo_rco)": True,
        "isomorphic(gyrate_cap twice, rco)": True,
        "truncate(tetrahedron, 1/3) census": {3: 4, 6: 4},
        "truncate(tetrahedron, 1/3) equal edges": True,
    }
    consistent = all(r.as_expected for r in rows) and identities == expected_identities
    return {
        "rows": rows,
        "identities": identities,
        "facts": facts,
        "solids": solids,
        "consistent": consistent,
    }


def format_table(result: dict, sep: str = " | ") -> str:
    rows: list[Row] = result["rows"]
    header = ("quantity", "RCO", "Pseudo-RCO", "same")
    body = [(r.quantity, _fmt(r.rco), _fmt(r.pseudo), _fmt(r.equal)) for r in rows]
    widths = [max(len(x[i]) for x in [header, *body]) for i in range(4)]

    def line(cells):
        return sep.join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(header), line(tuple("-" * w for w in widths))]
    out += [line(b) for b in body]
    out.append("")
    kw = max(len(k) for k in result["identities"])
    for k, v in result["identities"].items():
        out.append(f"{k.ljust(kw)}{sep}{_fmt(v)}")
    out.append("")
    if result["consistent"]:
        out.append("verdict: same faces, same counts, different solids (symmetry 48 vs 16, not isomorphic)")
    else:
        out.append("verdict: INCONSISTENT - computed values differ from the expected contrast")
    return "\n".join(out)
