"""Exact-arithmetic toolkit for the rhombicuboctahedron and its gyrated twin.

Builds the Platonic solids, the RCO and the Pseudo-RCO over quadratic
fields, derives star and strut-frame variants, and computes symmetry groups
and combinatorial isomorphism exactly.
"""

from .constructors import (
    SolidName,
    build,
    cantellate,
    equal_edge_cantellation,
    gyrate_cap,
    platonic,
    pseudo_rco,
    rco,
    truncate,
)
from .exactfield import Isometry, Point3, QuadRat, orient3d, qr, qr_arith, qr_sign
from .io import decode, encode, to_obj
from .polymodel import Polyhedron, ValidationReport, convex_hull, face_census, validate
from .symmetry import (
    SolidTag,
    SymmetryReport,
    are_isomorphic,
    canonical_code,
    classify,
    isomorphism,
    symmetry_group,
)
from .variants import FrameParams, StarParams, TriangleMesh, skeleton, star

__version__ = "0.1.0"

__all__ = [
    "FrameParams",
    "Isometry",
    "Point3",
    "Polyhedron",
    "QuadRat",
    "SolidName",
    "SolidTag",
    "StarParams",
    "SymmetryReport",
    "TriangleMesh",
    "ValidationReport",
    "are_isomorphic",
    "build",
    "canonical_code",
    "cantellate",
    "classify",
    "convex_hull",
    "decode",
    "encode",
    "equal_edge_cantellation",
    "face_census",
    "gyrate_cap",
    "isomorphism",
    "orient3d",
    "platonic",
    "pseudo_rco",
    "qr",
    "qr_arith",
    "qr_sign",
    "rco",
    "skeleton",
    "star",
    "symmetry_group",
    "to_obj",
    "truncate",
    "validate",
]
