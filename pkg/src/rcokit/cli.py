"""Command line interface: generate, analyze, compare, verdict.

Exit codes: 0 success, 1 usage error, 2 validation or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .constructors import SolidName, build
from .exactfield import FieldError
from .io import DecodeError, decode_document, encode, encode_mesh, to_obj, write_atomic
from .polymodel import DegenerateInputError, ValidationError
from .report import analyze, contrast, format_table
from .symmetry import DegenerateSymmetryError, congruent_up_to_scale, isomorphism
from .variants import FrameParams, StarParams, VariantError, default_star_params, skeleton, star

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3

SOLIDS = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "rco", "pseudo-rco"]
VARIANTS = ["solid", "star", "skeleton", "star-skeleton"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_height(text: str) -> tuple[int, Fraction]:
    try:
        n, t = text.split("=", 1)
        return int(n), Fraction(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n=t (e.g. 4=1/4), got {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rcokit", description="Exact RCO / Pseudo-RCO polyhedron toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="build a solid or one of its variants")
    gen.add_argument("--solid", required=True, choices=SOLIDS)
    gen.add_argument("--variant", default="solid", choices=VARIANTS)
    gen.add_argument("--height", action="append", type=_parse_height, default=[], metavar="n=t",
                     help="pyramid height factor for n-gon faces (repeatable)")
    gen.add_argument("--inset", type=_fraction, default=Fraction(1, 4))
    gen.add_argument("--thickness", type=float, default=0.1)
    gen.add_argument("--out", type=Path, help="output file (default: stdout)")
    gen.add_argument("--format", default="json", choices=["json", "obj"])
    gen.add_argument("--precision", type=int, default=15)

    ana = sub.add_parser("analyze", help="validate and analyze an exact JSON document")
    ana.add_argument("file", type=Path)
    ana.add_argument("--json", action="store_true")
    ana.add_argument("--plot", type=Path, help="also render the solid to this image file")

    cmp_ = sub.add_parser("compare", help="compare two exact JSON documents")
    cmp_.add_argument("file1", type=Path)
    cmp_.add_argument("file2", type=Path)
    cmp_.add_argument("--witness", action="store_true", help="print the vertex mapping")
    cmp_.add_argument("--json", action="store_true")

    ver = sub.add_parser("verdict", help="build both final polyhedra and print the contrast table")
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--figures", type=Path, help="directory for rendered figures")
    return parser


def _emit(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        write_atomic(out, data)


def _read(path: Path):
    return decode_document(path.read_bytes())


def cmd_generate(args) -> int:
    if not 6 <= args.precision <= 17:
        raise UsageError("--precision must lie in 6..17")
    solid = build(SolidName.parse(args.solid))
    meta = {"name": args.solid, "variant": args.variant, "generator": "rcokit"}
    if args.variant in ("star", "star-skeleton"):
        params = default_star_params(solid)
        if args.height:
            params = StarParams({**params.heights, **dict(args.height)})
        meta["heights"] = {str(n): str(t) for n, t in sorted(params.heights.items())}
        solid = star(solid, params)
    if args.variant in ("skeleton", "star-skeleton"):
        frame = FrameParams(args.inset, args.thickness)
        meta.update(inset=str(frame.inset), thickness=frame.thickness)
        mesh = skeleton(solid, frame, label=f"{args.solid}/{args.variant}")
        data = to_obj(mesh, args.precision) if args.format == "obj" else encode_mesh(mesh, meta)
    else:
        data = to_obj(solid, args.precision) if args.format == "obj" else encode(solid, meta)
    _emit(data, args.out)
    return EXIT_OK


def _print_analysis(info: dict) -> None:
    print(f"V={info['V']} E={info['E']} F={info['F']} euler={info['euler']}")
    print(f"manifold={info['manifold']} planar_faces={info['planar_faces']} "
          f"convexity_verified={info['convexity_verified']}")
    for d in info["defects"]:
        print(f"defect: {d}")
    if "census" not in info:
        return
    census = ", ".join(f"{n}-gon: {c}" for n, c in info["census"].items())
    regular = all(info["regular"].values())
    print(f"census: {census} (all regular: {regular})")
    print(f"symmetry order={info['symmetry_order']} rotation order={info['rotation_order']}")
    print(f"vertex orbits={info['vertex_orbits']} vertex-transitive={info['vertex_transitive']}")
    print(f"face orbits={info['face_orbits']}")
    print(f"classification={info['classification']}")


def cmd_analyze(args) -> int:
    p, _ = _read(args.file)
    info = analyze(p)
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        _print_analysis(info)
    if args.plot:
        from .plotting import render_solid

        render_solid(p, args.plot, title=info.get("classification", ""))
    return EXIT_OK


def cmd_compare(args) -> int:
    a, _ = _read(args.file1)
    b, _ = _read(args.file2)
    vmap = isomorphism(a, b)
    sim = congruent_up_to_scale(a, b)
    result = {"isomorphic": vmap is not None, "congruent_up_to_scale": sim is not None}
    if args.witness:
        result["witness"] = {str(k): v for k, v in sorted(vmap.items())} if vmap else None
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        print(f"isomorphic: {'yes' if result['isomorphic'] else 'no'}")
        print(f"congruent up to isometry and scale: {'yes' if result['congruent_up_to_scale'] else 'no'}")
        if args.witness and vmap:
            print("witness: " + " ".join(f"{k}->{v}" for k, v in sorted(vmap.items())))
    return EXIT_OK


def cmd_verdict(args) -> int:
    start = time.perf_counter()
    result = contrast()
    elapsed = time.perf_counter() - start
    if args.json:
        payload = {
            "rows": [
                {"quantity": r.quantity, "rco": _jsonable(r.rco), "pseudo_rco": _jsonable(r.pseudo),
                 "same": r.equal}
                for r in result["rows"]
            ],
            "identities": {k: _jsonable(v) for k, v in result["identities"].items()},
            "consistent": result["consistent"],
            "seconds": round(elapsed, 3),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(format_table(result))
        print(f"({elapsed:.1f} s)")
    if args.figures:
        from .plotting import render_contrast

        for path in render_contrast(result, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK if result["consistent"] else EXIT_DOMAIN


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): v for k, v in x.items()}
    if isinstance(x, tuple):
        return list(x)
    return x


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "compare": cmd_compare,
    "verdict": cmd_verdict,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"rcokit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecodeError, ValidationError, VariantError, FieldError, DegenerateInputError,
            DegenerateSymmetryError, ValueError) as exc:
        print(f"rcokit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"rcokit: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
