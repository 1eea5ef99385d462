"""Command line interface and the cover-spec file format.

A cover file is line oriented ``key = value`` with keys field, vars, a, b,
c, d; ``#`` starts a comment and blank lines are skipped:

    field = Fp:7
    vars = s, t
    a = s
    b = 1
    c = t
    d = 0

``vars`` may be empty (a cover over a point).  The coefficient expressions
use the polynomial grammar from triplecover.poly.  Output of every command
depends only on its inputs; exit codes are 0 (success), 1 (a verification
check failed), 2 (usage or input errors).
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Mapping, Optional, Sequence, TextIO

from . import checks, classify, demos, resolution
from .cover import CoverData, jacobian_rank
from .errors import CoverFileError, ExpressionSyntaxError, TripleCoverError
from .fields import Field, Scalar, field_make
from .poly import parse_poly, parse_scalar
from .resolution import FiberPoint, P1Point

MAX_ENUMERATION = 10**6


# -- cover-spec files --------------------------------------------------------

_KEYS = ("field", "vars", "a", "b", "c", "d")


def parse_cover_text(text: str) -> CoverData:
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CoverFileError("expected 'key = value'", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise CoverFileError(f"unknown key {key!r}", lineno)
        if key in values:
            raise CoverFileError(f"duplicate key {key!r}", lineno)
        values[key] = value.strip()
        lines[key] = lineno
    for key in _KEYS:
        if key not in values:
            raise CoverFileError(f"missing key {key!r}")
    try:
        field = field_make(values["field"])
    except ValueError as err:
        raise CoverFileError(str(err), lines["field"]) from None
    names = tuple(v.strip() for v in values["vars"].split(",") if v.strip())
    polys = []
    for key in ("a", "b", "c", "d"):
        try:
            polys.append(parse_poly(values[key], names, field))
        except ExpressionSyntaxError as err:
            raise CoverFileError(f"bad expression for {key!r}: {err}", lines[key]) from None
    return CoverData(field, names, *polys)


def load_cover(path: str) -> CoverData:
    with open(path, encoding="utf-8") as handle:
        return parse_cover_text(handle.read())


def format_cover(cover: CoverData) -> str:
    lines = [
        f"field = {cover.field.descriptor}",
        f"vars = {', '.join(cover.base_vars)}",
        f"a = {cover.a}",
        f"b = {cover.b}",
        f"c = {cover.c}",
        f"d = {cover.d}",
    ]
    return "\n".join(lines) + "\n"


# -- argument parsing helpers -------------------------------------------------

def _parse_point(cover: CoverData, text: Optional[str]) -> dict[str, Scalar]:
    point: dict[str, Scalar] = {}
    if text:
        for chunk in text.split(","):
            name, sep, value = chunk.partition("=")
            if not sep:
                raise ValueError(f"bad point component {chunk!r} (expected name=value)")
            name = name.strip()
            if name not in cover.base_vars:
                raise ValueError(f"unknown base variable {name!r}")
            point[name] = parse_scalar(value.strip(), cover.field)
    missing = [v for v in cover.base_vars if v not in point]
    if missing:
        raise ValueError(f"missing values for base variables: {', '.join(missing)}")
    return point


def _parse_fiber(field: Field, text: str) -> FiberPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bad fiber point {text!r} (expected z,w)")
    return FiberPoint(parse_scalar(parts[0], field), parse_scalar(parts[1], field))


def _parse_direction(field: Field, text: str) -> P1Point:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"bad direction {text!r} (expected u:v)")
    return P1Point(field, parse_scalar(parts[0], field), parse_scalar(parts[1], field))


def _format_point(point: Mapping[str, Scalar], cover: CoverData) -> str:
    if not cover.base_vars:
        return "-"
    f = cover.field
    return ",".join(f"{name}={f.format(point[name])}" for name in cover.base_vars)


# -- commands -----------------------------------------------------------------

def _cmd_verify(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    out.write(
        f"cover: field={cover.field.descriptor} vars=({','.join(cover.base_vars)}) "
        f"a={cover.a} b={cover.b} c={cover.c} d={cover.d}\n"
    )
    results = checks.symbolic_suite(cover)
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        out.write(f"check {res.name}: {status} ({res.detail})\n")
    passed = sum(1 for r in results if r.ok)
    out.write(f"result: {'PASS' if passed == len(results) else 'FAIL'} ({passed}/{len(results)})\n")
    return 0 if passed == len(results) else 1


def _cmd_classify(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    point = _parse_point(cover, args.point)
    cls = classify.ramification_class(cover, point)
    disc = classify.branch_discriminant(cover).evaluate(point)
    out.write(f"point: {_format_point(point, cover)}\n")
    out.write(f"class: {cls}\n")
    out.write(f"discriminant: {cover.field.format(disc)}\n")
    out.write(f"fat: {'yes' if cover.is_fat_point(point) else 'no'}\n")
    return 0


def _fiber_line(cover: CoverData, point: Mapping[str, Scalar]) -> str:
    report = resolution.fiber_report(cover, point)
    xs = " ".join(str(x) for x in report.x_points)
    zs = " ".join(str(q) for q in report.z_points)
    if report.fat:
        bij = "n/a"
    else:
        bij = "ok" if report.bijection_ok else "FAIL"
    lines = "-"
    if report.ram_class is classify.RamificationClass.UNRAMIFIED and len(report.x_points) == 3:
        lines = "ok" if resolution.line_map_oracle(cover, point).ok else "FAIL"
    return (
        f"point {_format_point(point, cover)} | class={report.ram_class} "
        f"fat={'yes' if report.fat else 'no'} |X|={len(report.x_points)} "
        f"|Z|={len(report.z_points)} bijection={bij} lines={lines} "
        f"X=[{xs}] Z=[{zs}]"
    )


def _cmd_fibers(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    if args.all and args.point is not None:
        raise ValueError("give either --point or --all, not both")
    if args.all:
        if not cover.field.is_finite:
            raise ValueError("--all needs a finite field")
        n = len(cover.base_vars)
        total = cover.field.order**n
        if total > MAX_ENUMERATION:
            raise ValueError(
                f"base has {total} points (> {MAX_ENUMERATION}); give explicit --point"
            )
        ok = True
        for combo in itertools.product(list(cover.field.elements()), repeat=n):
            point = dict(zip(cover.base_vars, combo))
            line = _fiber_line(cover, point)
            ok = ok and ("FAIL" not in line)
            out.write(line + "\n")
        return 0 if ok else 1
    point = _parse_point(cover, args.point)
    line = _fiber_line(cover, point)
    out.write(line + "\n")
    return 0 if "FAIL" not in line else 1


def _cmd_resolve(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    point = _parse_point(cover, args.point)
    direction = _parse_direction(cover.field, args.dir)
    g = resolution.cubic_to_graph_point(cover, point, direction)
    base, dir_back = resolution.graph_to_cubic_point(cover, g)
    assert dir_back == direction and base == dict(point)
    f = cover.field
    assignment = dict(point, z=g.fiber.z, w=g.fiber.w)
    rank = jacobian_rank(cover, assignment)
    residuals = resolution.graph_residuals(cover, g)
    out.write(f"point: {_format_point(point, cover)}\n")
    out.write(f"direction: {direction}\n")
    out.write(f"resolved: z={f.format(g.fiber.z)}, w={f.format(g.fiber.w)}\n")
    out.write(f"graph residuals: {', '.join(f.format(r) for r in residuals)}\n")
    out.write(f"jacobian rank: {rank}\n")
    return 0


def _cmd_psi(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    point = _parse_point(cover, args.point)
    x = _parse_fiber(cover.field, args.fiber)
    image = resolution.line_map(cover, point, x)
    f = cover.field
    where = f"psi(z={f.format(x.z)}, w={f.format(x.w)})"
    if image is None:
        out.write(f"{where} = indeterminate (fat ramification point)\n")
    else:
        out.write(f"{where} = {image}\n")
    return 0


def _cmd_sigma(args, out: TextIO) -> int:
    cover = load_cover(args.spec)
    section, lam = cover.section_cubic()
    out.write(f"section cubic: {section}\n")
    out.write(f"model cubic: {cover.cubic()}\n")
    if lam is None:
        out.write("scale: n/a (both cubics vanish identically)\n")
    else:
        out.write(f"scale: {cover.field.format(lam)}\n")
    return 0


def _cmd_demo(args, out: TextIO) -> int:
    example = demos.CONE_EXAMPLES[args.example]()
    p = args.p
    census = demos.cone_census(example, p)
    probe = demos.smoothness_probe(example, p)
    out.write(f"demo {example.name} p={p}\n")
    out.write(f"|X| = {census.x_count}\n")
    out.write(f"|Graph| = {census.graph_count}\n")
    out.write(f"vertex fiber size = {census.vertex_fiber} (expected {p + 1})\n")
    out.write(f"off-vertex fibers bijective: {'yes' if census.off_vertex_ok else 'NO'}\n")
    out.write(f"census: {'PASS' if census.ok else 'FAIL'}\n")
    out.write(
        f"graph smoothness probe: {probe.graph_points} points, "
        f"{len(probe.graph_deficient)} deficient\n"
    )
    vertex_only = probe.x_singular_is_vertex(example)
    out.write(
        f"X singular points: {len(probe.x_deficient)} "
        f"(vertex only: {'yes' if vertex_only else 'NO'})\n"
    )
    smooth_ok = probe.ok and vertex_only
    out.write(f"smoothness: {'PASS' if smooth_ok else 'FAIL'}\n")
    return 0 if census.ok and smooth_ok else 1


# Which library operations each command exercises (kept as data so the test
# suite can assert that every public operation is reachable from the CLI).
COMMAND_OPERATIONS = {
    "verify": [
        "field_make", "parse_poly", "quadrics", "determinantal_matrix",
        "minors_report", "normal_form", "multiply", "trace", "cubic",
        "cubic_by_elimination", "section_cubic", "cross_identities",
    ],
    "classify": [
        "field_make", "parse_poly", "evaluate", "ramification_class",
        "branch_discriminant", "is_fat_point",
    ],
    "fibers": [
        "field_make", "parse_poly", "evaluate", "cover_fiber", "cubic_fiber",
        "fiber_report", "line_map", "resolve_point", "root_multiplicity",
        "ramification_class", "line_map_oracle", "is_fat_point",
        "on_cubic_locus", "cubic",
    ],
    "resolve": [
        "field_make", "parse_poly", "evaluate", "cubic_to_graph_point",
        "graph_to_cubic_point", "graph_residuals", "on_cubic_locus",
        "jacobian_rank", "quadric_residuals",
    ],
    "psi": ["field_make", "parse_poly", "evaluate", "line_map", "quadric_residuals"],
    "sigma": ["field_make", "parse_poly", "section_cubic", "cubic"],
    "demo": ["cone_census", "smoothness_probe", "projective_points", "matrix_rank"],
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triplecover",
        description="exact computations with degree-3 cover data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the symbolic identity suite on a cover")
    p_verify.add_argument("spec", help="cover-spec file")
    p_verify.set_defaults(handler=_cmd_verify)

    p_classify = sub.add_parser("classify", help="ramification class at a base point")
    p_classify.add_argument("spec")
    p_classify.add_argument("--point", default=None, help="base point, e.g. s=1,t=2")
    p_classify.set_defaults(handler=_cmd_classify)

    p_fibers = sub.add_parser("fibers", help="enumerate and compare the fibers (finite fields)")
    p_fibers.add_argument("spec")
    p_fibers.add_argument("--point", default=None)
    p_fibers.add_argument("--all", action="store_true", help="every base point")
    p_fibers.set_defaults(handler=_cmd_fibers)

    p_resolve = sub.add_parser("resolve", help="map a direction on the cubic locus down to X")
    p_resolve.add_argument("spec")
    p_resolve.add_argument("--point", default=None)
    p_resolve.add_argument("--dir", required=True, help="direction, e.g. 1:0")
    p_resolve.set_defaults(handler=_cmd_resolve)

    p_psi = sub.add_parser("psi", help="line through the other two fiber points")
    p_psi.add_argument("spec")
    p_psi.add_argument("--point", default=None)
    p_psi.add_argument("--fiber", required=True, help="fiber point, e.g. 4,0")
    p_psi.set_defaults(handler=_cmd_psi)

    p_sigma = sub.add_parser("sigma", help="section cubic and its scale against the model cubic")
    p_sigma.add_argument("spec")
    p_sigma.set_defaults(handler=_cmd_sigma)

    p_demo = sub.add_parser("demo", help="census of a cone resolution over F_p")
    p_demo.add_argument("example", choices=sorted(demos.CONE_EXAMPLES))
    p_demo.add_argument("--p", type=int, required=True)
    p_demo.set_defaults(handler=_cmd_demo)

    return parser


def run_command(argv: Sequence[str], out: Optional[TextIO] = None) -> int:
    """Run one CLI command; returns the process exit code."""
    stream = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as stop:  # argparse handles --help and usage errors
        return int(stop.code or 0)
    try:
        return args.handler(args, stream)
    except (TripleCoverError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
