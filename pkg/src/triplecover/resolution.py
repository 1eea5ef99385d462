"""The resolution graph, the P^1-bundle model, and the maps between them.

Three incarnations of a cover live side by side:

  * X, the affine model: pairs (z, w) over a base point satisfying the
    three quadric relations;
  * the graph: triples (base point, (z, w), [u:v]) killing all three rows
    of the determinantal matrix when contracted against (-v, u);
  * the cubic locus: pairs (base point, [u:v]) on which the binary cubic
    (b, -3a, 3d, -c) vanishes.

Forgetting (z, w) maps the graph isomorphically onto the cubic locus;
``cubic_to_graph_point`` inverts that by solving the row equations, and
``resolve_point`` is the induced map down to X.  The ``line_map`` sends a
fiber point to the direction of the line through the other two points of
its fiber; it is defined everywhere except at fat ramification points,
where the whole P^1 sits over the point instead.

Fiber enumeration is deliberately brute force (all p^2 pairs, all p+1
directions) so it can serve as an oracle for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .classify import RamificationClass, ramification_class, root_multiplicity
from .cover import CoverData, quadric_residuals
from .errors import (
    FiberNotSplit,
    InfiniteFieldUnsupported,
    NotOnCubicLocus,
    NotOnFiber,
    NotOnGraph,
)
from .fields import Field, Scalar
from .poly import MultiPoly


class P1Point:
    """A point [u:v] of the projective line, stored canonically: u = 1 when
    u != 0, otherwise (u, v) = (0, 1)."""

    __slots__ = ("field", "u", "v")

    def __init__(self, field: Field, u: Scalar, v: Scalar):
        if field.is_zero(u) and field.is_zero(v):
            raise ValueError("[0:0] is not a point of P^1")
        self.field = field
        if field.is_zero(u):
            self.u, self.v = field.zero, field.one
        else:
            self.u, self.v = field.one, field.div(v, u)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, P1Point)
            and self.field == other.field
            and (self.u, self.v) == (other.u, other.v)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.u, self.v))

    def sort_key(self):
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"[{self.field.format(self.u)}:{self.field.format(self.v)}]"

    __repr__ = __str__


@dataclass(frozen=True, order=True)
class FiberPoint:
    """A point (z, w) in the affine plane over a base point."""

    z: Scalar
    w: Scalar

    def __str__(self) -> str:
        return f"({self.z},{self.w})"


@dataclass(frozen=True)
class GraphPoint:
    base: dict
    fiber: FiberPoint
    direction: P1Point


@dataclass(frozen=True)
class LineMapReport:
    """Per-point comparison of line_map with the line through the other two
    fiber points, computed directly from coordinates."""

    entries: tuple[tuple[FiberPoint, P1Point, P1Point], ...]  # (point, expected, got)

    @property
    def ok(self) -> bool:
        return all(expected == got for _, expected, got in self.entries)


@dataclass(frozen=True)
class FiberReport:
    point: dict
    fat: bool
    ram_class: RamificationClass
    x_points: tuple[FiberPoint, ...]
    z_points: tuple[P1Point, ...]
    pairs: tuple[tuple[FiberPoint, P1Point, int], ...]  # (x, line, multiplicity)
    bijection_ok: Optional[bool]  # None at fat points, where no bijection exists


def graph_residuals(
    cover: CoverData, g: GraphPoint
) -> tuple[Scalar, Scalar, Scalar]:
    """The three row contractions -v*row[0] + u*row[1] at a candidate point."""
    f = cover.field
    assignment = dict(g.base)
    assignment["z"] = g.fiber.z
    assignment["w"] = g.fiber.w
    u, v = g.direction.u, g.direction.v
    out = []
    for left, right in cover.determinantal_matrix().evaluate(assignment):
        out.append(f.add(f.mul(f.neg(v), left), f.mul(u, right)))
    return tuple(out)


def on_graph(cover: CoverData, g: GraphPoint) -> bool:
    f = cover.field
    return all(f.is_zero(r) for r in graph_residuals(cover, g))


def on_cubic_locus(cover: CoverData, point: Mapping[str, Scalar], direction: P1Point) -> bool:
    """True iff the binary cubic vanishes at (point, direction)."""
    f = cover.field
    c3, c2, c1, c0 = cover.cubic().at(point)
    u, v = direction.u, direction.v
    value = f.add(
        f.add(f.mul(c3, f.pow(u, 3)), f.mul(c2, f.mul(f.pow(u, 2), v))),
        f.add(f.mul(c1, f.mul(u, f.pow(v, 2))), f.mul(c0, f.pow(v, 3))),
    )
    return f.is_zero(value)


def graph_to_cubic_point(cover: CoverData, g: GraphPoint) -> tuple[dict, P1Point]:
    """Forget (z, w); the image automatically lies on the cubic locus."""
    if not on_graph(cover, g):
        raise NotOnGraph(f"row residuals {graph_residuals(cover, g)} do not vanish")
    assert on_cubic_locus(cover, g.base, g.direction)
    return dict(g.base), g.direction


def cubic_to_graph_point(
    cover: CoverData, point: Mapping[str, Scalar], direction: P1Point
) -> GraphPoint:
    """Reconstruct (z, w) from a direction on the cubic locus.

    With v != 0 the first row gives z = b*(u/v) - a, otherwise the third row
    forces z = 2a; symmetrically w = c*(v/u) - d or w = 2d when u = 0.
    """
    if not on_cubic_locus(cover, point, direction):
        raise NotOnCubicLocus(f"cubic does not vanish at {direction}")
    f = cover.field
    a, b, c, d = cover.coefficients_at(point)
    u, v = direction.u, direction.v
    if not f.is_zero(v):
        z = f.sub(f.mul(b, f.div(u, v)), a)
    else:
        z = f.mul(f.scalar(2), a)
    if not f.is_zero(u):
        w = f.sub(f.mul(c, f.div(v, u)), d)
    else:
        w = f.mul(f.scalar(2), d)
    g = GraphPoint(dict(point), FiberPoint(z, w), direction)
    assert on_graph(cover, g)
    assignment = dict(point, z=z, w=w)
    assert all(f.is_zero(r) for r in quadric_residuals(cover, assignment))
    return g


def resolve_point(
    cover: CoverData, point: Mapping[str, Scalar], direction: P1Point
) -> FiberPoint:
    """The resolution morphism on points: the (z, w) part of the graph point."""
    return cubic_to_graph_point(cover, point, direction).fiber


def line_map(
    cover: CoverData, point: Mapping[str, Scalar], x: FiberPoint
) -> Optional[P1Point]:
    """Direction of the line through the other two points of the fiber of x.

    Evaluates [z+a : b], then [c : w+d], then [w-2d : z-2a], returning the
    first expression that is not [0:0]; on the quadric locus all defined
    expressions agree.  Returns None exactly at fat ramification points
    (all six entries vanish), where no line is determined.
    """
    f = cover.field
    assignment = dict(point, z=x.z, w=x.w)
    residuals = quadric_residuals(cover, assignment)
    if any(not f.is_zero(r) for r in residuals):
        raise NotOnFiber(f"quadric residuals {residuals} do not vanish at {x}")
    a, b, c, d = cover.coefficients_at(point)
    two = f.scalar(2)
    expressions = (
        (f.add(x.z, a), b),
        (c, f.add(x.w, d)),
        (f.sub(x.w, f.mul(two, d)), f.sub(x.z, f.mul(two, a))),
    )
    defined = [e for e in expressions if not (f.is_zero(e[0]) and f.is_zero(e[1]))]
    if not defined:
        return None
    for (s0, s1), (t0, t1) in zip(defined, defined[1:]):
        assert f.is_zero(f.sub(f.mul(s0, t1), f.mul(s1, t0)))
    return P1Point(f, *defined[0])


def cross_identities(cover: CoverData) -> tuple:
    """Normal forms of the pairwise cross products of the three line-map
    expressions; all three must vanish, which is what makes the expressions
    agree wherever more than one is defined."""
    names = cover.fiber_vars
    f = cover.field
    lift = lambda q: q.with_vars(names)
    a, b, c, d = lift(cover.a), lift(cover.b), lift(cover.c), lift(cover.d)
    z = MultiPoly.variable(f, names, "z")
    w = MultiPoly.variable(f, names, "w")
    exprs = ((z + a, b), (c, w + d), (w - d * 2, z - a * 2))
    out = []
    for i in range(3):
        for j in range(i + 1, 3):
            cross = exprs[i][0] * exprs[j][1] - exprs[i][1] * exprs[j][0]
            out.append(cover.normal_form(cross))
    return tuple(out)


def _require_finite(field: Field) -> None:
    if not field.is_finite:
        raise InfiniteFieldUnsupported("fiber enumeration needs a finite field")


def p1_points(field: Field) -> list[P1Point]:
    """All p + 1 points of P^1 over a prime field, in canonical order."""
    _require_finite(field)
    points = [P1Point(field, field.one, t) for t in field.elements()]
    points.append(P1Point(field, field.zero, field.one))
    return points


def cover_fiber(cover: CoverData, point: Mapping[str, Scalar]) -> list[FiberPoint]:
    """All rational points of the fiber of X over a base point, by scanning
    every (z, w) pair and keeping those with vanishing quadric residuals."""
    f = cover.field
    _require_finite(f)
    q1, q2, q3 = cover.quadrics()
    assignment = dict(point)
    found = []
    for z in f.elements():
        assignment["z"] = z
        for w in f.elements():
            assignment["w"] = w
            if not f.is_zero(q1.evaluate(assignment)):
                continue
            if not f.is_zero(q2.evaluate(assignment)):
                continue
            if not f.is_zero(q3.evaluate(assignment)):
                continue
            found.append(FiberPoint(z, w))
    return sorted(found)


def cubic_fiber(cover: CoverData, point: Mapping[str, Scalar]) -> list[P1Point]:
    """All directions [u:v] killing the cubic over a base point (all p + 1
    of them when the cubic vanishes identically there)."""
    f = cover.field
    _require_finite(f)
    return sorted(
        (q for q in p1_points(f) if on_cubic_locus(cover, point, q)),
        key=P1Point.sort_key,
    )


def line_map_oracle(cover: CoverData, point: Mapping[str, Scalar]) -> LineMapReport:
    """Check line_map against lines computed directly from fiber coordinates.

    Requires a fiber with exactly three rational points; for each of them
    the line through the other two has direction [-(w_k - w_j) : z_k - z_j].
    """
    f = cover.field
    xs = cover_fiber(cover, point)
    if len(xs) != 3:
        raise FiberNotSplit(f"fiber has {len(xs)} rational points, need 3")
    entries = []
    for i, x in enumerate(xs):
        (xj, xk) = [p for k, p in enumerate(xs) if k != i]
        expected = P1Point(f, f.neg(f.sub(xk.w, xj.w)), f.sub(xk.z, xj.z))
        got = line_map(cover, point, x)
        entries.append((x, expected, got))
    return LineMapReport(tuple(entries))


def fiber_report(cover: CoverData, point: Mapping[str, Scalar]) -> FiberReport:
    """Full picture of one fiber: both enumerations, the classification, and
    (away from fat points) the bijection between them with multiplicities."""
    f = cover.field
    fat = cover.is_fat_point(point)
    xs = cover_fiber(cover, point)
    zs = cubic_fiber(cover, point)
    ram = ramification_class(cover, point)
    pairs = []
    bijection_ok: Optional[bool] = None
    if not fat:
        bijection_ok = len(xs) == len(zs)
        z_set = set(zs)
        x_set = set(xs)
        cubic_coeffs = cover.cubic().at(point)
        for x in xs:
            q = line_map(cover, point, x)
            mult = root_multiplicity(f, cubic_coeffs, q.u, q.v)
            pairs.append((x, q, mult))
            if q not in z_set or resolve_point(cover, point, q) != x:
                bijection_ok = False
        for q in zs:
            x = resolve_point(cover, point, q)
            if x not in x_set or line_map(cover, point, x) != q:
                bijection_ok = False
    return FiberReport(
        point=dict(point),
        fat=fat,
        ram_class=ram,
        x_points=tuple(xs),
        z_points=tuple(zs),
        pairs=tuple(pairs),
        bijection_ok=bijection_ok,
    )
