"""Degree-3 cover data and its rank-3 fiber algebra.

A cover of an affine base is described by four coefficient polynomials
a, b, c, d on the base.  The total space X sits inside the plane bundle
with fiber coordinates z, w, cut out by three quadric relations:

    z*z = a*z + b*w + 2*(a*a - b*d)
    z*w = -d*z - a*w + (b*c - a*d)
    w*w = c*z + d*w + 2*(d*d - a*c)

Rewriting along these relations (as left-to-right rules) gives every
function on X a unique normal form p0 + p1*z + p2*w, so the pushforward of
the structure sheaf is a free module of rank 3 with basis {1, z, w}; the
generators z and w span the trace-zero part.  The same X is determinantal:
it is the locus where the 3x2 matrix

    [ z+a   b  ]
    [  c   w+d ]
    [ w-2d z-2a ]

has rank at most one; its three 2x2 minors coincide with the quadric
relations up to sign.  Contracting the matrix against a direction [u:v]
and eliminating z, w yields the binary cubic

    b*u^3 - 3*a*u^2*v + 3*d*u*v^2 - c*v^3,

which cuts the rank-one model of X out of the trivial P^1-bundle over the
base.  The "universal" cover is the special case where the base is affine
4-space with coordinates A, B, C, D and (a, b, c, d) = (A, B, C, D); every
other cover is its specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import FieldMismatch, NotOnVariety, VariableMismatch
from .fields import Field, Scalar, matrix_rank
from .poly import MultiPoly, parse_poly

FIBER_VARS = ("z", "w")
RESERVED_NAMES = ("z", "w", "u", "v")


@dataclass(frozen=True)
class AlgebraElement:
    """Normal form p0 + p1*z + p2*w of a function on the total space; the
    components are polynomials on the base."""

    p0: MultiPoly
    p1: MultiPoly
    p2: MultiPoly

    @property
    def components(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        return (self.p0, self.p1, self.p2)

    @property
    def is_zero(self) -> bool:
        return self.p0.is_zero and self.p1.is_zero and self.p2.is_zero

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.p0 + other.p0, self.p1 + other.p1, self.p2 + other.p2)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.p0 - other.p0, self.p1 - other.p1, self.p2 - other.p2)

    def __str__(self) -> str:
        return f"({self.p0}) + ({self.p1})*z + ({self.p2})*w"


@dataclass(frozen=True)
class DetMatrix:
    """The 3x2 matrix of fiber-linear forms whose rank-at-most-one locus is
    the total space.  Entries live in the fiber ring (base vars plus z, w)."""

    rows: tuple[tuple[MultiPoly, MultiPoly], ...]

    def minor(self, i: int, j: int) -> MultiPoly:
        (a0, a1), (b0, b1) = self.rows[i], self.rows[j]
        return a0 * b1 - a1 * b0

    def evaluate(self, assignment: Mapping[str, Scalar]):
        return tuple(
            (left.evaluate(assignment), right.evaluate(assignment))
            for left, right in self.rows
        )


@dataclass(frozen=True)
class BinaryCubic:
    """c3*u^3 + c2*u^2*v + c1*u*v^2 + c0*v^3 with base-polynomial coefficients."""

    field: Field
    base_vars: tuple[str, ...]
    c3: MultiPoly
    c2: MultiPoly
    c1: MultiPoly
    c0: MultiPoly

    @property
    def coefficients(self) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
        return (self.c3, self.c2, self.c1, self.c0)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coefficients)

    def at(self, point: Mapping[str, Scalar]) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return tuple(c.evaluate(point) for c in self.coefficients)

    def scale(self, value: Scalar) -> "BinaryCubic":
        return BinaryCubic(
            self.field, self.base_vars, *(c.scale(value) for c in self.coefficients)
        )

    def to_poly(self) -> MultiPoly:
        """The cubic as a single polynomial in base vars plus u, v."""
        names = self.base_vars + ("u", "v")
        u = MultiPoly.variable(self.field, names, "u")
        v = MultiPoly.variable(self.field, names, "v")
        monos = (u * u * u, u * u * v, u * v * v, v * v * v)
        out = MultiPoly.zero(self.field, names)
        for coeff, mono in zip(self.coefficients, monos):
            out = out + coeff.with_vars(names) * mono
        return out

    def __str__(self) -> str:
        return str(self.to_poly())


@dataclass(frozen=True)
class MinorsReport:
    """Two-way comparison of the matrix minors with the quadric relations.

    Each minor must rewrite to the zero normal form, and as a raw polynomial
    must equal a signed quadric; ``pairing`` records (minor indices, quadric
    index, sign) and ``identity_residuals`` the raw differences.
    """

    minors: tuple[MultiPoly, ...]
    reduced: tuple[AlgebraElement, ...]
    pairing: tuple[tuple[tuple[int, int], int, int], ...]
    identity_residuals: tuple[MultiPoly, ...]

    @property
    def ok(self) -> bool:
        return all(r.is_zero for r in self.reduced) and all(
            p.is_zero for p in self.identity_residuals
        )


class CoverData:
    """A degree-3 cover datum: the ground field, the base variables, and the
    four coefficient polynomials a, b, c, d."""

    def __init__(self, field: Field, base_vars: Sequence[str], a, b, c, d):
        self.field = field
        self.base_vars = tuple(base_vars)
        if len(set(self.base_vars)) != len(self.base_vars):
            raise VariableMismatch(f"duplicate base variables in {self.base_vars}")
        for name in self.base_vars:
            if name in RESERVED_NAMES:
                raise VariableMismatch(
                    f"base variable {name!r} collides with a fiber/direction coordinate"
                )
        for coeff in (a, b, c, d):
            if coeff.field != field:
                raise FieldMismatch("coefficient field differs from the cover field")
            if coeff.vars != self.base_vars:
                raise VariableMismatch("coefficient variables differ from the base")
        self.a, self.b, self.c, self.d = a, b, c, d
        self.fiber_vars = self.base_vars + FIBER_VARS

        lift = lambda q: q.with_vars(self.fiber_vars)
        af, bf, cf, df = lift(a), lift(b), lift(c), lift(d)
        z = MultiPoly.variable(field, self.fiber_vars, "z")
        w = MultiPoly.variable(field, self.fiber_vars, "w")
        # Right-hand sides of the three rewrite rules z*z -> ..., z*w -> ...,
        # w*w -> ...; the quadric relations are exactly lhs - rhs.
        self._rule_zz = af * z + bf * w + (af * af - bf * df) * 2
        self._rule_zw = -(df * z) - af * w + (bf * cf - af * df)
        self._rule_ww = cf * z + df * w + (df * df - af * cf) * 2
        self._q1 = z * z - self._rule_zz
        self._q2 = z * w - self._rule_zw
        self._q3 = w * w - self._rule_ww
        self._matrix = DetMatrix(
            rows=(
                (z + af, bf),
                (cf, w + df),
                (w - df * 2, z - af * 2),
            )
        )

    @classmethod
    def universal(cls, field: Field) -> "CoverData":
        """The cover over affine 4-space with (a, b, c, d) = (A, B, C, D)."""
        names = ("A", "B", "C", "D")
        coeffs = [MultiPoly.variable(field, names, n) for n in names]
        return cls(field, names, *coeffs)

    @classmethod
    def from_constants(cls, field: Field, values: Sequence[int]) -> "CoverData":
        """A cover over a point, from four integers (reduced into the field)."""
        a, b, c, d = (MultiPoly.constant(field, (), field.scalar(v)) for v in values)
        return cls(field, (), a, b, c, d)

    @classmethod
    def from_strings(
        cls, field: Field, base_vars: Sequence[str], a: str, b: str, c: str, d: str
    ) -> "CoverData":
        names = tuple(base_vars)
        polys = [parse_poly(text, names, field) for text in (a, b, c, d)]
        return cls(field, names, *polys)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CoverData)
            and self.field == other.field
            and self.base_vars == other.base_vars
            and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        )

    def __repr__(self) -> str:
        return (
            f"CoverData({self.field.descriptor}, vars={list(self.base_vars)}, "
            f"a={self.a}, b={self.b}, c={self.c}, d={self.d})"
        )

    # defining equations

    def quadrics(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        """The three quadric residuals cutting X out of the plane bundle."""
        return (self._q1, self._q2, self._q3)

    def determinantal_matrix(self) -> DetMatrix:
        return self._matrix

    def coefficients_at(
        self, point: Mapping[str, Scalar]
    ) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return tuple(q.evaluate(point) for q in (self.a, self.b, self.c, self.d))

    def is_fat_point(self, point: Mapping[str, Scalar]) -> bool:
        """True iff all four coefficients vanish at the base point (the fiber
        there degenerates to a single point with 2-dimensional tangent space)."""
        f = self.field
        return all(f.is_zero(v) for v in self.coefficients_at(point))

    # the rank-3 algebra

    def normal_form(self, p: MultiPoly) -> AlgebraElement:
        """Unique representative p0 + p1*z + p2*w of p modulo the quadrics.

        Rewrites z*z, z*w, w*w occurrences until the (z, w)-degree drops
        below 2; each step lowers that degree by one, so the loop terminates.
        Highest (z, w)-degree terms are eliminated first, z-power reductions
        before mixed before w-power (the result does not depend on this).
        """
        if p.vars == self.base_vars:
            p = p.with_vars(self.fiber_vars)
        elif p.vars != self.fiber_vars:
            raise VariableMismatch(
                f"expected variables {self.fiber_vars} or {self.base_vars}, got {p.vars}"
            )
        if p.field != self.field:
            raise FieldMismatch("polynomial field differs from the cover field")
        f = self.field
        nb = len(self.base_vars)
        terms = dict(p.terms)
        while True:
            best_key, target = None, None
            for exps in terms:
                i, j = exps[nb], exps[nb + 1]
                deg = i + j
                if deg < 2:
                    continue
                kind = 2 if i >= 2 else (1 if i >= 1 else 0)
                key = (deg, kind, exps)
                if best_key is None or key > best_key:
                    best_key, target = key, exps
            if target is None:
                break
            coeff = terms.pop(target)
            i, j = target[nb], target[nb + 1]
            if i >= 2:
                rule, rest = self._rule_zz, target[:nb] + (i - 2, j)
            elif i >= 1:
                rule, rest = self._rule_zw, target[:nb] + (i - 1, j - 1)
            else:
                rule, rest = self._rule_ww, target[:nb] + (i, j - 2)
            for rexps, rcoeff in rule.terms.items():
                key = tuple(x + y for x, y in zip(rest, rexps))
                acc = f.add(terms.get(key, f.zero), f.mul(coeff, rcoeff))
                if f.is_zero(acc):
                    terms.pop(key, None)
                else:
                    terms[key] = acc
        buckets = {(0, 0): {}, (1, 0): {}, (0, 1): {}}
        for exps, coeff in terms.items():
            buckets[(exps[nb], exps[nb + 1])][exps[:nb]] = coeff
        return AlgebraElement(
            MultiPoly(f, self.base_vars, buckets[(0, 0)]),
            MultiPoly(f, self.base_vars, buckets[(1, 0)]),
            MultiPoly(f, self.base_vars, buckets[(0, 1)]),
        )

    def basis(self) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
        """The module basis 1, z, w as algebra elements."""
        one = MultiPoly.constant(self.field, self.base_vars, self.field.one)
        nil = MultiPoly.zero(self.field, self.base_vars)
        return (
            AlgebraElement(one, nil, nil),
            AlgebraElement(nil, one, nil),
            AlgebraElement(nil, nil, one),
        )

    def one(self) -> AlgebraElement:
        return self.basis()[0]

    def _as_fiber_poly(self, x: AlgebraElement) -> MultiPoly:
        z = MultiPoly.variable(self.field, self.fiber_vars, "z")
        w = MultiPoly.variable(self.field, self.fiber_vars, "w")
        return (
            x.p0.with_vars(self.fiber_vars)
            + x.p1.with_vars(self.fiber_vars) * z
            + x.p2.with_vars(self.fiber_vars) * w
        )

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Product in the rank-3 algebra (expand, then take the normal form)."""
        return self.normal_form(self._as_fiber_poly(x) * self._as_fiber_poly(y))

    def trace(self, x: AlgebraElement) -> MultiPoly:
        """Trace of multiplication by x on the rank-3 module, in basis 1, z, w."""
        diag = []
        for k, e in enumerate(self.basis()):
            diag.append(self.multiply(x, e).components[k])
        return diag[0] + diag[1] + diag[2]

    # minors versus quadrics

    def minors_report(self) -> MinorsReport:
        m = self._matrix
        minors = (m.minor(0, 1), m.minor(0, 2), m.minor(1, 2))
        reduced = tuple(self.normal_form(p) for p in minors)
        # minor(0,1) = q2, minor(0,2) = q1, minor(1,2) = -q3 as raw polynomials
        pairing = (((0, 1), 1, 1), ((0, 2), 0, 1), ((1, 2), 2, -1))
        quadrics = self.quadrics()
        residuals = tuple(
            minors[k] - quadrics[qi].scale(self.field.scalar(sign))
            for k, (_, qi, sign) in enumerate(pairing)
        )
        return MinorsReport(minors, reduced, pairing, residuals)

    # the binary cubics

    def cubic(self) -> BinaryCubic:
        """The cubic (b, -3a, 3d, -c) cutting the rank-one model out of the
        trivial P^1-bundle over the base."""
        return BinaryCubic(
            self.field,
            self.base_vars,
            self.b,
            self.a.scale(self.field.scalar(-3)),
            self.d.scale(self.field.scalar(3)),
            -self.c,
        )

    def cubic_by_elimination(self) -> BinaryCubic:
        """Recover the cubic by eliminating z, w from the third matrix row.

        Solving the first two row equations gives z = b*(u/v) - a and
        w = c*(v/u) - d; substituting into -v*(w - 2d) + u*(z - 2a) = 0 and
        clearing the denominator u*v leaves a binary cubic, which must equal
        ``cubic()`` exactly.
        """
        names = self.base_vars + ("u", "v")
        lift = lambda q: q.with_vars(names)
        a, b, c, d = lift(self.a), lift(self.b), lift(self.c), lift(self.d)
        u = MultiPoly.variable(self.field, names, "u")
        v = MultiPoly.variable(self.field, names, "v")
        v_times_z = b * u - a * v  # v*z after clearing the denominator v
        u_times_w = c * v - d * u  # u*w after clearing the denominator u
        expr = u * u * v_times_z - (a * 2) * u * u * v - v * v * u_times_w + (d * 2) * u * v * v
        nb = len(self.base_vars)
        buckets = {(3, 0): {}, (2, 1): {}, (1, 2): {}, (0, 3): {}}
        for exps, coeff in expr.terms.items():
            key = (exps[nb], exps[nb + 1])
            if key not in buckets:
                raise ArithmeticError("elimination produced a term of degree != 3 in (u, v)")
            buckets[key][exps[:nb]] = coeff
        c3, c2, c1, c0 = (
            MultiPoly(self.field, self.base_vars, buckets[k])
            for k in ((3, 0), (2, 1), (1, 2), (0, 3))
        )
        return BinaryCubic(self.field, self.base_vars, c3, c2, c1, c0)

    def section_cubic(self) -> tuple[BinaryCubic, Scalar | None]:
        """The cubic (-b/6, a/2, -d/2, c/6) carried by the defining section of
        the cover, together with the scalar relating it to ``cubic()``.

        Returns (cubic, lam) with section = lam * model coefficient-wise; lam
        is None when both cubics vanish identically.
        """
        f = self.field
        half = f.from_rational(1, 2)
        sixth = f.from_rational(1, 6)
        section = BinaryCubic(
            f,
            self.base_vars,
            self.b.scale(f.neg(sixth)),
            self.a.scale(half),
            self.d.scale(f.neg(half)),
            self.c.scale(sixth),
        )
        model = self.cubic()
        lam = None
        for s_poly, m_poly in zip(section.coefficients, model.coefficients):
            if m_poly.is_zero:
                continue
            exps, coeff = next(iter(m_poly.terms.items()))
            lam = f.div(s_poly.terms.get(exps, f.zero), coeff)
            break
        if lam is None:
            if not section.is_zero:
                raise ArithmeticError("section cubic nonzero while the model cubic vanishes")
            return section, None
        for s_poly, m_poly in zip(section.coefficients, model.coefficients):
            if s_poly != m_poly.scale(lam):
                raise ArithmeticError("section cubic is not a scalar multiple of the model")
        return section, lam


def quadric_residuals(
    cover: CoverData, assignment: Mapping[str, Scalar]
) -> tuple[Scalar, Scalar, Scalar]:
    """Values of the three quadric relations at a full point (base plus z, w)."""
    return tuple(q.evaluate(assignment) for q in cover.quadrics())


def jacobian_rank(cover: CoverData, point: Mapping[str, Scalar]) -> int:
    """Rank of the Jacobian of the three quadrics at a point of the total space.

    The point must satisfy all three quadrics; the matrix is 3 x (n + 2),
    differentiating with respect to the base variables and z, w.
    """
    f = cover.field
    residuals = quadric_residuals(cover, point)
    if any(not f.is_zero(r) for r in residuals):
        raise NotOnVariety(f"quadric residuals {residuals} do not vanish")
    rows = [
        [q.derivative(name).evaluate(point) for name in cover.fiber_vars]
        for q in cover.quadrics()
    ]
    return matrix_rank(f, rows)
