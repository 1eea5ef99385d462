"""Ramification classification via the root pattern of the binary cubic.

Over a base point y the cubic (b, -3a, 3d, -c) specializes to a binary
cubic form in (u, v).  Its root multiset over the algebraic closure decides
how the fiber over y ramifies:

    three simple roots      -> Unramified
    one double, one simple  -> SimpleDouble
    one triple root         -> CurvilinearTriple
    identically zero        -> FatTriple (all of a, b, c, d vanish at y)

Multiplicities are detected with gcd(g, g') on the dehomogenization
g(t) = f(t, 1), never by root finding, so the answer is correct even when
the roots live in an extension field; a root at [1:0] shows up as a degree
deficit of g and is folded back in by bookkeeping.  The characteristic is
at least 5, so derivatives of cubics behave classically.
"""

from __future__ import annotations

import enum
from typing import Mapping, Sequence

from .cover import CoverData
from .fields import Field, Scalar
from .poly import MultiPoly


class RamificationClass(enum.Enum):
    UNRAMIFIED = "Unramified"
    SIMPLE_DOUBLE = "SimpleDouble"
    CURVILINEAR_TRIPLE = "CurvilinearTriple"
    FAT_TRIPLE = "FatTriple"

    def __str__(self) -> str:
        return self.value


# -- univariate helpers on ascending coefficient lists ----------------------

def _trim(field: Field, coeffs: list) -> list:
    out = list(coeffs)
    while out and field.is_zero(out[-1]):
        out.pop()
    return out


def _degree(coeffs: list) -> int:
    return len(coeffs) - 1  # zero polynomial: -1


def _derivative(field: Field, coeffs: list) -> list:
    return _trim(field, [field.mul(field.scalar(k), c) for k, c in enumerate(coeffs)][1:])


def _mod(field: Field, f: list, g: list) -> list:
    """Remainder of f by g (g nonzero), ascending coefficients."""
    out = list(f)
    lead = g[-1]
    while _degree(out) >= _degree(g) and out:
        shift = _degree(out) - _degree(g)
        factor = field.div(out[-1], lead)
        for k, c in enumerate(g):
            out[k + shift] = field.sub(out[k + shift], field.mul(factor, c))
        out = _trim(field, out)
    return out


def poly_gcd(field: Field, f: Sequence, g: Sequence) -> list:
    """Monic gcd of two univariate polynomials (ascending coefficients)."""
    a, b = _trim(field, list(f)), _trim(field, list(g))
    while b:
        a, b = b, _mod(field, a, b)
    if a:
        lead_inv = field.inv(a[-1])
        a = [field.mul(lead_inv, c) for c in a]
    return a


def _divide_out_root(field: Field, coeffs: list, t0) -> tuple[list, Scalar]:
    """Synthetic division by (t - t0): returns (quotient, remainder)."""
    quotient = []
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(c, field.mul(t0, acc))
        quotient.append(acc)
    remainder = quotient.pop()
    quotient.reverse()
    return quotient, remainder


def root_multiplicity(
    field: Field, coeffs: tuple[Scalar, Scalar, Scalar, Scalar], u: Scalar, v: Scalar
) -> int:
    """Multiplicity of the point [u:v] as a root of the binary cubic with
    coefficients (c3, c2, c1, c0) for u^3, u^2 v, u v^2, v^3."""
    c3, c2, c1, c0 = coeffs
    g = _trim(field, [c0, c1, c2, c3])  # g(t) = f(t, 1), t = u/v
    if not g:
        raise ValueError("the zero cubic has no well-defined root multiplicities")
    if field.is_zero(v):
        return 3 - _degree(g)
    t0 = field.div(u, v)
    count = 0
    while g:
        quotient, remainder = _divide_out_root(field, g, t0)
        if not field.is_zero(remainder):
            break
        count += 1
        g = _trim(field, quotient)
    return count


# -- classification ----------------------------------------------------------

def ramification_class(cover: CoverData, point: Mapping[str, Scalar]) -> RamificationClass:
    """Classify the fiber over a base point by the cubic's root pattern."""
    field = cover.field
    c3, c2, c1, c0 = cover.cubic().at(point)
    g = _trim(field, [c0, c1, c2, c3])
    if not g:
        return RamificationClass.FAT_TRIPLE
    d = _degree(g)  # multiplicity of the root at [1:0] is 3 - d
    if d == 0:
        return RamificationClass.CURVILINEAR_TRIPLE
    if d == 1:
        return RamificationClass.SIMPLE_DOUBLE  # double root at infinity
    k = _degree(poly_gcd(field, g, _derivative(field, g)))
    if d == 3:
        return (
            RamificationClass.UNRAMIFIED,
            RamificationClass.SIMPLE_DOUBLE,
            RamificationClass.CURVILINEAR_TRIPLE,
        )[k]
    # d == 2: simple root at infinity plus a quadratic finite part
    if k == 0:
        return RamificationClass.UNRAMIFIED
    return RamificationClass.SIMPLE_DOUBLE


def branch_discriminant(cover: CoverData) -> MultiPoly:
    """Discriminant of the cubic as a polynomial on the base.

    For p*u^3 + q*u^2*v + r*u*v^2 + s*v^3 this is the classical
    18*p*q*r*s - 4*q^3*s + q^2*r^2 - 4*p*r^3 - 27*p^2*s^2; a base point lies
    in the branch locus exactly where it vanishes (in particular everywhere
    the cubic vanishes identically).
    """
    p, q, r, s = cover.cubic().coefficients
    return (
        (p * q * r * s) * 18
        - (q * q * q * s) * 4
        + q * q * r * r
        - (p * r * r * r) * 4
        - (p * p * s * s) * 27
    )


def cover_from_cubic(field: Field, coefficients: Sequence[int]) -> CoverData:
    """Constant-coefficient cover over a point whose cubic has the given
    (c3, c2, c1, c0): inverts (b, -3a, 3d, -c) via a = -c2/3, d = c1/3,
    b = c3, c = -c0."""
    c3, c2, c1, c0 = (field.scalar(v) for v in coefficients)
    third = field.from_rational(1, 3)
    a = field.neg(field.mul(c2, third))
    d = field.mul(c1, third)
    b = c3
    c = field.neg(c0)
    consts = [MultiPoly.constant(field, (), v) for v in (a, b, c, d)]
    return CoverData(field, (), *consts)
