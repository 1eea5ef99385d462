"""Symbolic identity suite for a cover datum.

Every check here is an exact polynomial identity, so it holds for a given
cover exactly when the corresponding computation reduces to zero; run on
the universal cover the checks certify the identities once and for all,
and on a specialized cover they re-certify the specialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import CoverData
from .resolution import cross_identities


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def symbolic_suite(cover: CoverData) -> list[CheckResult]:
    results = []

    report = cover.minors_report()
    results.append(
        CheckResult(
            "minor-reduction",
            all(r.is_zero for r in report.reduced),
            "all three 2x2 minors rewrite to the zero normal form",
        )
    )
    signs = ",".join(
        f"minor{pair}={'+' if sign > 0 else '-'}q{qi + 1}"
        for pair, qi, sign in report.pairing
    )
    results.append(
        CheckResult(
            "minor-quadric-identity",
            all(p.is_zero for p in report.identity_residuals),
            f"raw minors match signed quadrics ({signs})",
        )
    )

    basis = cover.basis()
    assoc_ok = True
    for x in basis:
        for y in basis:
            for t in basis:
                lhs = cover.multiply(cover.multiply(x, y), t)
                rhs = cover.multiply(x, cover.multiply(y, t))
                if not (lhs - rhs).is_zero:
                    assoc_ok = False
    results.append(
        CheckResult(
            "algebra-associativity",
            assoc_ok,
            "27 basis triples have zero associativity defect",
        )
    )

    comm_ok = all(
        (cover.multiply(x, y) - cover.multiply(y, x)).is_zero
        for x in basis
        for y in basis
    )
    results.append(
        CheckResult("algebra-commutativity", comm_ok, "basis products commute")
    )

    one, gen_z, gen_w = basis
    traces = (cover.trace(one), cover.trace(gen_z), cover.trace(gen_w))
    three = cover.field.scalar(3)
    trace_ok = (
        traces[0].constant_value() == three if not traces[0].is_zero else False
    ) and traces[1].is_zero and traces[2].is_zero
    results.append(
        CheckResult(
            "trace-zero-generators",
            trace_ok,
            "trace(1) = 3 and the generators z, w are trace-free",
        )
    )

    elim = cover.cubic_by_elimination()
    model = cover.cubic()
    results.append(
        CheckResult(
            "cubic-elimination-match",
            all(
                (e - m).is_zero
                for e, m in zip(elim.coefficients, model.coefficients)
            ),
            "row elimination reproduces the model cubic coefficient-wise",
        )
    )

    section, lam = cover.section_cubic()
    if lam is None:
        detail = "section and model cubics both vanish (scale undetermined)"
        scale_ok = section.is_zero and model.is_zero
    else:
        detail = f"section cubic = {cover.field.format(lam)} * model cubic"
        scale_ok = all(
            s == m.scale(lam)
            for s, m in zip(section.coefficients, model.coefficients)
        )
    results.append(CheckResult("section-cubic-scale", scale_ok, detail))

    crosses = cross_identities(cover)
    results.append(
        CheckResult(
            "line-map-consensus",
            all(c.is_zero for c in crosses),
            "pairwise cross products of the line-map expressions reduce to zero",
        )
    )

    return results
