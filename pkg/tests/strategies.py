"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from triplecover import MultiPoly, PrimeField, RationalField

QQ = RationalField()
F5 = PrimeField(5)
F7 = PrimeField(7)
F13 = PrimeField(13)


def scalars(field):
    if field.is_finite:
        return st.integers(0, field.order - 1)
    return st.fractions(
        min_value=Fraction(-8), max_value=Fraction(8), max_denominator=12
    )


def polys(field, vars, max_degree=3, max_terms=4):
    exps = st.tuples(*([st.integers(0, max_degree)] * len(vars)))
    return st.dictionaries(exps, scalars(field), max_size=max_terms).map(
        lambda terms: MultiPoly(field, vars, terms)
    )
