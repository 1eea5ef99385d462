"""Sparse multivariate polynomials over an exact field, plus a text parser.

A MultiPoly maps exponent vectors to nonzero coefficients over a fixed,
ordered tuple of variable names; the map is kept canonical (no zero
coefficients), so equality of polynomials is equality of dicts.  For
example, over Q with vars ("s", "t"):

    3*s^2 - t   <->   {(2, 0): Fraction(3), (0, 1): Fraction(-1)}

Printing uses graded lexicographic order on the declared variables, and
``parse_poly(str(p), p.vars, p.field) == p`` holds for every polynomial.

Expression grammar (a leading sign is accepted on top of the core grammar
so that printed polynomials always re-parse):

    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' nat)?

'*' is mandatory between factors; exponents are bounded by 2**31 - 1.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    ExpressionSyntaxError,
    FieldMismatch,
    MissingAssignment,
    UnknownVariable,
    VariableMismatch,
)
from .fields import Field, Scalar

_MAX_EXPONENT = 2**31 - 1


class MultiPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: Field, vars: Sequence[str], terms: Mapping[tuple, Scalar]):
        self.field = field
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exps, coeff in terms.items():
            key = tuple(exps)
            if len(key) != n:
                raise VariableMismatch(
                    f"exponent vector {key} does not match {n} variables"
                )
            if not field.is_zero(coeff):
                clean[key] = coeff
        self.terms = clean

    # construction

    @classmethod
    def zero(cls, field: Field, vars: Sequence[str]) -> "MultiPoly":
        return cls(field, vars, {})

    @classmethod
    def constant(cls, field: Field, vars: Sequence[str], value: Scalar) -> "MultiPoly":
        return cls(field, vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def variable(cls, field: Field, vars: Sequence[str], name: str) -> "MultiPoly":
        names = tuple(vars)
        if name not in names:
            raise UnknownVariable(f"{name!r} is not one of {names}")
        exps = tuple(1 if v == name else 0 for v in names)
        return cls(field, names, {exps: field.one})

    # predicates and views

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self._index(name)
        return max((e[i] for e in self.terms), default=0)

    def constant_value(self) -> Scalar:
        zero_key = (0,) * len(self.vars)
        for exps in self.terms:
            if exps != zero_key:
                raise ValueError(f"{self} is not a constant")
        return self.terms.get(zero_key, self.field.zero)

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not one of {self.vars}") from None

    def _check(self, other: "MultiPoly") -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"mixed fields {self.field.descriptor} and {other.field.descriptor}"
            )
        if self.vars != other.vars:
            raise VariableMismatch(f"mixed variable lists {self.vars} and {other.vars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.field, self.vars, self.field.scalar(other))
        return NotImplemented

    # ring operations

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = f.add(out.get(exps, f.zero), coeff)
            if f.is_zero(acc):
                out.pop(exps, None)
            else:
                out[exps] = acc
        return MultiPoly(f, self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        f = self.field
        return MultiPoly(f, self.vars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return self.scale(self.field.scalar(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        f = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = f.add(out.get(exps, f.zero), f.mul(c1, c2))
                if f.is_zero(acc):
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return MultiPoly(f, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = MultiPoly.constant(self.field, self.vars, self.field.one)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, value: Scalar) -> "MultiPoly":
        f = self.field
        if f.is_zero(value):
            return MultiPoly.zero(f, self.vars)
        return MultiPoly(f, self.vars, {e: f.mul(c, value) for e, c in self.terms.items()})

    # evaluation and calculus

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Scalar:
        """Exact value at a point; every declared variable must be assigned."""
        try:
            point = [assignment[v] for v in self.vars]
        except KeyError as missing:
            raise MissingAssignment(f"no value for variable {missing.args[0]!r}") from None
        return self.evaluate_values(point)

    def evaluate_values(self, point: Sequence[Scalar]) -> Scalar:
        f = self.field
        acc = f.zero
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, exps):
                if e == 1:
                    val = f.mul(val, x)
                elif e:
                    val = f.mul(val, f.pow(x, e))
            acc = f.add(acc, val)
        return acc

    def derivative(self, name: str) -> "MultiPoly":
        i = self._index(name)
        f = self.field
        out: dict = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1 :]
            acc = f.add(out.get(key, f.zero), f.mul(coeff, f.scalar(e)))
            if f.is_zero(acc):
                out.pop(key, None)
            else:
                out[key] = acc
        return MultiPoly(f, self.vars, out)

    # variable-list surgery

    def with_vars(self, new_vars: Sequence[str]) -> "MultiPoly":
        """Re-express over a variable list containing all current names."""
        names = tuple(new_vars)
        slots = []
        for v in self.vars:
            if v not in names:
                raise UnknownVariable(f"{v!r} missing from target variables {names}")
            slots.append(names.index(v))
        out = {}
        for exps, coeff in self.terms.items():
            key = [0] * len(names)
            for slot, e in zip(slots, exps):
                key[slot] = e
            out[tuple(key)] = coeff
        return MultiPoly(self.field, names, out)

    def without_vars(self, names: Iterable[str]) -> "MultiPoly":
        """Drop variables that the polynomial does not actually use."""
        drop = set(names)
        keep = [i for i, v in enumerate(self.vars) if v not in drop]
        for exps in self.terms:
            for i, v in enumerate(self.vars):
                if v in drop and exps[i]:
                    raise VariableMismatch(f"{v!r} occurs with nonzero exponent")
        out = {tuple(exps[i] for i in keep): c for exps, c in self.terms.items()}
        return MultiPoly(self.field, [self.vars[i] for i in keep], out)

    # equality and printing

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        f = self.field
        pieces = []
        for exps, coeff in items:
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, exps) if e
            )
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if mono and mag == f.one:
                body = mono
            elif mono:
                body = f"{f.format(mag)}*{mono}"
            else:
                body = f.format(mag)
            pieces.append(("-" if negative else "+", body))

        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        names = ",".join(self.vars)
        return f"<MultiPoly {self} over {self.field.descriptor}[{names}]>"


# ---------------------------------------------------------------------------
# expression parser

def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str], field: Field):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = tuple(vars)
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        p = self._expr()
        kind, _, offset = self.peek()
        if kind != "end":
            raise ExpressionSyntaxError("trailing input", offset)
        return p

    def _expr(self) -> MultiPoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        p = self._term()
        if sign < 0:
            p = -p
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self._term()
            p = p + q if op == "+" else p - q
        return p

    def _term(self) -> MultiPoly:
        p = self._factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self._factor()
        return p

    def _factor(self) -> MultiPoly:
        p = self._base()
        if self.peek()[0] == "^":
            self.take()
            kind, value, offset = self.take()
            if kind != "int":
                raise ExpressionSyntaxError("expected an integer exponent", offset)
            n = int(value)
            if n > _MAX_EXPONENT:
                raise ExpressionSyntaxError("exponent too large", offset)
            p = p**n
        return p

    def _base(self) -> MultiPoly:
        kind, value, offset = self.take()
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.take()
                dkind, dvalue, doffset = self.take()
                if dkind != "int":
                    raise ExpressionSyntaxError("expected an integer denominator", doffset)
                den = int(dvalue)
                if den == 0:
                    raise ExpressionSyntaxError("zero denominator", doffset)
                return MultiPoly.constant(
                    self.field, self.vars, self.field.from_rational(num, den)
                )
            return MultiPoly.constant(self.field, self.vars, self.field.scalar(num))
        if kind == "name":
            if value not in self.vars:
                raise UnknownVariable(f"unknown variable {value!r} (declared: {self.vars})")
            return MultiPoly.variable(self.field, self.vars, value)
        if kind == "(":
            p = self._expr()
            ckind, _, coffset = self.take()
            if ckind != ")":
                raise ExpressionSyntaxError("expected ')'", coffset)
            return p
        raise ExpressionSyntaxError("expected a number, a variable or '('", offset)


def parse_poly(text: str, vars: Sequence[str], field: Field) -> MultiPoly:
    """Parse an expression into a canonical MultiPoly over (field, vars)."""
    return _Parser(text, vars, field).parse()


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse a constant expression ("3", "-1/6", "(2)^3") into a scalar."""
    return parse_poly(text, (), field).constant_value()
