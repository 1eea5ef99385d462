"""Exact ground fields.

Two coefficient domains are supported: the rational numbers, whose scalars
are arbitrary-precision ``fractions.Fraction`` values, and prime fields F_p
for p >= 5, whose scalars are canonical residues in ``range(p)``.  A field
object carries the arithmetic; scalars stay plain hashable values so they
can be used as dict keys and sorted.

Characteristics 2 and 3 are rejected at construction time: the quadric
relations carry a coefficient 2 and the symmetric-cube rescaling divides by
2 and 6, so 2, 3 and 6 must all be invertible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence, Union

from .errors import NonPrimeModulus, RationalInFiniteField, SmallCharacteristic

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    # Trial division; moduli stay tiny at desk scale.
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class RationalField:
    """The rational numbers.  Scalars are Fraction values, always in lowest
    terms with positive denominator (guaranteed by Fraction itself)."""

    is_finite = False
    characteristic = 0
    descriptor = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def scalar(self, n: int) -> Fraction:
        return Fraction(n)

    def from_rational(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def div(self, x: Fraction, y: Fraction) -> Fraction:
        return self.mul(x, self.inv(y))

    def pow(self, x: Fraction, n: int) -> Fraction:
        return Fraction(x) ** n

    def is_zero(self, x: Fraction) -> bool:
        return x == 0

    def format(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField:
    """F_p for a prime p >= 5.  Scalars are ints in range(p)."""

    is_finite = True

    def __init__(self, p: int):
        if p in (2, 3):
            raise SmallCharacteristic(
                f"characteristic {p} is unsupported: 2, 3 and 6 must be invertible"
            )
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def descriptor(self) -> str:
        return f"Fp:{self.p}"

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def scalar(self, n: int) -> int:
        return n % self.p

    def from_rational(self, num: int, den: int) -> int:
        d = den % self.p
        if d == 0:
            raise RationalInFiniteField(f"denominator {den} vanishes mod {self.p}")
        return num % self.p * pow(d, self.p - 2, self.p) % self.p

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, n: int) -> int:
        return pow(x, n, self.p)

    def is_zero(self, x: int) -> bool:
        return x % self.p == 0

    def format(self, x: int) -> str:
        return str(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


Field = Union[RationalField, PrimeField]


def field_make(descriptor: str) -> Field:
    """Build a field from its descriptor string: exactly "Q" or "Fp:<prime>"."""
    text = descriptor.strip()
    if text == "Q":
        return RationalField()
    if text.startswith("Fp:"):
        body = text[3:].strip()
        if not body.isdigit():
            raise ValueError(f"bad prime in field descriptor {descriptor!r}")
        return PrimeField(int(body))
    raise ValueError(
        f"unrecognized field descriptor {descriptor!r} (expected \"Q\" or \"Fp:<prime>\")"
    )


def matrix_rank(field: Field, rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a matrix over the field, by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    for col in range(len(m[0])):
        pivot = None
        for r in range(rank, len(m)):
            if not field.is_zero(m[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        scale = field.inv(m[rank][col])
        m[rank] = [field.mul(scale, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and not field.is_zero(m[r][col]):
                factor = m[r][col]
                m[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
