"""Exact scalar fields: the rationals and prime fields Z/p."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "rationals" | "prime_field"
    characteristic: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic is not None:
                raise FieldError("the rationals carry no characteristic")
        elif self.kind == "prime_field":
            if self.characteristic is None or not is_prime(self.characteristic):
                raise FieldError(f"characteristic {self.characteristic!r} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def token(self) -> str:
        """The CLI spelling, ``q`` or ``z<p>``."""
        return "q" if self.kind == "rationals" else f"z{self.characteristic}"


def parse_field(token: str) -> FieldSpec:
    """Parse the ``--field`` grammar: ``q`` or ``z<p>``."""
    if token == "q":
        return FieldSpec("rationals")
    m = re.fullmatch(r"z([0-9]+)", token)
    if m is None:
        raise FieldError(f"bad field {token!r}; expected 'q' or 'z<p>'")
    return FieldSpec("prime_field", int(m.group(1)))


class Field:
    """Common surface of the exact fields.

    Hot loops in the cochain code combine raw values with ``+`` and ``*`` and
    call :meth:`reduce` once at the end; the methods here are the checked,
    canonical-form versions of the same operations.
    """

    spec: FieldSpec

    def reduce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.reduce(a + b)

    def sub(self, a, b):
        return self.reduce(a - b)

    def neg(self, a):
        return self.reduce(-a)

    def mul(self, a, b):
        return self.reduce(a * b)

    def eq(self, a, b) -> bool:
        return self.reduce(a) == self.reduce(b)

    @property
    def zero(self):
        return self.reduce(0)

    @property
    def one(self):
        return self.reduce(1)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"{type(self).__name__}({self.spec.token})"


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec("rationals")

    def reduce(self, x):
        return Fraction(x)

    def inv(self, a):
        a = Fraction(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def random(self, rng):
        # small integers keep rank computations and brace sums readable
        return Fraction(rng.randint(-9, 9))

    def format(self, a) -> str:
        return str(Fraction(a))

    def parse(self, text: str):
        return Fraction(text)


class PrimeField(Field):
    def __init__(self, p: int):
        self.spec = FieldSpec("prime_field", p)
        self.p = p

    def reduce(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, text: str):
        return self.reduce(int(text))


def field_make(spec: FieldSpec | str) -> Field:
    if isinstance(spec, str):
        spec = parse_field(spec)
    if spec.kind == "rationals":
        return RationalField()
    return PrimeField(spec.characteristic)
