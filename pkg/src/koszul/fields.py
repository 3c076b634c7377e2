"""Coefficient fields: the rationals and prime fields, both exact.

Rational elements are `fractions.Fraction`; prime-field elements are plain
ints in the range [0, p).  Field objects only hold the arithmetic; they are
compared by value so that independently parsed rings interoperate.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field Q."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            try:
                return Fraction(v)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {v!r}") from exc
        raise InputError(f"cannot coerce {v!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def format(self, a) -> str:
        return str(a)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise InputError(f"{p!r} is not a prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            return self.mul(v.numerator % self.p, self.inv(v.denominator % self.p))
        if isinstance(v, str):
            try:
                f = Fraction(v)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad coefficient literal {v!r}") from exc
            return self.coerce(f)
        raise InputError(f"cannot coerce {v!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        return str(a % self.p)

    def to_json(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


Q = Rationals()


def field_from_json(obj):
    if obj == "Q":
        return Q
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return PrimeField(obj["Fp"])
    raise InputError(f"bad field spec {obj!r}; expected \"Q\" or {{\"Fp\": p}}")
