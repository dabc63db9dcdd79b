"""Commutative rigs used as scalar domains.

Scalars are plain Python values: ``Fraction`` for the rationals and the
ints 0/1 for the two-element rigs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingCapability, NotField


@dataclass(frozen=True)
class CommutativeRig:
    name: str
    is_field: bool
    char_hint: int | None

    zero: object = 0
    one: object = 1

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        """Image of the integer n, i.e. 1 + ... + 1 (n times)."""
        raise NotImplementedError

    def from_rational(self, q):
        q = Fraction(q)
        if q.denominator == 1:
            return self.from_int(q.numerator)
        raise MissingCapability(f"rig {self.name} has no division; cannot scale by {q}")

    def inv(self, a):
        raise NotField(f"rig {self.name} is not a field")

    def neg(self, a):
        raise NotField(f"rig {self.name} has no additive inverses")

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"<rig {self.name}>"


class Rationals(CommutativeRig):
    def __init__(self):
        super().__init__("Q", True, 0, Fraction(0), Fraction(1))

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def from_rational(self, q):
        return Fraction(q)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def neg(self, a):
        return -a

    def format(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


class GF2(CommutativeRig):
    def __init__(self):
        super().__init__("F2", True, 2, 0, 1)

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return a & b

    def from_int(self, n):
        return n & 1

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1

    def neg(self, a):
        return a


class Boolean(CommutativeRig):
    """The rig ({0,1}, or, and); additively idempotent."""

    def __init__(self):
        super().__init__("Bool", False, None, 0, 1)

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def from_int(self, n):
        return 1 if n > 0 else 0


QQ = Rationals()
F2 = GF2()
BOOL = Boolean()
