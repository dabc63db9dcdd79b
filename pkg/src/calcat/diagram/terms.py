"""Diagram terms and their pretty-printer."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .objects import ObjectExpr, show_object


class Term:
    def __str__(self):
        return show(self)

    def __repr__(self):
        return f"Term<{show(self)}>"

    def __rshift__(self, other):
        return Seq(self, other)

    def __matmul__(self, other):
        return Par(self, other)

    def __add__(self, other):
        return Sum(self, other)


@dataclass(frozen=True, repr=False)
class Id(Term):
    obj: ObjectExpr


@dataclass(frozen=True, repr=False)
class Gen(Term):
    name: str
    args: tuple = ()


@dataclass(frozen=True, repr=False)
class Seq(Term):
    left: Term
    right: Term


@dataclass(frozen=True, repr=False)
class Par(Term):
    left: Term
    right: Term


@dataclass(frozen=True, repr=False)
class Swap(Term):
    """The symmetry sym[X,Y]: X # Y -> Y # X."""

    left: ObjectExpr
    right: ObjectExpr


@dataclass(frozen=True, repr=False)
class BangT(Term):
    inner: Term


@dataclass(frozen=True, repr=False)
class Scale(Term):
    factor: Fraction
    inner: Term


@dataclass(frozen=True, repr=False)
class Sum(Term):
    left: Term
    right: Term


@dataclass(frozen=True, repr=False)
class Zero(Term):
    dom: ObjectExpr
    cod: ObjectExpr


_LEVEL = {Sum: 0, Seq: 1, Par: 2}


def _level(t: Term) -> int:
    return _LEVEL.get(type(t), 3)


def show(t: Term, ctx: int = 0) -> str:
    """Print in the text grammar; parse(show(t)) == t."""
    if isinstance(t, (Sum, Seq, Par)):
        lv = _level(t)
        op = {0: " + ", 1: " ; ", 2: " # "}[lv]
        # binary operators associate to the left
        s = show(t.left, lv) + op + show(t.right, lv + 1)
        # a tensor inside a composite is bracketed for readability only
        return f"({s})" if lv < ctx or (lv == 2 and ctx == 1) else s
    if isinstance(t, Id):
        return f"id[{show_object(t.obj)}]"
    if isinstance(t, Gen):
        if t.args:
            return f"{t.name}[{', '.join(show_object(a) for a in t.args)}]"
        return t.name
    if isinstance(t, Swap):
        return f"sym[{show_object(t.left)}, {show_object(t.right)}]"
    if isinstance(t, BangT):
        return f"bang({show(t.inner)})"
    if isinstance(t, Scale):
        q = Fraction(t.factor)
        lit = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return f"{lit}*{show(t.inner, 3)}"
    if isinstance(t, Zero):
        return f"0[{show_object(t.dom)} -> {show_object(t.cod)}]"
    raise TypeError(t)


def generators(t: Term):
    """Yield every Gen node (including those under bang)."""
    if isinstance(t, Gen):
        yield t
    elif isinstance(t, (Seq, Par, Sum)):
        yield from generators(t.left)
        yield from generators(t.right)
    elif isinstance(t, (BangT, Scale)):
        yield from generators(t.inner)
