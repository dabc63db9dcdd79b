"""Object expressions: unit K, named bases, !X, strict tensors and products."""

from __future__ import annotations

from dataclasses import dataclass


class ObjectExpr:
    def __str__(self):
        return show_object(self)

    @property
    def factors(self) -> tuple:
        return (self,)


@dataclass(frozen=True, repr=False)
class Unit(ObjectExpr):
    @property
    def factors(self):
        return ()

    def __repr__(self):
        return "K"


@dataclass(frozen=True, repr=False)
class Base(ObjectExpr):
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True, repr=False)
class Bang(ObjectExpr):
    inner: ObjectExpr

    def __repr__(self):
        return show_object(self)


@dataclass(frozen=True, repr=False)
class Tensor(ObjectExpr):
    """Flat tensor of at least two non-unit factors; build with ``tensor``."""

    parts: tuple

    @property
    def factors(self):
        return self.parts

    def __repr__(self):
        return show_object(self)


@dataclass(frozen=True, repr=False)
class Prod(ObjectExpr):
    """Cartesian product A & B, used only for the Seely isomorphisms."""

    left: ObjectExpr
    right: ObjectExpr

    def __repr__(self):
        return show_object(self)


K = Unit()
A = Base("A")
B = Base("B")


def tensor(*objs: ObjectExpr) -> ObjectExpr:
    flat = []
    for o in objs:
        flat.extend(o.factors)
    if not flat:
        return K
    if len(flat) == 1:
        return flat[0]
    return Tensor(tuple(flat))


def bang(o: ObjectExpr, times: int = 1) -> ObjectExpr:
    for _ in range(times):
        o = Bang(o)
    return o


def power(o: ObjectExpr, n: int) -> ObjectExpr:
    return tensor(*([o] * n))


def substitute(o: ObjectExpr, binding: dict) -> ObjectExpr:
    if isinstance(o, Base):
        return binding.get(o.name, o)
    if isinstance(o, Bang):
        return Bang(substitute(o.inner, binding))
    if isinstance(o, Tensor):
        return tensor(*(substitute(p, binding) for p in o.parts))
    if isinstance(o, Prod):
        return Prod(substitute(o.left, binding), substitute(o.right, binding))
    return o


def bang_depth(o: ObjectExpr) -> int:
    """Deepest nesting of ! inside o."""
    if isinstance(o, Bang):
        return 1 + bang_depth(o.inner)
    if isinstance(o, Tensor):
        return max(bang_depth(p) for p in o.parts)
    if isinstance(o, Prod):
        return max(bang_depth(o.left), bang_depth(o.right))
    return 0


def show_object(o: ObjectExpr, ctx: int = 0) -> str:
    # ctx: 0 top level, 1 inside &, 2 under !
    if isinstance(o, Unit):
        return "K"
    if isinstance(o, Base):
        return o.name
    if isinstance(o, Bang):
        return "!" + show_object(o.inner, 2)
    if isinstance(o, Tensor):
        s = " # ".join(show_object(p, 1) for p in o.parts)
        return f"({s})" if ctx else s
    if isinstance(o, Prod):
        s = f"{show_object(o.left, 1)}&{show_object(o.right, 2)}"
        return f"({s})" if ctx == 2 else s
    raise TypeError(o)
