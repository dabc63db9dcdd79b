"""Typechecking of diagram terms against the signature."""

from __future__ import annotations

from ..errors import TermTypeError
from .objects import Bang, Unit, substitute, tensor
from .signature import expand, lookup, resolve_args
from .terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Zero, show


def typecheck(t, binding: dict | None = None, env: dict | None = None):
    """Return (dom, cod) of t in diagram orientation (the direction terms are written).

    ``binding`` substitutes base object names (e.g. {"A": K} checks an
    equation at the unit object); ``env`` maps extra generator names, such
    as sampled witness maps, to their (dom, cod).
    """
    return _Checker(binding or {}, env or {}).check(t)


class _Checker:
    def __init__(self, binding, env):
        self.binding = binding
        self.env = env
        self.memo = {}

    def obj(self, o):
        return substitute(o, self.binding) if self.binding else o

    def check(self, t):
        if isinstance(t, Id):
            o = self.obj(t.obj)
            return o, o
        if isinstance(t, Swap):
            x, y = self.obj(t.left), self.obj(t.right)
            return tensor(x, y), tensor(y, x)
        if isinstance(t, Zero):
            return self.obj(t.dom), self.obj(t.cod)
        if isinstance(t, Seq):
            d1, c1 = self.check(t.left)
            d2, c2 = self.check(t.right)
            if c1 != d2:
                raise TermTypeError(show(t), f"domain {c1} for `{show(t.right)}`", str(d2),
                                    "composite does not match")
            return d1, c2
        if isinstance(t, Par):
            d1, c1 = self.check(t.left)
            d2, c2 = self.check(t.right)
            return tensor(d1, d2), tensor(c1, c2)
        if isinstance(t, Sum):
            l, r = self.check(t.left), self.check(t.right)
            if l != r:
                raise TermTypeError(show(t), _fmt(l), _fmt(r), "summands differ in type")
            return l
        if isinstance(t, Scale):
            if t.factor < 0:
                raise TermTypeError(show(t), "nonnegative scalar", str(t.factor))
            return self.check(t.inner)
        if isinstance(t, BangT):
            d, c = self.check(t.inner)
            return Bang(d), Bang(c)
        if isinstance(t, Gen):
            return self.gen(t)
        raise TermTypeError(repr(t), "a term", type(t).__name__)

    def gen(self, g):
        if g.name in self.env:
            if g.args:
                raise TermTypeError(show(g), "no object arguments", str(len(g.args)),
                                    "witness maps take no arguments")
            ty = self.env[g.name]
            return (ty.dom, ty.cod) if hasattr(ty, "dom") else tuple(ty)
        found = lookup(g.name)
        if found is None:
            raise TermTypeError(show(g), "a known generator", g.name, "unknown generator")
        spec, idx = found
        args = resolve_args(g, spec, self.binding)
        key = (g.name, args)
        if key not in self.memo:
            if spec.derived:
                sub = _Checker({}, self.env)
                sub.memo = self.memo
                self.memo[key] = sub.check(expand(Gen(g.name, args)))
            else:
                self.memo[key] = spec.typer(args, idx)
        return self.memo[key]


def _fmt(ty):
    d, c = ty
    return f"{d} -> {c}"
