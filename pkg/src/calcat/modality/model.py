"""Morphisms, the model interface and the term evaluator.

Every shipped model realizes the category of terms as the opposite of a
category of free modules: a term X -> Y is stored as a carrier linear
map [[Y]] -> [[X]].  Composition therefore composes carriers in reverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..diagram.objects import Bang, Base, ObjectExpr, Prod, Tensor, Unit, substitute, tensor
from ..diagram.signature import expand, lookup, resolve_args
from ..diagram.terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Zero, show
from ..diagram.typecheck import typecheck
from ..errors import MissingCapability, SpaceMismatch
from ..linalg import LinMap, identity, lin_add, lin_compose, lin_scale, lin_tensor, zero_map
from ..spaces import Space, join, split, tensor_space

CAPABILITIES = ("delta", "differential", "integral", "monoidal", "seely", "antiderivatives", "jinv")


@dataclass(frozen=True)
class Bounds:
    """Enumeration bounds for equation inputs (outputs are never truncated)."""

    grade: int = 4
    delta_grade: int = 3
    outer_card: int = 3
    budget: int = 20000

    def as_dict(self):
        return {"grade": self.grade, "delta_grade": self.delta_grade,
                "outer_card": self.outer_card, "budget": self.budget}


@dataclass(eq=False)
class Morphism:
    dom: ObjectExpr
    cod: ObjectExpr
    carrier: LinMap
    label: str = ""

    def __repr__(self):
        return f"Morphism({self.label or '?'}: {self.dom} -> {self.cod})"


class ModalityModel:
    """Base class; subclasses bind spaces and primitive carriers."""

    name = "abstract"
    capabilities: frozenset = frozenset()
    separations: tuple = ()  # catalog ids making up this model's separations suite
    expectations: dict = {}  # catalog id -> "fail" for laws known to fail here
    traits: frozenset = frozenset()  # e.g. "idempotent" for additively idempotent models

    def __init__(self, rig, bounds: Bounds | None = None):
        self.rig = rig
        self.bounds = bounds or Bounds()
        self._spaces = {}
        self._prims = {}
        self._terms = {}

    # -- objects ------------------------------------------------------------
    def space(self, obj: ObjectExpr) -> Space:
        try:
            return self._spaces[obj]
        except KeyError:
            sp = self._build_space(obj)
            self._spaces[obj] = sp
            return sp

    def _build_space(self, obj):
        if isinstance(obj, Unit):
            return tensor_space()
        if isinstance(obj, Tensor):
            return tensor_space(*(self.space(p) for p in obj.parts))
        if isinstance(obj, Base):
            return self.base_space(obj.name)
        if isinstance(obj, Bang):
            return self.bang_space(obj.inner)
        if isinstance(obj, Prod):
            return self.prod_space(obj)
        raise TypeError(obj)

    def base_space(self, name) -> Space:
        raise NotImplementedError

    def bang_space(self, inner: ObjectExpr) -> Space:
        raise NotImplementedError

    def prod_space(self, obj: Prod) -> Space:
        raise MissingCapability(f"{self.name} has no products")

    def has(self, cap) -> bool:
        return cap in self.capabilities

    def require(self, cap, what=""):
        if cap and cap not in self.capabilities:
            raise MissingCapability(f"model {self.name} lacks '{cap}'" + (f" ({what})" if what else ""))

    # -- morphism constructors --------------------------------------------
    def morphism(self, dom, cod, fn, label=""):
        """Wrap a carrier function [[cod]] basis -> vector in [[dom]]."""
        carrier = LinMap(self.space(cod), self.space(dom), self.rig, fn, label)
        return Morphism(dom, cod, carrier, label)

    def identity(self, obj):
        return Morphism(obj, obj, identity(self.space(obj), self.rig), f"id[{obj}]")

    def zero(self, dom, cod):
        return Morphism(dom, cod, zero_map(self.space(cod), self.space(dom), self.rig), "0")

    def compose(self, f: Morphism, g: Morphism) -> Morphism:
        if f.cod != g.dom:
            raise SpaceMismatch(f.cod, g.dom, "compose")
        return Morphism(f.dom, g.cod, lin_compose(g.carrier, f.carrier), f"({f.label};{g.label})")

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        return Morphism(tensor(f.dom, g.dom), tensor(f.cod, g.cod),
                        lin_tensor(f.carrier, g.carrier), f"({f.label}#{g.label})")

    def add(self, f: Morphism, g: Morphism) -> Morphism:
        return Morphism(f.dom, f.cod, lin_add(f.carrier, g.carrier), f"({f.label}+{g.label})")

    def scale(self, q, f: Morphism) -> Morphism:
        r = self.rig.from_rational(Fraction(q))
        return Morphism(f.dom, f.cod, lin_scale(r, f.carrier), f"{q}*{f.label}")

    def swap(self, X, Y) -> Morphism:
        sx, sy = self.space(X), self.space(Y)
        one = self.rig.one

        def fn(b):
            y, x = split(b, (sy, sx))
            return {join(((sx, x), (sy, y))): one}

        return self.morphism(tensor(X, Y), tensor(Y, X), fn, f"sym[{X},{Y}]")

    def bang(self, f: Morphism) -> Morphism:
        raise MissingCapability(f"{self.name} has no functor action")

    def primitive(self, name, args, idx) -> Morphism:
        raise MissingCapability(f"{self.name} does not bind {name}")

    def generator(self, name, args=(), idx=()) -> Morphism:
        key = (name, tuple(args), tuple(idx))
        if key not in self._prims:
            self._prims[key] = self.primitive(name, tuple(args), tuple(idx))
        return self._prims[key]

    # -- printing / parsing of basis elements ---------------------------------
    def format_elem(self, space: Space, b) -> str:
        return repr(b)

    def parse_elem(self, space: Space, text: str):
        raise NotImplementedError

    def format_vec(self, space: Space, v: dict) -> str:
        if not v:
            return "0"
        items = sorted(v.items(), key=lambda kv: space.key(kv[0]))
        parts = []
        for b, c in items:
            s = self.format_elem(space, b)
            if c != self.rig.one:
                s = f"{self.rig.format(c)}·{_wrap(s)}"
            parts.append(s)
        return " + ".join(parts)

    def describe(self) -> dict:
        return {"model": self.name}


def _wrap(s):
    return f"({s})" if (" + " in s or " (x) " in s) else s


def evaluate(t, model: ModalityModel, binding: dict | None = None, env: dict | None = None) -> Morphism:
    """Interpret a term in a model (after typechecking it)."""
    typecheck(t, binding, {k: (m.dom, m.cod) for k, m in (env or {}).items()})
    return _Evaluator(model, binding or {}, env or {}).ev(t)


class _Evaluator:
    def __init__(self, model, binding, env):
        self.model = model
        self.binding = binding
        self.env = env
        self.bkey = tuple(sorted(binding.items(), key=lambda kv: kv[0]))

    def obj(self, o):
        return substitute(o, self.binding) if self.binding else o

    def ev(self, t):
        cache = self.model._terms
        if self.env and _mentions(t, self.env):
            cache = None
        key = (t, self.bkey)
        if cache is not None and key in cache:
            return cache[key]
        m = self._ev(t)
        if cache is not None:
            cache[key] = m
        return m

    def _ev(self, t):
        M = self.model
        if isinstance(t, Id):
            return M.identity(self.obj(t.obj))
        if isinstance(t, Zero):
            return M.zero(self.obj(t.dom), self.obj(t.cod))
        if isinstance(t, Swap):
            return M.swap(self.obj(t.left), self.obj(t.right))
        if isinstance(t, Seq):
            return M.compose(self.ev(t.left), self.ev(t.right))
        if isinstance(t, Par):
            return M.tensor(self.ev(t.left), self.ev(t.right))
        if isinstance(t, Sum):
            return M.add(self.ev(t.left), self.ev(t.right))
        if isinstance(t, Scale):
            return M.scale(t.factor, self.ev(t.inner))
        if isinstance(t, BangT):
            return M.bang(self.ev(t.inner))
        if isinstance(t, Gen):
            if t.name in self.env:
                return self.env[t.name]
            spec, idx = lookup(t.name)
            args = resolve_args(t, spec, self.binding)
            M.require(spec.capability, t.name)
            if spec.derived:
                inner = _Evaluator(M, {}, self.env)
                m = inner.ev(expand(Gen(t.name, args)))
                return Morphism(m.dom, m.cod, m.carrier, show(Gen(t.name, args)))
            return M.generator(spec.name, args, idx)
        raise TypeError(t)


def _mentions(t, names) -> bool:
    if isinstance(t, Gen):
        return t.name in names
    if isinstance(t, (Seq, Par, Sum)):
        return _mentions(t.left, names) or _mentions(t.right, names)
    if isinstance(t, (Scale, BangT)):
        return _mentions(t.inner, names)
    return False
