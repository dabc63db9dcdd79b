"""The free symmetric algebra model Sym(V) over a rig, in opposite orientation.

Over the rationals this is the polynomial model with integration; over F2
it has no integral; over the Boolean rig it is the relational model of
finite bags (see ``rel``).  Basis elements of Sym(S) are sorted tuples of
basis elements of S, so a monomial x^2 y is ``("x", "x", "y")``.
"""

from __future__ import annotations

from collections import Counter
from ..diagram.objects import K, Bang, Base, Prod, tensor
from ..errors import MissingCapability
from ..linalg import vec_add_into
from ..modality.model import Bounds, ModalityModel, Morphism
from ..rig import F2, QQ
from ..spaces import FiniteSpace, SymSpace, join, split
from .elements import PolyStyle

A_NAMES = ("x", "y", "z", "w", "t", "p", "q", "r")
B_NAMES = ("u", "v")


def variable_names(n: int, pool=A_NAMES):
    if n <= len(pool):
        return tuple(pool[:n])
    return tuple(f"x{i}" for i in range(1, n + 1))


def merge(*ms) -> tuple:
    out = []
    for m in ms:
        out.extend(m)
    return tuple(sorted(out))


def remove_one(m: tuple, b) -> tuple:
    i = m.index(b)
    return m[:i] + m[i + 1:]


def mu(outer: tuple) -> tuple:
    """Multiplication Sym(Sym S) -> Sym S on basis elements."""
    return merge(*outer)


def derivative_terms(m: tuple):
    """Pairs (multiplicity, m - b, b) over the distinct members b of m."""
    for b, k in sorted(Counter(m).items()):
        yield k, remove_one(m, b), b


class SymModel(ModalityModel):
    style = PolyStyle()

    def __init__(self, rig=QQ, nvars: int = 3, nvars_b: int = 2, bounds: Bounds | None = None,
                 name: str | None = None, integral: str | None = "field"):
        super().__init__(rig, bounds)
        self.names = {"A": variable_names(nvars), "B": variable_names(nvars_b, B_NAMES)}
        self.integral = integral
        caps = {"delta", "differential", "monoidal", "seely"}
        if integral:
            caps.add("integral")
        if integral == "field":
            caps |= {"antiderivatives", "jinv"}
        if integral == "coderiving":
            caps |= {"antiderivatives", "jinv"}
        self.capabilities = frozenset(caps)
        self.name = name or f"sym-{rig.name.lower()}"

    # -- spaces ---------------------------------------------------------------
    def base_space(self, name):
        if name not in self.names:
            raise MissingCapability(f"model {self.name} has no base object {name}")
        return FiniteSpace(self.names[name], 1, name)

    def bang_space(self, inner):
        return SymSpace(self.space(inner))

    def prod_space(self, obj: Prod):
        if not (isinstance(obj.left, Base) and isinstance(obj.right, Base)):
            raise MissingCapability("products are supported between base objects only")
        left, right = self.names[obj.left.name], self.names[obj.right.name]
        if set(left) & set(right):
            raise MissingCapability("product of bases with overlapping variables")
        return FiniteSpace(left + right, 1, f"{obj.left.name}&{obj.right.name}")

    # -- element syntax -------------------------------------------------------
    def format_elem(self, space, b):
        return self.style.format(space, b)

    def parse_elem(self, space, text):
        return self.style.parse(space, text)

    def describe(self):
        return {"model": self.name, "rig": self.rig.name, "vars": list(self.names["A"]),
                "vars_B": list(self.names["B"])}

    # -- functor action -------------------------------------------------------
    def bang(self, f: Morphism) -> Morphism:
        rig = self.rig
        c = f.carrier

        def fn(m):
            acc = {(): rig.one}
            for y in m:
                image = c.apply(y)
                nxt: dict = {}
                for p, a in acc.items():
                    for x, bcoef in image.items():
                        vec_add_into(rig, nxt, {merge(p, (x,)): rig.mul(a, bcoef)})
                acc = nxt
                if not acc:
                    break
            return acc

        return self.morphism(Bang(f.dom), Bang(f.cod), fn, f"bang({f.label})")

    def _recip(self, n):
        return self.rig.inv(self.rig.from_int(n))

    # -- primitives -----------------------------------------------------------
    def primitive(self, name, args, idx):
        rig = self.rig
        one = rig.one
        X = args[0] if args else None
        BX = Bang(X) if X is not None else None

        if name == "Delta":
            S = self.space(BX)
            return self.morphism(BX, tensor(BX, BX), lambda b: {merge(*split(b, (S, S))): one}, "Delta")
        if name == "e":
            return self.morphism(BX, K, lambda b: {(): one}, "e")
        if name == "eps":
            return self.morphism(BX, X, lambda b: {(b,): one}, "eps")
        if name == "delta":
            return self.morphism(BX, Bang(BX), lambda b: {mu(b): one}, "delta")
        SX, SBX = self.space(X) if X is not None else None, self.space(BX) if X is not None else None
        if name == "dcirc":
            def fn(b):
                m, x = split(b, (SBX, SX))
                return {merge(m, (x,)): one}
            return self.morphism(BX, tensor(BX, X), fn, "dcirc")
        if name == "d":
            def fn(m):
                out = {}
                for k, rest, x in derivative_terms(m):
                    vec_add_into(rig, out, {join(((SBX, rest), (SX, x))): rig.from_int(k)})
                return out
            return self.morphism(tensor(BX, X), BX, fn, "d")
        if name == "s":
            if self.integral == "coderiving":
                return self.primitive("dcirc", args, idx)
            if self.integral != "field":
                raise MissingCapability(f"model {self.name} has no integral")

            def fn(b):
                m, x = split(b, (SBX, SX))
                return {merge(m, (x,)): self._recip(len(m) + 1)}
            return self.morphism(BX, tensor(BX, X), fn, "s")
        if name == "Kinv":
            self.require("antiderivatives", "Kinv")
            if self.integral == "coderiving":
                return self.identity(BX)
            return self.morphism(BX, BX, lambda m: {m: self._recip(len(m)) if m else one}, "Kinv")
        if name == "Jinv":
            self.require("jinv", "Jinv")
            n = idx[0] if idx else 0
            if self.integral == "coderiving":
                return self.identity(BX)
            return self.morphism(BX, BX, lambda m: {m: self._recip(len(m) + n + 1)}, "Jinv")
        if name == "m_tensor":
            Y = args[1]
            SX_, SY_ = self.space(X), self.space(Y)
            SBY = self.space(Bang(Y))

            def fn(m):
                xs, ys = [], []
                for p in m:
                    a, b = split(p, (SX_, SY_))
                    xs.append(a)
                    ys.append(b)
                return {join(((SBX, tuple(sorted(xs))), (SBY, tuple(sorted(ys))))): one}
            return self.morphism(tensor(BX, Bang(Y)), Bang(tensor(X, Y)), fn, "m_tensor")
        if name == "m_K":
            return self.morphism(K, Bang(K), lambda m: {(): one}, "m_K")
        if name in ("chi", "chi_inv", "pi0", "pi1"):
            Y = args[1]
            P = Prod(X, Y)
            SBY = self.space(Bang(Y))
            xnames = set(self.space(X).names)
            if name == "chi":
                return self.morphism(Bang(P), tensor(BX, Bang(Y)),
                                     lambda b: {merge(*split(b, (SBX, SBY))): one}, "chi")
            if name == "chi_inv":
                def fn(m):
                    xs = tuple(v for v in m if v in xnames)
                    ys = tuple(v for v in m if v not in xnames)
                    return {(xs, ys): one}
                return self.morphism(tensor(BX, Bang(Y)), Bang(P), fn, "chi_inv")
            target = X if name == "pi0" else Y
            return self.morphism(P, target, lambda v: {v: one}, name)
        raise MissingCapability(f"model {self.name} does not bind {name}")


def sym_q(nvars=3, bounds=None, nvars_b=2):
    m = SymModel(QQ, nvars, nvars_b, bounds, "sym-q", "field")
    m.separations = ("cd-as-s.2", "calc-object.A", "Kinv.4.text", "K.invertible")
    m.expectations = {"cd-as-s.2": "fail", "Kinv.4.text": "fail"}
    if nvars >= 2:
        m.expectations["calc-object.A"] = "fail"
    return m


def sym_f2(nvars=3, bounds=None, nvars_b=2):
    m = SymModel(F2, nvars, nvars_b, bounds, "sym-f2", None)
    m.separations = ("cd-as-s.2", "two.invertible", "taylor")
    m.expectations = {"cd-as-s.2": "fail", "two.invertible": "fail", "taylor": "fail",
                      "K.blockwise": "fail", "J.blockwise": "fail"}
    return m
