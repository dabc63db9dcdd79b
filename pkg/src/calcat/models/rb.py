"""The free weight-0 Rota-Baxter algebra on Sym(V), over the rationals.

A basis element is a pair (word, slot): the word is a sequence of monomials
(letters, the unit monomial allowed) living in the shuffle algebra, the slot
is a monomial of Sym(V).  The product shuffles words and multiplies slots;
the Rota-Baxter operator appends the slot as a new last letter.

Only the delta-free part of the modality is bound.  d and s act on the slot
alone, so L scales by the slot degree: J = L + 1 is invertible while K is
not, since K kills every (word, 1) whose word has a non-unit letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..diagram.objects import K, Bang, Base, tensor
from ..errors import MissingCapability, UsageError
from ..linalg import vec_add_into
from ..modality.model import Bounds, ModalityModel, Morphism
from ..rig import QQ
from ..spaces import FiniteSpace, Space, SymSpace, join, split
from .elements import format_monomial, parse_monomial, split_top
from .sym import PolyStyle, derivative_terms, merge, variable_names

RB = tuple  # (word: tuple of monomials, slot: monomial)


def _mono_key(m):
    return (len(m), m)


@dataclass(frozen=True)
class RBSpace(Space):
    """Pairs (word, slot); grade counts letter degrees plus slot degree.

    Unit letters have degree 0, so the word length is bounded by ``card``
    during enumeration.
    """

    inner: Space

    def grade(self, b):
        word, slot = b
        return sum(len(x) for x in word) + len(slot)

    def key(self, b):
        word, slot = b
        return (self.grade(b), len(word), tuple(_mono_key(x) for x in word), _mono_key(slot))

    def _generate(self, max_grade, card):
        monos = SymSpace(self.inner).elements(max_grade, None)
        card = 3 if card is None else card
        out = []

        def words(budget, length):
            if length == 0:
                yield ()
                return
            for m in monos:
                if len(m) <= budget:
                    for rest in words(budget - len(m), length - 1):
                        yield (m,) + rest

        for n in range(card + 1):
            for w in words(max_grade, n):
                used = sum(len(x) for x in w)
                for slot in monos:
                    if used + len(slot) <= max_grade:
                        out.append((w, slot))
        return out


def shuffle(u: tuple, v: tuple) -> dict:
    """Shuffle product of two words, as a combination with integer counts."""
    return dict(_shuffle(u, v))


@lru_cache(maxsize=None)
def _shuffle(u, v):
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out = {}
    for w, c in _shuffle(u[1:], v):
        key = (u[0],) + w
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle(u, v[1:]):
        key = (v[0],) + w
        out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def rb_product(a: RB, b: RB, rig=QQ) -> dict:
    (w1, m1), (w2, m2) = a, b
    slot = merge(m1, m2)
    return {(w, slot): rig.from_int(c) for w, c in shuffle(w1, w2).items()}


def rb_P(a: RB) -> RB:
    """The Rota-Baxter operator: append the slot as a last letter, reset it to 1."""
    word, slot = a
    return (word + (slot,), ())


def rb_mul_vec(u: dict, v: dict, rig=QQ) -> dict:
    out = {}
    for a, x in u.items():
        for b, y in v.items():
            vec_add_into(rig, out, rb_product(a, b, rig), rig.mul(x, y))
    return out


def rb_P_vec(u: dict) -> dict:
    return {rb_P(a): c for a, c in u.items()}


class RBStyle(PolyStyle):
    """Pairs print as ``<x, y^2> z``: the word in angle brackets, then the slot."""

    def format(self, space, b):
        if isinstance(space, RBSpace):
            word, slot = b
            return "<" + ", ".join(format_monomial(x) for x in word) + "> " + format_monomial(slot)
        return super().format(space, b)

    def parse(self, space, text):
        if isinstance(space, RBSpace):
            text = text.strip()
            if not text.startswith("<") or ">" not in text:
                raise UsageError(f"expected <word> slot, got {text!r}")
            body, _, slot = text[1:].partition(">")
            names = space.inner.names
            letters = [] if not body.strip() else split_top(body, ",")
            word = tuple(parse_monomial(x, names) for x in letters)
            return (word, parse_monomial(slot, names))
        return super().parse(space, text)


class RBModel(ModalityModel):
    style = RBStyle()
    capabilities = frozenset({"differential", "integral", "jinv"})

    def __init__(self, nvars: int = 3, bounds: Bounds | None = None):
        super().__init__(QQ, bounds or Bounds(grade=3, delta_grade=3, outer_card=2))
        self.names = {"A": variable_names(nvars)}
        self.name = "rb"
        self.separations = ("K.invertible", "FTC2", "taylor", "Jinv-integral.FTC2", "J.invertible")
        self.expectations = {"K.invertible": "fail", "FTC2": "fail", "taylor": "fail",
                             "Jinv-integral.FTC2": "fail",
                             "K.blockwise": "fail"}

    def base_space(self, name):
        if name not in self.names:
            raise MissingCapability(f"model rb has no base object {name}")
        return FiniteSpace(self.names[name], 1, name)

    def bang_space(self, inner):
        if not isinstance(inner, Base):
            raise MissingCapability("rb binds ! on base objects only (no delta)")
        return RBSpace(self.space(inner))

    def format_elem(self, space, b):
        return self.style.format(space, b)

    def parse_elem(self, space, text):
        return self.style.parse(space, text)

    def describe(self):
        return {"model": self.name, "rig": "Q", "vars": list(self.names["A"])}

    def bang(self, f: Morphism) -> Morphism:
        """Functor action: substitute f's carrier letterwise and in the slot."""
        rig, c = self.rig, f.carrier

        def sym_image(m):
            acc = {(): rig.one}
            for y in m:
                nxt = {}
                for p, a in acc.items():
                    for x, coef in c.apply(y).items():
                        vec_add_into(rig, nxt, {merge(p, (x,)): rig.mul(a, coef)})
                acc = nxt
            return acc

        def fn(b):
            word, slot = b
            acc = {((),): rig.one}
            for letter in word + (slot,):
                nxt = {}
                for p, a in acc.items():
                    for m, coef in sym_image(letter).items():
                        vec_add_into(rig, nxt, {p + (m,): rig.mul(a, coef)})
                acc = nxt
            return {(p[1:-1], p[-1]): a for p, a in acc.items()}

        return self.morphism(Bang(f.dom), Bang(f.cod), fn, f"bang({f.label})")

    def primitive(self, name, args, idx):
        rig, one = self.rig, self.rig.one
        X = args[0] if args else None
        if X is not None and not isinstance(X, Base):
            raise MissingCapability(f"rb binds {name} at base objects only")
        BX = Bang(X) if X is not None else None
        SX = self.space(X) if X is not None else None
        SB = self.space(BX) if X is not None else None
        if name == "Delta":
            return self.morphism(BX, tensor(BX, BX),
                                 lambda b: rb_product(*split(b, (SB, SB)), rig), "Delta")
        if name == "e":
            return self.morphism(BX, K, lambda b: {((), ()): one}, "e")
        if name == "eps":
            return self.morphism(BX, X, lambda v: {((), (v,)): one}, "eps")
        if name == "dcirc":
            def fn(b):
                (w, m), v = split(b, (SB, SX))
                return {(w, merge(m, (v,))): one}
            return self.morphism(BX, tensor(BX, X), fn, "dcirc")
        if name == "d":
            def fn(b):
                w, m = b
                out = {}
                for k, rest, v in derivative_terms(m):
                    vec_add_into(rig, out, {join(((SB, (w, rest)), (SX, v))): rig.from_int(k)})
                return out
            return self.morphism(tensor(BX, X), BX, fn, "d")
        if name == "s":
            def fn(b):
                (w, m), v = split(b, (SB, SX))
                return {(w, merge(m, (v,))): rig.inv(rig.from_int(len(m) + 1))}
            return self.morphism(BX, tensor(BX, X), fn, "s")
        if name == "Jinv":
            n = idx[0] if idx else 0
            return self.morphism(BX, BX,
                                 lambda b: {b: rig.inv(rig.from_int(len(b[1]) + n + 1))}, "Jinv")
        raise MissingCapability(f"model rb does not bind {name}")


def rb(nvars=3, bounds=None):
    return RBModel(nvars, bounds)
