"""The generator signature: primitive generators and derived definitions.

Generator names may carry integer indices after underscores, e.g. ``L_2``,
``Jinv_1``, ``Delta_3`` or ``omega_1_3``.  Object arguments default to the
base object A.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from ..errors import IndexOutOfRange, TermTypeError
from .objects import A, B, K, Bang, Prod, power, substitute, tensor
from .terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Zero


@dataclass(frozen=True)
class GenSpec:
    name: str
    arity: int
    indices: int
    typer: Callable | None = None  # (args, idx) -> (dom, cod) for primitives
    capability: str | None = None
    definition: Callable | None = None  # (args, idx) -> Term for derived names
    doc: str = ""

    @property
    def derived(self):
        return self.definition is not None


def _bx(X):
    return Bang(X)


PRIMITIVES = {
    "Delta": GenSpec("Delta", 1, 0, lambda a, i: (_bx(a[0]), tensor(_bx(a[0]), _bx(a[0]))),
                     doc="comultiplication !A -> !A # !A"),
    "e": GenSpec("e", 1, 0, lambda a, i: (_bx(a[0]), K), doc="counit !A -> K"),
    "delta": GenSpec("delta", 1, 0, lambda a, i: (_bx(a[0]), Bang(_bx(a[0]))), "delta",
                     doc="comonad comultiplication !A -> !!A"),
    "eps": GenSpec("eps", 1, 0, lambda a, i: (_bx(a[0]), a[0]), doc="dereliction !A -> A"),
    "dcirc": GenSpec("dcirc", 1, 0, lambda a, i: (_bx(a[0]), tensor(_bx(a[0]), a[0])),
                     doc="coderiving map !A -> !A # A"),
    "d": GenSpec("d", 1, 0, lambda a, i: (tensor(_bx(a[0]), a[0]), _bx(a[0])), "differential",
                 doc="deriving map !A # A -> !A"),
    "s": GenSpec("s", 1, 0, lambda a, i: (_bx(a[0]), tensor(_bx(a[0]), a[0])), "integral",
                 doc="integral map !A -> !A # A"),
    "m_tensor": GenSpec("m_tensor", 2, 0,
                        lambda a, i: (tensor(_bx(a[0]), _bx(a[1])), Bang(tensor(a[0], a[1]))),
                        "monoidal", doc="!A # !B -> !(A # B)"),
    "m_K": GenSpec("m_K", 0, 0, lambda a, i: (K, Bang(K)), "monoidal", doc="K -> !K"),
    "chi": GenSpec("chi", 2, 0,
                   lambda a, i: (Bang(Prod(a[0], a[1])), tensor(_bx(a[0]), _bx(a[1]))), "seely",
                   doc="Seely map !(A&B) -> !A # !B"),
    "chi_inv": GenSpec("chi_inv", 2, 0,
                       lambda a, i: (tensor(_bx(a[0]), _bx(a[1])), Bang(Prod(a[0], a[1]))),
                       "seely", doc="inverse Seely map"),
    "pi0": GenSpec("pi0", 2, 0, lambda a, i: (Prod(a[0], a[1]), a[0]), "seely"),
    "pi1": GenSpec("pi1", 2, 0, lambda a, i: (Prod(a[0], a[1]), a[1]), "seely"),
    "Kinv": GenSpec("Kinv", 1, 0, lambda a, i: (_bx(a[0]), _bx(a[0])), "antiderivatives",
                    doc="closed-form inverse of K"),
    "Jinv": GenSpec("Jinv", 1, 0, lambda a, i: (_bx(a[0]), _bx(a[0])), "jinv",
                    doc="closed-form inverse of J"),
    "Jinv_n": GenSpec("Jinv", 1, 1, lambda a, i: (_bx(a[0]), _bx(a[0])), "jinv",
                      doc="closed-form inverse of J_n"),
}


def par(*terms):
    terms = [t for t in terms if t is not None]
    out = terms[0]
    for t in terms[1:]:
        out = Par(out, t)
    return out


def seq(*terms):
    terms = [t for t in terms if t is not None]
    out = terms[0]
    for t in terms[1:]:
        out = Seq(out, t)
    return out


def ids(obj, n=1):
    """Identity on obj^n, or None when n == 0."""
    return Id(power(obj, n)) if n > 0 else None


def _L(a, i):
    X = a[0]
    return Seq(Gen("dcirc", (X,)), Gen("d", (X,)))


def _K(a, i):
    X = a[0]
    return Sum(Gen("L", (X,)), BangT(Zero(X, X)))


def _J(a, i):
    X = a[0]
    return Sum(Gen("L", (X,)), Id(Bang(X)))


def _Ln(a, i):
    X, n = a[0], i[0]
    return Gen("L", (X,)) if n == 0 else Sum(Gen("L", (X,)), Scale(n, Id(Bang(X))))


def _Jn(a, i):
    X, n = a[0], i[0]
    return Gen("J", (X,)) if n == 0 else Sum(Gen("J", (X,)), Scale(n, Id(Bang(X))))


def _W(a, i):
    X = a[0]
    return seq(Par(Gen("dcirc", (X,)), Id(X)),
               Par(Id(Bang(X)), Swap(X, X)),
               Par(Gen("d", (X,)), Id(X)))


def _Delta_n(a, i):
    X, n = a[0], i[0]
    if n == 0:
        return Gen("e", (X,))
    if n == 1:
        return Id(Bang(X))
    if n == 2:
        return Gen("Delta", (X,))
    return Seq(Gen(f"Delta_{n - 1}", (X,)), par(Gen("Delta", (X,)), ids(Bang(X), n - 2)))


def omega_permutation(k, m):
    """Output position j of omega_(k m) carries input factor perm[j] (0-based)."""
    if not 0 <= k <= m or m < 1:
        raise IndexOutOfRange(f"omega needs 0 <= k <= m, m >= 1; got k={k}, m={m}")
    if k == 0:
        return [m - 1] + list(range(m - 1))
    perm = list(range(m))
    perm[k - 1], perm[m - 1] = perm[m - 1], perm[k - 1]
    return perm


def permutation_term(X, perm):
    """A composite of adjacent symmetries realizing perm on X^m."""
    m = len(perm)
    cur = list(range(m))
    steps = []
    for j in range(m):
        p = cur.index(perm[j])
        while p > j:
            steps.append(par(ids(X, p - 1), Swap(X, X), ids(X, m - p - 1)))
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            p -= 1
    if not steps:
        return Id(power(X, m))
    return seq(*steps)


def _omega(a, i):
    k, m = i
    return permutation_term(a[0], omega_permutation(k, m))


def _ninv(a, i):
    X, n = a[0], i[0]
    if n < 1:
        raise IndexOutOfRange("n_inv needs n >= 1")
    BX = Bang(X)
    return seq(Gen("delta", (X,)),
               Gen("s", (BX,)),
               par(Gen(f"Delta_{n - 1}", (BX,)), Id(BX)),
               par(*([Gen("eps", (BX,))] * (n - 1)), Id(BX)),
               par(Id(BX), *([Gen("e", (X,))] * (n - 1))))


def _nmap(a, i):
    return Scale(i[0], Id(Bang(a[0])))


def _anti(a, i):
    X = a[0]
    return Seq(Gen("Kinv", (X,)), Gen("dcirc", (X,)))


DERIVED = {
    "L": GenSpec("L", 1, 0, definition=_L, capability="differential", doc="dcirc ; d"),
    "K": GenSpec("K", 1, 0, definition=_K, capability="differential", doc="L + !0"),
    "J": GenSpec("J", 1, 0, definition=_J, capability="differential", doc="L + 1"),
    "L_n": GenSpec("L", 1, 1, definition=_Ln, capability="differential", doc="L + n"),
    "J_n": GenSpec("J", 1, 1, definition=_Jn, capability="differential", doc="J + n"),
    "W": GenSpec("W", 1, 0, definition=_W, capability="differential"),
    "Delta_n": GenSpec("Delta", 1, 1, definition=_Delta_n, doc="n-fold comultiplication"),
    "omega_n": GenSpec("omega", 1, 2, definition=_omega, doc="factor permutation"),
    "ninv_n": GenSpec("ninv", 1, 1, definition=_ninv, capability="integral",
                      doc="inverse of n on !A built from s and delta"),
    "nmap_n": GenSpec("nmap", 1, 1, definition=_nmap, doc="n times the identity of !A"),
    "anti": GenSpec("anti", 1, 0, definition=_anti, capability="antiderivatives",
                    doc="antiderivative Kinv ; dcirc"),
}

_INDEXED = re.compile(r"^([A-Za-z]+)((?:_\d+)+)$")


def lookup(name: str):
    """Return (GenSpec, indices) for a generator name, or None."""
    if name in PRIMITIVES:
        return PRIMITIVES[name], ()
    if name in DERIVED:
        return DERIVED[name], ()
    m = _INDEXED.match(name)
    if m:
        base = m.group(1)
        idx = tuple(int(x) for x in m.group(2).split("_")[1:])
        key = base + ("_n" if len(idx) else "")
        spec = PRIMITIVES.get(key) or DERIVED.get(key)
        if spec is not None and spec.indices == len(idx):
            return spec, idx
    return None


def resolve_args(gen: Gen, spec: GenSpec, binding: dict | None = None):
    args = gen.args
    if not args:
        args = (A, B)[:spec.arity] if spec.arity == 2 else (A,) * spec.arity
    if len(args) != spec.arity:
        raise TermTypeError(gen, f"{spec.arity} object argument(s)", f"{len(args)}",
                            "wrong number of object arguments")
    if binding:
        args = tuple(substitute(a, binding) for a in args)
    return args


def expand(gen: Gen, binding: dict | None = None):
    """The defining term of a derived generator with arguments resolved."""
    found = lookup(gen.name)
    if found is None or not found[0].derived:
        raise KeyError(gen.name)
    spec, idx = found
    return spec.definition(resolve_args(gen, spec, binding), idx)
