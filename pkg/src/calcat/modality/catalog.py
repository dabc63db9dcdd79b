"""The equation catalog.

Each entry is a pair of terms in the text grammar, checked at the base
object A (or at a rebinding of it, e.g. the unit object K).  Entries with a
``sampler`` quantify over witness maps drawn by ``samplers``; ``pre`` is a
precondition checked on each sample before the consequent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..diagram.objects import K

SUITES = ("comonoid", "coderiving", "differential", "integral", "calculus", "LKJ",
          "antiderivatives", "monoidal", "separations", "naturality")


@dataclass(frozen=True)
class Entry:
    id: str
    anchor: str
    suites: tuple
    lhs: str
    rhs: str = ""
    kind: str = "equation"  # equation | invertible
    binding: tuple = ()
    grade: int | None = None  # exact input grade, overriding suite bounds
    sampler: str | None = None
    pre: tuple | None = None
    only: tuple | None = None  # restrict suite membership to these model kinds
    note: str = ""

    @property
    def binding_dict(self):
        return dict(self.binding)


CATALOG: dict = {}


def _add(id, anchor, suites, lhs, rhs="", **kw):
    if isinstance(suites, str):
        suites = (suites,)
    if id in CATALOG:
        raise ValueError(f"duplicate catalog id {id}")
    CATALOG[id] = Entry(id, anchor, tuple(suites), lhs, rhs, **kw)


I = "id[!A]"
ZERO = "bang(0[A->A])"

# -- comonoid and comonad ------------------------------------------------------
S = "comonoid"
_add("comonoid.coassoc", "coassociativity of Delta", S,
     "Delta ; (Delta # id[!A])", "Delta ; (id[!A] # Delta)")
_add("comonoid.counit.left", "counit law for e (left)", S, "Delta ; (e # id[!A])", I)
_add("comonoid.counit.right", "counit law for e (right)", S, "Delta ; (id[!A] # e)", I)
_add("comonoid.cocomm", "cocommutativity of Delta", S, "Delta ; sym[!A, !A]", "Delta")
_add("comonad.counit.left", "comonad counit law (eps at !A)", S, "delta ; eps[!A]", I)
_add("comonad.counit.right", "comonad counit law (bang eps)", S, "delta ; bang(eps)", I)
_add("comonad.coassoc", "comonad coassociativity", S,
     "delta ; delta[!A]", "delta ; bang(delta)")
_add("delta.Delta", "delta preserves the comultiplication", S,
     "delta ; Delta[!A]", "Delta ; (delta # delta)")
_add("delta.e", "delta preserves the counit", S, "delta ; e[!A]", "e")

# -- coderiving ------------------------------------------------------------------
S = "coderiving"
_add("cd.def", "coderiving map as Delta ; (1 # eps)", S, "dcirc", "Delta ; (id[!A] # eps)")
_add("cd.1", "coderiving constants rule", S, "dcirc ; (e # id)", "eps")
_add("cd.2", "coderiving on a linear input", S, "dcirc ; (eps # id)", "Delta ; (eps # eps)")
_add("cd.3", "coderiving and Delta (right)", S,
     "dcirc ; (Delta # id)", "Delta ; (id[!A] # dcirc)")
_add("cd.4", "coderiving and Delta (left)", S,
     "dcirc ; (Delta # id) ; (id[!A] # sym[!A, A])", "Delta ; (dcirc # id[!A])")
_add("cd.5", "coderiving and delta", S,
     "dcirc ; (delta # id)", "delta ; dcirc[!A] ; (id[!!A] # eps)")
_add("cd.6", "coderiving interchange", S,
     "dcirc ; (dcirc # id)", "dcirc ; (dcirc # id) ; (id[!A] # sym[A, A])")
_add("cd.7", "coderiving unit law through delta", S,
     "delta ; dcirc[!A] ; (bang(eps) # e)", I)

# -- deriving --------------------------------------------------------------------
S = "differential"
_add("d.1", "constant rule", S, "d ; e", "0[!A # A -> K]")
_add("d.2", "Leibniz rule", S, "d ; Delta",
     "(Delta # id) ; (id[!A] # sym[!A, A]) ; (d # id[!A]) + (Delta # id) ; (id[!A] # d)")
_add("d.3", "linear rule", S, "d ; eps", "e # id")
_add("d.4", "chain rule", S, "d ; delta",
     "(Delta # id) ; (delta # id[!A] # id[A]) ; (id[!!A] # d) ; d[!A]")
_add("d.5", "interchange rule", S, "(d # id) ; d", "(id[!A] # sym[A, A]) ; (d # id) ; d")
_add("W.def", "d ; dcirc = W + 1", S, "d ; dcirc", "W + id[!A # A]")

# -- integral --------------------------------------------------------------------
S = "integral"


def rota_baxter_rhs(P):
    return (f"{P} ; (Delta # id) ; ({P} # id[!A] # id[A])"
            f" + {P} ; (Delta # id) ; (id[!A] # sym[!A, A]) ; (id[!A] # id[A] # {P})")


RB_S = rota_baxter_rhs("s")
_add("s.1", "integral of constants", S, "s ; (e # id)", "eps")
_add("s.2", "Rota-Baxter rule", S, "Delta ; (s # s)", RB_S)
_add("s.3", "integral interchange", S, "s ; (s # id)", "s ; (s # id) ; (id[!A] # sym[A, A])")
_add("s.nat", "integral through delta and bang(eps)", S,
     "s", "delta ; s[!A] ; (bang(eps) # eps)")
_add("cd-as-s.2", "Rota-Baxter rule for the coderiving map", S,
     "Delta ; (dcirc # dcirc)", rota_baxter_rhs("dcirc"), only=("idempotent",),
     note="holds only in additively idempotent models")
_add("substitution.all", "integration by substitution for all maps", S,
     "delta ; bang(s ; g) ; s ; f",
     "s ; (Delta # id) ; (delta # id[!A] # id[A]) ; (bang(s ; g) # g) ; f",
     sampler="substitution", only=("idempotent",))


def _eps_power(n):
    return " # ".join(["eps"] * n)


for n in range(0, 6):
    left = f"{n + 1}*(s ; (Delta_{n} # id)" + (f" ; ({_eps_power(n)} # id))" if n else ")")
    _add(f"s.poly.n{n}", "polynomial integration rule", S, left,
         f"Delta_{n + 1} ; ({_eps_power(n + 1)})", grade=n + 1)

for n in range(1, 5):
    base = f"s ; (Delta_{n} # id) ; ({_eps_power(n)} # id)"
    for k in range(0, n + 2):
        _add(f"omega.n{n}.k{k}", "integral is symmetric in its linear inputs", S,
             f"{base} ; omega_{k}_{n + 1}", base, grade=n + 1)

for n in range(1, 5):
    _add(f"ninv.n{n}", "n is invertible on !A", S, f"{n}*ninv_{n}", I)

# -- calculus --------------------------------------------------------------------
S = "calculus"
_add("FTC2", "second fundamental theorem of calculus", S, f"s ; d + {ZERO}", I)
_add("compat", "compatibility d s d = d", S, "d ; s ; d", "d")
_add("calc-object.K", "the unit is a calculus object", S, "d ; s", "id[!A]",
     binding=(("A", K),))
_add("taylor", "Taylor property on sampled pairs", S,
     f"f + {ZERO} ; g", f"g + {ZERO} ; f", sampler="taylor", pre=("d ; f", "d ; g"))
_add("poincare.grad", "Poincare condition and FTC1 on derivatives", S,
     "d ; s ; d ; h", "d ; h", sampler="scalar-h",
     pre=("(d # id) ; d ; h", "(id[!A] # sym[A, A]) ; (d # id) ; d ; h"))
_add("poincare.sampled", "Poincare condition implies FTC1", S,
     "d ; s ; f", "f", sampler="scalar-f",
     pre=("(d # id) ; f", "(id[!A] # sym[A, A]) ; (d # id) ; f"))
_add("K.identity", "K is the identity relation", S, "K", I, only=("idempotent",))
_add("J.identity", "J is the identity relation", S, "J", I, only=("idempotent",))
_add("calc-object.A", "base object as a calculus object", "separations", "d ; s", "id[!A # A]")

# -- L, K, J families --------------------------------------------------------------
S = "LKJ"


def _family(P, n, c1, c3, split_total, nxt, tag, suite=S, f_suite=S):
    """Shared shape of the L_n / J_n property lists."""
    def sc(c, t):
        return f"{c}*{t}" if c != 1 else t
    _add(f"{tag}.1.left", "scaling on bang(0)", suite, f"{P} ; {ZERO}", sc(c1, ZERO))
    _add(f"{tag}.1.right", "scaling on bang(0)", suite, f"{ZERO} ; {P}", sc(c1, ZERO))
    _add(f"{tag}.2", "action on the counit", suite, f"{P} ; e", sc(c1, "e"))
    _add(f"{tag}.3", "action on dereliction", suite, f"{P} ; eps", sc(c3, "eps"))
    for r in range(split_total + 1):
        s = split_total - r
        _add(f"{tag}.4.r{r}", "distribution over Delta", suite, f"{P} ; Delta",
             f"Delta ; (L_{r} # id[!A]) + Delta ; (id[!A] # L_{s})")
    _add(f"{tag}.5", "interaction with delta", suite, f"{P} ; delta",
         "delta ; dcirc[!A] ; (id[!!A] # L) ; d[!A]" + (f" + {sc(c1, 'delta')}" if c1 else ""))
    _add(f"{tag}.6", "commutation with d", suite, f"d ; {P}", f"({nxt} # id) ; d")
    _add(f"{tag}.7", "commutation with dcirc", suite, f"{P} ; dcirc", f"dcirc ; ({nxt} # id)")
    _add(f"{tag}.8", "commutation with dcirc ; (1 # f) ; d", f_suite,
         f"{P} ; dcirc ; (id[!A] # f) ; d", f"dcirc ; (id[!A] # f) ; d ; {P}", sampler="linear-f")
    _interchange(P, tag, suite)


def _interchange(P, tag, suite):
    _add(f"{tag}.9", "differential interchange through the map", suite,
         f"(d # id) ; ({P} # id) ; d", f"(id[!A] # sym[A, A]) ; (d # id) ; ({P} # id) ; d")
    _add(f"{tag}.10", "coderiving interchange through the map", suite,
         f"dcirc ; ({P} # id) ; (dcirc # id)",
         f"dcirc ; ({P} # id) ; (dcirc # id) ; (id[!A] # sym[A, A])")
    _add(f"{tag}.11", "commutation with W", suite, f"({P} # id) ; W", f"W ; ({P} # id)")
    _add(f"{tag}.12", "commutation with d ; dcirc", suite,
         f"({P} # id) ; d ; dcirc", f"d ; dcirc ; ({P} # id)")


for n in range(3):
    _family(f"L_{n}", n, n, n + 1, n, f"L_{n + 1}", f"L.n{n}")
    _family(f"J_{n}", n, n + 1, n + 2, n + 1, f"J_{n + 1}", f"J.n{n}")

_add("K.1.left", "K fixes bang(0)", S, f"K ; {ZERO}", ZERO)
_add("K.1.right", "K fixes bang(0)", S, f"{ZERO} ; K", ZERO)
_add("K.2", "K fixes the counit", S, "K ; e", "e")
_add("K.3", "K fixes dereliction", S, "K ; eps", "eps")
_add("K.4", "K over Delta", S, "K ; Delta",
     f"Delta ; (L # id[!A]) + Delta ; (id[!A] # L) + Delta ; ({ZERO} # {ZERO})")
_add("K.5", "K over delta", S, "K ; delta",
     "delta ; dcirc[!A] ; (id[!!A] # L) ; d[!A] + delta ; bang(bang(0[A->A]))")
_add("K.6", "d ; K = d ; L", S, "d ; K", "d ; L")
_add("K.7", "K ; dcirc = L ; dcirc", S, "K ; dcirc", "L ; dcirc")
_add("K.8", "commutation with dcirc ; (1 # f) ; d", S,
     "K ; dcirc ; (id[!A] # f) ; d", "dcirc ; (id[!A] # f) ; d ; K", sampler="linear-f")
_interchange("K", "K", S)

# -- inverses and antiderivatives ------------------------------------------------------
S = "antiderivatives"
_add("Kinv.iso.left", "K^-1 is a left inverse of K", S, "Kinv ; K", I)
_add("Kinv.iso.right", "K^-1 is a right inverse of K", S, "K ; Kinv", I)
for n in range(3):
    _add(f"Jinv.iso.n{n}.left", "J_n^-1 inverts J_n", S, f"Jinv_{n} ; J_{n}", I)
    _add(f"Jinv.iso.n{n}.right", "J_n^-1 inverts J_n", S, f"J_{n} ; Jinv_{n}", I)
_add("K.blockwise", "K^-1 agrees with blockwise inversion of K", S, "K", "Kinv", kind="invertible")
_add("J.blockwise", "J^-1 agrees with blockwise inversion of J", S, "J", "Jinv", kind="invertible")
_add("Kinv.composite", "K^-1 built from J^-1", S,
     "Kinv", f"dcirc ; (Jinv # id) ; (Jinv # id) ; d + {ZERO}")
_add("Jinv.composite", "J^-1 built from K^-1", S,
     "Jinv", "delta ; Kinv[!A] ; dcirc[!A] ; (bang(eps) # e)")
for n in range(1, 3):
    _add(f"Jinv.composite.n{n}", "J_n^-1 built from J_(n-1)^-1", S,
         f"Jinv_{n}", f"delta ; Jinv_{n - 1}[!A] ; dcirc[!A] ; (bang(eps) # e)")
_add("Jinv.from_s", "J^-1 recovered from the integral", S,
     "Jinv", "delta ; s[!A] ; (bang(eps) # e)")
_add("lemma.L", "dcirc (1 # L) d dcirc (bang(eps) # e) = dcirc (bang(eps) # e) L", S,
     "dcirc[!A] ; (id[!!A] # L) ; d[!A] ; dcirc[!A] ; (bang(eps) # e)",
     "dcirc[!A] ; (bang(eps) # e) ; L")

_add("Kinv.1.left", "K^-1 fixes bang(0)", S, f"Kinv ; {ZERO}", ZERO)
_add("Kinv.1.right", "K^-1 fixes bang(0)", S, f"{ZERO} ; Kinv", ZERO)
_add("Kinv.2", "K^-1 fixes the counit", S, "Kinv ; e", "e")
_add("Kinv.3", "K^-1 fixes dereliction", S, "Kinv ; eps", "eps")
KINV4_RHS = (f"Kinv ; Delta ; (Kinv # id[!A]) + Kinv ; Delta ; (id[!A] # Kinv)"
             f" + Delta ; ({ZERO} # {ZERO})")
_add("Kinv.4", "K^-1 over Delta", S,
     f"Delta ; (Kinv # Kinv) + Kinv ; Delta ; (Kinv # {ZERO}) + Kinv ; Delta ; ({ZERO} # Kinv)",
     KINV4_RHS, note="the bang(0) terms carry a leading K^-1, as forced by K.4")
_add("Kinv.4.text", "K^-1 over Delta, bang(0) terms without a leading K^-1", "separations",
     f"Delta ; (Kinv # Kinv) + Delta ; (Kinv # {ZERO}) + Delta ; ({ZERO} # Kinv)", KINV4_RHS)
_add("Kinv.5", "K^-1 commutes with W", S, "(Kinv # id) ; W", "W ; (Kinv # id)")
_add("Kinv.6", "K^-1 commutes with d ; dcirc", S,
     "(Kinv # id) ; d ; dcirc", "d ; dcirc ; (Kinv # id)")
_add("Kinv.7", "differential interchange through K^-1", S,
     "(d # id) ; (Kinv # id) ; d", "(id[!A] # sym[A, A]) ; (d # id) ; (Kinv # id) ; d")
_add("Kinv.8", "coderiving interchange through K^-1", S,
     "dcirc ; (Kinv # id) ; (dcirc # id)",
     "dcirc ; (Kinv # id) ; (dcirc # id) ; (id[!A] # sym[A, A])")

for n in range(3):
    t = f"Jinv.n{n}"
    J = f"Jinv_{n}"
    c = n + 1
    _add(f"{t}.1.left", "J_n^-1 on bang(0)", S, f"{c}*({J} ; {ZERO})", ZERO)
    _add(f"{t}.1.right", "J_n^-1 on bang(0)", S, f"{c}*({ZERO} ; {J})", ZERO)
    _add(f"{t}.2", "J_n^-1 on the counit", S, f"{c}*({J} ; e)", "e")
    _add(f"{t}.4", "d commutes past J_n^-1", S, f"d ; {J}", f"(Jinv_{n + 1} # id) ; d")
    _add(f"{t}.5", "dcirc commutes past J_n^-1", S, f"{J} ; dcirc", f"dcirc ; (Jinv_{n + 1} # id)")
    _add(f"{t}.6", "J_n^-1 commutes with W", S, f"({J} # id) ; W", f"W ; ({J} # id)")
    _add(f"{t}.7", "J_n^-1 commutes with d ; dcirc", S,
         f"({J} # id) ; d ; dcirc", f"d ; dcirc ; ({J} # id)")
    _add(f"{t}.10", "differential interchange through J_n^-1", S,
         f"(d # id) ; ({J} # id) ; d", f"(id[!A] # sym[A, A]) ; (d # id) ; ({J} # id) ; d")
    _add(f"{t}.11", "coderiving interchange through J_n^-1", S,
         f"dcirc ; ({J} # id) ; (dcirc # id)",
         f"dcirc ; ({J} # id) ; (dcirc # id) ; (id[!A] # sym[A, A])")
_add("Jinv.3", "2 J^-1 on dereliction", S, "2*(Jinv ; eps)", "eps")
_add("Jinv.8", "J^-1 against K^-1 through d", S, "(Jinv # id) ; d", "d ; Kinv")
_add("Jinv.9", "the two forms of the antiderivative agree", S,
     "dcirc ; (Jinv # id)", "Kinv ; dcirc")

_add("anti.s", "the bound integral is the antiderivative", S, "s", "anti")
_add("anti.s.1", "antiderivative: integral of constants", S, "anti ; (e # id)", "eps")
_add("anti.s.2", "antiderivative: Rota-Baxter rule", S, "Delta ; (anti # anti)",
     rota_baxter_rhs("anti"))
_add("anti.s.3", "antiderivative: interchange", S,
     "anti ; (anti # id)", "anti ; (anti # id) ; (id[!A] # sym[A, A])")
_add("anti.FTC2", "antiderivative satisfies FTC2", S, f"anti ; d + {ZERO}", I)
_add("anti.compat", "antiderivative is compatible", S, "d ; anti ; d", "d")
_add("substitution.ftc1", "FTC1 maps admit substitution", S,
     "delta ; bang(s ; g) ; s ; d ; h",
     "s ; (Delta # id) ; (delta # id[!A] # id[A]) ; (bang(s ; g) # g) ; d ; h",
     sampler="substitution-ftc1")

# -- monoidal --------------------------------------------------------------------------
S = "monoidal"
MT = "m_tensor[A, B]"
_add("mon.e", "e is monoidal", S, f"{MT} ; e[A # B]", "e[A] # e[B]")
_add("mon.Delta", "Delta is monoidal", S, f"{MT} ; Delta[A # B]",
     f"(Delta[A] # Delta[B]) ; (id[!A] # sym[!A, !B] # id[!B]) ; ({MT} # {MT})")
_add("mon.eps", "eps is monoidal", S, f"{MT} ; eps[A # B]", "eps[A] # eps[B]")
_add("mon.delta", "delta is monoidal", S, f"{MT} ; delta[A # B]",
     f"(delta[A] # delta[B]) ; m_tensor[!A, !B] ; bang({MT})")
_add("mon.mK.e", "m_K and e", S, "m_K ; e[K]", "id[K]")
_add("mon.mK.Delta", "m_K and Delta", S, "m_K ; Delta[K]", "m_K # m_K")
_add("mon.mK.eps", "m_K and eps", S, "m_K ; eps[K]", "id[K]")
_add("mon.coalg.Delta", "Delta is a coalgebra morphism", S,
     "Delta ; (delta # delta) ; m_tensor[!A, !A]", "delta ; bang(Delta)")
_add("mon.coalg.e", "e is a coalgebra morphism", S, "e ; m_K", "delta ; bang(e)")
_add("cd.m", "coderiving monoidal rule", S, f"{MT} ; dcirc[A # B]",
     f"(dcirc[A] # dcirc[B]) ; (id[!A] # sym[A, !B] # id[B]) ; ({MT} # id[A] # id[B])")
_add("d.m", "deriving monoidal rule", S, f"(id[!A] # d[B]) ; {MT}",
     f"(dcirc[A] # id[!B] # id[B]) ; (id[!A] # sym[A, !B] # id[B]) ; ({MT} # id[A] # id[B]) ; d[A # B]")
_add("s.m.left", "integral monoidal rule", S, f"{MT} ; s[A # B]",
     f"(s[A] # dcirc[B]) ; (id[!A] # sym[A, !B] # id[B]) ; ({MT} # id[A] # id[B])")
_add("s.m.right", "integral monoidal rule (other side)", S, f"{MT} ; s[A # B]",
     f"(dcirc[A] # s[B]) ; (id[!A] # sym[A, !B] # id[B]) ; ({MT} # id[A] # id[B])")
_add("s.m.alt", "integral from the unit-object integral", S, "s",
     "(m_K # dcirc) ; (s[K] # id[!A] # id[A]) ; (m_tensor[K, A] # id[A])")
_add("anti.m", "the antiderivative is monoidal", S, f"{MT} ; anti[A # B]",
     f"(anti[A] # dcirc[B]) ; (id[!A] # sym[A, !B] # id[B]) ; ({MT} # id[A] # id[B])")
for n in range(2):
    for P in (f"L_{n}", f"J_{n}"):
        _add(f"{P[0]}.m.n{n}.left", "monoidal rule for the scaling map", S,
             f"{MT} ; {P}[A # B]", f"({P}[A] # id[!B]) ; {MT}")
        _add(f"{P[0]}.m.n{n}.right", "monoidal rule for the scaling map", S,
             f"{MT} ; {P}[A # B]", f"(id[!A] # {P}[B]) ; {MT}")
_add("K.m.left", "monoidal rule for K", S, f"{MT} ; K[A # B]", f"(K[A] # id[!B]) ; {MT}")
_add("K.m.right", "monoidal rule for K", S, f"{MT} ; K[A # B]", f"(id[!A] # K[B]) ; {MT}")
_add("Kinv.m", "monoidal rule for K^-1", S, f"{MT} ; Kinv[A # B]", f"(Kinv[A] # id[!B]) ; {MT}")
_add("Jinv.m", "monoidal rule for J^-1", S, f"{MT} ; Jinv[A # B]", f"(Jinv[A] # id[!B]) ; {MT}")
for n in range(1, 4):
    _add(f"ninv.monoidal.n{n}", "n^-1 on A through m_K", S,
         f"{n}*((m_K # id[A]) ; (ninv_{n}[K] # id[A]) ; (e[K] # id[A]))", "id[A]")
_add("Jinv.mK", "J^-1 from m_K and the unit integral", S,
     "Jinv", "(m_K # id[!A]) ; (s[K] # id[!A]) ; m_tensor[K, A]")
_add("sK.unique", "the unit integral is the antiderivative", S, "s", "Kinv ; dcirc",
     binding=(("A", K),))
_add("extra-coherence", "extra coherence for the integral", S, "d ; s",
     "(delta # id) ; (s[!A] # id[A]) ; (bang(eps) # e # id[A]) ; d ; dcirc")
_add("seely.chi", "Seely map from the projections", S, "chi[A, B]",
     "Delta[A&B] ; (bang(pi0[A, B]) # bang(pi1[A, B]))")
_add("seely.roundtrip.left", "Seely round trip on !(A&B)", S, "chi[A, B] ; chi_inv[A, B]",
     "id[!(A&B)]")
_add("seely.roundtrip.right", "Seely round trip on !A # !B", S, "chi_inv[A, B] ; chi[A, B]",
     "id[!A # !B]")
_add("seely.m_tensor", "m_tensor from the Seely isomorphisms", S, MT,
     "chi_inv[A, B] ; delta[A&B] ; bang(chi[A, B]) ; bang(eps[A] # eps[B])")
_add("fubini", "double integrals commute", S,
     "chi[A, B] ; (s[A] # id[!B]) ; (id[!A] # id[A] # s[B])",
     "chi[A, B] ; (id[!A] # s[B]) ; (s[A] # id[!B] # id[B])")

# -- naturality on sampled linear maps --------------------------------------------------
S = "naturality"
_add("nat.Delta", "naturality of Delta", S, "bang(f) ; Delta",
     "Delta ; (bang(f) # bang(f))", sampler="linear-f")
_add("nat.e", "naturality of e", S, "bang(f) ; e", "e", sampler="linear-f")
_add("nat.eps", "naturality of eps", S, "bang(f) ; eps", "eps ; f", sampler="linear-f")
_add("nat.delta", "naturality of delta", S, "bang(f) ; delta", "delta ; bang(bang(f))",
     sampler="linear-f")
_add("nat.d", "naturality of d", S, "(bang(f) # f) ; d", "d ; bang(f)", sampler="linear-f")
_add("nat.dcirc", "naturality of dcirc", S, "bang(f) ; dcirc", "dcirc ; (bang(f) # f)",
     sampler="linear-f")
_add("nat.s", "naturality of s", S, "bang(f) ; s", "s ; (bang(f) # f)", sampler="linear-f")

# -- separations: claims checked per model with an expected outcome ---------------------------
S = "separations"
_add("two.invertible", "2 is invertible on !A", S, "2*id[!A]", kind="invertible")
_add("K.invertible", "K is invertible", S, "K", kind="invertible")
_add("J.invertible", "J is invertible", S, "J", "Jinv", kind="invertible")
_add("Jinv-integral.FTC2", "FTC2 for the integral dcirc ; (J^-1 # 1)", S,
     f"dcirc ; (Jinv # id) ; d + {ZERO}", I)


def entries_for(suite: str):
    return [e for e in CATALOG.values() if suite in e.suites]
