"""Witness-map samplers for conditional and naturality laws.

Each sampler yields ``(env, description)`` pairs, where ``env`` binds the
free map names of an entry (f, g, h) to Morphisms of the model.  Draws are
seeded per entry so a run is reproducible.
"""

from __future__ import annotations

import random
import zlib

from ..diagram.objects import A, K, Bang, tensor
from ..diagram.parser import parse
from ..errors import MissingCapability
from .model import ModalityModel, evaluate

SAMPLES = 4


def rng_for(entry_id: str, seed: int) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(entry_id.encode()))


def _scalar(model, rng):
    rig = model.rig
    if rig.char_hint == 0:
        return rig.from_int(rng.choice([-3, -2, -1, 1, 2, 3]))
    return rig.one


def random_vector(model, space, rng, max_grade, terms=3, min_grade=0):
    pool = [b for b in space.elements(max_grade, model.bounds.outer_card)
            if space.grade(b) >= min_grade]
    if not pool:
        return {}
    out = {}
    for b in rng.sample(pool, min(terms, len(pool))):
        out[b] = _scalar(model, rng)
    return out


def _fixed_map(model, dom, cod, table, label):
    """A Morphism whose carrier sends each [[cod]] basis element per ``table``."""
    return model.morphism(dom, cod, lambda b: table.get(b, {}), label)


def random_map(model, dom, cod, rng, max_grade=2, terms=2, label="f"):
    """A random map dom -> cod; its carrier sends each [[cod]] basis element
    of grade <= 1 to a small combination in [[dom]]."""
    sdom, scod = model.space(dom), model.space(cod)
    table = {b: random_vector(model, sdom, rng, max_grade, terms)
             for b in scod.elements(1, model.bounds.outer_card)}
    m = _fixed_map(model, dom, cod, table, label)
    desc = ", ".join(f"{model.format_elem(scod, b)} |-> {model.format_vec(sdom, v)}"
                     for b, v in sorted(table.items(), key=lambda kv: scod.key(kv[0])))
    return m, f"{label}: {desc}"


def linear_f(model, entry_id, seed):
    """Random linear maps f: A -> A (a matrix on the base basis)."""
    rng = rng_for(entry_id, seed)
    for _ in range(SAMPLES):
        m, desc = random_map(model, A, A, rng, max_grade=1, label="f")
        yield {"f": m}, desc


def _scalar_on(model, obj, rng, label, max_grade):
    sp = model.space(obj)
    v = random_vector(model, sp, rng, max_grade, terms=3)
    m = model.morphism(obj, K, lambda b: v if b == () else {}, label)
    return m, f"{label} = {model.format_vec(sp, v)}"


def scalar_h(model, entry_id, seed):
    """Random scalar-valued maps h: !A -> K (polynomial functionals)."""
    rng = rng_for(entry_id, seed)
    for _ in range(SAMPLES):
        h, desc = _scalar_on(model, Bang(A), rng, "h", model.bounds.grade)
        yield {"h": h}, desc


def scalar_f(model, entry_id, seed):
    """Maps f: !A # A -> K: some raw random draws (usually rejected by the
    Poincare precondition) and some of the form d ; h (always accepted)."""
    rng = rng_for(entry_id, seed)
    dh = parse("d ; h")
    for i in range(SAMPLES + 2):
        if i % 3 == 0:
            f, desc = _scalar_on(model, tensor(Bang(A), A), rng, "f", model.bounds.grade)
        else:
            h, hdesc = _scalar_on(model, Bang(A), rng, "h", model.bounds.grade)
            f = evaluate(dh, model, env={"h": h})
            desc = f"f = d ; h with {hdesc}"
        yield {"f": f}, desc


def taylor(model, entry_id, seed):
    """Pairs f, g: !A -> K with equal derivatives.

    Kernel elements of d's carrier come first (paired with 0): these are the
    only candidates for a failure of the Taylor property.  Then random pairs
    shifted by a kernel element.
    """
    rng = rng_for(entry_id, seed)
    sp = model.space(Bang(A))
    dmap = model.generator("d", (A,))
    kernel = [b for b in sp.elements(model.bounds.grade, model.bounds.outer_card)
              if not dmap.carrier.apply(b)]
    zero = model.zero(Bang(A), K)

    def const(v, label):
        return model.morphism(Bang(A), K, lambda b: v if b == () else {}, label)

    for b in kernel:
        v = {b: model.rig.one}
        yield {"f": const(v, "f"), "g": zero}, f"f = {model.format_vec(sp, v)}; g = 0"
    for _ in range(SAMPLES):
        v = random_vector(model, sp, rng, model.bounds.grade)
        w = dict(v)
        if kernel:
            k = rng.choice(kernel)
            w[k] = model.rig.add(w.get(k, model.rig.zero), model.rig.one)
            w = {x: c for x, c in w.items() if c != model.rig.zero}
        yield ({"f": const(v, "f"), "g": const(w, "g")},
               f"f = {model.format_vec(sp, v)}; g = {model.format_vec(sp, w)}")


def substitution(model, entry_id, seed):
    """Arbitrary g: !A # A -> A and f: !A # A -> K."""
    rng = rng_for(entry_id, seed)
    for _ in range(SAMPLES):
        g, gdesc = random_map(model, tensor(Bang(A), A), A, rng, max_grade=2, label="g")
        f, fdesc = _scalar_on(model, tensor(Bang(A), A), rng, "f", 3)
        yield {"g": g, "f": f}, f"{gdesc}; {fdesc}"


def substitution_ftc1(model, entry_id, seed):
    """Arbitrary g and a scalar h, so that d ; h satisfies FTC1."""
    rng = rng_for(entry_id, seed)
    for _ in range(SAMPLES):
        g, gdesc = random_map(model, tensor(Bang(A), A), A, rng, max_grade=2, label="g")
        h, hdesc = _scalar_on(model, Bang(A), rng, "h", 3)
        yield {"g": g, "h": h}, f"{gdesc}; {hdesc}"


SAMPLERS = {
    "linear-f": linear_f,
    "scalar-h": scalar_h,
    "scalar-f": scalar_f,
    "taylor": taylor,
    "substitution": substitution,
    "substitution-ftc1": substitution_ftc1,
}


def samples(name: str, model: ModalityModel, entry_id: str, seed: int = 0):
    try:
        fn = SAMPLERS[name]
    except KeyError:
        raise MissingCapability(f"unknown sampler {name}") from None
    return fn(model, entry_id, seed)
