"""Checking catalog entries in a model and assembling reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache

from ..diagram.objects import Bang, Base, Prod, Tensor, bang_depth
from ..diagram.parser import parse
from ..diagram.signature import lookup
from ..diagram.terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Zero
from ..errors import MissingCapability, NotField, NotGradePreserving, UsageError
from ..linalg import Equal, NotInvertible, Unequal, equal_on, invert_blockwise
from .catalog import CATALOG, SUITES, Entry
from .model import Bounds, ModalityModel, evaluate
from .samplers import samples

SCHEMA = "calcat/1"
DELTA_NAMES = {"delta", "ninv"}


@dataclass
class EquationReport:
    id: str
    anchor: str
    verdict: str  # pass | fail | expected-fail-confirmed | skipped
    witness: dict | None = None
    ms: float = 0.0
    reason: str | None = None
    checked: int = 0

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "expected-fail-confirmed", "skipped")

    def to_dict(self, timing=True):
        d = {"id": self.id, "anchor": self.anchor, "verdict": self.verdict,
             "witness": self.witness, "ms": round(self.ms, 3) if timing else 0}
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass
class Report:
    model: str
    suite: str
    bounds: dict
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def by_id(self, id):
        for r in self.results:
            if r.id == id:
                return r
        raise KeyError(id)

    def counts(self):
        out = {}
        for r in self.results:
            out[r.verdict] = out.get(r.verdict, 0) + 1
        return out

    def to_dict(self, timing=True):
        return {"schema": SCHEMA, "model": self.model, "suite": self.suite,
                "bounds": self.bounds, "results": [r.to_dict(timing) for r in self.results]}

    def to_json(self, timing=True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False)


@lru_cache(maxsize=None)
def _parse(text):
    return parse(text)


def _objects(t):
    if isinstance(t, Id):
        yield t.obj
    elif isinstance(t, Swap):
        yield t.left
        yield t.right
    elif isinstance(t, Zero):
        yield t.dom
        yield t.cod
    elif isinstance(t, Gen):
        yield from t.args
    elif isinstance(t, (Seq, Par, Sum)):
        yield from _objects(t.left)
        yield from _objects(t.right)
    elif isinstance(t, Scale):
        yield from _objects(t.inner)
    elif isinstance(t, BangT):
        yield Bang(Base("A"))
        yield from _objects(t.inner)


def _gen_names(t):
    if isinstance(t, Gen):
        found = lookup(t.name)
        yield found[0].name if found else t.name
    elif isinstance(t, (Seq, Par, Sum)):
        yield from _gen_names(t.left)
        yield from _gen_names(t.right)
    elif isinstance(t, (Scale, BangT)):
        yield from _gen_names(t.inner)


def uses_delta(*terms) -> bool:
    """Whether a law involves the comonad structure (and so nested bangs)."""
    for t in terms:
        if DELTA_NAMES & set(_gen_names(t)):
            return True
        if any(bang_depth(o) >= 2 for o in _objects(t)):
            return True
    return False


def _expected(model, entry_id):
    return model.expectations.get(entry_id, "pass")


def input_basis(model: ModalityModel, space, entry: Entry, terms, bounds: Bounds):
    card = bounds.outer_card
    if entry.grade is not None:
        basis = space.block(entry.grade, card)
    else:
        g = bounds.delta_grade if uses_delta(*terms) else bounds.grade
        basis = space.elements(g, card)
    return basis[: bounds.budget]


def _witness(model, space_in, space_out, b, lv, rv, extra=None):
    w = {"input": model.format_elem(space_in, b),
         "lhs": model.format_vec(space_out, lv),
         "rhs": model.format_vec(space_out, rv)}
    if extra:
        w["maps"] = extra
    return w


def _compare(model, lhs, rhs, basis):
    res = equal_on(lhs.carrier, rhs.carrier, basis=basis)
    if isinstance(res, Unequal):
        return res, _witness(model, lhs.carrier.dom, lhs.carrier.cod, res.witness, res.lhs, res.rhs)
    return res, None


def _check_plain(model, entry, bounds, binding):
    lt, rt = _parse(entry.lhs), _parse(entry.rhs)
    lhs = evaluate(lt, model, binding)
    rhs = evaluate(rt, model, binding)
    basis = input_basis(model, lhs.carrier.dom, entry, (lt, rt), bounds)
    res, wit = _compare(model, lhs, rhs, basis)
    return res, wit, None


def _check_sampled(model, entry, bounds, binding, seed):
    lt, rt = _parse(entry.lhs), _parse(entry.rhs)
    pre = (_parse(entry.pre[0]), _parse(entry.pre[1])) if entry.pre else None
    accepted = rejected = checked = 0
    for env, desc in samples(entry.sampler, model, entry.id, seed):
        if pre is not None:
            pl, pr = evaluate(pre[0], model, binding, env), evaluate(pre[1], model, binding, env)
            pb = input_basis(model, pl.carrier.dom, entry, pre, bounds)
            if not equal_on(pl.carrier, pr.carrier, basis=pb):
                rejected += 1
                continue
        accepted += 1
        lhs, rhs = evaluate(lt, model, binding, env), evaluate(rt, model, binding, env)
        basis = input_basis(model, lhs.carrier.dom, entry, (lt, rt), bounds)
        res, wit = _compare(model, lhs, rhs, basis)
        checked += res.checked
        if not res:
            wit["maps"] = desc
            return res, wit, f"{accepted} sample(s) accepted, {rejected} rejected"
    if not accepted:
        return None, None, f"sampler exhausted: all {rejected} samples failed the precondition"
    return Equal(checked), None, f"{accepted} sample(s) accepted, {rejected} rejected"


def _check_invertible(model, entry, bounds, binding):
    t = _parse(entry.lhs)
    f = evaluate(t, model, binding)
    g = bounds.delta_grade if uses_delta(t) else bounds.grade
    result = invert_blockwise(f.carrier, g, bounds.outer_card)
    sp = f.carrier.dom
    if isinstance(result, NotInvertible):
        v = result.witness
        image = f.carrier.apply_vec(v)
        wit = {"input": model.format_vec(sp, v), "lhs": model.format_vec(sp, image), "rhs": "0"}
        return Unequal(v, image, {}, 0), wit, f"kernel vector in grade {result.grade}"
    if entry.rhs:
        claimed = evaluate(_parse(entry.rhs), model, binding)
        basis = sp.elements(g, bounds.outer_card)[: bounds.budget]
        res = equal_on(result.inverse, claimed.carrier, basis=basis)
        if not res:
            wit = _witness(model, sp, sp, res.witness, res.lhs, res.rhs)
            return res, wit, "blockwise inverse differs from the claimed inverse"
        return res, None, "blockwise inverse matches the claimed inverse"
    return Equal(result.checked), None, None


def check_equation(model: ModalityModel, entry_id, bounds: Bounds | None = None,
                   seed: int = 0, expect: str | None = None) -> EquationReport:
    """Check one catalog entry in a model.

    ``expect`` is "pass" or "fail"; by default it comes from the model's
    list of known separations.
    """
    entry = entry_id if isinstance(entry_id, Entry) else _entry(entry_id)
    bounds = bounds or model.bounds
    expect = expect or _expected(model, entry.id)
    binding = entry.binding_dict
    t0 = time.perf_counter()
    reason = None
    try:
        if entry.kind == "invertible":
            res, wit, reason = _check_invertible(model, entry, bounds, binding)
        elif entry.sampler:
            res, wit, reason = _check_sampled(model, entry, bounds, binding, seed)
        else:
            res, wit, reason = _check_plain(model, entry, bounds, binding)
    except (MissingCapability, NotField) as exc:
        res, wit, reason = None, None, str(exc)
    except NotGradePreserving as exc:
        res, wit, reason = None, None, f"not grade preserving: {exc}"
    ms = (time.perf_counter() - t0) * 1000
    if res is None:
        verdict = "skipped"
    elif res:
        verdict = "pass" if expect == "pass" else "fail"
        if expect != "pass":
            reason = "expected a counterexample, but the law held on every tested input"
        wit = None
    else:
        verdict = "fail" if expect == "pass" else "expected-fail-confirmed"
    return EquationReport(entry.id, entry.anchor, verdict, wit, ms, reason,
                          getattr(res, "checked", 0) if res is not None else 0)


def _entry(entry_id):
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise UsageError(f"unknown equation id {entry_id!r}") from None


def suite_entries(model: ModalityModel, suite: str):
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "separations":
        return [CATALOG[i] for i in model.separations]
    return [e for e in CATALOG.values() if suite in e.suites
            and (e.only is None or model.traits & set(e.only))]


def run_suite(model: ModalityModel, suite: str, bounds: Bounds | None = None, seed: int = 0,
              ids=None) -> Report:
    """Run a named suite (or an explicit list of ids) and collect the verdicts."""
    bounds = bounds or model.bounds
    entries = [_entry(i) for i in ids] if ids else suite_entries(model, suite)
    report = Report(model.name, suite if not ids else "custom", bounds.as_dict())
    for e in entries:
        report.results.append(check_equation(model, e, bounds, seed))
    return report
