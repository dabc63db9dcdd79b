from fractions import Fraction

import pytest

from calcat.diagram import A, K, Bang, Gen, parse
from calcat.errors import IndexOutOfRange, MissingCapability, NotInvertibleError, UsageError
from calcat.linalg import Invertible, equal_on, invert_blockwise
from calcat.modality.catalog import CATALOG, SUITES
from calcat.modality.check import check_equation, run_suite, suite_entries
from calcat.modality.derived import (antiderivative, derived_Delta_n, derived_J, derived_Jinv_composite,
                                     derived_Jinv_n, derived_K, derived_Kinv_composite, derived_L,
                                     derived_n_inv, derived_omega, derived_W)
from calcat.modality.model import Bounds, evaluate
from calcat.models import make_model, rb, rel, sym_f2, sym_q

BA = Bang(A)


@pytest.fixture(scope="module")
def Q():
    return sym_q()


def _fmt(model, m, text):
    b = model.parse_elem(m.carrier.dom, text)
    return model.format_vec(m.carrier.cod, m.carrier.apply(b))


def test_derived_L_K_J(Q):
    assert _fmt(Q, derived_L(Q), "x^2 y") == "3·x^2 y"
    assert _fmt(Q, derived_L(Q), "1") == "0"
    assert _fmt(Q, derived_K(Q), "1") == "1"
    assert _fmt(Q, derived_J(Q), "x") == "2·x"
    R = rel()
    for name in (derived_K, derived_J):
        c = name(R).carrier
        assert all(c.apply(b) == {b: 1} for b in R.space(BA).elements(4, 3))


def test_derived_W_matches_d_dcirc(Q):
    W = derived_W(Q).carrier
    ddc = evaluate(parse("d ; dcirc"), Q).carrier
    ident = evaluate(parse("id[!A # A]"), Q).carrier
    for b in W.dom.elements(3):
        lhs = ddc.apply(b)
        rhs = dict(W.apply(b))
        for k, v in ident.apply(b).items():
            rhs[k] = rhs.get(k, 0) + v
        assert lhs == {k: v for k, v in rhs.items() if v}


def test_Delta_n_and_omega(Q):
    assert equal_on(derived_Delta_n(Q, 2).carrier, evaluate(Gen("Delta"), Q).carrier, 4)
    assert equal_on(derived_Delta_n(Q, 1).carrier, evaluate(parse("id[!A]"), Q).carrier, 4)
    assert equal_on(derived_Delta_n(Q, 0).carrier, evaluate(Gen("e"), Q).carrier, 4)
    for n in range(1, 5):
        ident = evaluate(parse(" # ".join(["id[A]"] * n)), Q).carrier
        assert equal_on(derived_omega(Q, n, n).carrier, ident, n)
    with pytest.raises(IndexOutOfRange):
        derived_omega(Q, 3, 2)
    with pytest.raises(IndexOutOfRange):
        derived_Delta_n(Q, -1)


def test_s_poly_n1_example(Q):
    m = evaluate(parse("2*(s ; (Delta_1 # id) ; (eps # id))"), Q)
    assert _fmt(Q, m, "x (x) y") == "x y"


def test_n_inv(Q):
    ident = evaluate(parse("id[!A]"), Q).carrier
    assert equal_on(derived_n_inv(Q, 1).carrier, ident, 3, 3)
    two = evaluate(parse("2*ninv_2"), Q).carrier
    assert equal_on(two, ident, 3, 3)
    three = evaluate(parse("3*id[!A]"), Q).carrier
    oracle = invert_blockwise(three, 3, 3)
    assert isinstance(oracle, Invertible)
    assert equal_on(derived_n_inv(Q, 3).carrier, oracle.inverse, 3, 3)
    with pytest.raises(MissingCapability):
        derived_n_inv(sym_f2(), 2)


def test_Kinv_Jinv_composites_match_blockwise(Q):
    for name, comp in (("K", derived_Kinv_composite(Q)), ("J", derived_Jinv_composite(Q))):
        inv = invert_blockwise(evaluate(Gen(name), Q).carrier, 4)
        assert isinstance(inv, Invertible)
        assert equal_on(comp.carrier, inv.inverse, 3, 3)
    assert _fmt(Q, derived_Kinv_composite(Q), "x^2 y") == "1/3·x^2 y"
    assert _fmt(Q, derived_Jinv_composite(Q), "x^2") == "1/3·x^2"
    for n in range(3):
        jn = derived_Jinv_n(Q, n).carrier
        for m in Q.space(BA).elements(3):
            assert jn.apply(m) == {m: Fraction(1, len(m) + n + 1)}


def test_Kinv_composite_in_rb_reports_kernel():
    with pytest.raises(NotInvertibleError) as info:
        derived_Kinv_composite(rb())
    assert info.value.result.witness == {(((("x",),)), ()): 1}


def test_antiderivative(Q):
    a = antiderivative(Q)
    assert _fmt(Q, a, "x^2 (x) x") == "1/3·x^3"
    assert equal_on(a.carrier, evaluate(Gen("s"), Q).carrier, 4)
    R = rel()
    assert equal_on(antiderivative(R).carrier, evaluate(Gen("dcirc"), R).carrier, 5, 3)
    sk = evaluate(parse("s"), Q, {"A": K}).carrier
    kd = evaluate(parse("Kinv ; dcirc"), Q, {"A": K}).carrier
    assert equal_on(sk, kd, 4, 4)


def test_check_equation_examples():
    assert check_equation(sym_q(), "s.2").verdict == "pass"
    r = check_equation(sym_f2(), "cd-as-s.2", Bounds(grade=3))
    assert r.verdict == "expected-fail-confirmed"
    assert r.witness["rhs"] == "0" and r.witness["lhs"] != "0"
    r = check_equation(rb(), "FTC2")
    assert r.verdict == "expected-fail-confirmed" and r.witness["input"] == "<x> 1"


def test_expectation_override_turns_failure_into_fail():
    r = check_equation(sym_q(), "cd-as-s.2", expect="pass")
    assert r.verdict == "fail" and r.witness is not None
    r = check_equation(sym_q(), "s.2", expect="fail")
    assert r.verdict == "fail" and r.witness is None


def test_missing_capability_is_skipped():
    r = check_equation(sym_f2(), "FTC2")
    assert r.verdict == "skipped" and "integral" in r.reason


def test_unknown_suite_and_id():
    with pytest.raises(UsageError):
        run_suite(sym_q(), "nonsense")
    with pytest.raises(UsageError):
        check_equation(sym_q(), "no.such.id")


def test_sampler_exhaustion_is_skipped():
    from calcat.modality.catalog import Entry
    e = Entry("probe", "probe", (), "f", "f", sampler="scalar-f",
              pre=("f", "0[!A # A -> K]"))
    r = check_equation(sym_q(), e)
    assert r.verdict == "skipped" and "exhausted" in r.reason


def test_poincare_harness_accepts_derivatives():
    r = check_equation(sym_q(), "poincare.grad")
    assert r.verdict == "pass" and "0 rejected" in r.reason


def test_idempotent_only_entries_filtered():
    q_ids = {e.id for e in suite_entries(sym_q(), "integral")}
    r_ids = {e.id for e in suite_entries(rel(), "integral")}
    assert "substitution.all" not in q_ids and "substitution.all" in r_ids


def test_suites_cover_catalog():
    for e in CATALOG.values():
        assert set(e.suites) <= set(SUITES), e.id


@pytest.mark.parametrize("suite", ["comonoid", "coderiving", "differential", "integral",
                                   "calculus", "LKJ", "antiderivatives", "monoidal",
                                   "naturality", "separations"])
@pytest.mark.parametrize("model", ["sym-q", "sym-f2", "rel", "rb", "zero"])
def test_suites_have_no_unexpected_verdicts(model, suite):
    report = run_suite(make_model(model), suite)
    bad = [(r.id, r.witness) for r in report.results if r.verdict == "fail"]
    assert not bad


def test_zero_model_passes_vacuously():
    report = run_suite(make_model("zero"), "comonoid")
    assert report.counts() == {"pass": len(report.results)}


def test_differential_over_f2():
    report = run_suite(sym_f2(), "differential")
    assert all(r.verdict == "pass" for r in report.results)
