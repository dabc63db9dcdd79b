import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from calcat.errors import MissingCapability, NotField, NotGradePreserving, SpaceMismatch
from calcat.linalg import (Equal, Invertible, LinMap, NotInvertible, Unequal, equal_on, identity,
                           invert_blockwise, lin_add, lin_compose, lin_scale, lin_tensor,
                           vec_add, zero_map)
from calcat.rig import BOOL, F2, QQ
from calcat.spaces import FiniteSpace, SymSpace, ZeroSpace, tensor_space

RIGS = {"Q": QQ, "F2": F2, "Bool": BOOL}


def scalars(rig):
    if rig is QQ:
        return st.fractions(min_value=-20, max_value=20, max_denominator=9)
    return st.sampled_from([rig.zero, rig.one])


@pytest.mark.parametrize("name", RIGS)
def test_rig_laws_on_random_triples(name):
    rig = RIGS[name]

    @settings(max_examples=300, deadline=None)
    @given(scalars(rig), scalars(rig), scalars(rig))
    def laws(a, b, c):
        add, mul = rig.add, rig.mul
        assert add(a, add(b, c)) == add(add(a, b), c)
        assert mul(a, mul(b, c)) == mul(mul(a, b), c)
        assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
        assert add(a, rig.zero) == a and mul(a, rig.one) == a
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert mul(rig.zero, a) == rig.zero

    laws()


def test_one_plus_one():
    assert BOOL.add(BOOL.one, BOOL.one) == BOOL.one
    assert QQ.add(QQ.one, QQ.one) != QQ.one
    assert F2.add(F2.one, F2.one) == F2.zero


def test_rationals_exact_and_division_capabilities():
    assert QQ.from_rational(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.inv(Fraction(3)) == Fraction(1, 3)
    with pytest.raises(MissingCapability):
        BOOL.from_rational(Fraction(1, 2))
    with pytest.raises(NotField):
        BOOL.inv(BOOL.one)


# -- small test spaces and maps -------------------------------------------------

V = FiniteSpace(("x", "y"), 1, "V")
SV = SymSpace(V)


def poly_d(rig):
    """Carrier of the derivative: x^a y^b -> sum of partials (x) variable."""
    from calcat.models.sym import derivative_terms
    dom, cod = SV, tensor_space(SV, V)

    def fn(m):
        out = {}
        for k, rest, v in derivative_terms(m):
            out = vec_add(rig, out, {(rest, v): rig.from_int(k)})
        return out
    return LinMap(dom, cod, rig, fn, "d")


def poly_s(rig):
    def fn(b):
        m, v = b
        return {tuple(sorted(m + (v,))): rig.inv(rig.from_int(len(m) + 1))}
    return LinMap(tensor_space(SV, V), SV, rig, fn, "s")


def test_compose_d_then_s_on_x_squared():
    d, s = poly_d(QQ), poly_s(QQ)
    assert d.apply(("x", "x")) == {(("x",), "x"): 2}
    assert lin_compose(d, s).apply(("x", "x")) == {("x", "x"): 1}


def test_compose_identity():
    d = poly_d(QQ)
    for b in SV.elements(3):
        assert lin_compose(identity(SV, QQ), d).apply(b) == d.apply(b)


def test_compose_mismatch():
    with pytest.raises(SpaceMismatch):
        lin_compose(poly_d(QQ), poly_d(QQ))


def _random_relation(rng, dom_basis, cod_basis, density=0.35):
    return {b: {c for c in cod_basis if rng.random() < density} for b in dom_basis}


def test_boolean_composition_is_boolean_matrix_product():
    rng = random.Random(7)
    bags = SV.elements(3)
    for _ in range(20):
        r1 = _random_relation(rng, bags, bags)
        r2 = _random_relation(rng, bags, bags)
        f = LinMap(SV, SV, BOOL, lambda b, r=r1: {c: 1 for c in r[b]})
        g = LinMap(SV, SV, BOOL, lambda b, r=r2: {c: 1 for c in r[b]})
        h = lin_compose(f, g)
        idx = {b: i for i, b in enumerate(bags)}
        m1 = sympy.zeros(len(bags))
        m2 = sympy.zeros(len(bags))
        for b, cs in r1.items():
            for c in cs:
                m1[idx[b], idx[c]] = 1
        for b, cs in r2.items():
            for c in cs:
                m2[idx[b], idx[c]] = 1
        prod = m1 * m2
        for b in bags:
            expect = {c for c in bags if prod[idx[b], idx[c]] > 0}
            assert set(h.apply(b)) == expect
            assert all(v == 1 for v in h.apply(b).values())


def test_tensor_examples():
    d = poly_d(QQ)
    t = lin_tensor(d, identity(V, QQ))
    assert t.apply((("x", "x"), "y")) == {(("x",), "x", "y"): 2}
    ii = lin_tensor(identity(V, QQ), identity(V, QQ))
    for b in ii.dom.elements(2):
        assert ii.apply(b) == {b: 1}
    z = lin_tensor(zero_map(V, V, QQ), d)
    assert all(z.apply(b) == {} for b in z.dom.elements(3))


def test_add_and_scale_examples():
    d = poly_d(QQ)
    assert equal_on(lin_add(d, zero_map(d.dom, d.cod, QQ)), d, 4)
    f = LinMap(SV, SV, BOOL, lambda b: {b: 1, (): 1})
    ff = lin_add(f, f)
    assert equal_on(ff, f, 3)
    two = lin_scale(F2.from_int(2), identity(SV, F2))
    assert equal_on(two, zero_map(SV, SV, F2), 3)


def test_equal_on_examples():
    d, s = poly_d(QQ), poly_s(QQ)
    bang0 = LinMap(SV, SV, QQ, lambda m: {m: 1} if not m else {})
    ftc2 = lin_add(lin_compose(d, s), bang0)  # carrier of the diagram composite s;d
    assert isinstance(equal_on(ftc2, identity(SV, QQ), 4), Equal)
    assert equal_on(zero_map(SV, SV, QQ), zero_map(SV, SV, QQ), 4)
    empty = ZeroSpace()
    assert equal_on(zero_map(empty, empty, QQ), identity(empty, QQ), 4)


def test_equal_on_reports_first_witness():
    f = identity(SV, QQ)
    g = LinMap(SV, SV, QQ, lambda m: {m: 2} if len(m) >= 2 else {m: 1})
    res = equal_on(f, g, 4)
    assert isinstance(res, Unequal)
    assert res.witness == ("x", "x")  # first grade-2 monomial in basis order
    assert res.lhs == {("x", "x"): 1} and res.rhs == {("x", "x"): 2}


def kmap(rig):
    """K = L + !0 on polynomials: scale degree n >= 1 by n, fix constants."""
    return LinMap(SV, SV, rig, lambda m: {m: rig.from_int(len(m)) if m else rig.one})


def test_invert_K_blockwise():
    res = invert_blockwise(kmap(QQ), 3)
    assert isinstance(res, Invertible)
    for m in SV.elements(3):
        assert res.inverse.apply(m) == {m: Fraction(1, len(m)) if m else 1}


def test_invert_two_over_F2():
    two = lin_scale(F2.from_int(2), identity(SV, F2))
    res = invert_blockwise(two, 2)
    assert isinstance(res, NotInvertible)
    assert res.grade == 0 and res.witness == {(): 1}


def test_invert_identity_and_errors():
    res = invert_blockwise(identity(SV, QQ), 3)
    assert all(res.inverse.apply(b) == {b: 1} for b in SV.elements(3))
    with pytest.raises(NotField):
        invert_blockwise(identity(SV, BOOL), 2)
    shift = LinMap(SV, SV, QQ, lambda m: {m + ("y",): 1})
    with pytest.raises(NotGradePreserving):
        invert_blockwise(shift, 2)


def test_blockwise_inverse_matches_sympy():
    rng = random.Random(3)
    for _ in range(10):
        blocks = {g: SV.block(g) for g in range(4)}
        table = {}
        for g, block in blocks.items():
            while True:
                M = sympy.Matrix(len(block), len(block),
                                 lambda i, j: rng.randint(-2, 2) + (3 if i == j else 0))
                if M.det() != 0:
                    break
            for j, b in enumerate(block):
                table[b] = {block[i]: Fraction(int(M[i, j])) for i in range(len(block)) if M[i, j]}
            inv = M.inv()
            for j, b in enumerate(block):
                table[("inv",) + b] = {block[i]: Fraction(int(inv[i, j].p), int(inv[i, j].q))
                                       for i in range(len(block)) if inv[i, j] != 0}
        f = LinMap(SV, SV, QQ, lambda b, t=table: t[b])
        res = invert_blockwise(f, 3)
        for b in SV.elements(3):
            assert res.inverse.apply(b) == table[("inv",) + b]


# -- engine invariants on random morphism triples ------------------------------------

SMALL = SymSpace(FiniteSpace(("a", "b"), 1, "S"))
BASIS = SMALL.elements(2)


def random_map(rig, rng):
    def coef():
        if rig is QQ:
            return Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3]))
        return rng.choice([rig.zero, rig.one])
    table = {}
    for b in BASIS:
        v = {}
        for c in BASIS:
            x = coef()
            if x != rig.zero:
                v[c] = x
        table[b] = v
    return LinMap(SMALL, SMALL, rig, lambda b, t=table: t.get(b, {}))


@pytest.mark.parametrize("name", RIGS)
def test_engine_invariants_1000_triples(name):
    rig = RIGS[name]
    rng = random.Random(hash(name) % 1000)
    ident = identity(SMALL, rig)
    for _ in range(1000):
        f, g, h = (random_map(rig, rng) for _ in range(3))
        assert equal_on(lin_compose(lin_compose(f, g), h), lin_compose(f, lin_compose(g, h)),
                        basis=BASIS)
        assert equal_on(lin_compose(ident, f), f, basis=BASIS)
        assert equal_on(lin_compose(f, ident), f, basis=BASIS)
        assert equal_on(lin_compose(lin_add(f, g), h),
                        lin_add(lin_compose(f, h), lin_compose(g, h)), basis=BASIS)
    pairs = list(lin_tensor(ident, ident).dom.elements(2))
    for _ in range(100):
        f, g, h, k = (random_map(rig, rng) for _ in range(4))
        lhs = lin_tensor(lin_compose(f, g), lin_compose(h, k))
        rhs = lin_compose(lin_tensor(f, h), lin_tensor(g, k))
        assert equal_on(lhs, rhs, basis=pairs)


def test_boolean_vectors_idempotent():
    v = {("a",): 1, ("b", "b"): 1}
    assert vec_add(BOOL, v, v) == v
