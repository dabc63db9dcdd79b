"""Named constructors for the derived maps, built by evaluating their
defining diagrams in a model."""

from __future__ import annotations

from ..diagram.objects import A
from ..diagram.parser import parse
from ..diagram.terms import Gen
from ..errors import IndexOutOfRange, NotInvertibleError
from ..linalg import NotInvertible, equal_on, invert_blockwise
from .model import ModalityModel, Morphism, evaluate


def _gen(model, name, obj=A):
    return evaluate(Gen(name, (obj,)), model)


def derived_L(model, obj=A):
    return _gen(model, "L", obj)


def derived_K(model, obj=A):
    return _gen(model, "K", obj)


def derived_J(model, obj=A):
    return _gen(model, "J", obj)


def derived_Ln(model, n, obj=A):
    return _gen(model, f"L_{n}", obj)


def derived_Jn(model, n, obj=A):
    return _gen(model, f"J_{n}", obj)


def derived_W(model, obj=A):
    return _gen(model, "W", obj)


def derived_Delta_n(model, n, obj=A):
    if n < 0:
        raise IndexOutOfRange("Delta_n needs n >= 0")
    return _gen(model, f"Delta_{n}", obj)


def derived_omega(model, k, n, obj=A):
    """The permutation of n factors moving the last one into position k (k=0: the front)."""
    if not 0 <= k <= n or n < 1:
        raise IndexOutOfRange(f"omega needs 0 <= k <= n and n >= 1, got k={k}, n={n}")
    return _gen(model, f"omega_{k}_{n}", obj)


def derived_n_inv(model, n, obj=A):
    if n < 1:
        raise IndexOutOfRange("n_inv needs n >= 1")
    return _gen(model, f"ninv_{n}", obj)


KINV_COMPOSITE = "dcirc ; (Jinv # id) ; (Jinv # id) ; d + bang(0[A->A])"
JINV_COMPOSITE = "delta ; Kinv[!A] ; dcirc[!A] ; (bang(eps) # e)"


def derived_Kinv_composite(model: ModalityModel, max_grade: int | None = None) -> Morphism:
    """K^-1 as dcirc (J^-1 # 1)(J^-1 # 1) d + !0.

    Before building the composite, K is inverted blockwise; if that fails the
    kernel witness is raised as NotInvertibleError.
    """
    g = model.bounds.grade if max_grade is None else max_grade
    K = derived_K(model)
    if model.rig.is_field:
        res = invert_blockwise(K.carrier, g, model.bounds.outer_card)
        if isinstance(res, NotInvertible):
            raise NotInvertibleError(res)
    return evaluate(parse(KINV_COMPOSITE), model)


def derived_Jinv_composite(model: ModalityModel) -> Morphism:
    return evaluate(parse(JINV_COMPOSITE), model)


def derived_Jinv_n(model: ModalityModel, n: int) -> Morphism:
    """J_n^-1 by recursion through delta, starting from the primitive J^-1."""
    if n < 0:
        raise IndexOutOfRange("Jinv_n needs n >= 0")
    if n == 0:
        return _gen(model, "Jinv")
    return evaluate(parse(f"delta ; Jinv_{n - 1}[!A] ; dcirc[!A] ; (bang(eps) # e)"), model)


def antiderivative(model: ModalityModel, check_grade: int | None = None) -> Morphism:
    """The antiderivative K^-1 ; dcirc, after checking it against dcirc ; (J^-1 # 1)."""
    a = evaluate(parse("Kinv ; dcirc"), model)
    b = evaluate(parse("dcirc ; (Jinv # id)"), model)
    g = model.bounds.grade if check_grade is None else check_grade
    res = equal_on(a.carrier, b.carrier, g, model.bounds.outer_card)
    if not res:
        raise ArithmeticError(f"the two antiderivative forms differ at {res.witness!r}")
    return a
