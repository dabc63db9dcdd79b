"""Sparse exact linear algebra over a commutative rig.

Vectors are dicts ``basis element -> nonzero scalar``.  Linear maps are lazy:
they hold a function from basis elements to vectors and memoize it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import NotField, NotGradePreserving, SpaceMismatch
from .rig import CommutativeRig
from .spaces import Space, join, split, tensor_space


# -- vectors ---------------------------------------------------------------

def vec_add_into(rig: CommutativeRig, acc: dict, v: dict, c=None) -> dict:
    """acc += c*v in place (c defaults to one); drops zeros."""
    add, mul, zero = rig.add, rig.mul, rig.zero
    for b, x in v.items():
        if c is not None:
            x = mul(c, x)
            if x == zero:
                continue
        y = acc.get(b)
        y = x if y is None else add(y, x)
        if y == zero:
            acc.pop(b, None)
        else:
            acc[b] = y
    return acc


def vec_add(rig, u: dict, v: dict) -> dict:
    return vec_add_into(rig, dict(u), v)


def vec_scale(rig, c, v: dict) -> dict:
    return vec_add_into(rig, {}, v, c)


def vec_term(rig, b, c=None) -> dict:
    c = rig.one if c is None else c
    return {} if c == rig.zero else {b: c}


def vec_tensor(rig, u: dict, v: dict, left: Space, right: Space) -> dict:
    out: dict = {}
    for a, x in u.items():
        for b, y in v.items():
            vec_add_into(rig, out, {join(((left, a), (right, b))): rig.mul(x, y)})
    return out


# -- linear maps -------------------------------------------------------------

@dataclass(eq=False)
class LinMap:
    dom: Space
    cod: Space
    rig: CommutativeRig
    fn: Callable[[object], dict]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def apply(self, b) -> dict:
        try:
            return self._cache[b]
        except KeyError:
            out = self.fn(b)
            self._cache[b] = out
            return out

    def apply_vec(self, v: dict) -> dict:
        acc: dict = {}
        for b, c in v.items():
            vec_add_into(self.rig, acc, self.apply(b), c)
        return acc

    def __repr__(self):
        return f"LinMap({self.name or '?'}: {self.dom} -> {self.cod})"


def _same_rig(f, g):
    if f.rig is not g.rig and f.rig != g.rig:
        raise SpaceMismatch(f.rig, g.rig, "rig")


def identity(space: Space, rig) -> LinMap:
    one = rig.one
    return LinMap(space, space, rig, lambda b: {b: one}, "id")


def zero_map(dom: Space, cod: Space, rig) -> LinMap:
    return LinMap(dom, cod, rig, lambda b: {}, "0")


def lin_compose(f: LinMap, g: LinMap) -> LinMap:
    """f then g."""
    if f.cod != g.dom:
        raise SpaceMismatch(f.cod, g.dom, "lin_compose")
    _same_rig(f, g)
    return LinMap(f.dom, g.cod, f.rig, lambda b: g.apply_vec(f.apply(b)),
                  f"({f.name};{g.name})")


def lin_tensor(f: LinMap, g: LinMap) -> LinMap:
    _same_rig(f, g)
    rig = f.rig
    dom = tensor_space(f.dom, g.dom)
    cod = tensor_space(f.cod, g.cod)
    parts = (f.dom, g.dom)

    def fn(b):
        a, c = split(b, parts)
        return vec_tensor(rig, f.apply(a), g.apply(c), f.cod, g.cod)

    return LinMap(dom, cod, rig, fn, f"({f.name}#{g.name})")


def lin_add(f: LinMap, g: LinMap) -> LinMap:
    if f.dom != g.dom or f.cod != g.cod:
        raise SpaceMismatch((f.dom, f.cod), (g.dom, g.cod), "lin_add")
    _same_rig(f, g)
    rig = f.rig
    return LinMap(f.dom, f.cod, rig, lambda b: vec_add(rig, f.apply(b), g.apply(b)),
                  f"({f.name}+{g.name})")


def lin_scale(r, f: LinMap) -> LinMap:
    rig = f.rig
    if r == rig.zero:
        return zero_map(f.dom, f.cod, rig)
    return LinMap(f.dom, f.cod, rig, lambda b: vec_scale(rig, r, f.apply(b)),
                  f"{rig.format(r)}*{f.name}")


# -- equality on a bounded basis ---------------------------------------------

@dataclass(frozen=True)
class Equal:
    checked: int = 0

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Unequal:
    witness: object
    lhs: dict
    rhs: dict
    checked: int = 0

    def __bool__(self):
        return False


def equal_on(f: LinMap, g: LinMap, max_grade: int | None = None, card: int | None = None,
             basis=None):
    """Compare f and g on every basis element of grade <= max_grade.

    Returns ``Equal`` or ``Unequal`` for the first disagreeing element in
    basis order.  An empty basis gives ``Equal`` vacuously.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise SpaceMismatch((f.dom, f.cod), (g.dom, g.cod), "equal_on")
    if basis is None:
        basis = f.dom.elements(max_grade if max_grade is not None else 0, card)
    n = 0
    for b in basis:
        n += 1
        lv, rv = f.apply(b), g.apply(b)
        if lv != rv:
            return Unequal(b, lv, rv, n)
    return Equal(n)


# -- blockwise inversion -----------------------------------------------------

@dataclass(frozen=True)
class Invertible:
    inverse: LinMap
    checked: int = 0


@dataclass(frozen=True)
class NotInvertible:
    grade: int
    witness: dict
    kind: str = "kernel"

    def __bool__(self):
        return False


def _check_block(f: LinMap, block, grade):
    members = set(block)
    for b in block:
        for c in f.apply(b):
            if c not in members:
                raise NotGradePreserving(
                    f"{f.name}: {b!r} (grade {grade}) maps to {c!r} outside its block")


def solve_block(rig, block, columns):
    """Invert the square matrix whose column for block[j] is columns[j].

    Returns (inverse_columns, None) or (None, kernel_vector).
    """
    n = len(block)
    index = {b: i for i, b in enumerate(block)}
    # rows of the augmented matrix [M | I], stored sparse
    rows = [dict() for _ in range(n)]
    for j, col in enumerate(columns):
        for b, c in col.items():
            rows[index[b]][j] = c
    aug = [dict() for _ in range(n)]
    for i in range(n):
        aug[i][i] = rig.one
    pivots = []
    r = 0
    free = []
    for col in range(n):
        p = next((i for i in range(r, n) if rows[i].get(col, rig.zero) != rig.zero), None)
        if p is None:
            free.append(col)
            continue
        rows[r], rows[p] = rows[p], rows[r]
        aug[r], aug[p] = aug[p], aug[r]
        inv = rig.inv(rows[r][col])
        rows[r] = {k: rig.mul(inv, v) for k, v in rows[r].items()}
        aug[r] = {k: rig.mul(inv, v) for k, v in aug[r].items()}
        for i in range(n):
            if i != r:
                c = rows[i].get(col, rig.zero)
                if c != rig.zero:
                    nc = rig.neg(c)
                    vec_add_into(rig, rows[i], rows[r], nc)
                    vec_add_into(rig, aug[i], aug[r], nc)
        pivots.append(col)
        r += 1
    if free:
        col = free[0]
        kernel = {block[col]: rig.one}
        for i, pc in enumerate(pivots):
            c = rows[i].get(col, rig.zero)
            if c != rig.zero:
                kernel[block[pc]] = rig.neg(c)
        return None, kernel
    # rows now form the identity, aug is M^{-1} (rows indexed by pivot order == col)
    inverse_cols = [dict() for _ in range(n)]
    for i in range(n):
        for j, v in aug[i].items():
            inverse_cols[j][block[i]] = v
    return inverse_cols, None


def invert_blockwise(f: LinMap, max_grade: int, card: int | None = None):
    """Invert a grade-preserving endomorphism block by block up to max_grade.

    A basis element mapped to zero is reported as the kernel witness in
    preference to a general kernel vector.
    """
    rig = f.rig
    if not rig.is_field:
        raise NotField(f"blockwise inversion needs a field, got {rig.name}")
    if f.dom != f.cod:
        raise SpaceMismatch(f.dom, f.cod, "invert_blockwise")
    table = {}
    checked = 0
    for g in range(max_grade + 1):
        block = f.dom.block(g, card)
        if not block:
            continue
        _check_block(f, block, g)
        for b in block:
            if not f.apply(b):
                return NotInvertible(g, {b: rig.one})
        cols, kernel = solve_block(rig, block, [f.apply(b) for b in block])
        if kernel is not None:
            return NotInvertible(g, kernel)
        for b, col in zip(block, cols):
            table[b] = {k: v for k, v in col.items() if v != rig.zero}
        checked += len(block)

    def fn(b):
        try:
            return table[b]
        except KeyError:
            raise NotGradePreserving(f"{b!r} lies outside the inverted window") from None

    inv = LinMap(f.dom, f.cod, rig, fn, f"inv({f.name})")
    for b in table:
        if inv.apply_vec(f.apply(b)) != {b: rig.one} or f.apply_vec(inv.apply(b)) != {b: rig.one}:
            raise ArithmeticError(f"blockwise inverse failed verification at {b!r}")
    return Invertible(inv, checked)
