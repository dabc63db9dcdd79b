"""Graded space descriptors: basis enumeration, grading and ordering.

A space never stores coefficients; it only knows which basis elements exist,
their grades and a deterministic total order on them.  Elements of a tensor
of n >= 2 factors are n-tuples, the unit space has the single element ``()``,
and multisets are sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class Space:
    """Abstract graded space with a finite basis in every bounded window."""

    def grade(self, b) -> int:
        raise NotImplementedError

    def key(self, b):
        return (self.grade(b), b)

    def _generate(self, max_grade: int, card: int | None):
        raise NotImplementedError

    def elements(self, max_grade: int, card: int | None = None) -> tuple:
        """All basis elements of grade <= max_grade, in basis order."""
        return _elements(self, max_grade, card)

    def block(self, grade: int, card: int | None = None) -> tuple:
        return tuple(b for b in self.elements(grade, card) if self.grade(b) == grade)

    def contains(self, b) -> bool:
        return True

    @property
    def factors(self) -> tuple:
        return (self,)

    def has_grade_zero(self, card) -> bool:
        return bool(self.elements(0, card))


@lru_cache(maxsize=None)
def _elements(space, max_grade, card):
    if max_grade < 0:
        return ()
    elems = list(space._generate(max_grade, card))
    elems.sort(key=space.key)
    return tuple(elems)


@dataclass(frozen=True)
class UnitSpace(Space):
    """The unit object: one basis element ``()`` of grade 0."""

    def grade(self, b):
        return 0

    def _generate(self, max_grade, card):
        return [()]

    @property
    def factors(self):
        return ()


@dataclass(frozen=True)
class ZeroSpace(Space):
    label: str = "0"

    def grade(self, b):
        return 0

    def _generate(self, max_grade, card):
        return []


@dataclass(frozen=True)
class FiniteSpace(Space):
    """A finite basis of named elements, all of one fixed grade."""

    names: tuple
    degree: int = 1
    label: str = ""

    def grade(self, b):
        return self.degree

    def key(self, b):
        return (self.degree, self.names.index(b))

    def _generate(self, max_grade, card):
        return list(self.names) if self.degree <= max_grade else []


@dataclass(frozen=True)
class SymSpace(Space):
    """Finite multisets over an inner space; grade is the sum of inner grades.

    A multiset is stored as the natively sorted tuple of its members.

    When the inner space has grade-0 elements the multiset cardinality is
    bounded by ``card`` during enumeration; otherwise grade already bounds it.
    """

    inner: Space

    def grade(self, b):
        g = self.inner.grade
        return sum(g(x) for x in b)

    def key(self, b):
        k = self.inner.key
        return (self.grade(b), len(b), tuple(sorted(k(x) for x in b)))

    def _generate(self, max_grade, card):
        inner = self.inner.elements(max_grade, card)
        grades = [self.inner.grade(x) for x in inner]
        limit = card if any(g == 0 for g in grades) else None
        if limit is None and any(g == 0 for g in grades):
            raise ValueError("bags over grade-0 elements need a cardinality bound")
        out = []

        def rec(start, budget, acc):
            out.append(tuple(sorted(acc)))
            if limit is not None and len(acc) >= limit:
                return
            for i in range(start, len(inner)):
                if grades[i] <= budget:
                    acc.append(inner[i])
                    rec(i, budget - grades[i], acc)
                    acc.pop()

        rec(0, max_grade, [])
        return out


@dataclass(frozen=True)
class TensorSpace(Space):
    """Flat tensor of two or more non-unit factors; elements are tuples."""

    parts: tuple

    @property
    def factors(self):
        return self.parts

    def grade(self, b):
        return sum(f.grade(x) for f, x in zip(self.parts, b))

    def key(self, b):
        return (self.grade(b), tuple(f.key(x) for f, x in zip(self.parts, b)))

    def _generate(self, max_grade, card):
        per = [f.elements(max_grade, card) for f in self.parts]
        grades = [[f.grade(x) for x in els] for f, els in zip(self.parts, per)]
        out = []

        def rec(i, budget, acc):
            if i == len(per):
                out.append(tuple(acc))
                return
            for x, g in zip(per[i], grades[i]):
                if g <= budget:
                    acc.append(x)
                    rec(i + 1, budget - g, acc)
                    acc.pop()

        rec(0, max_grade, [])
        return out


UNIT = UnitSpace()


def tensor_space(*spaces: Space) -> Space:
    """Strict tensor: flattens nested tensors and drops unit factors."""
    flat = []
    for s in spaces:
        if isinstance(s, ZeroSpace):
            return ZeroSpace()
        flat.extend(s.factors)
    if not flat:
        return UNIT
    if len(flat) == 1:
        return flat[0]
    return TensorSpace(tuple(flat))


def unpack(elem, n: int) -> list:
    if n == 0:
        return []
    if n == 1:
        return [elem]
    return list(elem)


def pack(items):
    items = tuple(items)
    if len(items) == 1:
        return items[0]
    return items


def join(pairs) -> object:
    """Build a flat tensor element from (space, element) pairs."""
    items = []
    for space, elem in pairs:
        items.extend(unpack(elem, len(space.factors)))
    return pack(items)


def split(elem, spaces) -> list:
    """Inverse of join: cut a flat element into one element per space."""
    sizes = [len(s.factors) for s in spaces]
    total = sum(sizes)
    items = unpack(elem, total)
    out, pos = [], 0
    for n in sizes:
        out.append(pack(items[pos:pos + n]))
        pos += n
    return out


def all_tuples(spaces, max_grade, card=None):
    """Enumerate tuples (one element per space) with total grade <= max_grade."""
    per = [s.elements(max_grade, card) for s in spaces]
    for combo in product(*per):
        if sum(s.grade(x) for s, x in zip(spaces, combo)) <= max_grade:
            yield combo
