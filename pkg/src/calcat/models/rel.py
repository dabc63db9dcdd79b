"""The relational model: finite bags over a finite set, over the Boolean rig.

Relations are Boolean matrices; the bag comonad is the free commutative
monoid construction, d adds an element to a bag and the integral is the
coderiving map, which removes one.  Carriers are stored transposed like
every other model; since a relation and its converse carry the same data,
``forward`` recovers the diagram-direction image of a basis element.
"""

from __future__ import annotations

from ..modality.model import Bounds, Morphism
from ..rig import BOOL
from .elements import BagStyle
from .sym import SymModel

ELEMENT_NAMES = ("x", "y", "z", "w", "t", "p", "q", "r")


class RelModel(SymModel):
    style = BagStyle()
    traits = frozenset({"idempotent"})
    eval_direction = "forward"

    def __init__(self, elements: int = 3, bounds: Bounds | None = None, nvars_b: int = 2):
        bounds = bounds or Bounds(grade=5, delta_grade=4, outer_card=3)
        super().__init__(BOOL, elements, nvars_b, bounds, "rel", "coderiving")
        self.separations = ("calc-object.A",)
        self.expectations = {"calc-object.A": "fail"} if elements >= 2 else {}

    def describe(self):
        return {"model": self.name, "rig": "Boolean", "elements": list(self.names["A"]),
                "bag_size": self.bounds.grade}


def forward(model, m: Morphism, b) -> dict:
    """Diagram-direction image of a domain basis element under a transposed carrier.

    Searches codomain basis elements of the same grade, which is exhaustive for
    grade-preserving maps.
    """
    dom, cod = m.carrier.cod, m.carrier.dom
    g = dom.grade(b)
    out = {}
    for c in cod.block(g, model.bounds.outer_card):
        if b in m.carrier.apply(c):
            out[c] = m.carrier.apply(c)[b]
    return out


def rel(elements=3, bounds=None):
    return RelModel(elements, bounds)
