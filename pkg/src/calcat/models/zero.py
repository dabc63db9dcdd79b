"""The zero modality over the zero module: every object, the unit included,
is the zero space and every generator is the zero map.

A smoke model; every law holds vacuously.  The unit has to be zero as well,
since the monoidal unit law forces !0 to be isomorphic to K.
"""

from __future__ import annotations

from ..diagram.objects import Bang
from ..modality.model import Bounds, ModalityModel, Morphism
from ..rig import QQ
from ..spaces import ZeroSpace
from ..diagram.signature import PRIMITIVES


class ZeroModel(ModalityModel):
    capabilities = frozenset({"delta", "differential", "integral", "monoidal",
                              "antiderivatives", "jinv"})

    def __init__(self, bounds: Bounds | None = None):
        super().__init__(QQ, bounds)
        self.name = "zero"

    def _build_space(self, obj):
        return ZeroSpace()

    def base_space(self, name):
        return ZeroSpace()

    def bang_space(self, inner):
        return ZeroSpace()

    def bang(self, f: Morphism) -> Morphism:
        return self.zero(Bang(f.dom), Bang(f.cod))

    def primitive(self, name, args, idx):
        dom, cod = PRIMITIVES[name if not idx else name + "_n"].typer(args, idx)
        return self.zero(dom, cod)

    def format_elem(self, space, b):
        return "*" if b == () else str(b)


def zero(bounds=None):
    return ZeroModel(bounds)
