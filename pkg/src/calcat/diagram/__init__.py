from .objects import A, B, K, Bang, Base, ObjectExpr, Prod, Tensor, Unit, bang, power, tensor
from .parser import parse, parse_object
from .terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Term, Zero, show

__all__ = [
    "A", "B", "K", "Bang", "Base", "ObjectExpr", "Prod", "Tensor", "Unit", "bang", "power",
    "tensor", "parse", "parse_object", "BangT", "Gen", "Id", "Par", "Scale", "Seq", "Sum",
    "Swap", "Term", "Zero", "show",
]

from .signature import DERIVED, PRIMITIVES, expand, lookup  # noqa: E402
from .typecheck import typecheck  # noqa: E402

__all__ += ["DERIVED", "PRIMITIVES", "expand", "lookup", "typecheck"]
