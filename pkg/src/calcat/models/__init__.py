"""Concrete models and a registry keyed by the CLI model names."""

from .rb import RBModel, rb
from .rel import RelModel, forward, rel
from .sym import SymModel, sym_f2, sym_q
from .zero import ZeroModel, zero

MODELS = ("sym-q", "sym-f2", "rel", "rb", "zero")


def make_model(name: str, vars: int | None = None, elements: int | None = None, bounds=None):
    """Build a model by name; ``vars`` sizes polynomial models, ``elements`` REL."""
    from ..errors import UsageError

    if name == "sym-q":
        return sym_q(vars or 3, bounds)
    if name == "sym-f2":
        return sym_f2(vars or 3, bounds)
    if name == "rel":
        return rel(elements or vars or 3, bounds)
    if name == "rb":
        return rb(vars or 3, bounds)
    if name == "zero":
        return zero(bounds)
    raise UsageError(f"unknown model {name!r}; choose from {', '.join(MODELS)}")


__all__ = ["MODELS", "make_model", "RBModel", "RelModel", "SymModel", "ZeroModel",
           "forward", "rb", "rel", "sym_f2", "sym_q", "zero"]
