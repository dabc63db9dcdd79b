"""Exact checking of differential and integral category laws in concrete models."""

from .diagram import parse, show, typecheck
from .modality.check import check_equation, run_suite
from .modality.model import Bounds, evaluate
from .models import make_model

__all__ = ["Bounds", "check_equation", "evaluate", "make_model", "parse", "run_suite", "show",
           "typecheck"]
