"""Command-line front end: ``calcat check`` and ``calcat eval``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .diagram import parse, show, typecheck
from .diagram.objects import show_object
from .errors import CalcatError, MissingCapability, ParseError, TermTypeError, UsageError
from .modality.catalog import SUITES
from .modality.check import run_suite
from .modality.model import evaluate
from .models import MODELS, forward, make_model

SYMBOL = {"pass": "PASS", "fail": "FAIL", "expected-fail-confirmed": "XFAIL", "skipped": "SKIP"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("bounds must be positive")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return v


def _model_args(p):
    p.add_argument("--model", choices=MODELS, default="sym-q")
    p.add_argument("--vars", type=_positive, help="number of variables (polynomial and RB models)")
    p.add_argument("--elements", type=_positive, help="size of the carrier set (rel)")
    p.add_argument("--degree", type=_positive, help="grade bound for inputs of delta-free laws")
    p.add_argument("--delta-degree", type=_positive, help="grade bound for laws involving delta")
    p.add_argument("--bag-size", type=_positive, help="bag size bound (rel; same as --degree)")
    p.add_argument("--outer-card", type=_positive, help="cardinality bound for nested multisets")
    p.add_argument("--budget", type=_positive, help="maximum number of inputs checked per law")


def build_parser():
    p = _Parser(prog="calcat", description="Check differential/integral category laws in "
                                            "concrete models, or evaluate diagram terms.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    c = sub.add_parser("check", help="run a suite or a list of catalog entries")
    _model_args(c)
    c.add_argument("--suite", choices=SUITES)
    c.add_argument("--eq", help="comma-separated catalog ids")
    c.add_argument("--seed", type=_nonneg, default=0)
    c.add_argument("--json", action="store_true", help="emit the JSON report")
    c.add_argument("--no-timing", action="store_true", help="report ms = 0 for reproducible output")
    c.add_argument("--witness-only", action="store_true", help="print only entries with witnesses")
    e = sub.add_parser("eval", help="evaluate a term on a basis element")
    _model_args(e)
    e.add_argument("term")
    e.add_argument("--at", help="basis element, e.g. 'x^2 (x) x', '[x,y]' or '<x> y'")
    e.add_argument("--bind", help="rebind the base object, e.g. 'A=K'")
    sub.add_parser("list", help="list suites and catalog ids")
    return p


def _model(args):
    model = make_model(args.model, vars=args.vars, elements=args.elements)
    b = model.bounds
    grade = args.bag_size or args.degree or b.grade
    delta = args.delta_degree or min(b.delta_grade, grade)
    bounds = replace(b, grade=grade, delta_grade=delta,
                     outer_card=args.outer_card or b.outer_card, budget=args.budget or b.budget)
    model.bounds = bounds
    return model


def cmd_check(args, out):
    if not args.suite and not args.eq:
        raise UsageError("give --suite or --eq")
    model = _model(args)
    ids = [x.strip() for x in args.eq.split(",") if x.strip()] if args.eq else None
    report = run_suite(model, args.suite or "custom", model.bounds, args.seed, ids)
    timing = not args.no_timing
    if args.json:
        out.write(report.to_json(timing) + "\n")
    else:
        out.write(f"model {report.model}, suite {report.suite}, bounds {report.bounds}\n")
        for r in report.results:
            if args.witness_only and not r.witness:
                continue
            ms = f" ({r.ms:.1f} ms)" if timing else ""
            out.write(f"{SYMBOL[r.verdict]:5} {r.id}: {r.anchor}{ms}\n")
            if r.reason and r.verdict != "pass":
                out.write(f"      {r.reason}\n")
            if r.witness:
                for k, v in r.witness.items():
                    out.write(f"      {k}: {v}\n")
        counts = ", ".join(f"{v} {k}" for k, v in sorted(report.counts().items()))
        out.write(f"{counts}\n")
    return 0 if report.ok else 1


def cmd_eval(args, out):
    model = _model(args)
    term = parse(args.term)
    binding = {}
    if args.bind:
        from .diagram import parse_object
        for item in args.bind.split(","):
            name, _, obj = item.partition("=")
            binding[name.strip()] = parse_object(obj)
    dom, cod = typecheck(term, binding)
    m = evaluate(term, model, binding)
    fwd = getattr(model, "eval_direction", "carrier") == "forward"
    in_space = m.carrier.cod if fwd else m.carrier.dom
    out_space = m.carrier.dom if fwd else m.carrier.cod
    apply = (lambda b: forward(model, m, b)) if fwd else m.carrier.apply
    out.write(f"{show(term)} : {show_object(dom)} -> {show_object(cod)}\n")
    if args.at is not None:
        b = model.parse_elem(in_space, args.at)
        out.write(model.format_vec(out_space, apply(b)) + "\n")
        return 0
    for b in in_space.elements(min(2, model.bounds.grade), model.bounds.outer_card):
        out.write(f"{model.format_elem(in_space, b)} |-> {model.format_vec(out_space, apply(b))}\n")
    return 0


def cmd_list(out):
    from .modality.catalog import CATALOG
    for suite in SUITES:
        ids = [e.id for e in CATALOG.values() if suite in e.suites]
        out.write(f"{suite} ({len(ids)}): {' '.join(ids)}\n")
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "eval":
            return cmd_eval(args, out)
        if args.command == "list":
            return cmd_list(out)
        raise UsageError("expected a command: check, eval or list")
    except (UsageError, ParseError, TermTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MissingCapability as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CalcatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
