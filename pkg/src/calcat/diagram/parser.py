"""Recursive-descent parser for the diagram text grammar.

    sum    := seq ('+' seq)*
    seq    := par (';' par)*
    par    := unary ('#' unary)*
    unary  := INT ('/' INT)? '*' unary | atom
    atom   := '(' sum ')' | 'id' ('[' obj ']')? | 'sym' '[' obj ',' obj ']'
            | 'bang' '(' sum ')' | '0' '[' obj '->' obj ']'
            | NAME ('[' obj (',' obj)* ']')?
    obj    := prod ('#' prod)*
    prod   := bang ('&' bang)*
    bang   := '!' bang | 'K' | NAME | '(' obj ')'

``;`` is diagrammatic composition (left then right) and ``#`` is the
tensor; ``⊗`` is accepted as an alias for ``#``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .objects import K, Bang, Base, Prod, tensor
from .terms import BangT, Gen, Id, Par, Scale, Seq, Sum, Swap, Zero

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|[;#+*/()\[\],!&⊗]))")


def tokenize(text: str):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        val = m.group(kind)
        if val == "⊗":
            val = "#"
        out.append((kind, val, m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # token helpers
    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, val, k=0):
        t = self.peek(k)
        return t[0] != "end" and t[1] == val

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val):
        t = self.peek()
        if t[1] != val or t[0] == "end":
            got = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {val!r}, found {got}", t[2], self.text)
        return self.take()

    def fail(self, what):
        t = self.peek()
        got = "end of input" if t[0] == "end" else repr(t[1])
        raise ParseError(f"expected {what}, found {got}", t[2], self.text)

    # terms
    def sum(self):
        t = self.seq()
        while self.at("+"):
            self.take()
            t = Sum(t, self.seq())
        return t

    def seq(self):
        t = self.par()
        while self.at(";"):
            self.take()
            t = Seq(t, self.par())
        return t

    def par(self):
        t = self.unary()
        while self.at("#"):
            self.take()
            t = Par(t, self.unary())
        return t

    def unary(self):
        kind, val, pos = self.peek()
        if kind == "num" and not self.at("[", 1):
            self.take()
            q = Fraction(int(val))
            if self.at("/"):
                self.take()
                k2, v2, p2 = self.peek()
                if k2 != "num":
                    self.fail("denominator")
                self.take()
                if int(v2) == 0:
                    raise ParseError("zero denominator", p2, self.text)
                q = q / int(v2)
            self.expect("*")
            return Scale(q, self.unary())
        return self.atom()

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.take()
            t = self.sum()
            self.expect(")")
            return t
        if kind == "num" and val == "0":
            self.take()
            self.expect("[")
            dom = self.obj()
            self.expect("->")
            cod = self.obj()
            self.expect("]")
            return Zero(dom, cod)
        if kind == "name":
            self.take()
            if val == "id":
                if not self.at("["):
                    return Id(Base("A"))
                self.take()
                o = self.obj()
                self.expect("]")
                return Id(o)
            if val == "sym":
                self.expect("[")
                a = self.obj()
                self.expect(",")
                b = self.obj()
                self.expect("]")
                return Swap(a, b)
            if val == "bang":
                self.expect("(")
                t = self.sum()
                self.expect(")")
                return BangT(t)
            args = ()
            if self.at("["):
                self.take()
                items = [self.obj()]
                while self.at(","):
                    self.take()
                    items.append(self.obj())
                self.expect("]")
                args = tuple(items)
            return Gen(val, args)
        self.fail("a term")

    # objects
    def obj(self):
        parts = [self.oprod()]
        while self.at("#"):
            self.take()
            parts.append(self.oprod())
        return tensor(*parts)

    def oprod(self):
        o = self.obang()
        while self.at("&"):
            self.take()
            o = Prod(o, self.obang())
        return o

    def obang(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "!":
            self.take()
            return Bang(self.obang())
        if kind == "op" and val == "(":
            self.take()
            o = self.obj()
            self.expect(")")
            return o
        if kind == "name":
            self.take()
            return K if val == "K" else Base(val)
        self.fail("an object")


def parse(text: str):
    p = _Parser(text)
    t = p.sum()
    if p.peek()[0] != "end":
        p.fail("end of input")
    return t


def parse_object(text: str):
    p = _Parser(text)
    o = p.obj()
    if p.peek()[0] != "end":
        p.fail("end of input")
    return o
