"""Text syntax for basis elements (printing and parsing)."""

from __future__ import annotations

from ..errors import UsageError
from ..spaces import FiniteSpace, SymSpace, TensorSpace, UnitSpace

_OPEN = "([{<"
_CLOSE = ")]}>"


def split_top(text: str, sep: str) -> list:
    """Split on sep occurring outside any bracket pair."""
    out, depth, start, i = [], 0, 0, 0
    while i < len(text):
        if depth == 0 and text.startswith(sep, i):
            out.append(text[start:i])
            i += len(sep)
            start = i
            continue
        ch = text[i]
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        i += 1
    out.append(text[start:])
    return out


def format_monomial(m: tuple) -> str:
    if not m:
        return "1"
    parts = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        parts.append(m[i] if j - i == 1 else f"{m[i]}^{j - i}")
        i = j
    return " ".join(parts)


def parse_monomial(text: str, names) -> tuple:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.replace("*", " ").split():
        name, _, exp = tok.partition("^")
        if name not in names:
            raise UsageError(f"unknown variable {name!r}")
        out.extend([name] * (int(exp) if exp else 1))
    return tuple(sorted(out))


def _strip(text, left, right):
    text = text.strip()
    if not (text.startswith(left) and text.endswith(right)):
        raise UsageError(f"expected {left}...{right}, got {text!r}")
    return text[1:-1]


class PolyStyle:
    """Monomials ``x^2 y``, tensor separator ``(x)``, nested multisets in braces."""

    def format(self, space, b) -> str:
        if isinstance(space, UnitSpace):
            return "*"
        if isinstance(space, FiniteSpace):
            return str(b)
        if isinstance(space, TensorSpace):
            return " (x) ".join(self.format(s, x) for s, x in zip(space.parts, b))
        if isinstance(space, SymSpace):
            if isinstance(space.inner, FiniteSpace):
                return format_monomial(b)
            return "{" + ", ".join(self.format(space.inner, x) for x in b) + "}"
        return repr(b)

    def parse(self, space, text: str):
        text = text.strip()
        if isinstance(space, UnitSpace):
            if text not in ("*", "", "1"):
                raise UsageError(f"expected * for the unit, got {text!r}")
            return ()
        if isinstance(space, TensorSpace):
            items = split_top(text, "(x)")
            if len(items) != len(space.parts):
                raise UsageError(f"expected {len(space.parts)} tensor factors, got {len(items)}")
            return tuple(self.parse(s, x) for s, x in zip(space.parts, items))
        if isinstance(space, FiniteSpace):
            if text not in space.names:
                raise UsageError(f"unknown basis element {text!r}")
            return text
        if isinstance(space, SymSpace):
            if isinstance(space.inner, FiniteSpace):
                return parse_monomial(text, space.inner.names)
            body = _strip(text, "{", "}").strip()
            items = [] if not body else split_top(body, ",")
            return tuple(sorted(self.parse(space.inner, x) for x in items))
        raise UsageError(f"cannot parse elements of {space}")


class BagStyle:
    """Bags ``[x,y]`` and pairs ``(a,b)``, as used for relations."""

    def format(self, space, b) -> str:
        if isinstance(space, UnitSpace):
            return "*"
        if isinstance(space, FiniteSpace):
            return str(b)
        if isinstance(space, TensorSpace):
            return "(" + ",".join(self.format(s, x) for s, x in zip(space.parts, b)) + ")"
        if isinstance(space, SymSpace):
            return "[" + ",".join(self.format(space.inner, x) for x in b) + "]"
        return repr(b)

    def parse(self, space, text: str):
        text = text.strip()
        if isinstance(space, UnitSpace):
            if text not in ("*", ""):
                raise UsageError(f"expected * for the unit, got {text!r}")
            return ()
        if isinstance(space, TensorSpace):
            items = split_top(_strip(text, "(", ")"), ",")
            if len(items) != len(space.parts):
                raise UsageError(f"expected {len(space.parts)} components, got {len(items)}")
            return tuple(self.parse(s, x) for s, x in zip(space.parts, items))
        if isinstance(space, FiniteSpace):
            if text not in space.names:
                raise UsageError(f"unknown element {text!r}")
            return text
        if isinstance(space, SymSpace):
            body = _strip(text, "[", "]").strip()
            items = [] if not body else split_top(body, ",")
            return tuple(sorted(self.parse(space.inner, x) for x in items))
        raise UsageError(f"cannot parse elements of {space}")
