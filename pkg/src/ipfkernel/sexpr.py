"""Tiny S-expression reader with source offsets.

Atoms are returned as :class:`Sym` (a ``str`` subclass carrying ``pos``);
lists as :class:`SList`. ``;`` starts a comment that runs to end of line.
"""

from __future__ import annotations

from .errors import ParseError


class Sym(str):
    pos: int

    def __new__(cls, text, pos=0):
        obj = super().__new__(cls, text)
        obj.pos = pos
        return obj


class SList(list):
    pos: int = 0


_DELIMS = set("() \t\r\n;")


def read_all(text: str) -> list:
    """Read every top-level expression in ``text``."""
    out = []
    i = 0
    stack: list[SList] = []
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif c == "(":
            lst = SList()
            lst.pos = i
            stack.append(lst)
            i += 1
        elif c == ")":
            if not stack:
                raise ParseError("unbalanced ')'", i)
            lst = stack.pop()
            (stack[-1] if stack else out).append(lst)
            i += 1
        else:
            j = i
            while j < n and text[j] not in _DELIMS:
                j += 1
            sym = Sym(text[i:j], i)
            (stack[-1] if stack else out).append(sym)
            i = j
    if stack:
        raise ParseError("unclosed '('", stack[-1].pos)
    return out


def read_one(text: str):
    exprs = read_all(text)
    if len(exprs) != 1:
        raise ParseError(f"expected exactly one expression, found {len(exprs)}", 0)
    return exprs[0]


def pos_of(x) -> int:
    return getattr(x, "pos", 0)
