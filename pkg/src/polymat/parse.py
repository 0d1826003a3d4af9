"""Reader for the ideal text format.

    text   ::= ['vars' name (',' name)*] ideal
    ideal  ::= '(' mono (',' mono)* ')'
    mono   ::= factor ('*' factor)* | '1'
    factor ::= name ('^' uint)?

Whitespace (including newlines) is insignificant.  Without a ``vars``
header every name must look like ``x<k>`` and the ring is x1..x<max k>.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import PolymatError
from .ideal import MonomialIdeal, VariableSet

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_#]*)|(?P<int>\d+)|(?P<punct>[(),*^]))")
_IMPLICIT = re.compile(r"x([1-9]\d*)$")


class ParseError(PolymatError, ValueError):
    def __init__(self, message: str, line: int, col: int, expected: str | None = None):
        self.line = line
        self.col = col
        self.expected = expected
        where = f"line {line}, column {col}"
        detail = f"{message} at {where}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class ImplicitVariablesWarning(UserWarning):
    pass


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[_Tok] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                rest = text[pos:]
                if not rest.strip():
                    break
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", *self.linecol(bad))
            kind = m.lastgroup
            self.toks.append(_Tok(kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def linecol(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def fail(self, message: str, expected: str | None = None):
        tok = self.peek()
        pos = tok.pos if tok else len(self.text)
        if tok is None:
            message = f"{message}: unexpected end of input"
        raise ParseError(message, *self.linecol(pos), expected=expected)

    def take(self, kind: str, text: str | None = None, expected: str | None = None) -> _Tok:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            want = expected or (repr(text) if text else kind)
            found = "end of input" if tok is None else repr(tok.text)
            self.fail(f"found {found}", expected=want)
        self.i += 1
        return tok

    def accept(self, kind: str, text: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.kind == kind and tok.text == text:
            self.i += 1
            return True
        return False


def parse_ideal(text: str, vars: VariableSet | Sequence[str] | None = None) -> MonomialIdeal:
    """Parse ``text`` into a minimalized :class:`MonomialIdeal`.

    ``vars`` overrides any header in the text.  Implicit ``x<k>`` variables
    are accepted with an :class:`ImplicitVariablesWarning`.
    """
    r = _Reader(text)
    header = None
    tok = r.peek()
    if tok is not None and tok.kind == "name" and tok.text == "vars":
        r.i += 1
        names = [r.take("name", expected="variable name").text]
        while r.accept("punct", ","):
            names.append(r.take("name", expected="variable name").text)
        try:
            header = VariableSet(tuple(names))
        except ValueError as exc:
            raise ParseError(str(exc), *r.linecol(tok.pos)) from None
    if vars is not None and not isinstance(vars, VariableSet):
        vars = VariableSet(tuple(vars))
    declared = vars if vars is not None else header

    r.take("punct", "(", expected="'('")
    if r.peek() is not None and r.peek().text == ")":
        r.fail("empty generator list", expected="monomial")
    monos: list[tuple[dict[str, int], _Tok]] = [_mono(r)]
    while r.accept("punct", ","):
        monos.append(_mono(r))
    r.take("punct", ")", expected="',' or ')'")
    if r.peek() is not None:
        r.fail("trailing input", expected="end of input")

    if declared is None:
        top = 0
        for powers, start in monos:
            for name in powers:
                m = _IMPLICIT.match(name)
                if m is None:
                    raise ParseError(f"variable {name!r} is not of the form x<k> and no vars header was given",
                                     *r.linecol(start.pos))
                top = max(top, int(m.group(1)))
        declared = VariableSet.standard(max(top, 1))
        warnings.warn(f"no vars header; assuming {declared}", ImplicitVariablesWarning, stacklevel=2)

    gens = []
    for powers, start in monos:
        e = [0] * declared.n
        for name, k in powers.items():
            try:
                e[declared.index(name)] += k
            except KeyError:
                raise ParseError(f"unknown variable {name!r}", *r.linecol(start.pos),
                                 expected=f"one of {declared}") from None
        gens.append(tuple(e))
    return MonomialIdeal(declared, gens)


def _mono(r: _Reader) -> tuple[dict[str, int], _Tok]:
    start = r.peek()
    if start is not None and start.kind == "int":
        if start.text != "1":
            r.fail(f"numeric literal {start.text!r}", expected="variable name or 1")
        r.i += 1
        return {}, start
    powers: dict[str, int] = {}
    while True:
        name = r.take("name", expected="variable name")
        k = 1
        if r.accept("punct", "^"):
            lit = r.take("int", expected="exponent")
            k = int(lit.text)
            if k == 0:
                raise ParseError("zero exponent literal", *r.linecol(lit.pos), expected="positive exponent")
        powers[name.text] = powers.get(name.text, 0) + k
        if not r.accept("punct", "*"):
            return powers, start


def parse_variables(text: str) -> VariableSet:
    return VariableSet(tuple(v.strip() for v in text.split(",") if v.strip()))
