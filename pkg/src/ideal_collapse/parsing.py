"""Recursive-descent parser for polynomial system files.

Grammar (one statement per line, ``#`` starts a comment)::

    system    := fieldline varsline genline*
    fieldline := "field" ("Q" | "F" INT | "F" INT "^" INT)
    varsline  := "vars" IDENT+
    genline   := IDENT "=" expr
    expr      := ["-"] term (("+" | "-") term)*
    term      := factor ("*" factor)*
    factor    := coeff | IDENT ["^" INT] | "(" expr ")" ["^" INT] | "[" elem "]"
    coeff     := INT | INT "/" INT            (fractions over Q only)
    elem      := expr in the generator t      (extension fields only)

Multiplication is always explicit: ``2x`` is rejected, write ``2*x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from . import config
from .errors import (
    DegreeOverflow,
    DuplicateGeneratorName,
    FieldLiteralError,
    ParseError,
    PolySyntaxError,
    UnknownVariable,
)
from .fields import ExtensionField, Field, PrimeField, Rationals, make_field
from .locus import IdealSystem
from .polys import MultiPoly, UniPoly

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_FIELD_SPEC_RE = re.compile(r"(Q|F\d+(?:\^\d+)?)\s*$")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "eol"
    text: str
    line: int
    col: int  # 1-based


def tokenize(text: str, line: int = 1, col0: int = 0) -> list[Token]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            toks.append(Token("int", m.group(1), line, col0 + m.start(1) + 1))
        elif m.group(2):
            toks.append(Token("ident", m.group(2), line, col0 + m.start(2) + 1))
        elif m.group(3):
            ch = m.group(3)
            if ch == "#":
                toks.append(Token("eol", "", line, col0 + m.start(3) + 1))
                return toks
            if not ch.isspace():
                toks.append(Token("op", ch, line, col0 + m.start(3) + 1))
        pos = m.end()
    end_col = col0 + len(text.rstrip()) + 1
    toks.append(Token("eol", "", line, end_col))
    return toks


class _ExprParser:
    def __init__(self, tokens: list[Token], field: Field, var_names: Sequence[str]):
        self.toks = tokens
        self.i = 0
        self.field = field
        self.vars = {name: j for j, name in enumerate(var_names)}
        self.nvars = len(var_names)

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.tok
        raise PolySyntaxError(t.line, t.col, expected, t.text or "end of line")

    def accept(self, text: str) -> Token | None:
        t = self.tok
        if t.kind == "op" and t.text == text:
            self.i += 1
            return t
        return None

    def expect_int(self) -> Token:
        t = self.tok
        if t.kind != "int":
            self.fail("an integer")
        self.i += 1
        return t

    def const(self, c) -> MultiPoly:
        return MultiPoly.constant(self.field, self.nvars, c)

    def parse_full(self) -> MultiPoly:
        poly = self.expr()
        if self.tok.kind != "eol":
            self.fail("'+', '-', '*' or end of line")
        return poly

    def expr(self) -> MultiPoly:
        negate = self.accept("-") is not None
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def exponent(self) -> int:
        t = self.expect_int()
        e = int(t.text)
        if e > config.MAX_DEGREE:
            raise DegreeOverflow(f"line {t.line}, column {t.col}: exponent {e} too large")
        return e

    def factor(self) -> MultiPoly:
        t = self.tok
        if t.kind == "int":
            return self.coeff()
        if t.kind == "ident":
            if t.text not in self.vars:
                raise UnknownVariable(t.text, t.line, t.col)
            self.i += 1
            e = self.exponent() if self.accept("^") else 1
            exp = [0] * self.nvars
            exp[self.vars[t.text]] = e
            return MultiPoly(self.field, self.nvars, {tuple(exp): 1})
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.fail("')'")
            if self.accept("^"):
                inner = inner ** self.exponent()
            return inner
        if t.kind == "op" and t.text == "[":
            return self.ext_element()
        self.fail("a number, variable, '(' or '['")

    def coeff(self) -> MultiPoly:
        num = self.expect_int()
        slash = self.accept("/")
        if slash is None:
            return self.const(int(num.text))
        if not isinstance(self.field, Rationals):
            raise FieldLiteralError(
                f"fraction literals are only allowed over Q, not {self.field}",
                slash.line, slash.col,
            )
        den = self.expect_int()
        if int(den.text) == 0:
            raise FieldLiteralError("zero denominator", den.line, den.col)
        return self.const(Fraction(int(num.text), int(den.text)))

    def ext_element(self) -> MultiPoly:
        open_tok = self.tok
        F = self.field
        if not isinstance(F, ExtensionField):
            raise FieldLiteralError(
                f"bracketed elements need an extension field, not {F}",
                open_tok.line, open_tok.col,
            )
        self.i += 1
        sub = _ExprParser(self.toks, PrimeField(F.p), ["t"])
        sub.i = self.i
        poly = sub.expr()
        self.i = sub.i
        if not self.accept("]"):
            self.fail("']'")
        # reduce t-polynomial modulo the field's modulus via Horner in F
        uni = poly.to_univariate(0)
        t = F.element_from_index(F.p)
        val = F.zero
        for c in reversed(uni.coeffs):
            val = F.add(F.mul(val, t), F.from_int(c))
        return self.const(val)


def parse_poly(text: str, field: Field, var_names: Sequence[str], line: int = 1) -> MultiPoly:
    """Parse a single polynomial expression."""
    return _ExprParser(tokenize(text, line), field, var_names).parse_full()


def parse_unipoly(text: str, field: Field) -> UniPoly:
    """Parse a univariate polynomial written in one variable (any name, e.g. T)."""
    toks = tokenize(text)
    names = sorted({t.text for t in toks if t.kind == "ident"})
    if isinstance(field, ExtensionField):
        # t inside brackets belongs to the field, not the polynomial
        depth, outside = 0, set()
        for t in toks:
            if t.kind == "op" and t.text in "[]":
                depth += 1 if t.text == "[" else -1
            elif t.kind == "ident" and depth == 0:
                outside.add(t.text)
        names = sorted(outside)
    if len(names) > 1:
        raise ParseError(f"expected one variable, found {', '.join(names)}")
    var = names[0] if names else "T"
    return parse_poly(text, field, [var]).to_univariate(0)


@dataclass
class SystemDocument:
    text: str
    system: IdealSystem
    locations: dict[str, tuple[int, int]] = dc_field(default_factory=dict)


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = tokenize(raw, lineno)
        if toks[0].kind != "eol":
            yield lineno, raw, toks


def parse_document(text: str) -> SystemDocument:
    stmts = list(_statements(text))
    if not stmts:
        raise PolySyntaxError(1, 1, "'field' line")
    lineno, raw, toks = stmts[0]
    if toks[0].text != "field":
        raise PolySyntaxError(lineno, toks[0].col, "'field'", toks[0].text)
    if toks[1].kind == "eol":
        raise PolySyntaxError(lineno, toks[1].col, "a field: Q, F<p> or F<p>^<k>", "end of line")
    spec_col = toks[1].col
    spec_text = raw[spec_col - 1:].split("#", 1)[0]
    m = _FIELD_SPEC_RE.match(spec_text)
    if not m:
        raise PolySyntaxError(lineno, spec_col, "a field: Q, F<p> or F<p>^<k>", spec_text.strip())
    try:
        field = make_field(m.group(1))
    except (ValueError, ParseError) as exc:
        raise FieldLiteralError(str(exc), lineno, spec_col) from exc

    if len(stmts) < 2:
        raise PolySyntaxError(lineno + 1, 1, "'vars' line")
    lineno, raw, toks = stmts[1]
    if toks[0].text != "vars":
        raise PolySyntaxError(lineno, toks[0].col, "'vars'", toks[0].text)
    names = []
    for t in toks[1:-1]:
        if t.kind != "ident":
            raise PolySyntaxError(lineno, t.col, "a variable name", t.text)
        if t.text in names:
            raise ParseError(f"duplicate variable {t.text!r}", lineno, t.col)
        names.append(t.text)
    if not names:
        raise PolySyntaxError(lineno, toks[-1].col, "a variable name", "end of line")

    gens, gen_names, locations = [], [], {}
    for lineno, raw, toks in stmts[2:]:
        head = toks[0]
        if head.kind != "ident":
            raise PolySyntaxError(lineno, head.col, "a generator name", head.text)
        if not (toks[1].kind == "op" and toks[1].text == "="):
            raise PolySyntaxError(lineno, toks[1].col, "'='", toks[1].text or "end of line")
        if head.text in locations:
            raise DuplicateGeneratorName(f"generator {head.text!r} defined twice", lineno, head.col)
        parser = _ExprParser(toks, field, names)
        parser.i = 2
        gens.append(parser.parse_full())
        gen_names.append(head.text)
        locations[head.text] = (lineno, toks[2].col)
    system = IdealSystem(field, tuple(names), tuple(gens), tuple(gen_names))
    return SystemDocument(text, system, locations)


def parse_system(text: str) -> IdealSystem:
    return parse_document(text).system


def print_canonical(f: MultiPoly, var_names: Sequence[str]) -> str:
    return f.format(var_names)


def print_system(system: IdealSystem) -> str:
    lines = [f"field {system.field}", "vars " + " ".join(system.var_names)]
    for name, g in zip(system.generator_names, system.generators):
        lines.append(f"{name} = {g.format(system.var_names)}")
    return "\n".join(lines) + "\n"
