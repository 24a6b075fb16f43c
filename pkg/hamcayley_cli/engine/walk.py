# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Cycle notation: parse, expand and render walk expressions.

Grammar (whitespace is insignificant except between adjacent names)::

    walk    := item (',' item)*
    item    := rep | product
    rep     := '(' walk ')' exp? '#'?
    product := factor factor*          one factor: a run of labels
                                       several factors: one compound label
    factor  := (NAME | PERM) exp?
    PERM    := '(' INT (',' INT)* ')' ...   1-based cycles, e.g. (1,2,3)(5,6)
    exp     := '^' ['-'] (INT | NAME | '(' intexpr ')' | '{' intexpr '}')
    intexpr := integer arithmetic over parameters: + - * unary minus, parentheses

``x^3`` is three ``x`` labels and ``x^-2`` two ``x⁻¹`` labels. ``y^2w`` is a single
label whose value is ``y·y·w``. ``(w)^-1`` is the reversed, inverted walk, and ``#``
drops the final label of its block after exponentiation.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass

from ..exceptions import EmptyWalkError, UnboundParameterError, WalkSyntaxError
from .group import Label, render_power

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*")
PARAM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
INT_RE = re.compile(r"[0-9]+")
PERM_RE = re.compile(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+")

# ── Integer expressions ───────────────────────────────────────────────────


@dataclass(frozen=True)
class Num:
    value: int

    def eval(self, params: Mapping[str, int]) -> int:
        return self.value

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Param:
    name: str

    def eval(self, params: Mapping[str, int]) -> int:
        try:
            return int(params[self.name])
        except KeyError:
            raise UnboundParameterError(f"parameter '{self.name}' has no value")

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: IntExpr

    def eval(self, params: Mapping[str, int]) -> int:
        return -self.operand.eval(params)

    def render(self) -> str:
        return f"-{_wrap(self.operand)}"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: IntExpr
    right: IntExpr

    def eval(self, params: Mapping[str, int]) -> int:
        a, b = self.left.eval(params), self.right.eval(params)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        return a * b

    def render(self) -> str:
        return f"({self.left.render()}{self.op}{self.right.render()})"


IntExpr = Num | Param | Neg | BinOp


def _wrap(e: IntExpr) -> str:
    text = e.render()
    return text if isinstance(e, (Num, Param)) or text.startswith("(") else f"({text})"


# ── Walk tree ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Atom:
    name: str
    exponent: IntExpr | None = None


@dataclass(frozen=True)
class Product:
    """Juxtaposed factors forming one compound label."""

    factors: tuple[Atom, ...]


@dataclass(frozen=True)
class Seq:
    items: tuple[Atom | Product | Rep, ...]


@dataclass(frozen=True)
class Rep:
    body: Seq
    exponent: IntExpr | None = None
    truncate: bool = False


WalkExpr = Seq | Rep | Atom | Product


# ── Parser ────────────────────────────────────────────────────────────────


class _Parser:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0

    def error(self, message: str):
        raise WalkSyntaxError(message, self.pos, self.src)

    def skip(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def match(self, regex: re.Pattern) -> str | None:
        self.skip()
        m = regex.match(self.src, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group(0)

    # walk := item (',' item)*
    def walk(self) -> Seq:
        items = [self.item()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.item())
        return Seq(tuple(items))

    def at_perm(self) -> bool:
        return self.peek() == "(" and re.match(r"\(\s*\d", self.src[self.pos:]) is not None

    def item(self) -> Atom | Product | Rep:
        if self.peek() == "(" and not self.at_perm():
            self.pos += 1
            body = self.walk()
            self.expect(")")
            exponent = self.exponent()
            truncate = False
            if self.peek() == "#":
                self.pos += 1
                truncate = True
            return Rep(body, exponent, truncate)
        factors = [self.factor()]
        while (self.peek().isascii() and self.peek().isalpha()) or self.at_perm():
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Atom:
        if self.at_perm():
            literal = self.match(PERM_RE)
            if literal is None:
                self.error("malformed permutation")
            return Atom(re.sub(r"\s+", "", literal), self.exponent())
        name = self.match(NAME_RE)
        if name is None:
            self.error("expected a generator name or '('")
        return Atom(name, self.exponent())

    def exponent(self) -> IntExpr | None:
        if self.peek() != "^":
            return None
        self.pos += 1
        negative = False
        if self.peek() == "-":
            self.pos += 1
            negative = True
        ch = self.peek()
        if ch and ch in "({":
            self.pos += 1
            value = self.intexpr()
            self.expect(")" if ch == "(" else "}")
        elif (digits := self.match(INT_RE)) is not None:
            value = Num(int(digits))
        elif (param := self.match(PARAM_RE)) is not None:
            value = Param(param)
        else:
            self.error("expected an exponent")
        return Neg(value) if negative else value

    def intexpr(self) -> IntExpr:
        left = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.src[self.pos]
            self.pos += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> IntExpr:
        left = self.unary()
        while self.peek() == "*":
            self.pos += 1
            left = BinOp("*", left, self.unary())
        return left

    def unary(self) -> IntExpr:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return Neg(self.unary())
        if ch == "(":
            self.pos += 1
            inner = self.intexpr()
            self.expect(")")
            return inner
        if (digits := self.match(INT_RE)) is not None:
            return Num(int(digits))
        if (param := self.match(PARAM_RE)) is not None:
            return Param(param)
        self.error("expected an integer expression")


def parse_walk_expr(source: str) -> Seq:
    """Parse walk notation into a tree; the empty string is the empty walk."""
    parser = _Parser(source)
    if parser.peek() == "":
        return Seq(())
    tree = parser.walk()
    if parser.peek() != "":
        parser.error(f"unexpected '{parser.peek()}'")
    return tree


# ── Expansion ─────────────────────────────────────────────────────────────


def invert_walk(labels: list[Label]) -> list[Label]:
    return [label.inverse() for label in reversed(labels)]


def expand(node: WalkExpr, params: Mapping[str, int] | None = None) -> list[Label]:
    params = params or {}
    if isinstance(node, Seq):
        out: list[Label] = []
        for item in node.items:
            out.extend(expand(item, params))
        return out
    if isinstance(node, Atom):
        k = node.exponent.eval(params) if node.exponent is not None else 1
        return [Label(node.name, 1 if k > 0 else -1)] * abs(k)
    if isinstance(node, Product):
        factors = tuple(
            (a.name, a.exponent.eval(params) if a.exponent is not None else 1) for a in node.factors
        )
        name = " ".join(render_power(n, k) or f"{n}^0" for n, k in factors)
        return [Label(name, 1, factors)]
    # Rep
    body = expand(node.body, params)
    k = node.exponent.eval(params) if node.exponent is not None else 1
    block = body if k >= 0 else invert_walk(body)
    out = block * abs(k)
    if node.truncate:
        if not out:
            raise EmptyWalkError("truncation applied to an empty block")
        out = out[:-1]
    return out


def parse_walk(source: str, params: Mapping[str, int] | None = None) -> list[Label]:
    """Parse and expand walk notation into a flat label sequence."""
    return expand(parse_walk_expr(source), params)


def render(node: WalkExpr) -> str:
    """Source text that reparses to the same expansion."""
    if isinstance(node, Seq):
        return ", ".join(render(item) for item in node.items)
    if isinstance(node, Atom):
        return node.name + _render_exp(node.exponent)
    if isinstance(node, Product):
        return " ".join(render(a) for a in node.factors)
    text = f"({render(node.body)}){_render_exp(node.exponent)}"
    return text + " #" if node.truncate else text


def _render_exp(e: IntExpr | None) -> str:
    if e is None:
        return ""
    if isinstance(e, Num):
        return f"^{e.value}"
    if isinstance(e, Neg) and isinstance(e.operand, (Num, Param)):
        return f"^-{e.operand.render()}"
    if isinstance(e, Param):
        return f"^{e.name}"
    return f"^({e.render()})"


def is_bare_name(name: str) -> bool:
    """A generator name or permutation that takes an exponent without parentheses."""
    return bool(NAME_RE.fullmatch(name) or PERM_RE.fullmatch(name))


def render_labels(labels: list[Label]) -> str:
    """Compact rendering of a flat sequence, collapsing runs into powers."""
    parts: list[str] = []
    i = 0
    while i < len(labels):
        j = i
        while j < len(labels) and labels[j] == labels[i]:
            j += 1
        run = j - i
        label = labels[i]
        if label.factors or not is_bare_name(label.name):
            base = f"({label.name})"
            parts.append(base if run == 1 and label.sign == 1 else f"{base}^{run * label.sign}")
        else:
            parts.append(render_power(label.name, run * label.sign))
        i = j
    return ", ".join(parts)


# ── Words and integer fields ──────────────────────────────────────────────


def parse_word(source: str, params: Mapping[str, int] | None = None) -> list[Label]:
    """A word is walk notation read as a product: ``t^2 w`` or ``x, y^-1``."""
    return parse_walk(source, params)


def parse_intexpr(source: str) -> IntExpr:
    parser = _Parser(source)
    value = parser.intexpr()
    if parser.peek() != "":
        parser.error(f"unexpected '{parser.peek()}'")
    return value


def eval_int(value: int | str, params: Mapping[str, int] | None = None) -> int:
    """Integer fields of group specs may be literals or expressions like ``p-1``."""
    if isinstance(value, int):
        return value
    return parse_intexpr(value).eval(params or {})
