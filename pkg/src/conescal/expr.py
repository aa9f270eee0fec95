"""A small expression language for objective functions.

Grammar (see docs/expr_grammar.ebnf): numbers, variables ``x1..xn``, the
binary operators ``+ - * / ^`` (``^`` right-associative and binding tighter
than unary minus), unary minus, and the calls ``sin``, ``cos``, ``exp``,
``abs``, ``min``, ``max``.  No implicit multiplication: ``2x1`` is a syntax
error.  Parsing consumes the entire input and reports offsets with every
error; evaluation is IEEE-ish but never lets a NaN or infinity escape --
division by zero, domain errors, and overflow raise ``EvalError`` carrying
the offending node's offset.

ASTs are immutable, and equality ignores source offsets, so pretty-printing
an AST and re-parsing the text yields an equal tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .errors import ArityError, EvalError, ExprSyntaxError, UnknownIdentifier

__all__ = [
    "Const",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "ExprAst",
    "FUNCTIONS",
    "parse",
    "eval_expr",
    "to_text",
]

FUNCTIONS = {"sin": 1, "cos": 1, "exp": 1, "abs": 1, "min": 2, "max": 2}


@dataclass(frozen=True)
class Const:
    value: float
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    index: int  # 1-based, as written in the source
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprAst"
    right: "ExprAst"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    offset: int = field(default=0, compare=False)


ExprAst = Union[Const, Var, Neg, BinOp, Call]


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_OPS = set("+-*/^(),")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "ident" | one of _OPS | "end"
    text: str
    offset: int
    value: float = 0.0


def _tokenize(src: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            toks.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and src[j] == ".":
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
            if j < n and src[j] in "eE":
                k = j + 1
                if k < n and src[k] in "+-":
                    k += 1
                if k < n and src[k].isdigit():
                    j = k
                    while j < n and src[j].isdigit():
                        j += 1
            text = src[i:j]
            try:
                val = float(text)
            except ValueError:  # pragma: no cover - the scan admits only floats
                raise ExprSyntaxError(f"bad number {text!r}", i) from None
            toks.append(_Token("num", text, i, val))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Token("ident", src[i:j], i))
            i = j
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", n))
    return toks


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, toks: list[_Token], n_vars: int):
        self.toks = toks
        self.pos = 0
        self.n_vars = n_vars

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.offset
            )
        return self.take()

    def parse_expr(self) -> ExprAst:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            node = BinOp(op.kind, node, rhs, op.offset)
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_unary()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.parse_unary()
            node = BinOp(op.kind, node, rhs, op.offset)
        return node

    def parse_unary(self) -> ExprAst:
        if self.peek().kind == "-":
            op = self.take()
            return Neg(self.parse_unary(), op.offset)
        return self.parse_power()

    def parse_power(self) -> ExprAst:
        base = self.parse_atom()
        if self.peek().kind == "^":
            op = self.take()
            # right-associative; the exponent may start with a unary minus
            return BinOp("^", base, self.parse_unary(), op.offset)
        return base

    def parse_atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return Const(tok.value, tok.offset)
        if tok.kind == "(":
            self.take()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            self.take()
            name = tok.text
            if len(name) >= 2 and name[0] == "x" and name[1:].isdigit():
                idx = int(name[1:])
                if not (1 <= idx <= self.n_vars):
                    raise UnknownIdentifier(name, tok.offset)
                return Var(idx, tok.offset)
            if name in FUNCTIONS:
                self.expect("(")
                args = [self.parse_expr()]
                while self.peek().kind == ",":
                    self.take()
                    args.append(self.parse_expr())
                self.expect(")")
                want = FUNCTIONS[name]
                if len(args) != want:
                    raise ArityError(name, want, len(args), tok.offset)
                return Call(name, tuple(args), tok.offset)
            raise UnknownIdentifier(name, tok.offset)
        raise ExprSyntaxError(
            f"expected a value, found {tok.text or 'end of input'!r}", tok.offset
        )


def parse(src: str, n_vars: int) -> ExprAst:
    """Parse ``src`` over the variables x1..x{n_vars}; the whole input must
    be consumed."""
    if not isinstance(n_vars, int) or n_vars < 1:
        raise ValueError(f"n_vars must be a positive integer, got {n_vars!r}")
    if not src or src.isspace():
        raise ExprSyntaxError("empty expression", 0)
    p = _Parser(_tokenize(src), n_vars)
    node = p.parse_expr()
    tail = p.peek()
    if tail.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {tail.text!r}", tail.offset)
    return node


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

_UNARY_FUNCS = {"sin": math.sin, "cos": math.cos, "exp": math.exp, "abs": abs}


def eval_expr(ast: ExprAst, x) -> float:
    """Evaluate the tree at the point ``x`` (indexable, x[0] is x1)."""
    val = _eval(ast, x)
    return val


def _check(val: float, offset: int) -> float:
    if not math.isfinite(val):
        raise EvalError("evaluation left the finite range", offset)
    return val


def _eval(node: ExprAst, x) -> float:
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        if node.index > len(x):
            raise EvalError(
                f"x{node.index} needs a point of dimension >= {node.index}",
                node.offset,
            )
        return _check(float(x[node.index - 1]), node.offset)
    if isinstance(node, Neg):
        return -_eval(node.operand, x)
    if isinstance(node, BinOp):
        a = _eval(node.left, x)
        b = _eval(node.right, x)
        try:
            if node.op == "+":
                return _check(a + b, node.offset)
            if node.op == "-":
                return _check(a - b, node.offset)
            if node.op == "*":
                return _check(a * b, node.offset)
            if node.op == "/":
                if b == 0.0:
                    raise EvalError("division by zero", node.offset)
                return _check(a / b, node.offset)
            if node.op == "^":
                return _check(math.pow(a, b), node.offset)
        except (OverflowError, ValueError) as exc:
            raise EvalError(str(exc), node.offset) from None
        raise EvalError(f"unknown operator {node.op!r}", node.offset)
    if isinstance(node, Call):
        args = [_eval(a, x) for a in node.args]
        try:
            if node.name in _UNARY_FUNCS:
                return _check(_UNARY_FUNCS[node.name](args[0]), node.offset)
            if node.name == "min":
                return min(args)
            if node.name == "max":
                return max(args)
        except (OverflowError, ValueError) as exc:
            raise EvalError(str(exc), node.offset) from None
        raise EvalError(f"unknown function {node.name!r}", node.offset)
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _level(node: ExprAst) -> int:
    if isinstance(node, BinOp):
        if node.op in ("+", "-"):
            return 1
        if node.op in ("*", "/"):
            return 2
        return 4  # ^
    if isinstance(node, Neg):
        return 3
    return 5  # atoms and calls


def _fmt_const(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def to_text(node: ExprAst) -> str:
    """Render the tree; re-parsing the result gives an equal tree."""
    if isinstance(node, Const):
        return _fmt_const(node.value)
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        if _level(node.operand) < 3:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, BinOp):
        lvl = _level(node)
        lt = to_text(node.left)
        rt = to_text(node.right)
        if node.op == "^":
            # right-associative: parenthesize a left child unless atomic,
            # and any right child weaker than a unary expression
            if _level(node.left) <= 4:
                lt = f"({lt})"
            if _level(node.right) < 3:
                rt = f"({rt})"
        else:
            if _level(node.left) < lvl:
                lt = f"({lt})"
            if _level(node.right) <= lvl:
                rt = f"({rt})"
        return f"{lt} {node.op} {rt}" if node.op in "+-" else f"{lt}{node.op}{rt}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an expression node: {node!r}")
