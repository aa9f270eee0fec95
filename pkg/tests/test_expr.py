"""Expression parser, evaluator, and printer."""

import math

import pytest

from conescal.errors import (
    ArityError,
    EvalError,
    ExprSyntaxError,
    UnknownIdentifier,
)
from conescal.expr import BinOp, Call, Const, Neg, Var, eval_expr, parse, to_text


def ev(src: str, x, n=None) -> float:
    n_vars = max(1, len(x)) if n is None else n
    return eval_expr(parse(src, n_vars), x)


class TestParseAndEval:
    def test_basic_arithmetic(self):
        assert ev("x1 + 2*x2", (1, 3)) == 7.0
        assert ev("max(x1, x2)^2", (2, -1)) == 4.0
        assert ev("(x1-1)^2 + (x2-2)^2", (1, 2)) == 0.0
        assert ev("abs(x1) - x2", (-3, 1)) == 2.0

    def test_precedence_suite(self):
        cases = [
            ("1 + 2*3", (), 7.0),
            ("2*3 + 1", (), 7.0),
            ("1 - 2 - 3", (), -4.0),          # left assoc
            ("12/2/3", (), 2.0),              # left assoc
            ("2^3^2", (), 512.0),             # right assoc
            ("-2^2", (), -4.0),               # ^ binds tighter than unary -
            ("(-2)^2", (), 4.0),
            ("2^-1", (), 0.5),                # unary minus in exponent
            ("-x1^2", (3,), -9.0),
            ("--x1", (5,), 5.0),
            ("2*-3", (), -6.0),
            ("1 - -2", (), 3.0),
            ("6/2*3", (), 9.0),               # same precedence, left to right
            ("1 + 2 - 3 + 4", (), 4.0),
            ("min(1+1, 2*3)", (), 2.0),
            ("max(-1, min(2, 3))", (), 2.0),
            ("sin(0) + cos(0)", (), 1.0),
            ("exp(0)*10", (), 10.0),
            ("abs(-2)^3", (), 8.0),
            ("2^(1+1)", (), 4.0),
        ]
        for src, x, want in cases:
            assert ev(src, x) == pytest.approx(want, abs=1e-15), src

    def test_scientific_notation_and_floats(self):
        assert ev("1e3 + 2.5", ()) == 1002.5
        assert ev("1.5E-2", ()) == 0.015

    def test_variables_and_functions(self):
        assert ev("sin(x1)*cos(x2)", (math.pi / 2, 0.0)) == pytest.approx(1.0)
        assert ev("min(x1, max(x2, 0.5))", (2, -1)) == 0.5

    def test_whitespace_insensitive(self):
        assert parse("x1+x2", 2) == parse("  x1 +  x2 ", 2)

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifier):
            parse("x3", 2)
        with pytest.raises(UnknownIdentifier):
            parse("foo(1)", 2)
        with pytest.raises(UnknownIdentifier):
            parse("x0 + 1", 2)  # variables are 1-based

    def test_arity_error(self):
        with pytest.raises(ArityError):
            parse("sin(1, 2)", 1)
        with pytest.raises(ArityError):
            parse("min(1)", 1)

    def test_syntax_errors_with_offsets(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse("2 +", 1)
        assert err.value.offset == 3
        with pytest.raises(ExprSyntaxError) as err:
            parse("2x1", 1)  # no implicit multiplication
        assert err.value.offset == 1
        with pytest.raises(ExprSyntaxError):
            parse("", 1)
        with pytest.raises(ExprSyntaxError):
            parse("(1+2", 1)
        with pytest.raises(ExprSyntaxError):
            parse("1 + 2)", 1)

    def test_eval_errors(self):
        with pytest.raises(EvalError):
            ev("1/x1", (0, 1), n=2)
        with pytest.raises(EvalError):
            ev("exp(1000)", ())           # overflow
        with pytest.raises(EvalError):
            ev("(-1)^0.5", ())            # domain error, no silent NaN
        with pytest.raises(EvalError):
            ev("0^-1", ())

    def test_eval_dimension_check(self):
        ast = parse("x2", 2)
        with pytest.raises(EvalError):
            eval_expr(ast, (1.0,))


class TestAstAndPrinter:
    def test_ast_shape(self):
        ast = parse("x1 + 2*x2", 2)
        assert isinstance(ast, BinOp) and ast.op == "+"
        assert ast.left == Var(1)
        assert ast.right == BinOp("*", Const(2.0), Var(2))

    def test_offsets_ignored_in_equality(self):
        assert parse("x1", 1) == parse("   x1", 1)

    def test_round_trip_regression(self):
        sources = [
            "x1 + 2*x2",
            "-x1^2",
            "(x1 + x2)*(x1 - x2)",
            "2^3^2",
            "-(x1 + 1)",
            "1 - 2 - 3",
            "12/2/3",
            "x1/(x2*x3)",
            "min(x1, max(x2, 0.5))",
            "sin(x1)*cos(x2) + exp(x3)",
            "abs(-x1)^3",
            "2^-1",
            "x1 - -x2",
            "1.5E-2 + x1",
            "(x1 - 1)^2 + (x2 - 2)^2",
            "max(x1, x2)^2",
            "x1*x2/x3",
            "-(-(x1))",
            "0.5*(x1 + x2)",
            "x1^(x2 + 1)",
        ]
        for src in sources:
            ast = parse(src, 3)
            printed = to_text(ast)
            assert parse(printed, 3) == ast, (src, printed)

    def test_printer_parenthesization(self):
        assert to_text(parse("2^3^2", 1)) == "2^3^2"
        assert to_text(parse("(2^3)^2", 1)) == "(2^3)^2"
        assert to_text(parse("-(x1 + 1)", 1)) == "-(x1 + 1)"
        assert to_text(parse("1 - (2 - 3)", 1)) == "1 - (2 - 3)"
        assert to_text(parse("(1 - 2) - 3", 1)) == "1 - 2 - 3"

    def test_printer_integer_constants(self):
        assert to_text(Const(2.0)) == "2"
        assert to_text(Const(2.5)) == "2.5"

    def test_call_ast(self):
        ast = parse("min(x1, 2)", 1)
        assert ast == Call("min", (Var(1), Const(2.0)))
