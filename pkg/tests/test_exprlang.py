import pytest
from hypothesis import given

from cofiso.core import FinSet, Isometry, PartialIsometry
from cofiso.exprlang import (
    ExprSyntaxError,
    eval_expr,
    format_element,
    format_finset,
    format_isometry,
    parse_expr,
    parse_finset,
    parse_isometry,
    Inv,
    Lit,
    Mul,
)
from strategies import elements, finsets, isometries


@given(elements)
def test_print_parse_print_fixed_point(p):
    text = format_element(p)
    assert eval_expr(text) == p
    assert format_element(eval_expr(text)) == text


@given(isometries)
def test_isometry_roundtrip(g):
    assert parse_isometry(format_isometry(g)) == g


@given(finsets)
def test_finset_roundtrip(s):
    assert parse_finset(format_finset(s)) == s


def test_formatting_conventions():
    assert format_element(PartialIsometry(Isometry(1, 2), FinSet([0, -1]))) == "<+x+2|{-1,0}>"
    assert format_element(PartialIsometry(Isometry(-1, -3), FinSet())) == "<-x-3|{}>"
    assert format_isometry(Isometry(1, 0)) == "+x+0"
    assert format_finset(FinSet()) == "{}"


def test_known_products():
    assert format_element(eval_expr("<+x+1|{0}> * <+x+1|{0}>")) == "<+x+2|{-1,0}>"
    assert format_element(eval_expr("<+x+0|{}>")) == "<+x+0|{}>"
    assert format_element(eval_expr("<+x+1|{0}>^-1")) == "<+x-1|{1}>"


def test_precedence_inverse_binds_tighter():
    # a * b^-1 is a * (b^-1)
    a = "<+x+3|{}>"
    b = "<+x+1|{0}>"
    assert eval_expr(f"{a} * {b}^-1") == eval_expr(a) * eval_expr(b).inv()
    assert eval_expr(f"({a} * {b})^-1") == (eval_expr(a) * eval_expr(b)).inv()


def test_stacked_inverses_and_parens():
    b = "<-x+5|{1,2}>"
    assert eval_expr(f"{b}^-1^-1") == eval_expr(b)
    assert eval_expr(f"(({b}))") == eval_expr(b)


def test_left_to_right_evaluation():
    # composition applies the left factor first
    p = eval_expr("<+x+1|{}> * <-x+0|{}>")
    assert p.gamma == Isometry(-1, -1)


def test_tree_shape():
    tree = parse_expr("<+x+1|{0}> * <+x+2|{}>^-1")
    assert isinstance(tree, Mul)
    assert isinstance(tree.left, Lit)
    assert isinstance(tree.right, Inv)


def test_whitespace_between_tokens():
    assert eval_expr(" <+x+1|{0}>\n *\t<+x+1|{0}> ") == eval_expr(
        "<+x+1|{0}>*<+x+1|{0}>"
    )


def test_unicode_minus_normalized():
    assert eval_expr("<+x−1|{−2}>") == PartialIsometry(
        Isometry(1, -1), FinSet([-2])
    )


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("<+x+1|{0}", 1, 10),        # unterminated literal
        ("<y+1|{0}>", 1, 2),         # bad reflection sign
        ("<+x1|{0}>", 1, 4),         # missing shift sign
        ("<+x+|{0}>", 1, 5),         # missing digits
        ("<+x+1{0}>", 1, 6),         # missing separator
        ("<+x+1|0}>", 1, 7),         # missing brace
        ("<+x+1|{0,}>", 1, 10),      # trailing comma
        ("<+x+1|{}> *", 1, 12),      # dangling operator
        ("<+x+1|{}> <+x+1|{}>", 1, 11),  # missing operator
        ("(<+x+1|{}>", 1, 11),       # unclosed paren
        ("<+x+1|{}>^2", 1, 11),      # bad inverse suffix
        ("\n  <+x+1|{}> @", 2, 13),  # junk after expression, line 2
    ],
)
def test_error_positions(text, line, col):
    with pytest.raises(ExprSyntaxError) as exc_info:
        eval_expr(text)
    err = exc_info.value
    assert (err.line, err.col) == (line, col)
    assert "line" in str(err) and "column" in str(err)


def test_empty_input():
    with pytest.raises(ExprSyntaxError):
        eval_expr("")
    with pytest.raises(ExprSyntaxError):
        eval_expr("   ")


def test_bare_parsers_reject_trailing_junk():
    with pytest.raises(ExprSyntaxError):
        parse_isometry("+x+1 junk")
    with pytest.raises(ExprSyntaxError):
        parse_finset("{1} junk")
    assert parse_finset(" {1,2} ") == FinSet([1, 2])
