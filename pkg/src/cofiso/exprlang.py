"""Surface syntax for elements and semigroup words.

An element literal is ``<SIGNx+A|{I1,I2,...}>``: the isometry part first
(``+x+3`` is the shift by 3, ``-x+1`` the reflection ``x -> -x + 1``), then
the excluded set in braces (``{}`` allowed, elements comma-separated,
negatives as ``-7``).  Words combine literals with ``*`` (apply left to
right), postfix ``^-1`` (binds tighter than ``*``) and parentheses::

    expr := term ('*' term)*
    term := atom ('^-1')*
    atom := literal | '(' expr ')'

Whitespace may separate tokens but not interrupt a literal.  A Unicode
minus sign is accepted anywhere ASCII ``-`` is.  Printing emits canonical
form (sorted set, normalized signs), so print -> parse -> print is a fixed
point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FinSet, Isometry, PartialIsometry

UNICODE_MINUS = "−"


class ExprSyntaxError(ValueError):
    """Malformed input, with 1-based line and column of the offending spot."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Lit:
    value: PartialIsometry


@dataclass(frozen=True)
class Inv:
    child: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


Node = Lit | Inv | Mul


class _Scanner:
    def __init__(self, text: str):
        self.text = text.replace(UNICODE_MINUS, "-")
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.line, self.col)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_ws(self) -> None:
        while self.peek() in (" ", "\t", "\n", "\r") and self.peek():
            self.advance()

    def expect(self, ch: str, context: str) -> None:
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r} {context}, got {got}")
        self.advance()

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    # -- literal pieces (no whitespace allowed inside) --

    def scan_sign(self, context: str) -> int:
        ch = self.peek()
        if ch == "+":
            self.advance()
            return 1
        if ch == "-":
            self.advance()
            return -1
        got = repr(ch) if ch else "end of input"
        raise self.error(f"expected '+' or '-' {context}, got {got}")

    def scan_digits(self, context: str) -> int:
        if self.peek() not in "0123456789" or not self.peek():
            got = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected digits {context}, got {got}")
        start = self.pos
        while self.peek() and self.peek() in "0123456789":
            self.advance()
        return int(self.text[start:self.pos])

    def scan_int(self, context: str) -> int:
        negative = False
        if self.peek() == "-":
            self.advance()
            negative = True
        value = self.scan_digits(context)
        return -value if negative else value

    def scan_isometry_body(self) -> Isometry:
        eps = self.scan_sign("to open the isometry part")
        self.expect("x", "after the reflection sign")
        shift_sign = self.scan_sign("before the shift")
        shift = self.scan_digits("in the shift")
        return Isometry(eps, shift_sign * shift)

    def scan_finset_body(self) -> FinSet:
        self.expect("{", "to open the excluded set")
        elems = []
        if self.peek() != "}":
            elems.append(self.scan_int("in the excluded set"))
            while self.peek() == ",":
                self.advance()
                elems.append(self.scan_int("after ','"))
        self.expect("}", "to close the excluded set")
        return FinSet(elems)

    def scan_literal(self) -> PartialIsometry:
        self.expect("<", "to open a literal")
        gamma = self.scan_isometry_body()
        self.expect("|", "between isometry and excluded set")
        excl = self.scan_finset_body()
        self.expect(">", "to close the literal")
        return PartialIsometry(gamma, excl)


def _parse_atom(s: _Scanner) -> Node:
    s.skip_ws()
    ch = s.peek()
    if ch == "<":
        return Lit(s.scan_literal())
    if ch == "(":
        s.advance()
        node = _parse_expr(s)
        s.skip_ws()
        s.expect(")", "to close the group")
        return node
    got = repr(ch) if ch else "end of input"
    raise s.error(f"expected a literal or '(', got {got}")


def _parse_term(s: _Scanner) -> Node:
    node = _parse_atom(s)
    while True:
        s.skip_ws()
        if s.peek() != "^":
            return node
        s.advance()
        s.expect("-", "in '^-1'")
        s.expect("1", "in '^-1'")
        node = Inv(node)


def _parse_expr(s: _Scanner) -> Node:
    node = _parse_term(s)
    while True:
        s.skip_ws()
        if s.peek() != "*":
            return node
        s.advance()
        node = Mul(node, _parse_term(s))


def parse_expr(text: str) -> Node:
    """Parse a whole input string into an expression tree."""
    s = _Scanner(text)
    node = _parse_expr(s)
    s.skip_ws()
    if not s.at_end():
        raise s.error(f"unexpected {s.peek()!r} after the expression")
    return node


def eval_node(node: Node) -> PartialIsometry:
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Inv):
        return eval_node(node.child).inv()
    return eval_node(node.left) * eval_node(node.right)


def eval_expr(text: str) -> PartialIsometry:
    return eval_node(parse_expr(text))


def parse_isometry(text: str) -> Isometry:
    """Parse a bare isometry like ``+x+3`` (the literal's first part)."""
    s = _Scanner(text)
    s.skip_ws()
    g = s.scan_isometry_body()
    s.skip_ws()
    if not s.at_end():
        raise s.error(f"unexpected {s.peek()!r} after the isometry")
    return g


def parse_finset(text: str) -> FinSet:
    """Parse a bare set like ``{0,2}`` or ``{}``."""
    s = _Scanner(text)
    s.skip_ws()
    fs = s.scan_finset_body()
    s.skip_ws()
    if not s.at_end():
        raise s.error(f"unexpected {s.peek()!r} after the set")
    return fs


def format_isometry(g: Isometry) -> str:
    return f"{'+' if g.eps == 1 else '-'}x{g.a:+d}"


def format_finset(s: FinSet) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def format_element(p: PartialIsometry) -> str:
    return f"<{format_isometry(p.gamma)}|{format_finset(p.excl)}>"
