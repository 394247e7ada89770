"""Parser for equations in the normal form ``C*x^(2a) = D*y^(2b) + E``.

Accepted grammar (whitespace is ignored)::

    equation := term '=' term (('+' | '-') INT)? END
    term     := ['-'] [INT ['*']] IDENT '^' INT

An omitted coefficient is 1 and a leading ``-`` negates it. Exponents must
be even and at least 2, the two variables must differ, and the trailing
constant must be present and nonzero.

>>> parse_equation("x^2 = 2y^4 - 1")
EquationSpec(C=1, a=1, D=2, b=2, E=-1)
>>> unparse(parse_equation("3x^6 = 5y^2 + 7"))
'3*x^6 = 5*y^2 + 7'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from .general_pell import EquationSpec

INTEGER = "integer"
IDENTIFIER = "identifier"
CARET = "caret"
STAR = "star"
PLUS = "plus"
MINUS = "minus"
EQUALS = "equals"
END = "end"

_PUNCT = {"^": CARET, "*": STAR, "+": PLUS, "-": MINUS, "=": EQUALS}
_INT_RE = re.compile(r"[0-9]+")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

_FORM_HINT = "expected the form C*x^(2a) = D*y^(2b) + E"


class EquationParseError(ValueError):
    """Rejected input. ``kind`` is a stable machine-readable code, ``position`` a 0-based offset."""

    def __init__(self, kind: str, position: int, message: str, hint: Optional[str] = None):
        self.kind = kind
        self.position = position
        self.message = message
        self.hint = hint
        text = f"{message} at position {position}"
        if hint:
            text += f" ({hint})"
        super().__init__(text)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(source: str) -> List[Token]:
    tokens = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, i))
            i += 1
            continue
        m = _INT_RE.match(source, i)
        if m:
            tokens.append(Token(INTEGER, m.group(), i))
            i = m.end()
            continue
        m = _IDENT_RE.match(source, i)
        if m:
            tokens.append(Token(IDENTIFIER, m.group(), i))
            i = m.end()
            continue
        raise EquationParseError("illegal_character", i, f"illegal character {ch!r}")
    tokens.append(Token(END, "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token]):
        if not tokens or tokens[-1].kind != END:
            end = tokens[-1].position + len(tokens[-1].text) if tokens else 0
            tokens = list(tokens) + [Token(END, "", end)]
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            if tok.kind == END:
                raise EquationParseError("unexpected_end", tok.position, f"expected {what}, got end of input", _FORM_HINT)
            raise EquationParseError("unexpected_token", tok.position, f"expected {what}, got {tok.text!r}", _FORM_HINT)
        self.i += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        if self.peek().kind == kind:
            self.i += 1
            return self.tokens[self.i - 1]
        return None

    def term(self) -> tuple[int, Token, int]:
        sign = -1 if self.accept(MINUS) else 1
        coeff = 1
        num = self.accept(INTEGER)
        if num is not None:
            coeff = int(num.text)
            if coeff == 0:
                raise EquationParseError("zero_coefficient", num.position, "coefficient must be nonzero")
            self.accept(STAR)
        var = self.take(IDENTIFIER, "a variable")
        self.take(CARET, "'^'")
        exp_tok = self.take(INTEGER, "an exponent")
        exp = int(exp_tok.text)
        if exp % 2:
            raise EquationParseError("odd_exponent", exp_tok.position, "odd exponent")
        if exp == 0:
            raise EquationParseError("zero_exponent", exp_tok.position, "exponent must be at least 2")
        return sign * coeff, var, exp // 2

    def equation(self) -> EquationSpec:
        C, left, a = self.term()
        self.take(EQUALS, "'='")
        D, right, b = self.term()
        if right.text == left.text:
            raise EquationParseError(
                "repeated_variable", right.position, f"variable {right.text!r} appears on both sides"
            )
        op = self.peek()
        if op.kind == END:
            raise EquationParseError("zero_constant", op.position, "missing constant term (E must be nonzero)")
        if op.kind not in (PLUS, MINUS):
            raise EquationParseError("unexpected_token", op.position, f"expected '+' or '-', got {op.text!r}", _FORM_HINT)
        self.i += 1
        num = self.take(INTEGER, "a constant")
        E = int(num.text) * (-1 if op.kind == MINUS else 1)
        if E == 0:
            raise EquationParseError("zero_constant", num.position, "constant term must be nonzero")
        tail = self.peek()
        if tail.kind != END:
            raise EquationParseError("trailing_tokens", tail.position, f"unexpected trailing {tail.text!r}")
        return EquationSpec(C, a, D, b, E)


def parse(tokens: List[Token]) -> EquationSpec:
    return _Parser(tokens).equation()


def parse_equation(source: str) -> EquationSpec:
    return parse(tokenize(source))


def _render_term(coeff: int, var: str, exp: int) -> str:
    if coeff == 1:
        return f"{var}^{exp}"
    if coeff == -1:
        return f"-{var}^{exp}"
    return f"{coeff}*{var}^{exp}"


def unparse(spec: EquationSpec) -> str:
    op = "-" if spec.E < 0 else "+"
    return (
        f"{_render_term(spec.C, 'x', 2 * spec.a)} = "
        f"{_render_term(spec.D, 'y', 2 * spec.b)} {op} {abs(spec.E)}"
    )
