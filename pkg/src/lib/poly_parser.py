"""
Polynomial Parser

Recursive-descent parser for the canonical polynomial text syntax:

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INTEGER)?
    atom   := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'

Whitespace is ignored. Names are p01..p23, x0..x3 and t.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .error_handling import ParseError, VarSetMismatch
from .polyring import (
    INCIDENCE,
    PARAMETER,
    PLUECKER,
    PLUECKER_NAMES,
    POINT,
    POINT_NAMES,
    MultiPoly,
    VarSet,
)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # INT | NAME | OP | END
    text: str
    line: int
    column: int


def _position(text: str, offset: int):
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def tokenize(text: str) -> List[Token]:
    """
    Split polynomial text into tokens.

    Raises:
        ParseError: On an unexpected character
    """
    tokens = []
    offset = 0
    while True:
        while offset < len(text) and text[offset].isspace():
            offset += 1
        if offset >= len(text):
            break
        match = _TOKEN_RE.match(text, offset)
        if not match:
            line, column = _position(text, offset)
            raise ParseError(f"Unexpected character '{text[offset]}'", text, line, column)
        start = match.start(match.lastindex)
        line, column = _position(text, start)
        if match.group(1) is not None:
            tokens.append(Token('INT', match.group(1), line, column))
        elif match.group(2) is not None:
            tokens.append(Token('NAME', match.group(2), line, column))
        else:
            tokens.append(Token('OP', match.group(3), line, column))
        offset = match.end()
    line, column = _position(text, len(text))
    tokens.append(Token('END', '', line, column))
    return tokens


def infer_varset(names) -> VarSet:
    """
    Choose the variable set for the identifiers found in a text.

    Pluecker names give PLUECKER, point names give POINT, both give
    INCIDENCE, `t` gives PARAMETER. Constants default to PLUECKER.
    """
    names = set(names)
    if not names or names <= set(PLUECKER_NAMES):
        return PLUECKER
    if names <= set(POINT_NAMES):
        return POINT
    if names <= set(POINT_NAMES) | set(PLUECKER_NAMES):
        return INCIDENCE
    if names <= set(PARAMETER.names):
        return PARAMETER
    return None


class _Parser:

    def __init__(self, text: str, tokens: List[Token], varset: VarSet):
        self.text = text
        self.tokens = tokens
        self.pos = 0
        self.varset = varset

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, self.text, token.line, token.column)

    def accept(self, *ops: str) -> Optional[Token]:
        token = self.current
        if token.kind == 'OP' and token.text in ops:
            self.pos += 1
            return token
        return None

    def expect_int(self) -> int:
        token = self.current
        if token.kind != 'INT':
            raise self.error(f"Expected an integer, found '{token.text or 'end of input'}'")
        self.pos += 1
        return int(token.text)

    def parse(self) -> MultiPoly:
        result = self.expr()
        if self.current.kind != 'END':
            raise self.error(f"Unexpected '{self.current.text}'")
        return result

    def expr(self) -> MultiPoly:
        result = self.term()
        while True:
            if self.accept('+'):
                result = result + self.term()
            elif self.accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self) -> MultiPoly:
        result = self.unary()
        while self.accept('*'):
            result = result * self.unary()
        return result

    def unary(self) -> MultiPoly:
        if self.accept('-'):
            return -self.unary()
        if self.accept('+'):
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.accept('^', '**'):
            return base ** self.expect_int()
        return base

    def atom(self) -> MultiPoly:
        token = self.current
        if token.kind == 'INT':
            self.pos += 1
            value = Fraction(int(token.text))
            if self.accept('/'):
                denominator_token = self.current
                denominator = self.expect_int()
                if denominator == 0:
                    raise self.error("Zero denominator", denominator_token)
                value = value / denominator
            return MultiPoly.constant(value, self.varset)
        if token.kind == 'NAME':
            self.pos += 1
            if token.text not in self.varset:
                raise self.error(f"Unknown variable '{token.text}'", token)
            return MultiPoly.variable(token.text, self.varset)
        if self.accept('('):
            inner = self.expr()
            if not self.accept(')'):
                raise self.error("Expected ')'")
            return inner
        if token.kind == 'END':
            raise self.error("Unexpected end of input")
        raise self.error(f"Unexpected '{token.text}'")


def parse_poly(text: str, varset: Optional[VarSet] = None) -> MultiPoly:
    """
    Parse polynomial text into a MultiPoly.

    Args:
        text: Polynomial in the canonical syntax
        varset: Variable set to parse into; inferred from the names when omitted

    Returns:
        The parsed polynomial

    Raises:
        ParseError: On a syntax error or an unknown name (exit code 2)
    """
    tokens = tokenize(text)
    if varset is None:
        name_tokens = [tok for tok in tokens if tok.kind == 'NAME']
        varset = infer_varset(tok.text for tok in name_tokens)
        if varset is None:
            known = POINT_NAMES + PLUECKER_NAMES + PARAMETER.names
            unknown = [tok for tok in name_tokens if tok.text not in known]
            if unknown:
                bad = unknown[0]
                raise ParseError(f"Unknown variable '{bad.text}'", text, bad.line, bad.column)
            bad = next(tok for tok in name_tokens if tok.text in PARAMETER.names)
            raise ParseError("Parameter 't' cannot be mixed with point or Pluecker variables",
                             text, bad.line, bad.column)
    return _Parser(text, tokens, varset).parse()


def parse_form(text: str) -> MultiPoly:
    """
    Parse a form in the Pluecker variables.

    Raises:
        ParseError: On a syntax error
        VarSetMismatch: If the text uses point or parameter variables
    """
    poly = parse_poly(text)
    if poly.varset != PLUECKER:
        raise VarSetMismatch(f"Expected a form in p01..p23, got variables {', '.join(poly.variables())}")
    return poly
