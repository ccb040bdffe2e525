"""Parser for the polynomial text grammar.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('+' | '-') factor | power
    power   := atom (('^' | '**') integer)?
    atom    := number | symbol | '(' expr ')'
    number  := integer | decimal | integer '/' integer   (read as an exact fraction)
    symbol  := 'q' | 'p'             when ndof == 1
             | 'q' digit+ | 'p' digit+

Operator polynomials additionally accept ``lq``, ``lp`` (with the same suffix rule), ``hbar``
and ``i``. Their products are taken in the order written and normal ordered, so ``lp*q`` parses
to ``q*lp - i``.

Rendering lives on the polynomial classes; parse(render(f)) == f for both kinds.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Generic, NamedTuple, TypeVar

from model.algebra.classical import ClassicalPolynomial
from model.algebra.coefficients import ComplexRational
from model.algebra.errors import UnsupportedInputError
from model.algebra.monomials import Monomial, PhaseIndex, PhaseKind
from model.algebra.operators import AlgebraContext, OperatorPolynomial

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))")
_CLASSICAL_SYMBOL = re.compile(r"(?P<kind>q|p)(?P<dof>\d*)")
_OPERATOR_SYMBOL = re.compile(r"(?P<kind>lq|lp|q|p)(?P<dof>\d*)")

P = TypeVar("P", ClassicalPolynomial, OperatorPolynomial)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match:
            raise UnsupportedInputError(f"Unexpected character {text[position:].lstrip()[:1]!r} at column {position + 1}")
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    return tokens


def _phase_index(token: Token, pattern: re.Pattern, ndof: int, hint: str) -> PhaseIndex:
    match = pattern.fullmatch(token.text)
    if not match:
        raise UnsupportedInputError(f"Unknown symbol {token.text!r} at column {token.position + 1}; {hint}")
    kind = PhaseKind(match.group("kind"))
    if match.group("dof"):
        dof = int(match.group("dof"))
    elif ndof == 1:
        dof = 0
    else:
        raise UnsupportedInputError(f"Symbol {token.text!r} needs a degree-of-freedom suffix when ndof = {ndof}")
    if dof >= ndof:
        raise UnsupportedInputError(f"Symbol {token.text!r} is outside ndof = {ndof}")
    return PhaseIndex(kind, dof)


class _ClassicalBuilder:
    def __init__(self, ndof: int):
        self.ndof = ndof

    def number(self, value: Fraction) -> ClassicalPolynomial:
        return ClassicalPolynomial.constant(value, self.ndof)

    def symbol(self, token: Token) -> ClassicalPolynomial:
        index = _phase_index(token, _CLASSICAL_SYMBOL, self.ndof,
                             "only polynomials in q and p are supported")
        return ClassicalPolynomial.variable(index, self.ndof)

    def divide(self, left: ClassicalPolynomial, right: ClassicalPolynomial) -> ClassicalPolynomial:
        return left / right


class _OperatorBuilder:
    def __init__(self, context: AlgebraContext):
        self.context = context

    def number(self, value: Fraction) -> OperatorPolynomial:
        return OperatorPolynomial.constant(self.context, value)

    def symbol(self, token: Token) -> OperatorPolynomial:
        if token.text == "i":
            return OperatorPolynomial.constant(self.context, ComplexRational.i())
        if token.text == "hbar":
            return OperatorPolynomial.hbar(self.context)
        index = _phase_index(token, _OPERATOR_SYMBOL, self.context.ndof,
                             "operators are polynomials in q, p, lq, lp, hbar and i")
        return OperatorPolynomial.generator(self.context, index)

    def divide(self, left: OperatorPolynomial, right: OperatorPolynomial) -> OperatorPolynomial:
        identity = Monomial.identity(self.context.ndof)
        coefficient = right.terms.get(identity)
        if (set(right.terms) != {identity} or set(coefficient.terms) != {0}
                or not coefficient.component(0).is_real()):
            raise UnsupportedInputError("Division is only defined by a nonzero real constant")
        return left * (1 / coefficient.component(0).re)


class _Parser(Generic[P]):
    def __init__(self, text: str, builder: _ClassicalBuilder | _OperatorBuilder):
        self.text = text
        self.builder = builder
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise UnsupportedInputError(f"Unexpected end of input in {self.text!r}")
        self.index += 1
        return token

    def expect(self, text: str) -> None:
        token = self.take()
        if token.text != text:
            raise UnsupportedInputError(f"Expected {text!r} at column {token.position + 1}, found {token.text!r}")

    def parse(self) -> P:
        if not self.tokens:
            raise UnsupportedInputError("Empty polynomial")
        result = self.expr()
        if self.peek() is not None:
            token = self.peek()
            raise UnsupportedInputError(f"Unexpected {token.text!r} at column {token.position + 1}")
        return result

    def expr(self) -> P:
        result = self.term()
        while self.peek() is not None and self.peek().text in "+-":
            op = self.take().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> P:
        result = self.factor()
        while self.peek() is not None and self.peek().text in ("*", "/"):
            op = self.take().text
            right = self.factor()
            result = result * right if op == "*" else self.builder.divide(result, right)
        return result

    def factor(self) -> P:
        token = self.peek()
        if token is not None and token.text in "+-":
            self.take()
            inner = self.factor()
            return -inner if token.text == "-" else inner
        return self.power()

    def power(self) -> P:
        base = self.atom()
        token = self.peek()
        if token is not None and token.text in ("^", "**"):
            self.take()
            exponent = self.take()
            if exponent.kind != "number" or not exponent.text.isdigit():
                raise UnsupportedInputError(
                    f"Exponent at column {exponent.position + 1} must be a non-negative integer, found {exponent.text!r}")
            return base ** int(exponent.text)
        return base

    def atom(self) -> P:
        token = self.take()
        if token.kind == "number":
            return self.builder.number(Fraction(token.text))
        if token.kind == "name":
            return self.builder.symbol(token)
        if token.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise UnsupportedInputError(f"Unexpected {token.text!r} at column {token.position + 1}")


def parse_classical(text: str, ndof: int = 1) -> ClassicalPolynomial:
    """Parse a commuting polynomial in q, p (or q0.., p0..).

    Raises:
        UnsupportedInputError: For unknown symbols, non-integer powers, division by a
            non-constant or malformed input.
    """
    return _Parser(text, _ClassicalBuilder(ndof)).parse()


def parse_operator(text: str, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """Parse an operator polynomial and normal order it.

    Raises:
        UnsupportedInputError: For unknown symbols, non-integer powers, division by anything but a
            nonzero real constant, or malformed input.
        DegreeOverflowError: If a product exceeds the context's degree cap.
    """
    return _Parser(text, _OperatorBuilder(context or AlgebraContext())).parse()
