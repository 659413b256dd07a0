"""
Binomial expression parser

Reads expressions such as ``x1^3*x2^2 - x3^5*x4`` or ``x1*x2 + 3/2*x3^2``
into raw exponent vectors and the coefficient rho of x^A - rho x^B.

Grammar (whitespace-insensitive):

    expr   := term ('+' | '-') term
    term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor := ident ['^' uint]
    coeff  := integer | decimal | integer '/' integer

Variables named ``x<k>`` occupy slot k-1; other names take slots in order of
first appearance unless an explicit variable order is supplied.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from monoforge.core.binomial import ExponentVector
from monoforge.core.errors import ExpressionSyntaxError, NotABinomial, ZeroCoefficient

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<number>\d+(?:\.\d+)?(?:/\d+)?)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<op>[-+*^])
    """,
    re.VERBOSE,
)

INDEXED_NAME = re.compile(r"x([1-9][0-9]*)")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class ParsedBinomial:
    variables: Tuple[str, ...]
    a_raw: ExponentVector
    b_raw: ExponentVector
    rho_text: str = "1"

    @property
    def rho(self) -> Fraction:
        return Fraction(self.rho_text)

    @property
    def n(self) -> int:
        return len(self.variables)


@dataclass
class _Term:
    coefficient: Fraction
    powers: Dict[str, int]
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", position)
        if match.lastgroup != 'space':
            yield Token(match.lastgroup, match.group(), position)
        position = match.end()
    yield Token('end', '', len(text))


class BinomialParser:
    """Recursive-descent parser over the token stream of one expression."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.index = 0
        self.names: List[Tuple[str, int]] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            found = self.current.text or 'end of input'
            raise ExpressionSyntaxError(f"expected {what}, found {found!r}", self.current.position)
        return self.advance()

    def parse_terms(self) -> List[Tuple[int, _Term]]:
        """All signed terms of the expression, sign +1 or -1."""
        terms = [(1, self.parse_term())]
        while self.current.kind == 'op' and self.current.text in '+-':
            sign = 1 if self.advance().text == '+' else -1
            terms.append((sign, self.parse_term()))
        if self.current.kind != 'end':
            raise ExpressionSyntaxError(f"unexpected {self.current.text!r}", self.current.position)
        return terms

    def parse_term(self) -> _Term:
        start = self.current.position
        coefficient = Fraction(1)
        powers: Dict[str, int] = {}

        if self.current.kind == 'number':
            token = self.advance()
            coefficient = self._coefficient(token)
            if coefficient == 0:
                raise ZeroCoefficient("coefficient must be non-zero", token.position)
            if not self._at_op('*'):
                return _Term(coefficient, powers, start)
            self.advance()

        self.parse_factor(powers)
        while self._at_op('*'):
            self.advance()
            self.parse_factor(powers)
        return _Term(coefficient, powers, start)

    @staticmethod
    def _coefficient(token: Token) -> Fraction:
        numerator, _, denominator = token.text.partition('/')
        if denominator and int(denominator) == 0:
            raise ExpressionSyntaxError("zero denominator in coefficient", token.position)
        value = Fraction(numerator)
        return value / int(denominator) if denominator else value

    def parse_factor(self, powers: Dict[str, int]) -> None:
        token = self.expect('ident', 'a variable')
        exponent = 1
        if self._at_op('^'):
            self.advance()
            number = self.expect('number', 'an exponent')
            if not number.text.isdigit() or int(number.text) == 0:
                raise ExpressionSyntaxError(
                    f"exponent must be a positive integer, found {number.text!r}", number.position
                )
            exponent = int(number.text)
        # repeated variables in one term multiply
        powers[token.text] = powers.get(token.text, 0) + exponent
        self.names.append((token.text, token.position))

    def _at_op(self, symbol: str) -> bool:
        return self.current.kind == 'op' and self.current.text == symbol


def _assign_slots(
    names: Sequence[Tuple[str, int]], variable_order: Optional[Sequence[str]]
) -> Tuple[str, ...]:
    if variable_order is not None:
        known = set(variable_order)
        for name, position in names:
            if name not in known:
                raise ExpressionSyntaxError(f"unknown variable {name!r}", position)
        return tuple(variable_order)

    seen = list(dict.fromkeys(name for name, _ in names))
    indexed = {name: int(m.group(1)) for name in seen if (m := INDEXED_NAME.fullmatch(name))}
    if not indexed:
        return tuple(seen)

    width = max(indexed.values())
    slots: List[Optional[str]] = [None] * width
    for name, k in indexed.items():
        slots[k - 1] = name
    free = [k for k, name in enumerate(slots) if name is None]
    for name in (name for name in seen if name not in indexed):
        if free:
            slots[free.pop(0)] = name
        else:
            slots.append(name)
    return tuple(name if name is not None else f"x{k + 1}" for k, name in enumerate(slots))


def _exponents(powers: Dict[str, int], variables: Sequence[str]) -> ExponentVector:
    return tuple(powers.get(name, 0) for name in variables)


def _binomial(
    text: str, terms: List[Tuple[int, _Term]], variables: Tuple[str, ...]
) -> ParsedBinomial:
    if len(terms) != 2:
        position = terms[2][1].position if len(terms) > 2 else len(text)
        raise NotABinomial(f"expected exactly two terms, found {len(terms)}", position)
    (_, first), (sign, second) = terms
    rho = -sign * second.coefficient / first.coefficient
    return ParsedBinomial(
        variables,
        _exponents(first.powers, variables),
        _exponents(second.powers, variables),
        str(rho),
    )


def parse_system(
    texts: Sequence[str], variable_order: Optional[Sequence[str]] = None
) -> List[ParsedBinomial]:
    """Parse several expressions into one shared variable space."""
    parsed = []
    names: List[Tuple[str, int]] = []
    for text in texts:
        parser = BinomialParser(text)
        parsed.append((text, parser.parse_terms()))
        names.extend(parser.names)

    variables = _assign_slots(names, variable_order)
    logger.debug(f"Variables: {', '.join(variables)}")
    return [_binomial(text, terms, variables) for text, terms in parsed]


def parse(text: str, variable_order: Optional[Sequence[str]] = None) -> ParsedBinomial:
    """
    Parse one binomial expression.

    Raises:
        ExpressionSyntaxError: malformed input, with the offending position
        NotABinomial: the expression does not have exactly two terms
        ZeroCoefficient: a term has coefficient 0
    """
    return parse_system([text], variable_order)[0]


def render_monomial(exponents: Sequence[int], variables: Sequence[str]) -> str:
    factors = [
        name if power == 1 else f"{name}^{power}"
        for name, power in zip(variables, exponents)
        if power
    ]
    return "*".join(factors) if factors else "1"


def render_bracket(a: Sequence[int], b: Sequence[int], rho: Fraction, variables: Sequence[str]) -> str:
    """``x^A - rho x^B`` with the sign folded into the operator."""
    left = render_monomial(a, variables)
    right = render_monomial(b, variables)
    operator = '-' if rho > 0 else '+'
    magnitude = abs(rho)
    if magnitude != 1:
        right = str(magnitude) if right == "1" else f"{magnitude}*{right}"
    return f"{left} {operator} {right}"


def render(parsed: ParsedBinomial) -> str:
    """Text that parses back to ``parsed`` under ``parsed.variables``."""
    return render_bracket(parsed.a_raw, parsed.b_raw, parsed.rho, parsed.variables)
