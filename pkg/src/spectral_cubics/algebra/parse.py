"""Polynomial text grammar 多项式文本语法

poly   := term (('+'|'-') term)*
term   := coeff ('*' factor)* | factor ('*' factor)*
factor := var ('^' uint)?
coeff  := int ('/' uint)?

A leading sign is accepted before the first term. Errors carry line and column.
首项前允许符号。错误信息包含行号和列号。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PolySyntaxError
from .poly import Monomial, RatPoly


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "var" | "op" | "end"
    text: str
    line: int
    column: int


def _tokenize(text: str, variables: Sequence[str]) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in variables:
                raise PolySyntaxError(f"unknown variable '{name}'", line, col)
            tokens.append(_Token("var", name, line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^":
            tokens.append(_Token("op", ch, line, col))
            i += 1
            col += 1
            continue
        raise PolySyntaxError(f"unexpected character '{ch}'", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], variables: Sequence[str]):
        self.tokens = tokens
        self.pos = 0
        self.variables = list(variables)

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _fail(self, message: str) -> PolySyntaxError:
        tok = self.current
        found = "end of input" if tok.kind == "end" else f"'{tok.text}'"
        return PolySyntaxError(f"{message}, found {found}", tok.line, tok.column)

    def _accept(self, kind: str, text: str | None = None) -> _Token | None:
        tok = self.current
        if tok.kind == kind and (text is None or tok.text == text):
            self.pos += 1
            return tok
        return None

    def _uint(self) -> int:
        tok = self._accept("int")
        if tok is None:
            raise self._fail("expected an unsigned integer")
        return int(tok.text)

    def _factor(self, exps: list[int]) -> None:
        tok = self._accept("var")
        if tok is None:
            raise self._fail("expected a variable")
        power = 1
        if self._accept("op", "^"):
            power = self._uint()
        exps[self.variables.index(tok.text)] += power

    def _term(self) -> tuple[Monomial, Fraction]:
        exps = [0] * len(self.variables)
        coeff = Fraction(1)
        if self.current.kind == "int":
            num = self._uint()
            den = 1
            if self._accept("op", "/"):
                den = self._uint()
                if den == 0:
                    raise self._fail("zero denominator")
            coeff = Fraction(num, den)
            while self._accept("op", "*"):
                self._factor(exps)
        elif self.current.kind == "var":
            self._factor(exps)
            while self._accept("op", "*"):
                self._factor(exps)
        else:
            raise self._fail("expected a term")
        return tuple(exps), coeff

    def parse(self) -> dict[Monomial, Fraction]:
        terms: dict[Monomial, Fraction] = {}
        sign = Fraction(1)
        if self._accept("op", "-"):
            sign = Fraction(-1)
        else:
            self._accept("op", "+")
        while True:
            monom, coeff = self._term()
            terms[monom] = terms.get(monom, Fraction(0)) + sign * coeff
            if self._accept("op", "+"):
                sign = Fraction(1)
            elif self._accept("op", "-"):
                sign = Fraction(-1)
            elif self.current.kind == "end":
                break
            else:
                raise self._fail("expected '+', '-' or end of polynomial")
        return terms


def parse_poly(text: str, variables: Sequence[str]) -> RatPoly:
    """Parse polynomial text over an ordered variable list
    在有序变量表上解析多项式文本

    Args:
        text: Polynomial text 多项式文本
        variables: Declared variables 声明的变量

    Returns:
        Parsed polynomial 解析结果

    Raises:
        PolySyntaxError: With 1-based line and column 带行列号的语法错误
    """
    if not text.strip():
        raise PolySyntaxError("empty polynomial", 1, 1)
    parser = _Parser(_tokenize(text, variables), variables)
    return RatPoly.from_dict(parser.parse(), variables)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: RatPoly) -> str:
    """Canonical text: terms by descending degree, then lexicographically descending exponents
    规范文本：按次数降序，再按指数字典序降序
    """
    terms = p.terms()
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    parts: list[str] = []
    for i, (monom, coeff) in enumerate(ordered):
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(p.variables, monom)
            if e
        ]
        magnitude = abs(coeff)
        if not factors:
            body = _format_coeff(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(magnitude), *factors])
        if i == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)
