"""Canonical text form for polynomials: rendering and parsing.

Grammar:

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' integer)?
    base     := rational | variable | '(' expr ')'
    rational := integer ('/' positive-integer)?

Whitespace is insignificant.  Negative powers are accepted only on declared
divisor variables.  Rendering sorts terms by the active monomial order and
writes coefficients as "num/den" (denominator omitted when 1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .ring import LaurentPolynomial, MonomialOrder, RingError


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def default_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]


def render_polynomial(p: LaurentPolynomial,
                      names: Optional[Sequence[str]] = None,
                      order: Optional[MonomialOrder] = None) -> str:
    if names is None:
        names = default_names(p.nvars)
    if order is None:
        order = MonomialOrder()
    if p.is_zero():
        return "0"
    pieces = []
    for exps, coeff in order.sorted_terms(p):
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps) if e != 0)
        c = abs(coeff)
        cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        if not mono:
            body = cs
        elif c == 1:
            body = mono
        else:
            body = f"{cs}*{mono}"
        sign = "-" if coeff < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None, self.pos
        ch = self.text[self.pos]
        if ch.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("NUM", self.text[self.pos:j]), self.pos
        if ch.isalpha() or ch == "_":
            j = self.pos
            while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
                j += 1
            return ("NAME", self.text[self.pos:j]), self.pos
        if ch in "+-*^()/":
            return (ch, ch), self.pos
        raise ParseError(f"unexpected character {ch!r}", self.pos)

    def next(self):
        tok, pos = self.peek()
        if tok is not None:
            self.pos = pos + len(tok[1])
        return tok, pos


class _Parser:
    def __init__(self, text: str, names: Sequence[str], divisor: frozenset):
        self.toks = _Tokenizer(text)
        self.names = list(names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.divisor = divisor
        self.nvars = len(self.names)

    def parse(self) -> LaurentPolynomial:
        p = self.expr()
        tok, pos = self.toks.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", pos)
        return p

    def expr(self) -> LaurentPolynomial:
        tok, _ = self.toks.peek()
        sign = 1
        if tok is not None and tok[0] in "+-":
            self.toks.next()
            sign = -1 if tok[0] == "-" else 1
        result = self.term() * sign
        while True:
            tok, _ = self.toks.peek()
            if tok is None or tok[0] not in "+-":
                return result
            self.toks.next()
            t = self.term()
            result = result + (t if tok[0] == "+" else -t)

    def term(self) -> LaurentPolynomial:
        result = self.factor()
        while True:
            tok, _ = self.toks.peek()
            if tok is None or tok[0] != "*":
                return result
            self.toks.next()
            result = result * self.factor()

    def factor(self) -> LaurentPolynomial:
        base, base_kind = self.base()
        tok, _ = self.toks.peek()
        if tok is None or tok[0] != "^":
            return base
        self.toks.next()
        k = self.integer()
        if k < 0:
            if base_kind == "rational":
                c = next(iter(base.terms.values()))
                if c == 0:
                    raise ParseError("zero to a negative power", self.toks.pos)
                return LaurentPolynomial.constant(self.nvars, c ** k, self.divisor)
            if base_kind != "divisor-variable":
                raise ParseError("negative power on non-divisor variable",
                                 self.toks.pos)
            exps = next(iter(base.terms))
            i = exps.index(1)
            new = tuple(k if j == i else 0 for j in range(self.nvars))
            return LaurentPolynomial.monomial(self.nvars, new, 1, self.divisor)
        return base ** k

    def integer(self) -> int:
        tok, pos = self.toks.next()
        sign = 1
        if tok is not None and tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok, pos = self.toks.next()
        if tok is None or tok[0] != "NUM":
            raise ParseError("expected integer exponent", pos)
        return sign * int(tok[1])

    def base(self) -> tuple[LaurentPolynomial, str]:
        tok, pos = self.toks.next()
        if tok is None:
            raise ParseError("unexpected end of input", pos)
        kind, text = tok
        if kind == "NUM":
            num = int(text)
            nxt, npos = self.toks.peek()
            if nxt is not None and nxt[0] == "/":
                self.toks.next()
                dtok, dpos = self.toks.next()
                if dtok is None or dtok[0] != "NUM" or int(dtok[1]) == 0:
                    raise ParseError("expected positive denominator", dpos)
                c = Fraction(num, int(dtok[1]))
            else:
                c = Fraction(num)
            return LaurentPolynomial.constant(self.nvars, c, self.divisor), "rational"
        if kind == "NAME":
            if text not in self.index:
                raise ParseError(f"undeclared variable {text!r}", pos)
            i = self.index[text]
            var = LaurentPolynomial.variable(self.nvars, i, self.divisor)
            return var, ("divisor-variable" if i in self.divisor else "variable")
        if kind == "(":
            p = self.expr()
            close, cpos = self.toks.next()
            if close is None or close[0] != ")":
                raise ParseError("expected ')'", cpos)
            return p, "expr"
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_polynomial(text: str, names: Sequence[str],
                     divisor_names: Sequence[str] = ()) -> LaurentPolynomial:
    """Parse `text` into a polynomial over the declared variables.

    `divisor_names` lists the variables allowed to carry negative exponents;
    they must be a subset of `names`.
    """
    if not text.strip():
        raise ParseError("empty input", 0)
    names = list(names)
    for d in divisor_names:
        if d not in names:
            raise RingError(f"divisor variable {d!r} is not declared")
    divisor = frozenset(names.index(d) for d in divisor_names)
    return _Parser(text, names, divisor).parse()


def infer_variables(text: str) -> list[str]:
    """Variable names appearing in an expression, sorted."""
    toks = _Tokenizer(text)
    seen = set()
    while True:
        tok, _ = toks.next()
        if tok is None:
            return sorted(seen)
        if tok[0] == "NAME":
            seen.add(tok[1])
