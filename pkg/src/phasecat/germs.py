"""Polynomial germs in up to three variables, with a small parser.

Terms map exponent tuples to rational coefficients; the constant term must
vanish (these are germs of functions vanishing at the origin).  The parser
is a recursive-descent reader for expressions over x, y, z with +, -, *,
^ and parenthesized subexpressions; coefficients may be integers or
rationals written p/q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError

MAX_VARIABLES = 3
VAR_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class PolyGerm:
    variable_count: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        if not 1 <= self.variable_count <= MAX_VARIABLES:
            raise ValidationError(
                f"variable count must be 1..{MAX_VARIABLES}")
        canon = {}
        for exps, coeff in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.variable_count:
                raise ValidationError("exponent tuple length mismatch")
            if any(e < 0 for e in exps):
                raise ValidationError("negative exponent")
            canon[exps] = canon.get(exps, Fraction(0)) + Fraction(coeff)
        canon = {e: c for e, c in sorted(canon.items()) if c != 0}
        zero = (0,) * self.variable_count
        if zero in canon:
            raise ValidationError("nonzero constant term: not a germ "
                                  "vanishing at 0")
        object.__setattr__(self, "terms", tuple(canon.items()))

    @property
    def term_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.terms)

    def max_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def derivative(self, var: int) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms:
            if exps[var] == 0:
                continue
            e = list(exps)
            e[var] -= 1
            out[tuple(e)] = out.get(tuple(e), Fraction(0)) \
                + coeff * exps[var]
        return {e: c for e, c in out.items() if c != 0}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms:
            factors = []
            if abs(coeff) != 1 or not any(exps):
                factors.append(str(coeff))
            for v, e in enumerate(exps):
                if e == 1:
                    factors.append(VAR_NAMES[v])
                elif e > 1:
                    factors.append(f"{VAR_NAMES[v]}^{e}")
            mono = "*".join(factors) or "1"
            if coeff < 0 and factors and factors[0] == str(coeff):
                parts.append(mono)
            elif coeff < 0:
                parts.append(f"-{mono}")
            else:
                parts.append(mono)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text


class ParseError(ValidationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(\d+|[xyz]|[-+*^()/])")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                bad_at = len(text) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r}",
                                 bad_at)
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def here(self) -> int:
        return (self.tokens[self.i][1] if self.i < len(self.tokens)
                else len(self.text))

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok[0]

    def expr(self) -> dict[tuple[int, int, int], Fraction]:
        sign = Fraction(1)
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        total = _scale(self.term(), sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            total = _add(total, _scale(t, Fraction(-1 if op == "-" else 1)))
        return total

    def term(self) -> dict[tuple[int, int, int], Fraction]:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = _mul(out, self.factor())
        return out

    def factor(self) -> dict[tuple[int, int, int], Fraction]:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            pos = self.here()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.peek()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be an integer", pos)
            self.take()
            if neg:
                raise ParseError("negative exponent", pos)
            power = int(tok)
            out = {(0, 0, 0): Fraction(1)}
            for _ in range(power):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> dict[tuple[int, int, int], Fraction]:
        tok = self.peek()
        pos = self.here()
        if tok is None:
            raise ParseError("unexpected end of expression", pos)
        if tok == "(":
            self.take()
            inner = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.here())
            self.take()
            return inner
        if tok in VAR_NAMES:
            self.take()
            exps = [0, 0, 0]
            exps[VAR_NAMES.index(tok)] = 1
            return {tuple(exps): Fraction(1)}
        if tok.isdigit():
            self.take()
            num = int(tok)
            if self.peek() == "/":
                self.take()
                den_tok = self.peek()
                if den_tok is None or not den_tok.isdigit():
                    raise ParseError("expected denominator", self.here())
                self.take()
                return {(0, 0, 0): Fraction(num, int(den_tok))}
            return {(0, 0, 0): Fraction(num)}
        raise ParseError(f"unexpected token {tok!r}", pos)


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def _scale(a, s: Fraction):
    return {e: c * s for e, c in a.items() if c * s != 0}


def _mul(a, b):
    out: dict[tuple[int, int, int], Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def parse_germ(text: str) -> PolyGerm:
    """Parse an expression over x, y, z into a PolyGerm.

    Rejects unknown characters, negative exponents and a nonzero constant
    term, reporting the offending position where applicable.
    """
    parser = _Parser(text)
    terms = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.peek()!r}", parser.here())
    used = [v for v in range(MAX_VARIABLES)
            if any(e[v] for e in terms)]
    nvars = (max(used) + 1) if used else 1
    trimmed = {e[:nvars]: c for e, c in terms.items()}
    return PolyGerm(nvars, tuple(trimmed.items()))
