"""Parsers for polynomial expressions and problem files.

Expression grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER | VARIABLE | '(' expr ')'

Variables are subscripted names like ``x_1``, ``y_6``, ``z_4`` (the
underscore is mandatory); which letters are legal depends on the layout.
``a/b`` is a rational literal, accepted only in characteristic 0.
Implicit multiplication is not allowed.  Every malformed input yields a
positioned diagnostic, never an unexplained crash.

Problem files are line oriented::

    # comment
    char 0
    n 3
    form x
    ideal:
    x_1*(x_3^2*x_2+x_3+1)
    x_3*(x_3^2*x_2+x_3+1)

The three headers may come in any order; generators follow ``ideal:``,
one per line (``;`` also separates generators on a single line).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, FieldError
from .poly import Layout, Polynomial, ProjLayout


class ParseError(ValueError):
    """Syntax error with a character offset into the parsed text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.message = message
        self.offset = offset


class ProblemError(ValueError):
    """Problem-file error with a line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line


_OPS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _OPS:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i + 1
            if j < n and text[j] == "_":
                j += 1
                k = j
                while k < n and text[k].isdigit():
                    k += 1
                if k > j:
                    tokens.append(("var", text[i:k], i))
                    i = k
                    continue
            raise ParseError(f"malformed variable near {text[i:i + 3]!r}", i)
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, layout: Layout, field: Field):
        self.text = text
        self.layout = layout
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def expr(self):
        f = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.unary()
        return f

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        f = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            f = f ** int(tok[1])
        return f

    def atom(self):
        kind, text, offset = self.take()
        nslots = self.layout.nslots
        if kind == "int":
            value = int(text)
            if self.peek()[0] == "/":
                slash = self.take()
                if self.field.characteristic != 0:
                    raise ParseError(
                        "rational coefficients require characteristic 0", slash[2])
                den = self.expect("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                return Polynomial.const(self.field, nslots,
                                        Fraction(value, int(den[1])))
            return Polynomial.const(self.field, nslots, value)
        if kind == "var":
            try:
                pos = self.layout.pos(text)
            except KeyError:
                raise ParseError(f"unknown variable {text!r}", offset) from None
            return Polynomial.var(self.field, nslots, pos)
        if kind == "(":
            f = self.expr()
            closing = self.take()
            if closing[0] != ")":
                raise ParseError("unbalanced parentheses", closing[2])
            return f
        if kind == "end":
            raise ParseError("unexpected end of input", offset)
        raise ParseError(f"unexpected {text!r}", offset)


def parse_polynomial(text: str, layout: Layout, field: Field) -> Polynomial:
    """Parse one polynomial expression against a layout's variable names."""
    return _Parser(text, layout, field).parse()


@dataclass(frozen=True)
class ProblemSpec:
    """A parsed problem: field, coordinate count and ideal generators.

    ``form`` is ``'x'`` for affine generators in x_1..x_n (to be
    homogenized) or ``'y'`` for generators already written in the pair
    variables y_1..y_{2n}.
    """

    field: Field
    n: int
    form: str
    generators: tuple
    layout: Layout


def parse_problem(text: str) -> ProblemSpec:
    headers = {}
    gen_texts = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not in_ideal:
            if line.lower() == "ideal:":
                in_ideal = True
                continue
            parts = line.split(None, 1)
            if len(parts) != 2 or parts[0] not in ("char", "n", "form"):
                raise ProblemError(f"expected a header, got {line!r}", lineno)
            key, value = parts
            if key in headers:
                raise ProblemError(f"duplicate header {key!r}", lineno)
            headers[key] = (value.strip(), lineno)
        else:
            for piece in line.split(";"):
                piece = piece.strip()
                if piece:
                    gen_texts.append((piece, lineno))

    for key in ("char", "n", "form"):
        if key not in headers:
            raise ProblemError(f"missing header {key!r}", 0)

    value, lineno = headers["char"]
    try:
        char = int(value)
    except ValueError:
        raise ProblemError(f"invalid characteristic {value!r}", lineno) from None
    try:
        field = Field(char)
    except FieldError as exc:
        raise ProblemError(str(exc), lineno) from None

    value, lineno = headers["n"]
    try:
        n = int(value)
    except ValueError:
        raise ProblemError(f"invalid coordinate count {value!r}", lineno) from None
    if n < 1:
        raise ProblemError("coordinate count must be at least 1", lineno)

    form, lineno = headers["form"]
    if form not in ("x", "y"):
        raise ProblemError(f"form must be 'x' or 'y', got {form!r}", lineno)

    if not in_ideal or not gen_texts:
        raise ProblemError("empty ideal (no generators after 'ideal:')", 0)

    layout = Layout.affine(n) if form == "x" else ProjLayout(n)
    gens = []
    for piece, lineno in gen_texts:
        try:
            g = parse_polynomial(piece, layout, field)
        except ParseError as exc:
            raise ProblemError(f"bad generator {piece!r}: {exc}", lineno) from None
        if form == "y":
            for pos in g.occurring_slots():
                if pos >= 2 * n:
                    raise ProblemError(
                        f"generator {piece!r} uses a z variable; "
                        "y-form generators may only use y_1..y_{2n}", lineno)
        gens.append(g)
    return ProblemSpec(field, n, form, tuple(gens), layout)
