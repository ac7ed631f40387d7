"""Plain-text polynomials: ``y^5 - x^2 - 5*y^4*x^-1``.

Grammar (whitespace is ignored, ``*`` may be omitted between factors)::

    expr   := term (("+" | "-") term)*
    term   := ["+" | "-"] factor ("*"? factor)*
    factor := atom ("^" int)?
    atom   := number ("/" number)? | name | "(" expr ")"
    int    := ["-"] digits | "(" ["-"] digits ")"
"""
import re

from .errors import InputParse
from .exact import BiLaurent

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text):
    text = text.replace("−", "-")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym is not None and not sym.isspace():
            out.append(("sym", sym))
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = {names[0]: BiLaurent.x(), names[1]: BiLaurent.y()}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, sym):
        tok = self.take()
        if tok != ("sym", sym):
            raise InputParse(f"expected {sym!r}, found {tok[1]!r}")

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise InputParse(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            sign = self.take()[1]
            rhs = self.term()
            value = value + rhs if sign == "+" else value - rhs
        return value

    def term(self):
        negate = False
        while self.peek() in (("sym", "+"), ("sym", "-")):
            negate ^= self.take()[1] == "-"
        value = self.factor()
        while True:
            tok = self.peek()
            if tok == ("sym", "*"):
                self.take()
                value = value * self.factor()
            elif tok[0] in ("num", "name") or tok == ("sym", "("):
                value = value * self.factor()
            else:
                break
        return -value if negate else value

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            exponent = self.integer()
            try:
                base = base ** exponent
            except ValueError as exc:
                raise InputParse(str(exc)) from exc
        return base

    def integer(self):
        paren = self.peek() == ("sym", "(")
        if paren:
            self.take()
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        tok = self.take()
        if tok[0] != "num":
            raise InputParse("expected an integer exponent")
        if paren:
            self.expect(")")
        return sign * tok[1]

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            if self.peek() == ("sym", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    raise InputParse("bad rational coefficient")
                return BiLaurent.const(tok[1]).scale(f"1/{den[1]}")
            return BiLaurent.const(tok[1])
        if tok[0] == "name":
            if tok[1] not in self.vars:
                raise InputParse(f"unknown variable {tok[1]!r}")
            return self.vars[tok[1]]
        if tok == ("sym", "("):
            value = self.expr()
            self.expect(")")
            return value
        raise InputParse(f"unexpected {tok[1]!r}")


def parse_poly(text, names=("x", "y")):
    """Parse ``text`` into a BiLaurent; ``names`` gives the two variable names."""
    return _Parser(text, names).parse()
