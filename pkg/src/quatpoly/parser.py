"""Text form of quaternionic polynomials.

The grammar accepts sums of products of atoms, where an atom is a
rational number (``3``, ``3/2``), a basis letter ``i j k``, the
indeterminate ``x``, or a parenthesized subexpression; multiplication can
be written with ``*`` or by juxtaposition (``2i``, ``(3/2)i*x``), and
``^`` raises to a natural power.  Printing (format_qpoly in qpoly) and
parsing round-trip exactly.
"""

from fractions import Fraction

from .errors import PolyParseError
from .qpoly import QPoly, format_qpoly  # noqa: F401  (re-exported)

_ATOM_STARTERS = set("0123456789ijkx(")


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def number(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolyParseError("expected a number", position=start)
        return int(self.text[start:self.pos])

    def error(self, msg):
        raise PolyParseError(msg, position=self.pos)


def parse_poly(text, A):
    """Parse text into a QPoly over the algebra A."""
    toks = _Tokens(text)
    p = _expr(toks, A)
    if toks.peek() is not None:
        toks.error("unexpected trailing input")
    return p


def _expr(toks, A):
    out = None
    sign = 1
    ch = toks.peek()
    if ch == "-":
        toks.take()
        sign = -1
    elif ch == "+":
        toks.take()
    while True:
        term = _term(toks, A)
        term = term if sign == 1 else -term
        out = term if out is None else out + term
        ch = toks.peek()
        if ch == "+":
            toks.take()
            sign = 1
        elif ch == "-":
            toks.take()
            sign = -1
        else:
            return out


def _term(toks, A):
    out = _factor(toks, A)
    while True:
        ch = toks.peek()
        if ch == "*":
            toks.take()
            out = out * _factor(toks, A)
        elif ch is not None and ch in _ATOM_STARTERS:
            out = out * _factor(toks, A)
        else:
            return out


def _factor(toks, A):
    if toks.peek() == "-":
        toks.take()
        return -_factor(toks, A)
    base = _atom(toks, A)
    if toks.peek() == "^":
        toks.take()
        n = toks.number()
        return base ** n
    return base


def _atom(toks, A):
    ch = toks.peek()
    if ch is None:
        toks.error("unexpected end of input")
    if ch.isdigit():
        num = toks.number()
        if toks.peek() == "/":
            toks.take()
            den = toks.number()
            if den == 0:
                toks.error("zero denominator")
            return QPoly(A, [A.scalar(Fraction(num, den))])
        return QPoly(A, [A.scalar(num)])
    if ch == "i":
        toks.take()
        return QPoly(A, [A.i])
    if ch == "j":
        toks.take()
        return QPoly(A, [A.j])
    if ch == "k":
        toks.take()
        return QPoly(A, [A.k])
    if ch == "x":
        toks.take()
        return QPoly.x(A)
    if ch == "(":
        toks.take()
        inner = _expr(toks, A)
        if toks.peek() != ")":
            toks.error("expected ')'")
        toks.take()
        return inner
    toks.error("unexpected character %r" % ch)
