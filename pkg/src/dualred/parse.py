"""Parser for the polynomial expression grammar used in session files.

  poly   := [sign] term ( sign term )*
  term   := factor ( '*' factor )*
  factor := coeff | var [ '^' nat ]
  coeff  := nat [ '/' nat ]
  var    := [a-zA-Z][a-zA-Z0-9_]*

Whitespace separates nothing semantically and is allowed anywhere between
tokens.  Errors carry 1-based line and column positions.
"""

import re

from .errors import SessionError

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<nat>\d+)
      | (?P<var>[a-zA-Z][a-zA-Z0-9_]*)
      | (?P<op>[-+*/^])
    """,
    re.VERBOSE,
)


def tokenize(text, line=1, col=1):
    """Yield (kind, value, line, col) triples; raises SessionError on junk."""
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SessionError("unexpected character %r" % text[pos], line, col)
        kind = m.lastgroup
        val = m.group()
        if kind != "ws":
            out.append((kind, val, line, col))
        for ch in val:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    return out


class _P:
    def __init__(self, tokens, ring, line, col):
        self.toks = tokens
        self.ring = ring
        self.i = 0
        self.end_line = line
        self.end_col = col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise SessionError("unexpected end of expression", self.end_line, self.end_col)
        self.i += 1
        return t

    def parse_poly(self):
        sign = 1
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        p = self.parse_term().scale(sign)
        while True:
            t = self.peek()
            if t is None or t[0] != "op" or t[1] not in "+-":
                break
            self.take()
            q = self.parse_term()
            p = p - q if t[1] == "-" else p + q
        return p

    def parse_term(self):
        p = self.parse_factor()
        while True:
            t = self.peek()
            if t is None or t[0] != "op" or t[1] != "*":
                break
            self.take()
            p = p * self.parse_factor()
        return p

    def parse_factor(self):
        kind, val, line, col = self.take()
        if kind == "nat":
            num = int(val)
            t = self.peek()
            if t and t[0] == "op" and t[1] == "/":
                self.take()
                k2, v2, l2, c2 = self.take()
                if k2 != "nat":
                    raise SessionError("expected denominator", l2, c2)
                den = int(v2)
                if den == 0:
                    raise SessionError("zero denominator", l2, c2)
                return self.ring.const(self.ring.field.of(num, den))
            return self.ring.const(num)
        if kind == "var":
            if val not in self.ring._index:
                raise SessionError("unknown variable %r" % val, line, col)
            p = self.ring.var(val)
            t = self.peek()
            if t and t[0] == "op" and t[1] == "^":
                self.take()
                k2, v2, l2, c2 = self.take()
                if k2 != "nat":
                    raise SessionError("expected exponent", l2, c2)
                p = p ** int(v2)
            return p
        raise SessionError("expected coefficient or variable, got %r" % val, line, col)


def parse_poly(text, ring, line=1, col=1):
    """Parse one polynomial in the given ring."""
    toks = tokenize(text, line, col)
    if not toks:
        raise SessionError("empty polynomial", line, col)
    p = _P(toks, ring, line, col)
    out = p.parse_poly()
    left = p.peek()
    if left is not None:
        raise SessionError("trailing input %r" % left[1], left[2], left[3])
    return out
