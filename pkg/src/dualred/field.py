"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are `fractions.Fraction`; prime-field scalars are plain
ints in [0, p).  Field objects carry the arithmetic so that the layers
above never branch on the kind of field.
"""

from fractions import Fraction


class Field:
    """Common interface; instantiate via QQ or GF(p)."""

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return self.descriptor()


class RationalField(Field):
    char = 0

    def descriptor(self):
        return "Q"

    def of(self, a, b=None):
        return Fraction(a) if b is None else Fraction(a, b)

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return Fraction(1) / a

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def to_str(a):
        return str(a)


class PrimeField(Field):
    """F_p for a prime p < 2**31, so products of lifts fit in int64."""

    def __init__(self, p):
        if p < 2 or p >= 2**31:
            raise ValueError("prime out of range: %r" % p)
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError("%d is not prime" % p)
            d += 1
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def descriptor(self):
        return "F_%d" % self.p

    def of(self, a, b=None):
        if isinstance(a, Fraction):
            if b is not None:
                raise ValueError("mixed rational input")
            a, b = a.numerator, a.denominator
        v = a % self.p
        if b is not None:
            v = v * self.inv(b % self.p) % self.p
        return v

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self.descriptor())
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def to_str(a):
        return str(a)


QQ = RationalField()

_gf_cache = {}


def GF(p):
    """The prime field F_p, cached per characteristic."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_descriptor(text):
    """Parse 'Q', 'QQ', or 'F_p' / 'Fp' into a Field."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t.startswith("F_"):
        return GF(int(t[2:]))
    if t.startswith("F") and t[1:].isdigit():
        return GF(int(t[1:]))
    raise ValueError("unknown field descriptor %r" % text)
