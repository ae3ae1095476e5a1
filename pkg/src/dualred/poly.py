"""Graded polynomial rings with positive integer weights.

Monomials are exponent tuples.  A polynomial stores its terms as a tuple
of (monomial, coefficient) pairs sorted strictly descending in the ring's
monomial order, with no zero coefficients; the leading term is terms[0].

Supported global orders:
  grevlex  - weighted degree first, ties by reverse lexicography on the
             exponent vector read from the last variable (the default;
             equals classic grevlex when all weights are 1)
  lex      - pure lexicography on the exponent vector
"""

from .errors import NonHomogeneousInput


def _grevlex_key(weights):
    def key(m):
        d = 0
        for a, w in zip(m, weights):
            d += a * w
        return (d, tuple(-a for a in reversed(m)))

    return key


def _lex_key(weights):
    def key(m):
        return m

    return key


_ORDERS = {"grevlex": _grevlex_key, "weighted-grevlex": _grevlex_key, "lex": _lex_key}


class PolyRing:
    """K[x_1..x_e] with weights w_i >= 1 and a global monomial order."""

    __slots__ = ("field", "names", "weights", "order", "key", "_index", "_mono_lists")

    def __init__(self, field, names, weights=None, order="grevlex"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if order not in _ORDERS:
            raise ValueError("unknown order %r" % order)
        self.field = field
        self.names = names
        self.weights = weights
        self.order = order
        self.key = _ORDERS[order](weights)
        self._index = {n: i for i, n in enumerate(names)}
        self._mono_lists = {}

    @property
    def nvars(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.weights == other.weights
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights, self.order))

    def __repr__(self):
        vs = ", ".join(
            n if w == 1 else "%s:%d" % (n, w) for n, w in zip(self.names, self.weights)
        )
        return "%s[%s]/%s" % (self.field.descriptor(), vs, self.order)

    def wdeg(self, mono):
        return sum(a * w for a, w in zip(mono, self.weights))

    def zero(self):
        return Poly(self, ())

    def const(self, c):
        c = self.field.of(c)
        if c == self.field.zero:
            return self.zero()
        return Poly(self, (((0,) * self.nvars, c),))

    def one(self):
        return self.const(1)

    def var(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, ((m, self.field.one),))

    def monomial(self, exps, c=1):
        exps = tuple(int(a) for a in exps)
        if len(exps) != self.nvars or any(a < 0 for a in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = self.field.of(c)
        if c == self.field.zero:
            return self.zero()
        return Poly(self, ((exps, c),))

    def from_terms(self, items):
        """Build a polynomial from (mono, coeff) pairs in any order."""
        acc = {}
        add = self.field.add
        zero = self.field.zero
        for m, c in items:
            if m in acc:
                acc[m] = add(acc[m], c)
            else:
                acc[m] = c
        terms = tuple(
            (m, acc[m])
            for m in sorted(acc, key=self.key, reverse=True)
            if acc[m] != zero
        )
        return Poly(self, terms)

    def monomials_of_weight(self, d):
        """All exponent tuples of weighted degree exactly d, cached."""
        if d < 0:
            return ()
        got = self._mono_lists.get(d)
        if got is None:
            got = tuple(_enum_monos(self.weights, 0, d))
            self._mono_lists[d] = got
        return got


def _enum_monos(weights, i, d):
    if i == len(weights):
        if d == 0:
            yield ()
        return
    if i == len(weights) - 1:
        if d % weights[i] == 0:
            yield (d // weights[i],)
        return
    w = weights[i]
    for a in range(d // w + 1):
        for rest in _enum_monos(weights, i + 1, d - a * w):
            yield (a,) + rest


def mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))

def mono_divides(m1, m2):
    """True when m1 divides m2 componentwise."""
    return all(a <= b for a, b in zip(m1, m2))

def mono_div(m1, m2):
    return tuple(a - b for a, b in zip(m1, m2))

def mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


class Poly:
    """Immutable polynomial over a PolyRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def lead(self):
        return self.terms[0]

    def lead_mono(self):
        return self.terms[0][0]

    def lead_coeff(self):
        return self.terms[0][1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.ring), self.terms))

    def __add__(self, other):
        return _merge(self, other, False)

    def __sub__(self, other):
        return _merge(self, other, True)

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def scale(self, c):
        K = self.ring.field
        c = K.of(c)
        if c == K.zero:
            return self.ring.zero()
        mul = K.mul
        return Poly(self.ring, tuple((m, mul(cc, c)) for m, cc in self.terms))

    def term_mul(self, mono, c):
        """Multiply by the single term c * x^mono."""
        K = self.ring.field
        if c == K.zero:
            return self.ring.zero()
        mul = K.mul
        return Poly(
            self.ring, tuple((mono_mul(m, mono), mul(cc, c)) for m, cc in self.terms)
        )

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        ring = self.ring
        K = ring.field
        acc = {}
        mul = K.mul
        add = K.add
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for m2, c2 in b:
            for m1, c1 in a:
                m = mono_mul(m1, m2)
                c = mul(c1, c2)
                if m in acc:
                    acc[m] = add(acc[m], c)
                else:
                    acc[m] = c
        terms = tuple(
            (m, acc[m]) for m in sorted(acc, key=ring.key, reverse=True) if acc[m] != K.zero
        )
        return Poly(ring, terms)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def wdeg(self):
        """Weighted degree of the leading term; None for 0."""
        if not self.terms:
            return None
        return self.ring.wdeg(self.terms[0][0])

    def homdeg(self):
        """The common weighted degree of all terms; None for 0.
        Raises NonHomogeneousInput when terms mix degrees."""
        if not self.terms:
            return None
        degs = {self.ring.wdeg(m) for m, _ in self.terms}
        if len(degs) != 1:
            raise NonHomogeneousInput("mixed degrees %s in %s" % (sorted(degs), self))
        return degs.pop()

    def is_homogeneous(self):
        if not self.terms:
            return True
        return len({self.ring.wdeg(m) for m, _ in self.terms}) == 1

    def substitute(self, target_ring, images):
        """Apply x_i -> images[i] (Poly over target_ring) multiplicatively."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        out = target_ring.zero()
        for m, c in self.terms:
            t = target_ring.const(_coerce_scalar(self.ring.field, target_ring.field, c))
            for i, a in enumerate(m):
                if a:
                    t = t * (images[i] ** a)
            out = out + t
        return out

    def __repr__(self):
        return poly_to_str(self)


def _coerce_scalar(src, dst, c):
    if src == dst:
        return c
    return dst.of(c)


def _merge(p, q, subtract):
    """Merge two sorted term tuples; the workhorse of addition."""
    ring = p.ring
    K = ring.field
    key = ring.key
    neg = K.neg
    addf = K.sub if subtract else K.add
    a, b = p.terms, q.terms
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = addf(ca, cb)
            if c != K.zero:
                out.append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append((ma, ca))
            i += 1
        else:
            out.append((mb, neg(cb) if subtract else cb))
            j += 1
    out.extend(a[i:])
    if subtract:
        out.extend((m, neg(c)) for m, c in b[j:])
    else:
        out.extend(b[j:])
    return Poly(ring, tuple(out))


def poly_to_str(p):
    """Render in the session grammar: explicit '*', '^' powers."""
    if not p.terms:
        return "0"
    ring = p.ring
    K = ring.field
    parts = []
    for m, c in p.terms:
        factors = []
        for name, a in zip(ring.names, m):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append("%s^%d" % (name, a))
        cs = K.to_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = cs + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
