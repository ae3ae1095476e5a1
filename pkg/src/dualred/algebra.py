"""Graded algebra presentations S = K[x_1..x_e]/I and maps between them.

The ideal is given by homogeneous generators for positive variable
weights.  A presentation caches the reduced monic Groebner basis of its
ideal; quotient arithmetic is normal-form arithmetic against that basis.
"""

from itertools import combinations

from .errors import NonHomogeneousInput, PresentationsNotIsomorphic
from .groebner import ModuleGB
from .poly import Poly, PolyRing, mono_div, mono_divides


class AlgebraPresentation:
    """S = K[x]/I with I homogeneous; I may be empty (polynomial ring)."""

    def __init__(self, ring, ideal_gens=()):
        self.ring = ring
        gens = []
        for f in ideal_gens:
            if f.ring != ring:
                raise ValueError("ideal generator in the wrong ring")
            if f.is_zero():
                continue
            d = f.homdeg()
            if d == 0:
                raise ValueError("ideal generator of degree 0 makes S zero")
            gens.append(f)
        self.ideal_gens = tuple(gens)
        self._ideal_gb = None
        self._hilbert_cache = {}
        self._env = None

    @property
    def field(self):
        return self.ring.field

    def is_polynomial_ring(self):
        return not self.ideal_gens

    @property
    def ideal_gb(self):
        """Reduced monic Groebner basis of the ideal, cached."""
        if self._ideal_gb is None:
            if not self.ideal_gens:
                self._ideal_gb = ()
            else:
                bare = _bare(self.ring)
                gb = ModuleGB(
                    bare,
                    (0,),
                    [{0: f} for f in self.ideal_gens],
                    keep_reps=False,
                    want_syz=False,
                )
                self._ideal_gb = tuple(g[0][0] for g in gb.basis)
        return self._ideal_gb

    def nf(self, p):
        """Normal form of a polynomial modulo the ideal."""
        gb = self.ideal_gb
        if not gb or p.is_zero():
            return p
        ring = self.ring
        K = ring.field
        work = p
        out = ring.zero()
        while not work.is_zero():
            m, c = work.lead()
            red = None
            for g in gb:
                if mono_divides(g.lead_mono(), m):
                    red = g
                    break
            if red is None:
                lt = ring.monomial(m, c)
                out = out + lt
                work = work - lt
            else:
                t = K.div(c, red.lead_coeff())
                work = work - red.term_mul(mono_div(m, red.lead_mono()), t)
        return out

    def mul(self, p, q):
        return self.nf(p * q)

    def hilbert_dim(self, d):
        """dim_K S_d via standard monomials."""
        if d < 0:
            return 0
        got = self._hilbert_cache.get(d)
        if got is None:
            leads = [g.lead_mono() for g in self.ideal_gb]
            got = _count_standard(self.ring, leads, d)
            self._hilbert_cache[d] = got
        return got

    def hilbert(self, window):
        lo, hi = window
        return {d: self.hilbert_dim(d) for d in range(lo, hi + 1)}

    def krull_dim(self):
        """Krull dimension, read off the lead term ideal: the largest set
        of variables avoiding the support of every lead monomial."""
        leads = [g.lead_mono() for g in self.ideal_gb]
        supports = [frozenset(i for i, a in enumerate(m) if a) for m in leads]
        n = self.ring.nvars
        for size in range(n, -1, -1):
            for sigma in combinations(range(n), size):
                ss = set(sigma)
                if not any(sup <= ss for sup in supports):
                    return size
        return 0

    def is_finite_dimensional(self):
        """True iff dim_K S is finite: every variable has a pure power
        among the lead monomials."""
        leads = [g.lead_mono() for g in self.ideal_gb]
        for i in range(self.ring.nvars):
            if not any(
                m[i] > 0 and all(a == 0 for j, a in enumerate(m) if j != i)
                for m in leads
            ):
                return False
        return True

    def total_dim(self):
        """dim_K S for finite dimensional S, else None."""
        if not self.is_finite_dimensional():
            return None
        total = 0
        d = 0
        maxw = max(self.ring.weights, default=1)
        gap = 0
        while gap < maxw:
            h = self.hilbert_dim(d)
            total += h
            gap = gap + 1 if h == 0 else 0
            d += 1
        return total

    def descriptor(self):
        vs = ", ".join(
            n if w == 1 else "%s:%d" % (n, w)
            for n, w in zip(self.ring.names, self.ring.weights)
        )
        ideal = ", ".join(str(f) for f in self.ideal_gens)
        base = "%s[%s]" % (self.field.descriptor(), vs)
        return base if not ideal else "%s/(%s)" % (base, ideal)

    def __repr__(self):
        return self.descriptor()

    def with_order(self, order):
        """The same presentation over a ring with another monomial order."""
        ring2 = PolyRing(self.field, self.ring.names, self.ring.weights, order)
        gens2 = [ring2.from_terms(f.terms) for f in self.ideal_gens]
        return AlgebraPresentation(ring2, gens2)


_bare_cache = {}


def _bare(ring):
    got = _bare_cache.get(ring)
    if got is None:
        got = AlgebraPresentation(ring, ())
        _bare_cache[ring] = got
    return got


def _count_standard(ring, leads, d):
    monos = ring.monomials_of_weight(d)
    if not monos:
        return 0
    if not leads:
        return len(monos)
    count = 0
    for m in monos:
        if not any(mono_divides(l, m) for l in leads):
            count += 1
    return count


class AlgebraMap:
    """Degree-preserving K-algebra map S -> T given by variable images,
    checked to send the source ideal into the target ideal."""

    def __init__(self, source, target, images, check=True):
        if len(images) != source.ring.nvars:
            raise ValueError("need one image per source variable")
        self.source = source
        self.target = target
        self.images = tuple(images)
        if check:
            for i, img in enumerate(self.images):
                if img.is_zero():
                    continue
                d = img.homdeg()
                if d != source.ring.weights[i]:
                    raise PresentationsNotIsomorphic(
                        "image of %s has degree %s, expected %d"
                        % (source.ring.names[i], d, source.ring.weights[i])
                    )
            for f in source.ideal_gens:
                if not target.nf(self.apply(f)).is_zero():
                    raise PresentationsNotIsomorphic(
                        "ideal containment fails on %s" % f
                    )

    def apply(self, p):
        return p.substitute(self.target.ring, self.images)


def check_mutually_inverse(fwd, inv):
    """Raise PresentationsNotIsomorphic unless fwd and inv induce mutually
    inverse isomorphisms of the presented quotients."""
    S, T = fwd.source, fwd.target
    if inv.source is not T and inv.source != T:
        raise PresentationsNotIsomorphic("maps do not compose")
    for i in range(S.ring.nvars):
        back = inv.apply(fwd.images[i])
        if not S.nf(back - S.ring.var(i)).is_zero():
            raise PresentationsNotIsomorphic(
                "composite is not the identity on %s" % S.ring.names[i]
            )
    for j in range(T.ring.nvars):
        forth = fwd.apply(inv.images[j])
        if not T.nf(forth - T.ring.var(j)).is_zero():
            raise PresentationsNotIsomorphic(
                "composite is not the identity on %s" % T.ring.names[j]
            )


class EnvelopingData:
    """S tensor S over K presented on doubled variables, with the diagonal
    ideal and the two embeddings."""

    def __init__(self, source):
        ring = source.ring
        names1 = tuple(n + "_1" for n in ring.names)
        names2 = tuple(n + "_2" for n in ring.names)
        allnames = names1 + names2
        if len(set(allnames)) != len(allnames):
            raise ValueError("variable names collide under doubling")
        env_ring = PolyRing(
            ring.field, allnames, ring.weights + ring.weights, ring.order
        )
        e = ring.nvars
        left_imgs = [env_ring.var(i) for i in range(e)]
        right_imgs = [env_ring.var(e + i) for i in range(e)]
        gens = [f.substitute(env_ring, left_imgs) for f in source.ideal_gens]
        gens += [f.substitute(env_ring, right_imgs) for f in source.ideal_gens]
        self.source = source
        self.presentation = AlgebraPresentation(env_ring, gens)
        self._left_imgs = left_imgs
        self._right_imgs = right_imgs
        self.diagonal = tuple(
            env_ring.var(i) - env_ring.var(e + i) for i in range(e)
        )

    def left(self, p):
        """Image of an S-polynomial under the first-factor embedding."""
        return p.substitute(self.presentation.ring, self._left_imgs)

    def right(self, p):
        return p.substitute(self.presentation.ring, self._right_imgs)


def enveloping_algebra(S):
    """The enveloping presentation of S, cached on the presentation."""
    if S._env is None:
        S._env = EnvelopingData(S)
    return S._env
