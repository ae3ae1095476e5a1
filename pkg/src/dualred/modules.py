"""Finitely presented graded modules over an algebra presentation.

A module is a cokernel: free module on generators of prescribed degrees,
modulo the span of homogeneous relation columns.  Construction normalizes
the presentation: entries are reduced modulo the ideal, zero columns are
dropped, and generators hit by unit entries are eliminated by a Schur
complement step.  Elimination does not change the isomorphism class.
"""

from .algebra import enveloping_algebra
from .errors import NotFiniteDimensional, TwistMismatch
from .groebner import ModuleGB
from .poly import mono_divides, mono_mul


def _is_unit(p):
    if len(p.terms) != 1:
        return False
    m, _ = p.terms[0]
    return all(a == 0 for a in m)


class ModulePresentation:
    __slots__ = (
        "algebra",
        "gen_degrees",
        "relations",
        "rel_degrees",
        "_gb",
        "_dim_cache",
        "_basis",
        "_resolution",
    )

    def __init__(
        self, algebra, gen_degrees, relations, rel_degrees=None, normalize=True
    ):
        self.algebra = algebra
        gen_degrees = tuple(int(t) for t in gen_degrees)
        cols = [dict(col) for col in relations]
        declared = list(rel_degrees) if rel_degrees is not None else [None] * len(cols)
        if len(declared) != len(cols):
            raise ValueError("one degree per relation column")

        nf = algebra.nf
        clean_cols, clean_degs = [], []
        for col, want in zip(cols, declared):
            out = {}
            deg = want
            for pos, p in sorted(col.items()):
                if not (0 <= pos < len(gen_degrees)):
                    raise ValueError("relation touches missing generator %d" % pos)
                q = nf(p)
                if q.is_zero():
                    continue
                d = q.homdeg() + gen_degrees[pos]
                if deg is None:
                    deg = d
                elif d != deg:
                    raise TwistMismatch(
                        "relation column mixes degrees %s and %s" % (deg, d)
                    )
                out[pos] = q
            if out:
                clean_cols.append(out)
                clean_degs.append(deg)

        if normalize:
            gen_degrees, clean_cols, clean_degs = _prune_presentation(
                algebra, gen_degrees, clean_cols, clean_degs
            )

        self.gen_degrees = tuple(gen_degrees)
        self.relations = tuple(clean_cols)
        self.rel_degrees = tuple(clean_degs)
        self._gb = None
        self._dim_cache = {}
        self._basis = None
        self._resolution = None

    @property
    def rank(self):
        return len(self.gen_degrees)

    @property
    def gb(self):
        if self._gb is None:
            self._gb = ModuleGB(
                self.algebra,
                self.gen_degrees,
                self.relations,
                col_degrees=self.rel_degrees,
                keep_reps=False,
                want_syz=False,
            )
        return self._gb

    def is_zero(self):
        return self.rank == 0

    def normal_form(self, vec):
        return self.gb.normal_form(vec)

    # ------------------------------------------------------------------
    # graded dimensions

    def dim_at(self, d):
        got = self._dim_cache.get(d)
        if got is not None:
            return got
        total = 0
        for pos, t in enumerate(self.gen_degrees):
            w = d - t
            if w < 0:
                continue
            monos = self.algebra.ring.monomials_of_weight(w)
            if not monos:
                continue
            leads = self.gb.lead_exponents(pos)
            if not leads:
                total += len(monos)
                continue
            for m in monos:
                if not any(mono_divides(l, m) for l in leads):
                    total += 1
        self._dim_cache[d] = total
        return total

    def hilbert(self, window):
        lo, hi = window
        return {d: self.dim_at(d) for d in range(lo, hi + 1)}

    def is_finite_dimensional(self):
        """Total dimension over K is finite iff every position sees a pure
        power of every variable among the lead exponents."""
        n = self.algebra.ring.nvars
        for pos in range(self.rank):
            leads = self.gb.lead_exponents(pos)
            for v in range(n):
                if not any(
                    m[v] > 0 and all(a == 0 for j, a in enumerate(m) if j != v)
                    for m in leads
                ):
                    return False
        return True

    def basis(self):
        """Standard-monomial K-basis [(pos, mono, degree)], sorted by
        (degree, pos, mono).  Raises NotFiniteDimensional when infinite."""
        if self._basis is not None:
            return self._basis
        if not self.is_finite_dimensional():
            raise NotFiniteDimensional(
                "module is not finite dimensional over the base field"
            )
        ring = self.algebra.ring
        n = ring.nvars
        out = []
        for pos in range(self.rank):
            leads = self.gb.lead_exponents(pos)
            bounds = []
            for v in range(n):
                b = min(
                    m[v]
                    for m in leads
                    if m[v] > 0 and all(a == 0 for j, a in enumerate(m) if j != v)
                )
                bounds.append(b)
            for m in _box(bounds):
                if not any(mono_divides(l, m) for l in leads):
                    out.append((pos, m, ring.wdeg(m) + self.gen_degrees[pos]))
        out.sort(key=lambda t: (t[2], t[0], t[1]))
        self._basis = tuple(out)
        return self._basis

    def dim_total(self):
        return len(self.basis())

    def action_matrix(self, v):
        """Dense matrix of multiplication by the v-th variable on basis():
        column j holds the coordinates of x_v * b_j."""
        ring = self.algebra.ring
        K = ring.field
        if not isinstance(v, int) or not 0 <= v < ring.nvars:
            raise ValueError("action_matrix takes a variable index")
        bas = self.basis()
        index = {(p, m): i for i, (p, m, _) in enumerate(bas)}
        xv = tuple(1 if j == v else 0 for j in range(ring.nvars))
        cols = []
        for (pos, m, _) in bas:
            vec = self.normal_form({pos: ring.monomial(mono_mul(m, xv))})
            col = {}
            for p2, poly in vec.items():
                for mono, c in poly.terms:
                    col[index[(p2, mono)]] = c
            cols.append(col)
        size = len(bas)
        zero = K.zero
        return [
            [cols[j].get(i, zero) for j in range(size)] for i in range(size)
        ]

    def dual(self):
        """Graded K-linear dual, as a module presentation.  Requires the
        module to be finite dimensional; generator ell has degree
        -deg(b_ell), and x_v acts by the transposed action matrix."""
        ring = self.algebra.ring
        bas = self.basis()
        size = len(bas)
        zero = ring.field.zero
        gen_degrees = [-d for (_, _, d) in bas]
        cols = []
        degs = []
        for v in range(ring.nvars):
            A = self.action_matrix(v)
            xv = ring.var(v)
            for l in range(size):
                col = {l: xv}
                for j in range(size):
                    c = A[l][j]
                    if c != zero:
                        prev = col.get(j)
                        add = ring.const(-c)
                        col[j] = prev + add if prev is not None else add
                col = {p: q for p, q in col.items() if not q.is_zero()}
                cols.append(col)
                degs.append(ring.weights[v] + gen_degrees[l])
        return ModulePresentation(self.algebra, gen_degrees, cols, degs)

    # ------------------------------------------------------------------
    # constructions

    def twist(self, a):
        """M(a): degrees drop by a."""
        return ModulePresentation(
            self.algebra,
            [t - a for t in self.gen_degrees],
            self.relations,
            [d - a for d in self.rel_degrees],
            normalize=False,
        )

    def direct_sum(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ValueError("summands live over different algebras")
        r = self.rank
        cols = [dict(c) for c in self.relations]
        cols += [{p + r: q for p, q in c.items()} for c in other.relations]
        return ModulePresentation(
            self.algebra,
            self.gen_degrees + other.gen_degrees,
            cols,
            self.rel_degrees + other.rel_degrees,
            normalize=False,
        )

    def __repr__(self):
        return "<module over %s: %d gens %s, %d relations>" % (
            self.algebra.descriptor(),
            self.rank,
            list(self.gen_degrees),
            len(self.relations),
        )


def _box(bounds):
    if not bounds:
        yield ()
        return
    first, rest = bounds[0], bounds[1:]
    for tail in _box(rest):
        for a in range(first):
            yield (a,) + tail


def _prune_presentation(algebra, gen_degrees, cols, degs):
    """Eliminate generators hit by unit relation entries (Schur step)."""
    nf = algebra.nf
    K = algebra.ring.field
    gen_degrees = list(gen_degrees)
    while True:
        hit = None
        for c, col in enumerate(cols):
            for p in sorted(col):
                if _is_unit(col[p]):
                    hit = (p, c)
                    break
            if hit:
                break
        if not hit:
            break
        p, c = hit
        pivot_col = cols[c]
        uinv = K.inv(pivot_col[p].lead_coeff())
        new_cols, new_degs = [], []
        for c2, col in enumerate(cols):
            if c2 == c:
                continue
            g = col.get(p)
            if g is not None:
                col = dict(col)
                for q, h in pivot_col.items():
                    corr = nf(g * h).scale(uinv)
                    prev = col.get(q)
                    val = prev - corr if prev is not None else -corr
                    if val.is_zero():
                        col.pop(q, None)
                    else:
                        col[q] = val
            col = {(q if q < p else q - 1): h for q, h in col.items() if q != p}
            if col:
                new_cols.append(col)
                new_degs.append(degs[c2])
        del gen_degrees[p]
        cols, degs = new_cols, new_degs
    return gen_degrees, cols, degs


def free_module(algebra, degrees):
    return ModulePresentation(algebra, degrees, (), (), normalize=False)


def residue_field(algebra, twist=0):
    """K as a module over the algebra, generator in degree -twist."""
    ring = algebra.ring
    cols = [{0: ring.var(i)} for i in range(ring.nvars)]
    degs = [w - twist for w in ring.weights]
    return ModulePresentation(algebra, [-twist], cols, degs, normalize=False)


def diagonal_module(S):
    """S as a module over its enveloping presentation, cut out by the
    differences of the paired variables."""
    env = enveloping_algebra(S)
    return ModulePresentation(
        env.presentation, (0,), [{0: f} for f in env.diagonal]
    )
