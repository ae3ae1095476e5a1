"""Buchberger machinery for submodules of graded free modules.

Everything is computed over the ambient polynomial ring; quotient-ring
computations fold the defining ideal into the generating set, so normal
forms are canonical representatives mod the ideal and syzygies are
relations over the quotient.

A module element is a sparse dict {position: Poly}.  The module order
compares (ring order on the monomial, then lower position wins); cofactor
elimination is handled by carrying the representation part ("rep",
coordinates in the original input columns) alongside each basis vector
instead of inside the module, which is equivalent to a block order with
the free part dominant.

Syzygy completeness relies on two facts: input columns are inserted into
the working basis and never discarded while pairs are pending, and every
S-pair is processed.  The product criterion is applied only in rank one
without syzygy tracking; it is not valid for modules.
"""

import heapq

from .errors import NonHomogeneousInput, TwistMismatch
from .poly import mono_div, mono_divides, mono_lcm


def vec_is_zero(v):
    return not v


def vec_scale(v, c):
    return {i: p.scale(c) for i, p in v.items()}


def vec_term_mul(v, mono, c):
    return {i: p.term_mul(mono, c) for i, p in v.items()}


def vec_sub(v, w):
    """v - w for sparse vectors of Poly."""
    out = dict(v)
    for i, p in w.items():
        if i in out:
            d = out[i] - p
            if d.is_zero():
                del out[i]
            else:
                out[i] = d
        else:
            out[i] = -p
    return out


def vec_add(v, w):
    out = dict(v)
    for i, p in w.items():
        if i in out:
            s = out[i] + p
            if s.is_zero():
                del out[i]
            else:
                out[i] = s
        else:
            out[i] = p
    return out


def vec_neg(v):
    return {i: -p for i, p in v.items()}


def vec_lead(ring, v):
    """(position, monomial, coeff) of the leading module term."""
    key = ring.key
    best = None
    best_k = None
    for i, p in v.items():
        m, c = p.terms[0]
        k = (key(m), -i)
        if best_k is None or k > best_k:
            best_k = k
            best = (i, m, c)
    return best


def vec_degree(ring, gen_degrees, v):
    """Common weighted degree of a homogeneous vector; None when zero.
    Raises on inhomogeneity."""
    deg = None
    for i, p in v.items():
        d = p.homdeg()
        if d is None:
            continue
        d += gen_degrees[i]
        if deg is None:
            deg = d
        elif deg != d:
            raise NonHomogeneousInput(
                "vector mixes degrees %d and %d across positions" % (deg, d)
            )
    return deg


class _Elt:
    __slots__ = ("vec", "rep", "deg", "lead")

    def __init__(self, vec, rep, deg, ring):
        self.vec = vec
        self.rep = rep
        self.deg = deg
        self.lead = vec_lead(ring, vec) if vec else None


class ModuleGB:
    """Groebner data for the submodule spanned by the given columns plus
    ideal multiples of the ambient generators.

    gen_degrees: internal degrees of the ambient free generators.
    columns: sparse vectors {pos: Poly}, homogeneous.
    col_degrees: declared degrees of the columns; inferred when omitted
    (zero columns then need an explicit declaration).
    """

    def __init__(
        self,
        algebra,
        gen_degrees,
        columns,
        col_degrees=None,
        keep_reps=True,
        want_syz=True,
    ):
        self.algebra = algebra
        self.ring = algebra.ring
        self.gen_degrees = tuple(gen_degrees)
        self.rank = len(self.gen_degrees)
        self.keep_reps = keep_reps or want_syz
        self.want_syz = want_syz
        self.columns = [
            {i: p for i, p in c.items() if not p.is_zero()} for c in columns
        ]
        self.col_degrees = []
        self.syzygies = []
        self._basis = []
        one = self.ring.one()
        for j, col in enumerate(self.columns):
            deg = vec_degree(self.ring, self.gen_degrees, col)
            if col_degrees is not None:
                declared = col_degrees[j]
                if deg is not None and deg != declared:
                    raise TwistMismatch(
                        "column %d has degree %d, declared %d" % (j, deg, declared)
                    )
                deg = declared
            elif deg is None:
                raise TwistMismatch("zero column %d needs a declared degree" % j)
            self.col_degrees.append(deg)
            if vec_is_zero(col):
                if self.want_syz:
                    self.syzygies.append(({j: one}, deg))
                continue
            rep = {j: one} if self.keep_reps else {}
            self._basis.append(_Elt(dict(col), rep, deg, self.ring))
        for f in algebra.ideal_gb:
            fd = f.homdeg()
            for i in range(self.rank):
                self._basis.append(
                    _Elt({i: f}, {}, fd + self.gen_degrees[i], self.ring)
                )
        self._run()
        self._interreduce()
        self._leads_by_pos = {}
        for g in self._basis:
            pos, m, _ = g.lead
            self._leads_by_pos.setdefault(pos, []).append(m)

    # -- Buchberger ---------------------------------------------------------

    def _run(self):
        ring = self.ring
        heap = []
        counter = 0
        use_product_criterion = self.rank == 1 and not self.want_syz

        def push_pairs(new_idx):
            nonlocal counter
            gn = self._basis[new_idx]
            pn, mn, _ = gn.lead
            for k in range(new_idx):
                gk = self._basis[k]
                pk, mk, _ = gk.lead
                if pk != pn:
                    continue
                L = mono_lcm(mk, mn)
                if use_product_criterion and L == tuple(
                    a + b for a, b in zip(mk, mn)
                ):
                    continue
                deg = ring.wdeg(L) + self.gen_degrees[pn]
                heapq.heappush(heap, (deg, counter, k, new_idx))
                counter += 1

        for i in range(len(self._basis)):
            push_pairs(i)
        while heap:
            _, _, a, b = heapq.heappop(heap)
            ga, gb = self._basis[a], self._basis[b]
            pa, ma, ca = ga.lead
            pb, mb, cb = gb.lead
            L = mono_lcm(ma, mb)
            K = ring.field
            vec = vec_sub(
                vec_term_mul(ga.vec, mono_div(L, ma), K.inv(ca)),
                vec_term_mul(gb.vec, mono_div(L, mb), K.inv(cb)),
            )
            rep = {}
            if self.keep_reps:
                rep = vec_sub(
                    vec_term_mul(ga.rep, mono_div(L, ma), K.inv(ca)),
                    vec_term_mul(gb.rep, mono_div(L, mb), K.inv(cb)),
                )
            vec, rep = self._reduce_lead(vec, rep)
            if vec_is_zero(vec):
                if self.want_syz and rep:
                    self.syzygies.append(
                        (rep, vec_degree(ring, self.col_degrees, rep))
                    )
                continue
            deg = vec_degree(ring, self.gen_degrees, vec)
            self._basis.append(_Elt(vec, rep, deg, ring))
            push_pairs(len(self._basis) - 1)

    def _reduce_lead(self, vec, rep):
        """Reduce until the lead module term has no divisor in the basis."""
        ring = self.ring
        K = ring.field
        while vec:
            pos, m, c = vec_lead(ring, vec)
            red = None
            for g in self._basis:
                gp, gm, _ = g.lead
                if gp == pos and mono_divides(gm, m):
                    red = g
                    break
            if red is None:
                return vec, rep
            q = mono_div(m, red.lead[1])
            t = K.div(c, red.lead[2])
            vec = vec_sub(vec, vec_term_mul(red.vec, q, t))
            if self.keep_reps and red.rep:
                rep = vec_sub(rep, vec_term_mul(red.rep, q, t))
        return vec, rep

    def _full_reduce(self, vec, rep, basis):
        """Reduce every term of vec against basis; rep tracks cofactors.
        Returns (remainder, rep); inputs are not mutated."""
        ring = self.ring
        K = ring.field
        vec = dict(vec)
        remainder = {}
        while vec:
            pos, m, c = vec_lead(ring, vec)
            red = None
            for g in basis:
                gp, gm, _ = g.lead
                if gp == pos and mono_divides(gm, m):
                    red = g
                    break
            if red is None:
                lead_poly = ring.monomial(m, c)
                rest = vec[pos] - lead_poly
                if rest.is_zero():
                    del vec[pos]
                else:
                    vec[pos] = rest
                remainder = vec_add(remainder, {pos: lead_poly})
                continue
            q = mono_div(m, red.lead[1])
            t = K.div(c, red.lead[2])
            vec = vec_sub(vec, vec_term_mul(red.vec, q, t))
            if self.keep_reps and red.rep:
                rep = vec_sub(rep, vec_term_mul(red.rep, q, t))
        return remainder, rep

    # -- canonical form ------------------------------------------------------

    def _interreduce(self):
        """Minimalize and tail-reduce to the unique reduced monic basis."""
        ring = self.ring
        K = ring.field
        order = sorted(
            range(len(self._basis)),
            key=lambda i: (
                ring.key(self._basis[i].lead[1]),
                -self._basis[i].lead[0],
            ),
        )
        kept = []
        for i in order:
            pos, m, _ = self._basis[i].lead
            if any(g.lead[0] == pos and mono_divides(g.lead[1], m) for g in kept):
                continue
            kept.append(self._basis[i])
        reduced = []
        for g in kept:
            others = [h for h in kept if h is not g]
            vec, rep = self._full_reduce(g.vec, g.rep, others)
            inv = K.inv(vec_lead(ring, vec)[2])
            reduced.append(
                _Elt(
                    vec_scale(vec, inv),
                    vec_scale(rep, inv) if self.keep_reps else {},
                    g.deg,
                    ring,
                )
            )
        reduced.sort(key=lambda g: (ring.key(g.lead[1]), -g.lead[0]))
        self._basis = reduced

    # -- public queries -----------------------------------------------------

    @property
    def basis(self):
        """Reduced monic basis elements as (vector, degree) pairs."""
        return [(dict(g.vec), g.deg) for g in self._basis]

    def normal_form(self, vec):
        """Canonical normal form of a sparse vector modulo the submodule
        (and the ideal when over a quotient)."""
        v = {i: p for i, p in vec.items() if not p.is_zero()}
        nf, _ = self._full_reduce(v, {}, self._basis)
        return nf

    def reduce_with_rep(self, vec):
        """(normal form, combination) with vec = sum(comb_j * col_j) + nf
        modulo ideal multiples of the ambient generators."""
        v = {i: p for i, p in vec.items() if not p.is_zero()}
        nf, rep = self._full_reduce(v, {}, self._basis)
        return nf, vec_neg(rep)

    def lift(self, vec):
        """Coordinates of vec in the original columns, or None when vec is
        not in the span (mod ideal)."""
        nf, comb = self.reduce_with_rep(vec)
        if nf:
            return None
        return comb

    def contains(self, vec):
        return not self.normal_form(vec)

    def lead_exponents(self, pos):
        """Lead exponent tuples of basis elements leading at position pos."""
        return self._leads_by_pos.get(pos, [])

    def syzygy_columns(self):
        """Deterministically ordered generating set of the syzygy module of
        the input columns, as (sparse vector over column indices, degree).

        Coordinates are reduced modulo the ambient ideal first; a syzygy all
        of whose coordinates lie in the ideal is the zero element of the free
        module and is dropped."""
        ring = self.ring
        out = []
        for rep, deg in self.syzygies:
            v = {}
            for i, p in rep.items():
                q = self.algebra.nf(p)
                if not q.is_zero():
                    v[i] = q
            if v:
                out.append((v, deg))
        out.sort(
            key=lambda t: (
                t[1],
                ring.key(vec_lead(ring, t[0])[1]),
                -vec_lead(ring, t[0])[0],
            ),
        )
        return out
