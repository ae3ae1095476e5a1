"""Bounded complexes of graded modules and the operations on them.

Two carriers: FreeComplex (terms are free, given by generator degrees)
and ComplexOfModules (terms are module presentations over one algebra).
Differentials are column-sparse matrices over the ambient generators.

Each complex carries a validity window (agree_lo, agree_hi), None meaning
unbounded: the range of homological degrees where the complex agrees with
the object it stands for.  Truncated resolutions are the typical bounded
case.  Homology is only served strictly inside the window.
"""

from .errors import OutsideValidityWindow, TwistMismatch
from .groebner import ModuleGB
from .modules import ModulePresentation, free_module


def mat_apply(algebra, cols, vec):
    """Image of a sparse vector under the map with the given columns."""
    acc = {}
    for c, p in vec.items():
        for r, q in cols[c].items():
            prod = p * q
            prev = acc.get(r)
            acc[r] = prev + prod if prev is not None else prod
    out = {}
    for r, p in acc.items():
        p = algebra.nf(p)
        if not p.is_zero():
            out[r] = p
    return out


def mat_compose(algebra, outer, inner):
    """Columns of outer applied to each column of inner."""
    return [mat_apply(algebra, outer, col) for col in inner]


def _clean_cols(algebra, cols):
    out = []
    for col in cols:
        c2 = {}
        for r, p in col.items():
            q = algebra.nf(p)
            if not q.is_zero():
                c2[r] = q
        out.append(c2)
    return out


def _shift_window(lo, hi, s):
    return (None if lo is None else lo + s, None if hi is None else hi + s)


def _win_contains(lo, hi, i):
    if lo is not None and i < lo + 1:
        return False
    if hi is not None and i > hi - 1:
        return False
    return True


def _require_window(lo, hi, i, what):
    if not _win_contains(lo, hi, i):
        raise OutsideValidityWindow(
            "%s at degree %d lies outside the trusted range (%s, %s)"
            % (what, i, lo, hi)
        )


class FreeComplex:
    """Bounded complex of graded free modules F_lo .. F_hi."""

    def __init__(
        self, algebra, lo, gens, diffs, agree_lo=None, agree_hi=None, check=True
    ):
        self.algebra = algebra
        self.lo = lo
        self.gens = {i: tuple(g) for i, g in gens.items()}
        self.hi = max(self.gens) if self.gens else lo
        for i in range(lo, self.hi + 1):
            self.gens.setdefault(i, ())
        self.diff = {i: _clean_cols(algebra, diffs.get(i, [])) for i in diffs}
        for i in range(lo + 1, self.hi + 1):
            self.diff.setdefault(i, [{} for _ in self.gens[i]])
        self.agree_lo = agree_lo
        self.agree_hi = agree_hi
        if check:
            self._validate()

    def _validate(self):
        for i in range(self.lo + 1, self.hi + 1):
            cols = self.diff[i]
            if len(cols) != len(self.gens[i]):
                raise ValueError("differential at %d has wrong column count" % i)
            for c, col in enumerate(cols):
                for r, p in col.items():
                    if not (0 <= r < len(self.gens[i - 1])):
                        raise ValueError("row %d missing in degree %d" % (r, i - 1))
                    want = self.gens[i][c] - self.gens[i - 1][r]
                    if p.homdeg() != want:
                        raise TwistMismatch(
                            "entry (%d,%d) of d_%d has degree %s, expected %d"
                            % (r, c, i, p.homdeg(), want)
                        )
        for i in range(self.lo + 2, self.hi + 1):
            square = mat_compose(self.algebra, self.diff[i - 1], self.diff[i])
            if any(col for col in square):
                raise ValueError("d o d != 0 between degrees %d and %d" % (i, i - 2))

    def rank(self, i):
        return len(self.gens.get(i, ()))

    def term_degrees(self, i):
        return self.gens.get(i, ())

    def shift(self, s):
        """Homological shift: result_i = self_{i-s}, differential scaled
        by (-1)^s."""
        sign = -1 if s % 2 else 1
        gens = {i + s: g for i, g in self.gens.items()}
        diffs = {}
        for i, cols in self.diff.items():
            if sign == 1:
                diffs[i + s] = [dict(c) for c in cols]
            else:
                diffs[i + s] = [{r: -p for r, p in c.items()} for c in cols]
        alo, ahi = _shift_window(self.agree_lo, self.agree_hi, s)
        return FreeComplex(
            self.algebra, self.lo + s, gens, diffs, alo, ahi, check=False
        )

    def as_module_complex(self):
        terms = {
            i: free_module(self.algebra, self.gens[i])
            for i in range(self.lo, self.hi + 1)
        }
        return ComplexOfModules(
            self.algebra,
            self.lo,
            terms,
            {i: [dict(c) for c in cols] for i, cols in self.diff.items()},
            self.agree_lo,
            self.agree_hi,
            check=False,
        )

    def homology_at(self, i):
        _require_window(self.agree_lo, self.agree_hi, i, "homology")
        return self.as_module_complex()._homology_unchecked(i)

    def prune(self):
        return prune_free_complex(self)

    def __repr__(self):
        ranks = " ".join(
            "%d:%d" % (i, self.rank(i)) for i in range(self.lo, self.hi + 1)
        )
        return "<free complex [%s] over %s>" % (ranks, self.algebra.descriptor())


class ComplexOfModules:
    """Bounded complex whose terms are module presentations; differentials
    act on ambient generators and must respect relations."""

    def __init__(
        self, algebra, lo, terms, diffs, agree_lo=None, agree_hi=None, check=True
    ):
        self.algebra = algebra
        self.lo = lo
        self.terms = dict(terms)
        self.hi = max(self.terms) if self.terms else lo
        zero = ModulePresentation(algebra, (), (), (), normalize=False)
        for i in range(lo, self.hi + 1):
            self.terms.setdefault(i, zero)
        self.diff = {i: _clean_cols(algebra, diffs.get(i, [])) for i in diffs}
        for i in range(lo + 1, self.hi + 1):
            self.diff.setdefault(i, [{} for _ in self.terms[i].gen_degrees])
        self.agree_lo = agree_lo
        self.agree_hi = agree_hi
        if check:
            self._validate()

    def _validate(self):
        for i in range(self.lo + 1, self.hi + 1):
            src = self.terms[i].gen_degrees
            dst = self.terms[i - 1].gen_degrees
            cols = self.diff[i]
            if len(cols) != len(src):
                raise ValueError("differential at %d has wrong column count" % i)
            for c, col in enumerate(cols):
                for r, p in col.items():
                    if not (0 <= r < len(dst)):
                        raise ValueError("row %d missing in degree %d" % (r, i - 1))
                    if p.homdeg() != src[c] - dst[r]:
                        raise TwistMismatch(
                            "entry (%d,%d) of d_%d has degree %s, expected %d"
                            % (r, c, i, p.homdeg(), src[c] - dst[r])
                        )
            # relations must map into relations
            tgt = self.terms[i - 1]
            for col in self.terms[i].relations:
                img = mat_apply(self.algebra, cols, col)
                if img and not tgt.gb.contains(img):
                    raise ValueError(
                        "differential at %d does not preserve relations" % i
                    )
        for i in range(self.lo + 2, self.hi + 1):
            square = mat_compose(self.algebra, self.diff[i - 1], self.diff[i])
            tgt = self.terms[i - 2]
            for col in square:
                if col and not tgt.gb.contains(col):
                    raise ValueError(
                        "d o d not zero in the module between %d and %d" % (i, i - 2)
                    )

    def rank(self, i):
        t = self.terms.get(i)
        return t.rank if t is not None else 0

    def is_termwise_free(self):
        return all(
            not self.terms[i].relations for i in range(self.lo, self.hi + 1)
        )

    def as_free_complex(self):
        if not self.is_termwise_free():
            raise ValueError("terms carry relations")
        return FreeComplex(
            self.algebra,
            self.lo,
            {i: self.terms[i].gen_degrees for i in range(self.lo, self.hi + 1)},
            {i: [dict(c) for c in cols] for i, cols in self.diff.items()},
            self.agree_lo,
            self.agree_hi,
            check=False,
        )

    def shift(self, s):
        sign = -1 if s % 2 else 1
        terms = {i + s: t for i, t in self.terms.items()}
        diffs = {}
        for i, cols in self.diff.items():
            if sign == 1:
                diffs[i + s] = [dict(c) for c in cols]
            else:
                diffs[i + s] = [{r: -p for r, p in c.items()} for c in cols]
        alo, ahi = _shift_window(self.agree_lo, self.agree_hi, s)
        return ComplexOfModules(
            self.algebra, self.lo + s, terms, diffs, alo, ahi, check=False
        )

    def homology_at(self, i):
        _require_window(self.agree_lo, self.agree_hi, i, "homology")
        return self._homology_unchecked(i)

    def _homology_unchecked(self, i):
        algebra = self.algebra
        if i < self.lo or i > self.hi:
            return ModulePresentation(algebra, (), (), (), normalize=False)
        term = self.terms[i]
        n_i = term.rank

        # cycle generators: syzygies of [d_i | relations below], projected
        if i > self.lo:
            below = self.terms[i - 1]
            cols = [dict(c) for c in self.diff[i]]
            degs = list(term.gen_degrees)
            cols += [dict(c) for c in below.relations]
            degs += list(below.rel_degrees)
            gb1 = ModuleGB(
                algebra,
                below.gen_degrees,
                cols,
                col_degrees=degs,
                keep_reps=True,
                want_syz=True,
            )
            zcols, zdegs = [], []
            for svec, sdeg in gb1.syzygy_columns():
                proj = {c: p for c, p in svec.items() if c < n_i}
                if proj:
                    zcols.append(proj)
                    zdegs.append(sdeg)
        else:
            ring = algebra.ring
            zcols = [{c: ring.one()} for c in range(n_i)]
            zdegs = list(term.gen_degrees)

        # relations on those generators: boundaries and ambient relations
        nz = len(zcols)
        cols = [dict(c) for c in zcols]
        degs = list(zdegs)
        if i < self.hi:
            above = self.terms[i + 1]
            cols += [dict(c) for c in self.diff[i + 1]]
            degs += list(above.gen_degrees)
        cols += [dict(c) for c in term.relations]
        degs += list(term.rel_degrees)
        gb2 = ModuleGB(
            algebra,
            term.gen_degrees,
            cols,
            col_degrees=degs,
            keep_reps=True,
            want_syz=True,
        )
        rels, rdegs = [], []
        for svec, sdeg in gb2.syzygy_columns():
            proj = {c: p for c, p in svec.items() if c < nz}
            if proj:
                rels.append(proj)
                rdegs.append(sdeg)
        return ModulePresentation(algebra, zdegs, rels, rdegs)

    def __repr__(self):
        ranks = " ".join(
            "%d:%d" % (i, self.rank(i)) for i in range(self.lo, self.hi + 1)
        )
        return "<module complex [%s] over %s>" % (ranks, self.algebra.descriptor())


# -- operations ---------------------------------------------------------------


def good_truncate_below(C, j, check_vanishing=True):
    """Homology-preserving truncation: keep terms above j, replace the term
    at j by its cycle submodule.  The result is an honest bounded complex
    (window fully trusted) provided the object C stands for has no homology
    below j; with check_vanishing the computable part of that hypothesis is
    verified.

    Requires j to lie strictly inside C's trusted window.
    """
    if j <= C.lo and C.agree_lo is None:
        return C
    _require_window(C.agree_lo, C.agree_hi, j, "truncation")
    algebra = C.algebra
    if check_vanishing and C.agree_lo is not None:
        for i in range(C.agree_lo + 1, j):
            if not C.homology_at(i).is_zero():
                raise ValueError(
                    "homology at %d is nonzero; cannot truncate at %d" % (i, j)
                )
    term = C.terms[j]
    n_j = term.rank
    below = C.terms.get(j - 1)
    if j <= C.lo or below is None or (below.rank == 0 and not C.diff.get(j)):
        zcols = [{c: algebra.ring.one()} for c in range(n_j)]
        zdegs = list(term.gen_degrees)
    else:
        cols = [dict(c) for c in C.diff[j]]
        degs = list(term.gen_degrees)
        cols += [dict(c) for c in below.relations]
        degs += list(below.rel_degrees)
        gb1 = ModuleGB(
            algebra,
            below.gen_degrees,
            cols,
            col_degrees=degs,
            keep_reps=True,
            want_syz=True,
        )
        zcols, zdegs = [], []
        for svec, sdeg in gb1.syzygy_columns():
            proj = {c: p for c, p in svec.items() if c < n_j}
            if proj:
                zcols.append(proj)
                zdegs.append(sdeg)

    # present the cycle module modulo the ambient relations of the term
    nz = len(zcols)
    mix = [dict(c) for c in zcols] + [dict(c) for c in term.relations]
    mixdegs = list(zdegs) + list(term.rel_degrees)
    gbz = ModuleGB(
        algebra,
        term.gen_degrees,
        mix,
        col_degrees=mixdegs,
        keep_reps=True,
        want_syz=True,
    )
    rels, rdegs = [], []
    for svec, sdeg in gbz.syzygy_columns():
        proj = {c: p for c, p in svec.items() if c < nz}
        if proj:
            rels.append(proj)
            rdegs.append(sdeg)
    new_term = ModulePresentation(algebra, zdegs, rels, rdegs, normalize=False)

    terms = {j: new_term}
    diffs = {}
    for i in range(j + 1, C.hi + 1):
        terms[i] = C.terms[i]
        if i > j + 1:
            diffs[i] = [dict(c) for c in C.diff[i]]
    if j + 1 <= C.hi:
        cols = []
        for col in C.diff[j + 1]:
            comb = gbz.lift(col)
            if comb is None:
                raise ValueError("differential image escapes the cycle module")
            cols.append({c: p for c, p in comb.items() if c < nz})
        diffs[j + 1] = cols
    ahi = C.agree_hi
    return ComplexOfModules(algebra, j, terms, diffs, None, ahi)


def hom_into_module(F, N):
    """Hom(F, N) for a free complex F and a module N over the same algebra:
    term at -i is Hom(F_i, N), a direct sum of copies of N indexed by the
    generators of F_i.  Block (c, r) is generator r of the copy at F-gen c."""
    algebra = F.algebra
    lo, hi = -F.hi, -F.lo
    ndegs = N.gen_degrees
    nn = len(ndegs)
    terms = {}
    for j in range(lo, hi + 1):
        fdegs = F.term_degrees(-j)
        gdegs = [u - t for t in fdegs for u in ndegs]
        rels, rdegs = [], []
        for c in range(len(fdegs)):
            for col, d in zip(N.relations, N.rel_degrees):
                rels.append({c * nn + r: p for r, p in col.items()})
                rdegs.append(d - fdegs[c])
        terms[j] = ModulePresentation(algebra, gdegs, rels, rdegs, normalize=False)
    diffs = {}
    for j in range(lo + 1, hi + 1):
        # source Hom(F_{-j}, N), target Hom(F_{-j+1}, N); precompose with
        # d_{F,-j+1} and twist by the hom-differential sign
        fcols = F.diff[-j + 1]
        src_rank = F.rank(-j)
        sign = 1 if (j + 1) % 2 == 0 else -1
        cols = []
        for c in range(src_rank):
            for r in range(nn):
                col = {}
                for cprime, fcol in enumerate(fcols):
                    p = fcol.get(c)
                    if p is not None:
                        col[cprime * nn + r] = p if sign == 1 else -p
                cols.append(col)
        diffs[j] = cols
    alo = None if F.agree_hi is None else -F.agree_hi
    ahi = None if F.agree_lo is None else -F.agree_lo
    return ComplexOfModules(algebra, lo, terms, diffs, alo, ahi)


def tensor_with_module(F, N):
    """F tensor N over the algebra, termwise F_i tensor N; block (c, r)."""
    algebra = F.algebra
    ndegs = N.gen_degrees
    nn = len(ndegs)
    terms = {}
    for i in range(F.lo, F.hi + 1):
        fdegs = F.term_degrees(i)
        gdegs = [t + u for t in fdegs for u in ndegs]
        rels, rdegs = [], []
        for c in range(len(fdegs)):
            for col, d in zip(N.relations, N.rel_degrees):
                rels.append({c * nn + r: p for r, p in col.items()})
                rdegs.append(d + fdegs[c])
        terms[i] = ModulePresentation(algebra, gdegs, rels, rdegs, normalize=False)
    diffs = {}
    for i in range(F.lo + 1, F.hi + 1):
        cols = []
        for c, fcol in enumerate(F.diff[i]):
            for r in range(nn):
                cols.append({cp * nn + r: p for cp, p in fcol.items()})
            # column index is c * nn + r in source
        diffs[i] = cols
    return ComplexOfModules(
        algebra, F.lo, terms, diffs, F.agree_lo, F.agree_hi
    )


def cone(chain_map, X, Y):
    """Mapping cone of a degree-zero chain map f: X -> Y between free
    complexes: term n is Y_n ++ X_{n-1}, d(y, x) = (dy + fx, -dx)."""
    algebra = X.algebra
    if Y.algebra is not algebra and Y.algebra != algebra:
        raise ValueError("complexes live over different algebras")
    lo = min(X.lo + 1, Y.lo)
    hi = max(X.hi + 1, Y.hi)
    gens = {}
    for n in range(lo, hi + 1):
        gens[n] = tuple(Y.term_degrees(n)) + tuple(X.term_degrees(n - 1))
    diffs = {}
    for n in range(lo + 1, hi + 1):
        ny, nx = Y.rank(n), X.rank(n - 1)
        off_src = ny
        off_dst = Y.rank(n - 1)
        cols = []
        for c in range(ny):
            col = dict(Y.diff[n][c]) if Y.lo < n <= Y.hi else {}
            cols.append(col)
        fmap = chain_map.get(n - 1, [])
        xd = X.diff.get(n - 1, [])
        for c in range(nx):
            col = {}
            if c < len(fmap):
                for r, p in fmap[c].items():
                    col[r] = p
            if X.lo < n - 1 <= X.hi and c < len(xd):
                for r, p in xd[c].items():
                    col[off_dst + r] = -p
            cols.append(col)
        diffs[n] = cols
    alo_parts = []
    if X.agree_lo is not None:
        alo_parts.append(X.agree_lo + 1)
    if Y.agree_lo is not None:
        alo_parts.append(Y.agree_lo)
    ahi_parts = []
    if X.agree_hi is not None:
        ahi_parts.append(X.agree_hi + 1)
    if Y.agree_hi is not None:
        ahi_parts.append(Y.agree_hi)
    alo = max(alo_parts) if alo_parts else None
    ahi = min(ahi_parts) if ahi_parts else None
    return FreeComplex(algebra, lo, gens, diffs, alo, ahi)


def prune_free_complex(C, protect=None):
    """Remove split trivial summands: a unit entry at (r, c) of d_i turns
    d_i into its Schur complement there, deletes row c of d_{i+1} and
    column r of d_{i-1}.  Iterates until no eliminable unit entry remains.

    protect = (degree, count) shields the first count generators of the
    term at that degree from elimination.
    """
    algebra = C.algebra
    nf = algebra.nf
    K = algebra.ring.field
    gens = {i: list(C.gens[i]) for i in C.gens}
    diff = {i: [dict(c) for c in C.diff[i]] for i in C.diff}
    lo, hi = C.lo, C.hi

    def shielded(i, r, c):
        if protect is None:
            return False
        deg, count = protect
        if i - 1 == deg and r < count:
            return True
        if i == deg and c < count:
            return True
        return False

    def find_unit():
        for i in sorted(diff):
            for c, col in enumerate(diff[i]):
                for r in sorted(col):
                    p = col[r]
                    if len(p.terms) == 1 and not any(p.terms[0][0]):
                        if not shielded(i, r, c):
                            return i, r, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        i, r, c = hit
        cols = diff[i]
        pivot = cols[c]
        uinv = K.inv(pivot[r].lead_coeff())
        new_cols = []
        for c2, col in enumerate(cols):
            if c2 == c:
                continue
            g = col.get(r)
            if g is not None:
                col = dict(col)
                for rr, h in pivot.items():
                    corr = nf(g * h).scale(uinv)
                    prev = col.get(rr)
                    val = prev - corr if prev is not None else -corr
                    if val.is_zero():
                        col.pop(rr, None)
                    else:
                        col[rr] = val
            col = {(q if q < r else q - 1): h for q, h in col.items() if q != r}
            new_cols.append(col)
        diff[i] = new_cols
        del gens[i][c]
        del gens[i - 1][r]
        if i + 1 in diff:
            diff[i + 1] = [
                {(q if q < c else q - 1): h for q, h in col.items() if q != c}
                for col in diff[i + 1]
            ]
        if i - 1 in diff:
            nxt = diff[i - 1]
            del nxt[r]
            diff[i - 1] = nxt

    while lo < hi and not gens.get(lo):
        diff.pop(lo + 1, None)
        gens.pop(lo, None)
        lo += 1
    while hi > lo and not gens.get(hi):
        diff.pop(hi, None)
        gens.pop(hi, None)
        hi -= 1
    return FreeComplex(
        algebra,
        lo,
        {i: tuple(gens.get(i, ())) for i in range(lo, hi + 1)},
        {i: diff.get(i, []) for i in range(lo + 1, hi + 1)},
        C.agree_lo,
        C.agree_hi,
    )


def koszul_complex(algebra, elements):
    """Koszul complex on the given homogeneous elements, degrees 0..m."""
    ring = algebra.ring
    elems = list(elements)
    degs = [f.homdeg() for f in elems]
    if any(d is None for d in degs):
        raise ValueError("Koszul complex needs nonzero elements")
    m = len(elems)
    subsets = {0: [()]}
    for j in range(1, m + 1):
        subsets[j] = [
            t + (x,) for t in subsets[j - 1] for x in range(t[-1] + 1 if t else 0, m)
        ]
    index = {j: {t: k for k, t in enumerate(subsets[j])} for j in subsets}
    gens = {
        j: tuple(sum(degs[x] for x in t) for t in subsets[j]) for j in range(m + 1)
    }
    diffs = {}
    for j in range(1, m + 1):
        cols = []
        for t in subsets[j]:
            col = {}
            for k, x in enumerate(t):
                rest = t[:k] + t[k + 1 :]
                coeff = elems[x] if k % 2 == 0 else -elems[x]
                row = index[j - 1][rest]
                prev = col.get(row)
                col[row] = prev + coeff if prev is not None else coeff
            cols.append(col)
        diffs[j] = cols
    return FreeComplex(algebra, 0, gens, diffs)
