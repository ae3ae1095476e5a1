"""Hochschild cohomology and homology over the enveloping presentation.

Over a field the enveloping algebra of a presented algebra computes the
derived bimodule functors on the nose, so cohomology is Ext of the diagonal
against a tensor coefficient and homology is Tor against a Hom coefficient,
both over the doubled presentation.  A normalized bar complex provides an
independent cross-check that bypasses the entire Groebner stack.
"""

from itertools import product

from .algebra import enveloping_algebra
from .derived import ext_tables, tor_tables
from .errors import CoefficientNotFinitelyGenerated, TooLarge
from .linalg import rank_over
from .modules import ModulePresentation, diagonal_module, free_module
from .poly import mono_mul


class BimoduleData:
    """A module over the enveloping presentation plus a record of how it
    arose: "tensor" (M through the first block, N through the second),
    "hom" (N through the first block, the dual of M through the second),
    or "diagonal"."""

    __slots__ = ("presentation", "provenance", "factors")

    def __init__(self, presentation, provenance, factors):
        self.presentation = presentation
        self.provenance = provenance
        self.factors = tuple(factors)

    def __repr__(self):
        return "BimoduleData(%s, rank %d)" % (self.provenance, self.presentation.rank)


def _same_algebra(A, B):
    return A is B or (A.ring == B.ring and A.ideal_gens == B.ideal_gens)


def _pair(S, A, B):
    """A (x)_K B presented over the enveloping presentation of S, the first
    variable block acting through A and the second through B.  Generators
    are the pairs of generators; relations are each factor's relations
    spread over the other factor's generators, which suffices because the
    opposite block's action covers the missing multiples."""
    env = enveloping_algebra(S)
    gens = []
    index = {}
    for r, a in enumerate(A.gen_degrees):
        for s, b in enumerate(B.gen_degrees):
            index[(r, s)] = len(gens)
            gens.append(a + b)
    cols = []
    degs = []
    for c, col in enumerate(A.relations):
        mapped = {r: env.left(p) for r, p in col.items()}
        for s in range(B.rank):
            cols.append({index[(r, s)]: p for r, p in mapped.items()})
            degs.append(A.rel_degrees[c] + B.gen_degrees[s])
    for c, col in enumerate(B.relations):
        mapped = {s: env.right(q) for s, q in col.items()}
        for r in range(A.rank):
            cols.append({index[(r, s)]: q for s, q in mapped.items()})
            degs.append(B.rel_degrees[c] + A.gen_degrees[r])
    return ModulePresentation(env.presentation, gens, cols, degs)


def tensor_coefficient(M, N):
    """M (x)_K N as a bimodule coefficient."""
    if not _same_algebra(M.algebra, N.algebra):
        raise ValueError("tensor factors live over different algebras")
    return BimoduleData(_pair(M.algebra, M, N), "tensor", (M, N))


def hom_coefficient(M, N):
    """Hom_K(M, N) as a bimodule coefficient, materialized as N through the
    first block tensor the K-dual of M through the second.  This encodes
    (s.f.s')(m) = s.f(s'.m) and needs M finite dimensional over K to be
    finitely generated."""
    if not _same_algebra(M.algebra, N.algebra):
        raise ValueError("hom factors live over different algebras")
    if not M.is_finite_dimensional():
        raise CoefficientNotFinitelyGenerated(
            "Hom coefficient needs the source module finite dimensional over K"
        )
    return BimoduleData(_pair(M.algebra, N, M.dual()), "hom", (M, N))


def diagonal_bimodule(S):
    return BimoduleData(diagonal_module(S), "diagonal", (S,))


def hochschild_cohomology(S, M, N, n_max, window, depth=None):
    """Tables of Ext^n over the enveloping presentation of (S, M (x) N) for
    0 <= n <= n_max, graded through the first variable block."""
    coeff = tensor_coefficient(M, N)
    if depth is None:
        depth = n_max + 4
    return ext_tables(
        diagonal_module(S), coeff.presentation, range(n_max + 1), window, depth
    )


def hochschild_homology(S, M, N, n_max, window, depth=None):
    """Tables of Tor_n over the enveloping presentation of (S, Hom_K(M, N))
    for 0 <= n <= n_max."""
    coeff = hom_coefficient(M, N)
    if depth is None:
        depth = n_max + 4
    return tor_tables(
        diagonal_module(S), coeff.presentation, range(n_max + 1), window, depth
    )


def swap_factors(data):
    """The same bimodule with the two variable blocks exchanged.  For a
    commutative base the result is isomorphic, so every table computed from
    it must be unchanged; used as a guard against convention drift."""
    P = data.presentation
    ring = P.algebra.ring
    e = ring.nvars // 2

    def sw(p):
        return ring.from_terms((m[e:] + m[:e], c) for m, c in p.terms)

    cols = [{r: sw(q) for r, q in col.items()} for col in P.relations]
    pres = ModulePresentation(P.algebra, P.gen_degrees, cols, P.rel_degrees)
    return BimoduleData(pres, data.provenance, tuple(reversed(data.factors)))


def _basis_action(M, mono):
    """Coordinates of multiplication by a monomial on the standard basis of
    M: a list over basis positions of {target position: coefficient}."""
    ring = M.algebra.ring
    bas = M.basis()
    index = {(p, m): i for i, (p, m, _) in enumerate(bas)}
    out = []
    for (pos, m, _) in bas:
        vec = M.normal_form({pos: ring.monomial(mono_mul(mono, m))})
        col = {}
        for p2, poly in vec.items():
            for m2, c in poly.terms:
                col[index[(p2, m2)]] = c
        out.append(col)
    return out


def bar_oracle(S, M, N, n_max, cap=6000):
    """Total dimensions of Ext^n over the enveloping presentation of
    (S, M (x) N) for n <= n_max, from the normalized bar complex by dense
    linear algebra.  Shares nothing with the Groebner or resolution code.

    The normalized complex has terms Lin(Sbar^{(x)n}, W) with Sbar the
    positive-degree part of S and W = M (x) N; products of positive-degree
    elements stay positive, so the unit never reappears and no projection
    is needed in the interior terms of the differential.
    """
    if n_max > 5:
        raise ValueError("bar terms grow as (dim S)^(n+2); n_max is capped at 5")
    ring = S.ring
    K = ring.field
    sbasis = free_module(S, (0,)).basis()
    sbar = [(m, d) for (_, m, d) in sbasis if d > 0]
    nbar = len(sbar)
    sindex = {m: a for a, (m, _) in enumerate(sbar)}

    bm = M.basis()
    bn = N.basis()
    dim_m, dim_n = len(bm), len(bn)
    dim_w = dim_m * dim_n
    dims = [dim_w * nbar**n for n in range(n_max + 2)]
    worst = max(dims)
    if worst > cap:
        raise TooLarge("bar term dimension %d exceeds cap %d" % (worst, cap))

    lact = [_basis_action(M, m) for (m, _) in sbar]
    ract = [_basis_action(N, m) for (m, _) in sbar]
    pairs_into = [[] for _ in range(nbar)]
    for a, (ma, _) in enumerate(sbar):
        for b, (mb, _) in enumerate(sbar):
            q = S.nf(ring.monomial(mono_mul(ma, mb)))
            for m2, c in q.terms:
                pairs_into[sindex[m2]].append((a, b, c))

    zero, add, neg = K.zero, K.add, K.neg
    ranks = []
    for n in range(n_max + 1):
        nrows, ncols = dims[n + 1], dims[n]
        if nrows == 0 or ncols == 0:
            ranks.append(0)
            continue
        rows = [[zero] * ncols for _ in range(nrows)]
        last_neg = (n + 1) % 2 == 1
        for jidx, J in enumerate(product(range(nbar), repeat=n)):
            for w in range(dim_w):
                col = jidx * dim_w + w
                i, j = divmod(w, dim_n)
                for a in range(nbar):
                    base = (a * nbar**n + jidx) * dim_w
                    for i2, c in lact[a][i].items():
                        r = base + i2 * dim_n + j
                        rows[r][col] = add(rows[r][col], c)
                for s in range(n):
                    pre, post = J[:s], J[s + 1 :]
                    sneg = (s + 1) % 2 == 1
                    for (a, b, c) in pairs_into[J[s]]:
                        code = 0
                        for t in pre + (a, b) + post:
                            code = code * nbar + t
                        r = code * dim_w + w
                        rows[r][col] = add(rows[r][col], neg(c) if sneg else c)
                for b in range(nbar):
                    base = (jidx * nbar + b) * dim_w
                    for j2, c in ract[b][j].items():
                        r = base + i * dim_n + j2
                        rows[r][col] = add(rows[r][col], neg(c) if last_neg else c)
        ranks.append(rank_over(K, rows))

    out = []
    for n in range(n_max + 1):
        below = ranks[n - 1] if n > 0 else 0
        out.append(dims[n] - ranks[n] - below)
    return out
