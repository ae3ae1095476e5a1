"""Relative dualizing complexes of graded quotient presentations.

The representing complex lives over the ambient polynomial ring: take a
finite free resolution of the quotient, apply Hom into the rank-one free
module twisted by the sum of the variable weights (the top exterior power
of the free module of differentials), and shift up by the number of
variables.  Homology modules are re-expressed over the quotient after an
annihilation check; when homology sits in a single degree the module there
is the canonical module.

Checks in this file compare Hilbert tables, never isomorphisms: equal
tables on a window falsify nothing and are the strongest certificate this
engine offers.
"""

from .algebra import AlgebraMap, check_mutually_inverse, enveloping_algebra, _bare
from .complexes import good_truncate_below, hom_into_module
from .derived import (
    HilbertTable,
    VerificationReport,
    ext_tables,
    hyper_ext_tables,
    stable_under_deepening,
)
from .errors import NotConcentrated, NotFiniteDimensional
from .modules import ModulePresentation, diagonal_module, free_module
from .resolutions import betti_numbers, free_resolution


class DualizingComplexData:
    __slots__ = (
        "sigma",
        "representing_complex",
        "homology",
        "tables",
        "concentrated_at",
        "canonical_module",
        "window",
    )

    def __init__(
        self,
        sigma,
        representing_complex,
        homology,
        tables,
        concentrated_at,
        canonical_module,
        window,
    ):
        self.sigma = sigma
        self.representing_complex = representing_complex
        self.homology = homology
        self.tables = tables
        self.concentrated_at = concentrated_at
        self.canonical_module = canonical_module
        self.window = window

    def require_concentrated(self):
        if self.concentrated_at is None:
            raise NotConcentrated(
                "dualizing homology of %s is spread over several degrees "
                "on window %s" % (self.sigma.descriptor(), (self.window,))
            )
        return self.concentrated_at, self.canonical_module

    def __repr__(self):
        where = (
            "concentrated at %d" % self.concentrated_at
            if self.concentrated_at is not None
            else "spread"
        )
        return "<dualizing data for %s, %s>" % (self.sigma.descriptor(), where)


def ambient_dual(M, window):
    """Homology data of the ambient-ring dual of a module over a quotient.

    Restrict scalars to the bare polynomial ring, Hom into the rank-one
    free module twisted by the weight sum, shift up by the variable count,
    then re-present each homology module over the quotient after the
    annihilation check.  Returns (homology by degree, tables by degree,
    representing complex); the representing complex stays over the bare
    ring."""
    S = M.algebra
    ring = S.ring
    e = ring.nvars
    Q = _bare(ring)
    sum_w = sum(ring.weights)

    cols = [dict(c) for c in M.relations]
    for f in S.ideal_gens:
        cols.extend({i: f} for i in range(M.rank))
    as_q_module = ModulePresentation(Q, M.gen_degrees, cols)
    # the restricted-scalars presentation need not be minimal, which costs
    # one step past the ambient global dimension, and seeing the kernel
    # vanish costs another
    F = free_resolution(as_q_module, e + 2)
    if F.agree_hi is not None:
        raise RuntimeError(
            "resolution over the polynomial ring did not terminate by "
            "depth %d" % (e + 2)
        )
    omega_ambient = free_module(Q, (sum_w,))
    rep = hom_into_module(F, omega_ambient).shift(e).as_free_complex()

    homology = {}
    tables = {}
    as_modules = rep.as_module_complex()
    for i in range(rep.lo, rep.hi + 1):
        h_q = as_modules.homology_at(i)
        _check_annihilated(h_q, S.ideal_gens)
        h_s = ModulePresentation(
            S, h_q.gen_degrees, h_q.relations, h_q.rel_degrees
        )
        homology[i] = h_s
        tables[i] = HilbertTable.of_module(h_s, window)
    return homology, tables, rep


def concentrated_ambient_dual(M, window):
    """(module, degree) when the ambient dual of M has homology in exactly
    one degree on the window; NotConcentrated otherwise."""
    homology, tables, _ = ambient_dual(M, window)
    nonzero = [i for i in sorted(tables) if not tables[i].is_zero()]
    if len(nonzero) != 1:
        raise NotConcentrated(
            "ambient dual of %r has homology in degrees %s" % (M, nonzero)
        )
    return homology[nonzero[0]], nonzero[0]


def build_dualizing(S, window):
    """Dualizing data for a quotient presentation, with homology tables
    taken over the given internal-degree window."""
    homology, tables, rep = ambient_dual(free_module(S, (0,)), window)
    nonzero = [i for i in sorted(tables) if not tables[i].is_zero()]
    concentrated_at = nonzero[0] if len(nonzero) == 1 else None
    canonical = homology[concentrated_at] if concentrated_at is not None else None
    return DualizingComplexData(
        S, rep, homology, tables, concentrated_at, canonical, tuple(window)
    )


def _check_annihilated(h_q, ideal_gens):
    # homology of the representing complex must be a module over the
    # quotient: every ideal generator kills every homology generator
    gb = h_q.gb
    for f in ideal_gens:
        for j in range(h_q.rank):
            if not gb.contains({j: f}):
                raise RuntimeError(
                    "dualizing homology is not annihilated by %s" % f
                )


def derived_dual_complex(M, D, depth):
    """Complex of modules representing the derived Hom of M into the
    dualizing object, placed so homology sits where D's does.

    The raw Hom against a depth-limited resolution is only trusted near the
    top; homology below (concentration - Krull dimension) vanishes for
    modules over a Cohen-Macaulay quotient, and the good truncation there
    turns the complex into an honest bounded one, usable on both the Hom
    and tensor sides.
    """
    c, omega = D.require_concentrated()
    dim = D.sigma.krull_dim()
    F = free_resolution(M, depth)
    C = hom_into_module(F, omega).shift(c)
    return good_truncate_below(C, c - dim)


def factorization_independence(A, B, images_fwd, images_inv, window):
    """Compare the dualizing homology of two presentations of the same
    quotient, identified by mutually inverse variable substitutions."""
    fwd = AlgebraMap(A, B, images_fwd)
    inv = AlgebraMap(B, A, images_inv)
    check_mutually_inverse(fwd, inv)

    DA = build_dualizing(A, window)
    DB = build_dualizing(B, window)
    lo = min(DA.representing_complex.lo, DB.representing_complex.lo)
    hi = max(DA.representing_complex.hi, DB.representing_complex.hi)
    zero = HilbertTable.zero(window)
    rows = []
    for i in range(lo, hi + 1):
        rows.append(("H", i, DA.tables.get(i, zero), DB.tables.get(i, zero)))
    return VerificationReport(
        "factorization-independence",
        {"first": A.descriptor(), "second": B.descriptor()},
        rows,
        window,
        meta={
            "concentrated_first": DA.concentrated_at,
            "concentrated_second": DB.concentrated_at,
        },
    )


def biduality_check(M, D, n_max, window, depth=None):
    """Dualize M into D twice and compare against M placed in degree 0."""
    c, omega = D.require_concentrated()
    if depth is None:
        depth = n_max + 4
    spots = list(range(-2, n_max + 1))

    def compute(t):
        C = derived_dual_complex(M, D, t)
        ns = [c - i for i in spots]
        return hyper_ext_tables(C, omega, ns, window, top=max(ns) + 2)

    tabs = stable_under_deepening(compute, depth)
    m_table = HilbertTable.of_module(M, window)
    zero = HilbertTable.zero(window)
    rows = [
        ("bidual", i, tabs[c - i], m_table if i == 0 else zero) for i in spots
    ]
    return VerificationReport(
        "biduality",
        {"algebra": D.sigma.descriptor(), "module": repr(M)},
        rows,
        window,
        meta={"concentrated_at": c, "depth": depth},
    )


def homothety_check(D, n_max, window, depth=None):
    """Self-Hom of the canonical module: degree 0 carries exactly the
    algebra, higher self-extensions vanish."""
    _, omega = D.require_concentrated()
    S = D.sigma
    if depth is None:
        depth = n_max + 4
    ns = range(0, n_max + 1)

    def compute(t):
        return ext_tables(omega, omega, ns, window, depth=t)

    tabs = stable_under_deepening(compute, depth)
    s_table = HilbertTable.of_module(free_module(S, (0,)), window)
    zero = HilbertTable.zero(window)
    rows = [("ext", n, tabs[n], s_table if n == 0 else zero) for n in ns]
    return VerificationReport(
        "homothety",
        {"algebra": S.descriptor()},
        rows,
        window,
        meta={"depth": depth},
    )


def finite_dual_check(S, window):
    """For a finite-dimensional quotient the dualizing homology sits in
    degree 0 and is the graded K-dual of the algebra: dimension at j must
    equal the algebra's dimension at -j."""
    if not S.is_finite_dimensional():
        raise NotFiniteDimensional(
            "%s is not finite dimensional over K" % S.descriptor()
        )
    D = build_dualizing(S, window)
    c, _ = D.require_concentrated()
    lo, hi = window
    expected = HilbertTable(
        window, {j: S.hilbert_dim(-j) for j in range(lo, hi + 1)}
    )
    zero = HilbertTable.zero(window)
    rows = []
    for i in sorted(D.tables):
        rows.append(("H", i, D.tables[i], expected if i == 0 else zero))
    return VerificationReport(
        "finite-dual",
        {"algebra": S.descriptor()},
        rows,
        window,
        meta={"concentrated_at": c, "dual_twist": 0},
    )


def smooth_diagnostics(P, n_max, window, depth=None):
    """Ext over the doubled presentation of (diagonal, free rank one):
    for a smooth algebra the only nonzero table is at n = number of
    variables and is free of rank one.  Reported as pass/fail of exactly
    that pattern."""
    env = enveloping_algebra(P)
    E = env.presentation
    diag = diagonal_module(P)
    target = free_module(E, (0,))
    if depth is None:
        depth = n_max + 4
    ns = range(0, n_max + 1)

    def compute(t):
        return ext_tables(diag, target, ns, window, depth=t)

    tabs = stable_under_deepening(compute, depth)
    d = P.ring.nvars
    zero = HilbertTable.zero(window)
    twist = None
    expected_at_d = zero
    if d <= n_max and not tabs[d].is_zero():
        twist = min(j for j, v in tabs[d].nonzero_entries())
        expected_at_d = HilbertTable.of_module(
            free_module(P, (twist,)), window
        )
    rows = []
    for n in ns:
        rows.append(("ext", n, tabs[n], expected_at_d if n == d else zero))
    return VerificationReport(
        "smooth-pattern",
        {"algebra": P.descriptor()},
        rows,
        window,
        meta={"relative_dimension": d, "twist_at_d": twist, "depth": depth},
    )


class NonsmoothVerdict:
    __slots__ = ("kind", "witness", "n_max", "betti")

    def __init__(self, kind, witness, n_max, betti):
        self.kind = kind
        self.witness = witness
        self.n_max = n_max
        self.betti = list(betti)

    @property
    def is_certified(self):
        return self.kind == "not-smooth"

    def __repr__(self):
        if self.is_certified:
            return "NotSmooth(%d)" % self.witness
        return "Inconclusive(%d)" % self.n_max


def nonsmooth_certificate(S, n_max):
    """Betti numbers of the diagonal beyond the Krull dimension certify
    infinite projective dimension over the doubled presentation; their
    absence up to n_max proves nothing."""
    dim = S.krull_dim()
    if n_max <= dim:
        raise ValueError(
            "n_max must exceed the Krull dimension %d to be conclusive" % dim
        )
    diag = diagonal_module(S)
    b = betti_numbers(diag, n_max)
    witnesses = [n for n in range(dim + 1, n_max + 1) if b[n] != 0]
    if witnesses:
        return NonsmoothVerdict("not-smooth", max(witnesses), n_max, b)
    return NonsmoothVerdict("inconclusive", None, n_max, b)
