"""Reduction identities between doubled-presentation functors and iterated
one-sided derived functors.

Every check here pits two independent computations against each other: the
direct side works over the doubled presentation (Ext or Tor out of the
diagonal), the reduced side routes through the dualizing data and stays
over the quotient.  Agreement of graded Hilbert tables over a window,
stable under deepening every truncated resolution, is the certificate; a
single mismatched dimension fails the report.

Concentration of the dualizing homology (and, where the first argument is
dualized, of that dual) is a checked precondition.  Spread homology means
the reduced side has no single-module description and the check refuses
rather than guessing an alignment.
"""

from .derived import (
    HilbertTable,
    VerificationReport,
    ext_tables,
    hyper_ext_tables,
    hyper_tor_tables,
    stable_under_deepening,
    tor_tables,
)
from .dualizing import (
    build_dualizing,
    concentrated_ambient_dual,
    derived_dual_complex,
)
from .errors import NotConcentrated, NotFiniteDimensional
from .hochschild import (
    hochschild_cohomology,
    hochschild_homology,
    hom_coefficient,
    tensor_coefficient,
)
from .modules import diagonal_module, free_module


def _reduced_cohomology(D, M, N, n_max, window, depth):
    C = derived_dual_complex(M, D, depth)
    return hyper_ext_tables(C, N, range(0, n_max + 1), window, top=depth)


def _reduced_homology(D, M, N, n_max, window, depth):
    C = derived_dual_complex(M, D, depth)
    return hyper_tor_tables(C, N, range(0, n_max + 1), window, top=depth)


def reduce_cohomology(S, M, N, n_max, window, depth=None):
    """Tables of the iterated derived Hom: dualize M into the dualizing
    data, then hyper-Ext of the resulting complex into N.  Indexed so that
    entry n lines up with hochschild_cohomology's entry n."""
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    return _reduced_cohomology(D, M, N, n_max, window, depth)


def reduce_homology(S, M, N, n_max, window, depth=None):
    """Tables of the dual of M derived-tensored with N, indexed to line up
    with hochschild_homology."""
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    return _reduced_homology(D, M, N, n_max, window, depth)


def verify_reduction(S, M, N, n_max, window, depth=None):
    """Hochschild cohomology with the tensor coefficient against the
    iterated reduction, index for index."""
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    c, _ = D.require_concentrated()
    ns = range(0, n_max + 1)

    def compute(t):
        direct = hochschild_cohomology(S, M, N, n_max, window, depth=t)
        reduced = _reduced_cohomology(D, M, N, n_max, window, t)
        return direct, reduced

    direct, reduced = stable_under_deepening(compute, depth)
    rows = [("hochschild", n, direct[n], reduced[n]) for n in ns]
    return VerificationReport(
        "cohomology-reduction",
        {"algebra": S.descriptor(), "left": repr(M), "right": repr(N)},
        rows,
        window,
        meta={"concentrated_at": c, "depth": depth},
    )


def verify_homology_reduction(S, M, N, n_max, window, depth=None):
    """Hochschild homology with the Hom coefficient against the derived
    tensor of the dualized first argument, index for index."""
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    c, _ = D.require_concentrated()
    ns = range(0, n_max + 1)

    def compute(t):
        direct = hochschild_homology(S, M, N, n_max, window, depth=t)
        reduced = _reduced_homology(D, M, N, n_max, window, t)
        return direct, reduced

    direct, reduced = stable_under_deepening(compute, depth)
    rows = [("hochschild", n, direct[n], reduced[n]) for n in ns]
    return VerificationReport(
        "homology-reduction",
        {"algebra": S.descriptor(), "left": repr(M), "right": repr(N)},
        rows,
        window,
        meta={"concentrated_at": c, "depth": depth},
    )


def _derived_dual_concentration(M, D, depth, window):
    """(module, degree) when the derived dual of M has homology in exactly
    one degree on the window."""
    C = derived_dual_complex(M, D, depth)
    found = []
    for i in range(C.lo, C.hi + 1):
        H = C.homology_at(i)
        if not HilbertTable.of_module(H, window).is_zero():
            found.append((i, H))
    if len(found) != 1:
        raise NotConcentrated(
            "derived dual of %r has homology in degrees %s"
            % (M, [i for i, _ in found])
        )
    i, H = found[0]
    return H, i


def reduce_ext(S, M, N, n_max, window, depth=None):
    """Ext over the quotient against Ext out of the diagonal with the
    dualized first argument feeding the coefficient.

    The coefficient pairs the concentrated derived dual of M with N; its
    placement shifts the doubled-presentation index, and that offset is
    computed from the concentration degree, never assumed.
    """
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    D.require_concentrated()
    diag = diagonal_module(S)
    ns = range(0, n_max + 1)

    def compute(t):
        E, c = _derived_dual_concentration(M, D, t, window)
        coeff = tensor_coefficient(E, N).presentation
        wanted = [n + c for n in ns if n + c >= 0]
        env = ext_tables(diag, coeff, wanted, window, depth=t) if wanted else {}
        plain = ext_tables(M, N, ns, window, depth=t)
        return c, env, plain

    c, env, plain = stable_under_deepening(compute, depth)
    zero = HilbertTable.zero(window)
    rows = [("ext", n, env.get(n + c, zero), plain[n]) for n in ns]
    return VerificationReport(
        "ext-reduction",
        {"algebra": S.descriptor(), "left": repr(M), "right": repr(N)},
        rows,
        window,
        meta={"inner_concentration": c, "depth": depth},
    )


def dualizing_via_tor(S, n_max, window, depth=None):
    """Tor out of the diagonal with the endomorphism coefficient of the
    algebra against the homology tables of the dualizing data: a
    finite-dimensional quotient recovers its dual placement from homology
    over the doubled presentation alone."""
    if not S.is_finite_dimensional():
        raise NotFiniteDimensional(
            "%s is not finite dimensional over K" % S.descriptor()
        )
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    unit = free_module(S, (0,))
    coeff = hom_coefficient(unit, unit).presentation
    diag = diagonal_module(S)
    lumps = [i for i, tab in D.tables.items() if not tab.is_zero()]
    spots = sorted(set(range(0, n_max + 1)) | set(lumps))
    wanted = [i for i in spots if i >= 0]

    def compute(t):
        return tor_tables(diag, coeff, wanted, window, depth=t)

    tabs = stable_under_deepening(compute, depth)
    zero = HilbertTable.zero(window)
    rows = [
        ("tor", i, tabs.get(i, zero), D.tables.get(i, zero)) for i in spots
    ]
    return VerificationReport(
        "dualizing-via-tor",
        {"algebra": S.descriptor()},
        rows,
        window,
        meta={"concentrated_at": D.concentrated_at, "depth": depth},
    )


def classical_check(S, M, N, n_max, window, depth=None):
    """The two index-preserving identifications: Ext out of the diagonal
    with the Hom coefficient against Ext over the quotient, and Tor with
    the tensor coefficient against Tor over the quotient."""
    if depth is None:
        depth = n_max + 4
    diag = diagonal_module(S)
    hom_c = hom_coefficient(M, N).presentation
    ten_c = tensor_coefficient(M, N).presentation
    ns = range(0, n_max + 1)

    def compute(t):
        return (
            ext_tables(diag, hom_c, ns, window, depth=t),
            ext_tables(M, N, ns, window, depth=t),
            tor_tables(diag, ten_c, ns, window, depth=t),
            tor_tables(M, N, ns, window, depth=t),
        )

    ext_env, ext_s, tor_env, tor_s = stable_under_deepening(compute, depth)
    rows = [("ext", n, ext_env[n], ext_s[n]) for n in ns]
    rows += [("tor", n, tor_env[n], tor_s[n]) for n in ns]
    return VerificationReport(
        "classical-identification",
        {"algebra": S.descriptor(), "left": repr(M), "right": repr(N)},
        rows,
        window,
        meta={"depth": depth},
    )


def ambient_dual_reduction(S, M, N, n_max, window, depth=None):
    """Hochschild cohomology with the tensor coefficient against Ext over
    the quotient out of the ambient dual of the first argument.

    The ambient dual carries the shift by the variable count, so the index
    offset is exactly its concentration degree; entries below that offset
    are compared against honest zeros.
    """
    if depth is None:
        depth = n_max + 4
    D = build_dualizing(S, window)
    D.require_concentrated()
    E, c = concentrated_ambient_dual(M, window)
    ns = range(0, n_max + 1)

    def compute(t):
        direct = hochschild_cohomology(S, M, N, n_max, window, depth=t)
        wanted = [n - c for n in ns if n - c >= 0]
        red = ext_tables(E, N, wanted, window, depth=t) if wanted else {}
        return direct, red

    direct, red = stable_under_deepening(compute, depth)
    zero = HilbertTable.zero(window)
    rows = [("hochschild", n, direct[n], red.get(n - c, zero)) for n in ns]
    return VerificationReport(
        "ambient-dual-reduction",
        {"algebra": S.descriptor(), "left": repr(M), "right": repr(N)},
        rows,
        window,
        meta={
            "relative_dimension": S.ring.nvars,
            "inner_concentration": c,
            "depth": depth,
        },
    )
