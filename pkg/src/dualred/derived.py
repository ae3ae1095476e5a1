"""Graded Ext and Tor, for modules and for bounded complexes, reported as
Hilbert tables (internal degree -> dimension over K).

Complex inputs must be honest at the bottom for tensor-side computations:
tensoring a brutally truncated complex is wrong in every homological
degree, not just near the cut, so hyper_tor refuses such inputs; use
good_truncate_below first.
"""

from .complexes import hom_into_module, tensor_with_module
from .errors import OutsideValidityWindow
from .resolutions import free_resolution, semifree_resolution


class HilbertTable:
    """Dimensions over an inclusive window of internal degrees."""

    __slots__ = ("window", "dims")

    def __init__(self, window, dims):
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ValueError("empty degree window")
        self.window = (lo, hi)
        self.dims = {d: int(dims.get(d, 0)) for d in range(lo, hi + 1)}

    @classmethod
    def of_module(cls, M, window):
        return cls(window, M.hilbert(window))

    @classmethod
    def zero(cls, window):
        return cls(window, {})

    def entries(self):
        lo, hi = self.window
        return [(d, self.dims[d]) for d in range(lo, hi + 1)]

    def nonzero_entries(self):
        return [(d, v) for d, v in self.entries() if v]

    def is_zero(self):
        return all(v == 0 for v in self.dims.values())

    def total(self):
        return sum(self.dims.values())

    def restrict(self, window):
        lo, hi = window
        slo, shi = self.window
        if lo < slo or hi > shi:
            raise ValueError("cannot widen a table by restriction")
        return HilbertTable(window, self.dims)

    def shifted(self, a):
        """Table of the degree-shifted object: entry at d+a was at d."""
        lo, hi = self.window
        return HilbertTable(
            (lo + a, hi + a), {d + a: v for d, v in self.dims.items()}
        )

    def __add__(self, other):
        if self.window != other.window:
            raise ValueError("windows differ")
        return HilbertTable(
            self.window,
            {d: self.dims[d] + other.dims[d] for d in self.dims},
        )

    def __eq__(self, other):
        return (
            isinstance(other, HilbertTable)
            and self.window == other.window
            and self.dims == other.dims
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.window, tuple(sorted(self.dims.items()))))

    def __repr__(self):
        inner = ", ".join("%d: %d" % (d, v) for d, v in self.nonzero_entries())
        return "{%s | window %d..%d}" % (inner, self.window[0], self.window[1])


class VerificationReport:
    """Comparison of two indexed families of Hilbert tables.

    rows is a list of (label, n, lhs_table, rhs_table); the verdict is
    "pass" exactly when every pair agrees on the window, and the first
    mismatch (in row order, then by degree) is recorded.
    """

    __slots__ = (
        "statement",
        "inputs",
        "rows",
        "window",
        "meta",
        "verdict",
        "first_discrepancy",
    )

    def __init__(self, statement, inputs, rows, window, meta=None):
        lo, hi = int(window[0]), int(window[1])
        self.statement = statement
        self.inputs = dict(inputs)
        self.window = (lo, hi)
        self.rows = [
            (label, n, lhs.restrict(self.window), rhs.restrict(self.window))
            for label, n, lhs, rhs in rows
        ]
        self.meta = dict(meta or {})
        disc = None
        for label, n, lhs, rhs in self.rows:
            if lhs == rhs:
                continue
            for d in range(lo, hi + 1):
                a, b = lhs.dims[d], rhs.dims[d]
                if a != b:
                    disc = {
                        "label": label,
                        "n": n,
                        "degree": d,
                        "lhs_dim": a,
                        "rhs_dim": b,
                    }
                    break
            if disc is not None:
                break
        self.first_discrepancy = disc
        self.verdict = "pass" if disc is None else "fail"

    @property
    def passed(self):
        return self.verdict == "pass"

    def __repr__(self):
        tail = "" if self.passed else " at %r" % (self.first_discrepancy,)
        return "<%s: %s%s>" % (self.statement, self.verdict.upper(), tail)


def stable_under_deepening(compute, depth, step=2):
    """Run compute(depth) and compute(depth + step) and insist the results
    agree; truncation artifacts show up as depth-dependent tables."""
    first = compute(depth)
    second = compute(depth + step)
    if first != second:
        raise OutsideValidityWindow(
            "results changed between depth %d and %d; window not certified"
            % (depth, depth + step)
        )
    return first


# -- module-level Ext and Tor -------------------------------------------------


def ext_modules(M, N, ns, depth=None):
    """Ext^n(M, N) over the common algebra, one presented module per n."""
    ns = sorted(set(int(n) for n in ns))
    if depth is None:
        depth = max(max(ns) + 2, 1)
    F = free_resolution(M, depth)
    H = hom_into_module(F, N)
    return {n: H.homology_at(-n) for n in ns}


def tor_modules(M, N, ns, depth=None):
    ns = sorted(set(int(n) for n in ns))
    if depth is None:
        depth = max(max(ns) + 2, 1)
    F = free_resolution(M, depth)
    T = tensor_with_module(F, N)
    return {n: T.homology_at(n) for n in ns}


def ext_tables(M, N, ns, window, depth=None):
    mods = ext_modules(M, N, ns, depth)
    return {n: HilbertTable.of_module(mods[n], window) for n in mods}


def tor_tables(M, N, ns, window, depth=None):
    mods = tor_modules(M, N, ns, depth)
    return {n: HilbertTable.of_module(mods[n], window) for n in mods}


# -- hypercohomology of bounded complexes -------------------------------------


def hyper_ext_modules(C, N, ns, top=None):
    """H^n RHom(C, N) as modules.  For a complex truncated at the bottom
    (agree_lo set) only n <= -agree_lo is served; see the triangle of the
    brutal truncation."""
    ns = sorted(set(int(n) for n in ns))
    nmax = max(ns)
    if C.agree_lo is not None and nmax > -C.agree_lo:
        raise OutsideValidityWindow(
            "Ext degree %d beyond the trusted bound %d set by the truncation"
            % (nmax, -C.agree_lo)
        )
    if top is None:
        top = nmax + 2
    F = semifree_resolution(C, top)
    H = hom_into_module(F, N)
    return {n: H.homology_at(-n) for n in ns}


def hyper_tor_modules(C, N, ns, top=None):
    """H_n of (semifree replacement of C) tensor N.  C must be honest at
    the bottom; a brutal truncation poisons every degree here."""
    ns = sorted(set(int(n) for n in ns))
    if C.agree_lo is not None:
        raise OutsideValidityWindow(
            "tensor side needs a complex honest at the bottom; apply a "
            "good truncation first"
        )
    if top is None:
        top = max(ns) + 2
    F = semifree_resolution(C, top)
    T = tensor_with_module(F, N)
    return {n: T.homology_at(n) for n in ns}


def hyper_ext_tables(C, N, ns, window, top=None):
    mods = hyper_ext_modules(C, N, ns, top)
    return {n: HilbertTable.of_module(mods[n], window) for n in mods}


def hyper_tor_tables(C, N, ns, window, top=None):
    mods = hyper_tor_modules(C, N, ns, top)
    return {n: HilbertTable.of_module(mods[n], window) for n in mods}
