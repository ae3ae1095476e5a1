"""Shared builders for the test suite."""

from dualred import (
    GF,
    QQ,
    AlgebraPresentation,
    PolyRing,
    free_module,
    parse_poly,
    residue_field,
)

W = (-10, 10)


def mk_algebra(field, names, polys, weights=None, order="grevlex"):
    ring = PolyRing(field, names, weights, order)
    return AlgebraPresentation(ring, [parse_poly(t, ring) for t in polys])


def x2(field=QQ):
    return mk_algebra(field, ("x",), ["x^2"])


def x3(field=QQ):
    return mk_algebra(field, ("x",), ["x^3"])


def x2y2(field=QQ):
    return mk_algebra(field, ("x", "y"), ["x^2", "y^2"])


def xy(field=QQ):
    return mk_algebra(field, ("x", "y"), ["x*y"])


def poly_line(field=QQ):
    return mk_algebra(field, ("x",), [])


def poly_plane(field=QQ):
    return mk_algebra(field, ("x", "y"), [])


def S_and_k(S):
    return free_module(S, (0,)), residue_field(S)


def nz(table):
    if hasattr(table, "nonzero_entries"):
        return dict(table.nonzero_entries())
    return {d: v for d, v in table.items() if v}


def nz_map(tables):
    return {n: nz(t) for n, t in sorted(tables.items())}


def totals(tables):
    return [t.total() for _, t in sorted(tables.items())]
