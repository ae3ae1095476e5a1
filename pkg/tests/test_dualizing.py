"""Dualizing data: frozen homology tables, duality checks, smoothness
diagnostics.

Expected tables are the graded K-duals computed by hand from two-term
ambient resolutions (quotients by one power are complete intersections),
or the weight-sum twist for free polynomial algebras.
"""

import pytest

from dualred import (
    QQ,
    NotConcentrated,
    NotFiniteDimensional,
    PresentationsNotIsomorphic,
    build_dualizing,
    biduality_check,
    concentrated_ambient_dual,
    factorization_independence,
    finite_dual_check,
    free_module,
    homothety_check,
    nonsmooth_certificate,
    parse_poly,
    residue_field,
    smooth_diagnostics,
)
from helpers import W, mk_algebra, nz, poly_line, poly_plane, x2, x2y2, x3


def test_dualizing_tables_of_artinian_hypersurfaces():
    D = build_dualizing(x2(), W)
    assert D.concentrated_at == 0
    assert nz(D.tables[0]) == {-1: 1, 0: 1}
    assert nz(D.canonical_module.hilbert(W)) == {-1: 1, 0: 1}

    D3 = build_dualizing(x3(), W)
    assert D3.concentrated_at == 0
    assert nz(D3.tables[0]) == {-2: 1, -1: 1, 0: 1}

    D22 = build_dualizing(x2y2(), W)
    assert D22.concentrated_at == 0
    assert nz(D22.tables[0]) == {-2: 1, -1: 2, 0: 1}

    # weighted variable: the dual mirrors the weighted dimension count
    Sw = mk_algebra(QQ, ("x",), ["x^2"], weights=(2,))
    Dw = build_dualizing(Sw, W)
    assert Dw.concentrated_at == 0
    assert nz(Dw.tables[0]) == {-2: 1, 0: 1}


def test_dualizing_of_free_algebras_is_shifted_twisted_free():
    # concentration degree equals the Krull dimension, the module there is
    # free of rank one twisted by the weight sum
    for P, dim, sw in [(poly_line(), 1, 1), (poly_plane(), 2, 2)]:
        D = build_dualizing(P, W)
        assert D.concentrated_at == dim
        want = free_module(P, (sw,)).hilbert(W)
        assert nz(D.tables[dim]) == nz(want)

    Pw = mk_algebra(QQ, ("x",), [], weights=(2,))
    Dw = build_dualizing(Pw, W)
    assert Dw.concentrated_at == 1
    assert nz(Dw.tables[1]) == nz(free_module(Pw, (2,)).hilbert(W))


def test_dualizing_tables_ignore_monomial_order():
    A = mk_algebra(QQ, ("x", "y"), ["x^2", "y^2"], order="grevlex")
    B = mk_algebra(QQ, ("x", "y"), ["x^2", "y^2"], order="lex")
    DA = build_dualizing(A, W)
    DB = build_dualizing(B, W)
    assert DA.concentrated_at == DB.concentrated_at
    assert all(DA.tables[i] == DB.tables[i] for i in DA.tables)


def test_ambient_dual_of_residue_field_is_itself():
    # k is its own graded dual, placed back in homological degree 0
    for S in (x2(), x3()):
        omega_k, at = concentrated_ambient_dual(residue_field(S), W)
        assert at == 0
        assert nz(omega_k.hilbert(W)) == {0: 1}


def test_ambient_dual_spread_is_refused():
    Q = poly_line()
    M = free_module(Q, (0,)).direct_sum(residue_field(Q))
    with pytest.raises(NotConcentrated):
        concentrated_ambient_dual(M, W)


def test_biduality_on_small_modules():
    S = x2()
    D = build_dualizing(S, W)
    for M in (free_module(S, (0,)), residue_field(S)):
        report = biduality_check(M, D, 3, W)
        assert report.statement == "biduality"
        assert report.passed, report.first_discrepancy
        assert report.meta["concentrated_at"] == 0

    T = mk_algebra(QQ, ("x", "y"), ["x*y"])
    DT = build_dualizing(T, W)
    report = biduality_check(residue_field(T), DT, 3, W)
    assert report.passed, report.first_discrepancy


def test_homothety_on_small_algebras():
    for S in (x2(), poly_line()):
        report = homothety_check(build_dualizing(S, W), 3, W)
        assert report.statement == "homothety"
        assert report.passed, report.first_discrepancy


def test_finite_dual_check():
    S0 = mk_algebra(QQ, (), [])
    for S in (S0, x2(), x3()):
        report = finite_dual_check(S, W)
        assert report.passed, report.first_discrepancy
        assert report.meta["concentrated_at"] == 0
    with pytest.raises(NotFiniteDimensional):
        finite_dual_check(poly_line(), W)


def test_factorization_independence_two_presentations():
    A = mk_algebra(QQ, ("x", "y"), ["x*y"])
    B = mk_algebra(QQ, ("x", "y", "z"), ["x*y", "z - x - y"])
    fwd = [parse_poly(t, B.ring) for t in ("x", "y")]
    inv = [parse_poly(t, A.ring) for t in ("x", "y", "x + y")]
    report = factorization_independence(A, B, fwd, inv, W)
    assert report.statement == "factorization-independence"
    assert report.passed, report.first_discrepancy
    assert (
        report.meta["concentrated_first"] == report.meta["concentrated_second"]
    )

    # same curve, one presentation adding a weight-2 variable
    C = poly_line()
    E = mk_algebra(QQ, ("x", "y"), ["y - x^2"], weights=(1, 2))
    fwd = [parse_poly("x", E.ring)]
    inv = [parse_poly(t, C.ring) for t in ("x", "x^2")]
    report = factorization_independence(C, E, fwd, inv, W)
    assert report.passed, report.first_discrepancy


def test_factorization_independence_rejects_non_isomorphisms():
    C = poly_line()
    E = mk_algebra(QQ, ("x", "y"), ["y - x^2"], weights=(1, 2))
    # wrong degree: x cannot land on the weight-2 variable
    with pytest.raises(PresentationsNotIsomorphic):
        factorization_independence(
            C, E, [parse_poly("y", E.ring)], [parse_poly("x", C.ring)], W
        )
    # degrees fine but the composites are not the identity
    with pytest.raises(PresentationsNotIsomorphic, match="identity"):
        factorization_independence(
            C,
            poly_line(),
            [parse_poly("2 * x", poly_line().ring)],
            [parse_poly("x", C.ring)],
            W,
        )


def test_smooth_diagnostics_pattern():
    P = poly_line()
    report = smooth_diagnostics(P, 3, W)
    assert report.statement == "smooth-pattern"
    assert report.passed, report.first_discrepancy
    assert report.meta["relative_dimension"] == 1
    assert report.meta["twist_at_d"] == -1

    P2 = poly_plane()
    report2 = smooth_diagnostics(P2, 3, W)
    assert report2.passed, report2.first_discrepancy
    assert report2.meta["relative_dimension"] == 2
    assert report2.meta["twist_at_d"] == -2


def test_smooth_diagnostics_fails_on_singular_input():
    report = smooth_diagnostics(x2(), 3, W)
    assert not report.passed
    assert report.first_discrepancy is not None


def test_nonsmooth_certificate():
    v = nonsmooth_certificate(x2(), 3)
    assert v.is_certified
    assert v.kind == "not-smooth"
    assert v.witness == 3
    assert v.betti == [1, 1, 1, 1]
    assert repr(v) == "NotSmooth(3)"

    w = nonsmooth_certificate(poly_line(), 3)
    assert not w.is_certified
    assert w.witness is None
    assert repr(w) == "Inconclusive(3)"

    with pytest.raises(ValueError, match="Krull dimension"):
        nonsmooth_certificate(poly_line(), 1)

    u = nonsmooth_certificate(x2y2(), 2)
    assert u.is_certified and u.witness == 2
