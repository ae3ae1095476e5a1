"""Complexes: validation, shifts, Koszul, hom/tensor, truncation, cone."""

import pytest

from dualred import (
    QQ,
    ComplexOfModules,
    FreeComplex,
    OutsideValidityWindow,
    cone,
    free_module,
    free_resolution,
    good_truncate_below,
    hom_into_module,
    koszul_complex,
    mat_apply,
    mat_compose,
    parse_poly,
    prune_free_complex,
    residue_field,
    tensor_with_module,
)
from helpers import nz, poly_plane, x2, x2y2
from oracle_dense import MonoQuotient, matrix_dims_by_degree


def pp(A, t):
    return parse_poly(t, A.ring)


def test_free_complex_rejects_bad_differentials():
    S = x2()
    with pytest.raises(ValueError, match="d o d"):
        FreeComplex(
            S,
            0,
            {0: (0,), 1: (1,), 2: (1,)},
            {1: [{0: pp(S, "x")}], 2: [{0: pp(S, "1")}]},
        )
    # inhomogeneous entry relative to declared generator degrees
    with pytest.raises(Exception):
        FreeComplex(S, 0, {0: (0,), 1: (0,)}, {1: [{0: pp(S, "x")}]})


def test_mat_apply_and_compose():
    S = poly_plane()
    x, y = S.ring.var("x"), S.ring.var("y")
    cols = [{0: x}, {0: y}]
    assert mat_apply(S, cols, {0: x, 1: y}) == {0: x * x + y * y}
    comp = mat_compose(S, [{0: x, 1: y}], [{0: x}])
    assert comp == [{0: x * x, 1: x * y}]


def test_koszul_regular_sequence():
    P = poly_plane()
    K = koszul_complex(P, [P.ring.var("x"), P.ring.var("y")])
    assert (K.lo, K.hi) == (0, 2)
    assert [K.rank(i) for i in (0, 1, 2)] == [1, 2, 1]
    assert nz(K.homology_at(0).hilbert((-1, 4))) == {0: 1}
    assert K.homology_at(1).is_zero()
    assert K.homology_at(2).is_zero()


def test_koszul_self_duality():
    # Hom(K, P) of the Koszul complex is the Koszul complex again, placed
    # in degrees -m..0 with the top twist: its only homology is k at
    # index -m, internal degree -(sum of weights)
    P = poly_plane()
    K = koszul_complex(P, [P.ring.var("x"), P.ring.var("y")])
    D = hom_into_module(K, free_module(P, (0,)))
    assert (D.lo, D.hi) == (-2, 0)
    assert [D.rank(i) for i in (-2, -1, 0)] == [1, 2, 1]
    for i in (-1, 0):
        assert D.homology_at(i).is_zero()
    assert nz(D.homology_at(-2).hilbert((-4, 4))) == {-2: 1}


def test_koszul_detects_non_regularity():
    # over k[x,y]/(x^2, y^2) the sequence (x, y) is far from regular;
    # expected H_1 dimensions computed densely from kernel minus image
    S = x2y2()
    O = MonoQuotient(0, (1, 1), [(2, 0), (0, 2)])
    K = koszul_complex(S, [S.ring.var("x"), S.ring.var("y")])
    d1 = matrix_dims_by_degree(O, (0,), [{0: pp(S, "x")}, {0: pp(S, "y")}], range(0, 6))
    d2 = matrix_dims_by_degree(
        O, (1, 1), [{0: pp(S, "-y"), 1: pp(S, "x")}], range(0, 6)
    )
    H1 = K.homology_at(1)
    for d in range(0, 6):
        kernel = d1[d][0] - d1[d][1]
        image = d2[d][1]
        assert H1.dim_at(d) == kernel - image


def test_shift_moves_window_and_homology():
    P = poly_plane()
    K = koszul_complex(P, [P.ring.var("x"), P.ring.var("y")])
    Ks = K.shift(3)
    assert (Ks.lo, Ks.hi) == (3, 5)
    assert nz(Ks.homology_at(3).hilbert((-1, 2))) == {0: 1}
    back = Ks.shift(-3)
    assert (back.lo, back.hi) == (0, 2)
    assert nz(back.homology_at(0).hilbert((-1, 2))) == {0: 1}


def test_hom_and_tensor_degree_conventions():
    S = x2()
    k = residue_field(S)
    one = FreeComplex(S, 0, {0: (1,)}, {})
    H = hom_into_module(one, k)
    assert nz(H.homology_at(0).hilbert((-3, 3))) == {-1: 1}
    T = tensor_with_module(one, k)
    assert nz(T.homology_at(0).hilbert((-3, 3))) == {1: 1}
    # a two-step free complex: hom flips indices, tensor keeps them
    two = FreeComplex(S, 0, {0: (0,), 1: (1,)}, {1: [{0: pp(S, "x")}]})
    Hh = hom_into_module(two, k)
    assert (Hh.lo, Hh.hi) == (-1, 0)
    Tt = tensor_with_module(two, k)
    assert (Tt.lo, Tt.hi) == (0, 1)
    # x acts as zero on k, so homology is the whole term on both sides
    assert nz(Tt.homology_at(1).hilbert((-3, 3))) == {1: 1}
    assert nz(Hh.homology_at(-1).hilbert((-3, 3))) == {-1: 1}


def test_good_truncate_below_preserves_homology():
    S = x2()
    k = residue_field(S)
    C = free_resolution(k, 4).as_module_complex()
    t0 = good_truncate_below(C, 0)
    assert t0.lo == 0
    assert nz(t0.homology_at(0).hilbert((-2, 2))) == {0: 1}
    for i in (1, 2, 3):
        assert t0.homology_at(i).is_zero()


def test_good_truncate_below_checks_discarded_homology():
    # a complex whose homology below the cut is nonzero must be refused
    # when the trusted window makes that visible
    S = x2()
    k = residue_field(S)
    F = free_resolution(k, 4)
    C = ComplexOfModules(
        S,
        0,
        {i: F.as_module_complex().terms[i] for i in range(0, 5)},
        {i: [dict(c) for c in F.diff[i]] for i in range(1, 5)},
        agree_lo=-1,
        agree_hi=4,
    )
    with pytest.raises(ValueError, match="cannot truncate"):
        good_truncate_below(C, 2)


def test_homology_outside_trusted_window_raises():
    S = x2()
    k = residue_field(S)
    F = free_resolution(k, 4)
    C = F.as_module_complex()
    with pytest.raises(OutsideValidityWindow):
        C.homology_at(4)
    with pytest.raises(OutsideValidityWindow):
        C.homology_at(7)
    # interior degrees stay fine
    assert C.homology_at(3).is_zero()


def test_cone_of_identity_is_exact():
    S = x2()
    X = FreeComplex(S, 0, {0: (0,)}, {})
    cn = cone({0: [{0: pp(S, "1")}]}, X, X)
    for i in range(cn.lo, cn.hi + 1):
        assert cn.homology_at(i).is_zero()


def test_cone_of_zero_map_is_direct_sum():
    S = x2()
    X = FreeComplex(S, 0, {0: (0,)}, {})
    Y = FreeComplex(S, 0, {0: (2,)}, {})
    cn = cone({0: [{}]}, X, Y)
    assert (cn.lo, cn.hi) == (0, 1)
    assert nz(cn.homology_at(0).hilbert((-6, 6))) == nz(
        free_module(S, (2,)).hilbert((-6, 6))
    )
    assert nz(cn.homology_at(1).hilbert((-6, 6))) == nz(
        free_module(S, (0,)).hilbert((-6, 6))
    )


def test_prune_removes_unit_pairs():
    S = x2()
    U = FreeComplex(
        S, 0, {0: (0, 1), 1: (1,)}, {1: [{0: pp(S, "x"), 1: pp(S, "1")}]}
    )
    pu = prune_free_complex(U)
    assert (pu.lo, pu.hi) == (0, 0)
    assert pu.rank(0) == 1
    # homology unchanged by pruning
    assert nz(pu.homology_at(0).hilbert((-4, 4))) == nz(
        U.homology_at(0).hilbert((-4, 4))
    )
    # a minimal complex passes through untouched
    P = poly_plane()
    K = koszul_complex(P, [P.ring.var("x"), P.ring.var("y")])
    assert [prune_free_complex(K).rank(i) for i in (0, 1, 2)] == [1, 2, 1]


def test_module_complex_round_trip():
    P = poly_plane()
    K = koszul_complex(P, [P.ring.var("x"), P.ring.var("y")])
    C = K.as_module_complex()
    F = C.as_free_complex()
    assert [F.rank(i) for i in (0, 1, 2)] == [1, 2, 1]
    assert nz(F.homology_at(0).hilbert((-1, 3))) == {0: 1}
