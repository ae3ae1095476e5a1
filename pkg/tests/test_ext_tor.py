"""Graded Ext and Tor tables checked degreewise against the dense bar
oracle, plus the hyper variants on small complexes."""

import pytest

from dualred import (
    GF,
    ComplexOfModules,
    OutsideValidityWindow,
    ext_modules,
    ext_tables,
    free_module,
    hyper_ext_modules,
    hyper_ext_tables,
    hyper_tor_modules,
    hyper_tor_tables,
    residue_field,
    stable_under_deepening,
    tor_modules,
    tor_tables,
)
from helpers import W, nz, x2, x2y2, x3
from oracle_dense import MonoQuotient, oracle_ext, oracle_tor

NS = list(range(4))


def O_x2(char=0):
    return MonoQuotient(char, (1,), [(2,)])


def O_x3(char=0):
    return MonoQuotient(char, (1,), [(3,)])


def O_x2y2(char=0):
    return MonoQuotient(char, (1, 1), [(2, 0), (0, 2)])


def engine_vs_oracle_ext(S, A, pairs, n_max):
    for (M, N), (sM, sN) in pairs:
        got = ext_tables(M, N, range(n_max + 1), W)
        want = oracle_ext(A, sM, sN, n_max)
        for n in range(n_max + 1):
            assert nz(got[n]) == want[n], (sM, sN, n)


def engine_vs_oracle_tor(S, A, pairs, n_max):
    for (M, N), (sM, sN) in pairs:
        got = tor_tables(M, N, range(n_max + 1), W)
        want = oracle_tor(A, sM, sN, n_max)
        for n in range(n_max + 1):
            assert nz(got[n]) == want[n], (sM, sN, n)


def standard_pairs(S):
    k = residue_field(S)
    F = free_module(S, (0,))
    sk, sF = [("k", 0)], [("free", 0)]
    return [
        ((k, k), (sk, sk)),
        ((k, F), (sk, sF)),
        ((F, k), (sF, sk)),
        ((F, F), (sF, sF)),
    ]


def test_ext_tables_dual_numbers_rational():
    S = x2()
    engine_vs_oracle_ext(S, O_x2(), standard_pairs(S), 3)


def test_ext_tables_dual_numbers_modular():
    S = x2(GF(101))
    engine_vs_oracle_ext(S, O_x2(101), standard_pairs(S), 3)


def test_tor_tables_dual_numbers_both_characteristics():
    S = x2()
    engine_vs_oracle_tor(S, O_x2(), standard_pairs(S), 3)
    Sp = x2(GF(101))
    engine_vs_oracle_tor(Sp, O_x2(101), standard_pairs(Sp), 3)


def test_ext_and_tor_cusp_relation():
    S = x3()
    engine_vs_oracle_ext(S, O_x3(), standard_pairs(S), 3)
    engine_vs_oracle_tor(S, O_x3(), standard_pairs(S), 3)


def test_ext_and_tor_two_variable_quotient():
    S = x2y2()
    k = residue_field(S)
    pairs = [((k, k), ([("k", 0)], [("k", 0)]))]
    engine_vs_oracle_ext(S, O_x2y2(), pairs, 2)
    engine_vs_oracle_tor(S, O_x2y2(), pairs, 2)


def test_twisted_inputs_match_oracle():
    # free_module(S, (t,)) has its generator in degree t; residue_field
    # twisted by a sits in degree -a.  The oracle takes generator degrees.
    S = x2()
    M = free_module(S, (2,))
    N = residue_field(S, twist=1)
    pairs = [((M, N), ([("free", 2)], [("k", -1)]))]
    engine_vs_oracle_ext(S, O_x2(), pairs, 3)
    engine_vs_oracle_tor(S, O_x2(), pairs, 3)
    pairs = [((N, M), ([("k", -1)], [("free", 2)]))]
    engine_vs_oracle_ext(S, O_x2(), pairs, 3)
    engine_vs_oracle_tor(S, O_x2(), pairs, 3)


def test_direct_sum_additivity():
    S = x2()
    k = residue_field(S)
    M = free_module(S, (1,)).direct_sum(residue_field(S, twist=-1))
    lhs = ext_tables(M, k, NS, W)
    a = ext_tables(free_module(S, (1,)), k, NS, W)
    b = ext_tables(residue_field(S, twist=-1), k, NS, W)
    for n in NS:
        assert lhs[n] == a[n] + b[n]
    lhs = tor_tables(k, M, NS, W)
    a = tor_tables(k, free_module(S, (1,)), NS, W)
    b = tor_tables(k, residue_field(S, twist=-1), NS, W)
    for n in NS:
        assert lhs[n] == a[n] + b[n]


def test_tor_is_symmetric():
    S = x2()
    k = residue_field(S)
    M = residue_field(S, twist=2)
    for n in NS:
        assert tor_tables(k, M, NS, W)[n] == tor_tables(M, k, NS, W)[n]
    S2 = x2y2()
    k2 = residue_field(S2)
    F2 = free_module(S2, (1,))
    for n in range(3):
        assert tor_tables(k2, F2, NS, W)[n] == tor_tables(F2, k2, NS, W)[n]


def test_ext_modules_are_honest_presentations():
    S = x2()
    k = residue_field(S)
    mods = ext_modules(k, k, NS)
    for n in NS:
        E = mods[n]
        assert E.is_finite_dimensional()
        assert E.dim_total() == 1
        assert nz(E.hilbert(W)) == {-n: 1}
    tmods = tor_modules(k, k, NS)
    for n in NS:
        assert nz(tmods[n].hilbert(W)) == {n: 1}


def test_depth_control():
    S = x2()
    k = residue_field(S)
    assert ext_tables(k, k, [3], W, depth=4) == ext_tables(k, k, [3], W)
    # a resolution stopped exactly at n leaves Ext^n outside the trusted
    # window
    with pytest.raises(OutsideValidityWindow):
        ext_modules(k, k, [3], depth=3)
    with pytest.raises(OutsideValidityWindow):
        tor_modules(k, k, [3], depth=3)


def test_stable_under_deepening_passes_and_fails():
    S = x2()
    k = residue_field(S)
    tables = stable_under_deepening(
        lambda d: tor_tables(k, k, NS, W, depth=d), 5
    )
    assert tables == tor_tables(k, k, NS, W)
    with pytest.raises(OutsideValidityWindow, match="window not certified"):
        stable_under_deepening(lambda d: d, 5)


def test_hyper_functors_on_one_term_complex():
    S = x2()
    k = residue_field(S)
    C = ComplexOfModules(S, 0, {0: k}, {})
    assert hyper_ext_tables(C, k, NS, W) == ext_tables(k, k, NS, W)
    assert hyper_tor_tables(C, k, NS, W) == tor_tables(k, k, NS, W)


def test_hyper_functors_shift_coherence():
    # a term placed at complex index i contributes Ext^{n-i} and Tor_{n-i}
    # to output degree n
    S = x2()
    k = residue_field(S)
    C = ComplexOfModules(S, 0, {0: k}, {}).shift(1)
    ext_base = ext_tables(k, k, NS, W)
    tor_base = tor_tables(k, k, NS, W)
    hy_ext = hyper_ext_tables(C, k, [n + 1 for n in NS], W)
    hy_tor = hyper_tor_tables(C, k, [n + 1 for n in NS], W)
    for n in NS:
        assert hy_ext[n + 1] == ext_base[n]
        assert hy_tor[n + 1] == tor_base[n]


def test_hyper_functors_two_term_zero_differential():
    S = x2()
    k = residue_field(S)
    Sf = free_module(S, (0,))
    C = ComplexOfModules(S, 0, {0: k, 1: Sf}, {1: [{}]})
    e_k = ext_tables(k, k, NS, W)
    e_S = ext_tables(Sf, k, NS, W)
    t_k = tor_tables(k, k, NS, W)
    t_S = tor_tables(Sf, k, NS, W)
    hy_ext = hyper_ext_tables(C, k, NS, W)
    hy_tor = hyper_tor_tables(C, k, NS, W)
    for n in NS:
        want_ext = e_k[n] + (e_S[n - 1] if n >= 1 else e_S[0].zero(W))
        want_tor = t_k[n] + (t_S[n - 1] if n >= 1 else t_S[0].zero(W))
        assert hy_ext[n] == want_ext
        assert hy_tor[n] == want_tor


def test_hyper_guards_on_truncated_complexes():
    S = x2()
    k = residue_field(S)
    C = ComplexOfModules(
        S, 0, {0: k}, {}, agree_lo=-1, agree_hi=None
    )
    with pytest.raises(OutsideValidityWindow):
        hyper_ext_modules(C, k, [2])
    with pytest.raises(OutsideValidityWindow, match="good truncation"):
        hyper_tor_modules(C, k, [0])
