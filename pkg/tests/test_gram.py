import math

import numpy as np
import pytest

from threshq.gram import (
    BadAngle,
    BadParams,
    DegenerateRow,
    DiagonalNotEigenvalue,
    GramFactor,
    cogram,
    construct_library,
    dup_realization,
    gram,
    jdup_realization,
    orthogonal_certificate,
    section12_factor,
)
from threshq.sequences import creation_order_of, dup_graph, graph_from_text, jdup_graph
from threshq.spectra import assert_spectrum, eigen_sym, in_pattern, pattern_matrix, q_of_matrix

ALL_IDS_NO_PARAMS = ["thm060", "thm061", "thm01", "thm10", "thm05", "thm06",
                     "qlt4", "Tn2", "Tn3_mid", "prop_a15a19", "prop37",
                     "prop38", "prop40", "prop41"]


def catalog_instances():
    out = [construct_library(cid) for cid in ALL_IDS_NO_PARAMS]
    out += [construct_library("thm00", t=t) for t in (2, 3, 4, 5)]
    out += [construct_library("salter", s=s) for s in (2, 3, 4)]
    out += [construct_library("c4hub", n=n) for n in (5, 6, 8, 10)]
    out += [construct_library("ub_case1", p1=2, p2=0), construct_library("ub_case1", p1=2, p2=2)]
    return out


def test_every_construction_verifies():
    for f in catalog_instances():
        A = gram(f)
        assert in_pattern(A, f.target), f.construction_id
        if f.expected_spectrum is not None:
            assert assert_spectrum(A, list(f.expected_spectrum), atol=f.spectrum_atol), \
                f.construction_id
        # nonzero spectra of gram and cogram agree
        wg = eigen_sym(A)
        wc = eigen_sym(cogram(f))
        nz = lambda w: np.sort(w[np.abs(w) > 1e-8])
        assert np.allclose(nz(wg), nz(wc), atol=1e-8), f.construction_id
        # documented duplicable vertices have their diagonal in the spectrum
        for v, lam in f.dup_slots:
            assert abs(A[v, v] - lam) < 1e-9
            assert np.min(np.abs(wg - lam)) < 1e-8


def test_factors_cover_every_edge():
    # clique-cover semantics: each edge is covered by at least one column
    for f in catalog_instances():
        adj = f.target.adjacency if hasattr(f.target, "adjacency") else f.target
        n = f.n
        for i in range(n):
            for j in range(i + 1, n):
                if adj[i, j]:
                    cover = np.abs(f.M[i]) * np.abs(f.M[j])
                    assert cover.max() > 1e-9, (f.construction_id, i, j)


def test_salter_cogram_is_scaled_identity():
    for s in (2, 3, 4):
        f = construct_library("salter", s=s)
        assert np.allclose(cogram(f), (s * s - s + 1) * np.eye(s), atol=1e-9)


def test_thm060_cogram():
    f = construct_library("thm060")
    assert np.allclose(cogram(f), [[5, 2], [2, 5]], atol=1e-12)
    assert sorted(np.round(eigen_sym(cogram(f)), 9)) == [3, 7]


def test_thm05_cogram():
    f = construct_library("thm05")
    assert np.allclose(cogram(f), 11 * np.eye(3) - 2 * (np.ones((3, 3)) - np.eye(3)), atol=1e-9)


def test_single_column_factor():
    M = np.array([[1.0], [1.0]])
    G = graph_from_text("01")
    f = GramFactor(M, G, "adhoc")
    assert np.allclose(gram(f), np.ones((2, 2)))


def test_bad_construction_params():
    with pytest.raises(BadParams):
        construct_library("nope")
    with pytest.raises(BadParams):
        construct_library("thm00", t=1)
    with pytest.raises(BadParams):
        construct_library("c4hub", n=4)
    with pytest.raises(BadParams):
        construct_library("thm00", bogus=3)


def test_ub_case1_even_parity_instances():
    for p1, p2 in [(2, 0), (0, 2), (2, 2), (4, 0)]:
        f = construct_library("ub_case1", p1=p1, p2=p2)
        s = p1 + p2 + 1
        A = gram(f)
        assert in_pattern(A, f.target)
        assert q_of_matrix(A) <= (s + 9) // 2


def test_section12_all_parities():
    for s in range(2, 7):
        for m in range(1, s + 1):
            f = section12_factor(s, m)
            A = gram(f)
            assert in_pattern(A, f.target)
            assert q_of_matrix(A) <= (s + 9) // 2
            w = eigen_sym(A)
            for v, lam in f.dup_slots:
                assert abs(A[v, v] - lam) < 1e-9
                assert np.min(np.abs(w - lam)) < 1e-8


# ---------------------------------------------------------------- dup


def dup_pattern_ok(A, C, v):
    """C's pattern must be A's with an unjoined copy of v appended."""
    n = A.shape[0]
    P = pattern_matrix(A)
    Q = np.zeros((n + 1, n + 1), dtype=bool)
    Q[:n, :n] = P
    Q[n, :n] = P[v]
    Q[:n, n] = P[:, v]
    return np.array_equal(pattern_matrix(C), Q)


def test_dup_thm060_example():
    f = construct_library("thm060")
    A = gram(f)
    C = dup_realization(A, 0, 3.0, theta=math.pi / 4)
    assert assert_spectrum(C, [(0.0, 2), (3.0, 2), (7.0, 1)])
    assert abs(C[0, 4]) < 1e-12
    bits, order = creation_order_of(pattern_matrix(C))
    assert bits == (0, 0, 1, 0, 1)
    assert in_pattern(C[np.ix_(order, order)], graph_from_text("00101"))


def test_dup_trivial_1x1():
    C = dup_realization(np.zeros((1, 1)), 0, 0.0)
    assert np.allclose(C, 0.0) and C.shape == (2, 2)


def test_dup_thm01_pendant():
    f = construct_library("thm01")
    C = dup_realization(gram(f), 3, 7.0)
    assert assert_spectrum(C, [(0.0, 2), (7.0, 2), (13.0, 2)])
    bits, _ = creation_order_of(pattern_matrix(C))
    assert bits == (0, 0, 1, 0, 0, 1)


def test_dup_theta_grid():
    f = construct_library("thm060")
    A = gram(f)
    for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
        C = dup_realization(A, 0, 3.0, theta=theta)
        assert dup_pattern_ok(A, C, 0)
        assert assert_spectrum(C, [(0.0, 2), (3.0, 2), (7.0, 1)])


def test_dup_errors():
    A = gram(construct_library("thm060"))
    with pytest.raises(DiagonalNotEigenvalue):
        dup_realization(A, 1, 3.0)  # a_11 = 1 != 3
    with pytest.raises(DiagonalNotEigenvalue):
        dup_realization(A, 2, A[2, 2])  # 5 is not an eigenvalue
    with pytest.raises(BadAngle):
        dup_realization(A, 0, 3.0, theta=0.0)


# ---------------------------------------------------------------- jdup


def test_jdup_k2():
    K2 = np.array([[0.0, 1.0], [1.0, 0.0]])
    C = jdup_realization(K2, 0)
    # K3 realization, smallest eigenvalue duplicated, q stays 2
    assert assert_spectrum(C, [(-1.0, 2), (1.0, 1)])
    assert q_of_matrix(C) == 2
    assert pattern_matrix(C).sum() == 6


def test_jdup_salter_keeps_q2():
    f = construct_library("salter", s=2)
    A = gram(f)
    C = jdup_realization(A, 4)  # a vertex of the final clique
    assert q_of_matrix(C) == 2
    bits, _ = creation_order_of(pattern_matrix(C))
    assert bits == (0, 1, 0, 1, 1, 1)
    # iterate: one more joined duplication stays at q = 2
    C2 = jdup_realization(C, 4)
    assert q_of_matrix(C2) == 2


def test_jdup_degenerate_row():
    A = np.diag([1.0, 1.0])  # empty pattern, every diagonal equals lambda_min
    with pytest.raises(DegenerateRow):
        jdup_realization(A, 0)


def test_jdup_submatrix_recovery():
    # deleting the copy recovers A up to the documented cos-theta rescaling
    rng = np.random.default_rng(5)
    theta = math.pi / 4
    for _ in range(10):
        n = 5
        A = rng.normal(size=(n, n))
        A = (A + A.T) / 2
        v = int(rng.integers(n))
        lam = eigen_sym(A)[0]
        if abs(A[v, v] - lam) < 1e-6:
            continue
        C = jdup_realization(A, v, theta=theta)
        D = C[:n, :n]
        mask = np.ones(n, dtype=bool)
        mask[v] = False
        assert np.allclose(D[np.ix_(mask, mask)], A[np.ix_(mask, mask)], atol=1e-12)
        assert np.allclose(D[v, mask], math.cos(theta) * A[v, mask], atol=1e-12)
        assert abs(D[v, v] - (math.cos(theta) ** 2 * A[v, v]
                              + math.sin(theta) ** 2 * lam)) < 1e-12


def test_graph_level_duplication_agrees_with_matrix_level():
    f = construct_library("thm05")
    G = f.target
    A = gram(f)
    C = dup_realization(A, 0, 7.0)
    bits, _ = creation_order_of(pattern_matrix(C))
    assert bits == dup_graph(G, 0).creation.bits
    C = jdup_realization(A, 1)
    bits, _ = creation_order_of(pattern_matrix(C))
    assert bits == jdup_graph(G, 1).creation.bits


# ---------------------------------------------------------------- certificates


def test_orthogonal_certificate_prop37():
    from threshq.gram import PROP37_BLOCK

    G = graph_from_text("00101011")
    A = orthogonal_certificate(PROP37_BLOCK, G)
    assert in_pattern(A, G) and q_of_matrix(A) == 2


def test_orthogonal_certificate_prop40():
    from threshq.gram import PROP40_BLOCK

    G = graph_from_text("00011011")
    A = orthogonal_certificate(PROP40_BLOCK, G)
    assert in_pattern(A, G) and q_of_matrix(A) == 2


def test_orthogonal_certificate_two_eigenvalues_psd():
    from threshq.gram import PROP40_BLOCK

    G = graph_from_text("00011011")
    A = orthogonal_certificate(PROP40_BLOCK, G)
    w = eigen_sym(A)
    assert w[0] >= -1e-9
    k = len(G.isolated)
    assert assert_spectrum(A, [(0.0, G.n - k), (w[-1], k)], atol=1e-8)


def test_orthogonal_certificate_rejects_bad_block():
    G = graph_from_text("001")  # one dominating row, two isolated columns
    with pytest.raises(BadParams):
        orthogonal_certificate(np.array([[1.0]]), G)  # wrong shape
    with pytest.raises(BadParams):
        orthogonal_certificate(np.array([[1.0, 1.0]]), G)  # cannot be orthogonal
