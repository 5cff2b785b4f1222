import numpy as np
import pytest

from threshq.gram import construct_library, gram
from threshq.orthosearch import (
    Feasible,
    Infeasible,
    SupportPattern,
    decide_column_orthogonal,
    low_q_search,
    ssp_check,
    verify_feasible,
    verify_infeasible,
)
from threshq.sequences import enumerate_connected, graph_from_text
from threshq.spectra import cluster_spectrum, eigen_sym, in_pattern

rng = np.random.default_rng(7)


def gate(text, seed=0):
    return decide_column_orthogonal(SupportPattern.from_graph(graph_from_text(text)), seed=seed)


# ---------------------------------------------------------------- the gate


def test_full_support_k_le_t_feasible():
    # complete split graphs with enough dominating vertices
    for text in ("0011", "000111", "00001111"):
        out = gate(text)
        assert isinstance(out, Feasible)
        P = SupportPattern.from_graph(graph_from_text(text))
        assert verify_feasible(P, out.matrix)


def test_two_rows_three_full_columns_infeasible():
    # (0,1,0,0,1,1): three isolated columns meeting in only two final rows
    out = gate("010011")
    assert isinstance(out, Infeasible)
    P = SupportPattern.from_graph(graph_from_text("010011"))
    assert verify_infeasible(P, out)


def test_prop38_staircase_feasible():
    out = gate("00100111")
    assert isinstance(out, Feasible)


def test_pendant_tail_infeasible():
    # trailing run of ones of length one forces a zero in a wider column
    out = gate("010101")
    assert isinstance(out, Infeasible)
    P = SupportPattern.from_graph(graph_from_text("010101"))
    assert verify_infeasible(P, out)


@pytest.mark.parametrize("n", range(2, 9))
def test_gate_outputs_always_verify(n):
    for seq in enumerate_connected(n):
        G = graph_from_text(seq.text)
        P = SupportPattern.from_graph(G)
        out = decide_column_orthogonal(P, seed=3)
        if isinstance(out, Feasible):
            assert verify_feasible(P, out.matrix), seq.text
        else:
            assert isinstance(out, Infeasible), seq.text
            assert verify_infeasible(P, out), seq.text


def test_staircase_structure_enforced():
    S = np.array([[True, False], [False, True]])
    with pytest.raises(ValueError):
        SupportPattern(S).suffix_starts()


def test_budget_exhaustion_reports_unknown():
    from threshq.orthosearch import Unknown

    P = SupportPattern.from_graph(graph_from_text("0011"))
    out = decide_column_orthogonal(P, budget=0)
    assert isinstance(out, Unknown) and out.attempts == 0


@pytest.mark.parametrize("n", [10, 12])
def test_gate_completions_scale_to_larger_orders(n):
    rng_local = np.random.default_rng(n)
    seqs = list(enumerate_connected(n))
    for idx in rng_local.choice(len(seqs), size=40, replace=False):
        G = graph_from_text(seqs[idx].text)
        P = SupportPattern.from_graph(G)
        out = decide_column_orthogonal(P, seed=5)
        if isinstance(out, Feasible):
            assert verify_feasible(P, out.matrix), seqs[idx].text
        else:
            assert isinstance(out, Infeasible) and verify_infeasible(P, out), seqs[idx].text


# ---------------------------------------------------------------- ssp


def test_ssp_prop_a15a19():
    rep = ssp_check(gram(construct_library("prop_a15a19")))
    assert rep.is_ssp and rep.nullity == 0


def test_ssp_thm00_t3():
    assert ssp_check(gram(construct_library("thm00", t=3))).is_ssp


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ssp_identity_fails(n):
    rep = ssp_check(np.eye(n))
    assert not rep.is_ssp
    assert rep.nullity == n * (n - 1) // 2
    X = rep.witness
    assert X is not None
    assert np.allclose(X, X.T) and np.abs(np.diag(X)).max() == 0
    assert np.allclose(np.eye(n) @ X - X @ np.eye(n), 0)


def test_ssp_invariance_under_signature_and_scaling():
    for _ in range(5):
        n = 6
        A = rng.normal(size=(n, n))
        A = (A + A.T) / 2
        A[np.abs(A) < 0.3] = 0.0  # carve out some pattern
        base = ssp_check(A).nullity
        s = np.where(rng.random(n) < 0.5, -1.0, 1.0)
        assert ssp_check((A * s).T * s).nullity == base
        assert ssp_check(3.7 * A).nullity == base


def test_ssp_witness_satisfies_constraints():
    A = gram(construct_library("Tn2"))  # plenty of zero pattern
    rep = ssp_check(A)
    if rep.witness is not None:
        X = rep.witness
        P = np.abs(A) > 1e-8 * np.abs(A).max()
        np.fill_diagonal(P, False)
        assert np.abs(X[P]).max(initial=0.0) < 1e-9
        assert np.abs(np.diag(X)).max() < 1e-12
        assert np.abs(A @ X - X @ A).max() < 1e-7


# ---------------------------------------------------------------- search


def test_search_k4_rank_one_list():
    G = graph_from_text("0111")
    W = low_q_search(G, 2, (1, 3), budget=(200, 200), seed=3)
    assert W is not None
    assert in_pattern(W, G)
    assert cluster_spectrum(eigen_sym(W)).multiplicities == (1, 3)


def test_search_alternating_six_vertices():
    G = graph_from_text("010101")
    W = low_q_search(G, 3, (3, 2, 1), seed=3)
    assert W is not None
    assert in_pattern(W, G)
    assert cluster_spectrum(eigen_sym(W)).q == 3


def test_search_finds_q2_on_seven_vertices():
    G = graph_from_text("0101011")
    W = low_q_search(G, 2, (3, 4), budget=(200, 200), seed=0)
    assert W is not None and in_pattern(W, G)
    assert cluster_spectrum(eigen_sym(W)).multiplicities == (3, 4)


def test_search_does_not_fabricate_q3_on_exact4():
    G = graph_from_text("0001001")
    W = low_q_search(G, 3, (2, 3, 2), budget=(40, 150), seed=3)
    assert W is None  # absence of success, consistent with the exact value 4


def test_search_validates_inputs():
    G = graph_from_text("0101")
    with pytest.raises(ValueError):
        low_q_search(G, 2, (1, 1))
    with pytest.raises(ValueError):
        low_q_search(G, 3, (2, 2))


def test_search_trace_csv():
    from threshq.orthosearch import SearchTrace

    trace = SearchTrace()
    G = graph_from_text("0111")
    low_q_search(G, 2, (1, 3), budget=(5, 30), seed=3, trace=trace)
    lines = trace.to_csv().strip().splitlines()
    assert lines[0] == "restart,iteration,residual"
    assert len(lines) > 1 and lines[1].startswith("0,0,")
