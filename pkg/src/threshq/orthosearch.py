"""Column-orthogonal completions, the strong spectral property, and a
low-q projection search.

The q=2 gate: a connected threshold graph has q(G)=2 iff some A in S(G)
has a column-orthogonal dominating-by-isolated submatrix.  Column supports
of that submatrix are nested suffixes of the dominating vertices, so
feasibility reduces to counting columns against suffix sizes; the
infeasibility witness is the counting argument itself (c columns whose
mutual overlaps live in r < c rows force a rank contradiction).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .sequences import ThresholdGraph
from .spectra import cluster_spectrum, eigen_sym, eigen_sym_vectors, in_pattern, pattern_matrix


# ---------------------------------------------------------------------------
# support patterns and the feasibility gate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportPattern:
    """Dominating-by-isolated support of S(G): support[i, j] is True iff
    dominating vertex i (creation order) is adjacent to isolated vertex j."""

    support: np.ndarray

    @property
    def rows(self) -> int:
        return self.support.shape[0]

    @property
    def cols(self) -> int:
        return self.support.shape[1]

    @classmethod
    def from_graph(cls, G: ThresholdGraph) -> "SupportPattern":
        dom, iso = G.dominating, G.isolated
        S = np.zeros((len(dom), len(iso)), dtype=bool)
        for r, d in enumerate(dom):
            for c, z in enumerate(iso):
                S[r, c] = d > z  # dominating vertex added later covers z
        S.setflags(write=False)
        return cls(S)

    def suffix_starts(self) -> list[int]:
        """First supported row per column; columns are suffix-supported."""
        starts = []
        for j in range(self.cols):
            col = self.support[:, j]
            a = int(np.argmax(col))
            if not col[a] or not col[a:].all() or col[:a].any():
                raise ValueError("support is not a nested suffix staircase")
            starts.append(a)
        return starts


@dataclass(frozen=True)
class Feasible:
    """Column-orthogonal matrix with the exact support."""

    matrix: np.ndarray


@dataclass(frozen=True)
class Infeasible:
    """Counting witness: the listed columns pairwise overlap only inside
    `rows`, and each meets `rows`; len(columns) > len(rows) forces a
    dependence among orthogonal nonzero restrictions."""

    columns: tuple[int, ...]
    rows: tuple[int, ...]


@dataclass(frozen=True)
class Unknown:
    attempts: int


def _column_groups(starts: list[int], T: int) -> list[tuple[int, list[int]]]:
    """Groups of columns by support size, smallest support first."""
    by_size: dict[int, list[int]] = {}
    for j, a in enumerate(starts):
        by_size.setdefault(T - a, []).append(j)
    return sorted(by_size.items())


def decide_column_orthogonal(P: SupportPattern, budget: int = 200, seed: int = 0):
    """Decide whether the staircase admits a column-orthogonal completion.

    Feasible(B): B has the exact support, unit columns, pairwise inner
    products below 1e-9.  Infeasible(witness): counting obstruction.
    Unknown only if the randomized completion exhausts its budget, which
    the counting criterion makes unreachable in practice.
    """
    T = P.rows
    starts = P.suffix_starts()
    groups = _column_groups(starts, T)
    cum = 0
    for idx, (size, cols) in enumerate(groups):
        cum += len(cols)
        last = idx == len(groups) - 1
        if cum > size or (not last and cum == size):
            witness_cols: list[int] = []
            for sz, cs in groups[: idx + 1]:
                witness_cols += cs
            if cum <= size:  # equality with later groups: add one wider column
                witness_cols.append(groups[idx + 1][1][0])
            rows = tuple(range(T - size, T))
            return Infeasible(tuple(witness_cols), rows)
    B = _complete_orthogonal(P, starts, budget, seed)
    if B is None:
        return Unknown(budget)
    return Feasible(B)


def _complete_orthogonal(P: SupportPattern, starts, budget: int, seed: int):
    """Sequential completion, smallest support first: each new column is a
    random unit null-space vector of the previous columns restricted to its
    support, rejected until every support entry clears a floor."""
    T, k = P.rows, P.cols
    rng = np.random.default_rng(seed)
    order = sorted(range(k), key=lambda j: T - starts[j])
    B = np.zeros((T, k))
    placed: list[int] = []
    for j in order:
        supp = np.arange(starts[j], T)
        m = len(supp)
        prev = B[np.ix_(supp, placed)].T if placed else np.zeros((0, m))
        ok = False
        for _ in range(budget):
            if prev.shape[0]:
                _, sv, Vt = np.linalg.svd(prev, full_matrices=True)
                rank = int((sv > 1e-12 * sv[0]).sum()) if sv.size else 0
                N = Vt[rank:].T
            else:
                N = np.eye(m)
            if N.shape[1] == 0:
                return None
            v = N @ rng.normal(size=N.shape[1])
            nrm = np.linalg.norm(v)
            if nrm < 1e-12:
                continue
            v /= nrm
            if np.abs(v).min() > 1e-3:
                ok = True
                break
        if not ok:
            return None
        B[supp, j] = v
        placed.append(j)
    return B


def verify_feasible(P: SupportPattern, B: np.ndarray, tol: float = 1e-9) -> bool:
    """Support exact and Gram of unit columns diagonal to tol."""
    if B.shape != P.support.shape:
        return False
    if not np.array_equal(np.abs(B) > 1e-12, P.support):
        return False
    norms = np.linalg.norm(B, axis=0)
    if np.any(norms < 1e-12):
        return False
    U = B / norms
    G = U.T @ U
    off = G - np.diag(np.diag(G))
    return float(np.abs(off).max(initial=0.0)) <= tol


def verify_infeasible(P: SupportPattern, w: Infeasible) -> bool:
    """Re-check the counting witness: pairwise overlaps confined to w.rows,
    every column meets w.rows, and there are more columns than rows."""
    S = P.support
    rows = set(w.rows)
    cols = list(w.columns)
    if len(cols) <= len(rows):
        return False
    for a in range(len(cols)):
        if not any(S[r, cols[a]] for r in rows):
            return False
        for b in range(a + 1, len(cols)):
            overlap = np.flatnonzero(S[:, cols[a]] & S[:, cols[b]])
            if any(r not in rows for r in overlap):
                return False
    return True


# ---------------------------------------------------------------------------
# strong spectral property
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SSPReport:
    """Nullity of the SSP system; witness X (if any) satisfies A*X = 0 on
    the support, zero diagonal, and [A, X] = 0."""

    nullity: int
    witness: np.ndarray | None
    smallest_sv: float

    @property
    def is_ssp(self) -> bool:
        return self.nullity == 0


def ssp_check(A: np.ndarray, zero_tol: float = 1e-8, rank_tol: float = 1e-9) -> SSPReport:
    """Decide the strong spectral property of a symmetric matrix.

    Unknowns are the symmetric hollow positions off A's support; the
    commutator equation [A, X] = 0 is linear in them, and SSP holds iff the
    system has full column rank (nullity 0).
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    P = pattern_matrix(A, zero_tol)
    unknowns = [(i, j) for i in range(n) for j in range(i + 1, n) if not P[i, j]]
    if not unknowns:
        return SSPReport(0, None, float("inf"))
    eqs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    K = np.zeros((len(eqs), len(unknowns)))
    for u, (i, j) in enumerate(unknowns):
        X = np.zeros((n, n))
        X[i, j] = X[j, i] = 1.0
        C = A @ X - X @ A
        K[:, u] = [C[a, b] for a, b in eqs]
    sv = np.linalg.svd(K, compute_uv=False)
    top = float(sv[0]) if sv.size else 0.0
    if top == 0.0:
        rank = 0
        smallest = 0.0
    else:
        rank = int((sv > rank_tol * top).sum())
        nonzero = sv[sv > rank_tol * top]
        smallest = float(nonzero[-1]) if nonzero.size else 0.0
    nullity = len(unknowns) - rank
    witness = None
    if nullity > 0:
        _, _, Vt = np.linalg.svd(K)
        x = Vt[-1]
        X = np.zeros((n, n))
        for u, (i, j) in enumerate(unknowns):
            X[i, j] = X[j, i] = x[u]
        witness = X
    return SSPReport(nullity, witness, smallest)


# ---------------------------------------------------------------------------
# alternating-projection search for a target multiplicity list
# ---------------------------------------------------------------------------


@dataclass
class SearchTrace:
    rows: list[tuple[int, int, float]] = field(default_factory=list)

    def to_csv(self) -> str:
        out = ["restart,iteration,residual"]
        out += [f"{r},{i},{res:.3e}" for r, i, res in self.rows]
        return "\n".join(out) + "\n"


def low_q_search(
    G: ThresholdGraph,
    q_target: int,
    multiplicity_list,
    budget: tuple[int, int] = (500, 200),
    seed: int = 0,
    edge_floor: float = 1e-3,
    trace: SearchTrace | None = None,
) -> np.ndarray | None:
    """Search S(G) for a matrix whose ordered multiplicity list is the target.

    Alternates projection onto the set of symmetric matrices with the given
    multiplicity structure (eigendecompose, average each block) with
    projection onto S(G) (zero non-edges, keep diagonals, push edge entries
    away from zero by a floor that relaxes on stagnation).  Every returned
    matrix re-verifies via in_pattern and cluster_spectrum; absence of
    success proves nothing.
    """
    mlist = list(multiplicity_list)
    n = G.n
    if sum(mlist) != n:
        raise ValueError("multiplicities must sum to the vertex count")
    if len(mlist) != q_target:
        raise ValueError("q_target must equal the multiplicity list length")
    restarts, iters = budget
    rng = np.random.default_rng(seed)
    E = np.asarray(G.adjacency, dtype=bool)
    idx = np.cumsum([0] + mlist)
    for r in range(restarts):
        signs = np.where(rng.random((n, n)) < 0.5, -1.0, 1.0)
        signs = np.triu(signs, 1)
        W = np.where(E, (signs + signs.T) * rng.uniform(0.5, 1.5, (n, n)), 0.0)
        W = (W + W.T) / 2
        W[np.diag_indices(n)] = rng.uniform(-1, 1, n)
        floor = edge_floor
        prev = None
        for it in range(iters):
            w, V = eigen_sym_vectors(W)
            lam = w.copy()
            for c in range(q_target):
                lam[idx[c]:idx[c + 1]] = w[idx[c]:idx[c + 1]].mean()
            S = (V * lam) @ V.T
            Wn = np.where(E, S, 0.0)
            Wn[np.diag_indices(n)] = np.diag(S)
            small = E & (np.abs(Wn) < floor)
            Wn[small] = np.where(S[small] >= 0, floor, -floor)
            res = float(np.linalg.norm(Wn - S))
            if trace is not None:
                trace.rows.append((r, it, res))
            W = (Wn + Wn.T) / 2
            if res < 1e-12:
                break
            if prev is not None and abs(prev - res) < 1e-14:
                floor *= 0.5  # stagnation: relax the edge floor
            prev = res
        eigs = eigen_sym(W)
        summary = cluster_spectrum(eigs)
        if list(summary.multiplicities) == mlist and in_pattern(W, G):
            return W
    return None
