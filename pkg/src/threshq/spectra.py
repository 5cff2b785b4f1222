"""Dense symmetric spectra, distinct-eigenvalue clustering, and pattern tests.

S(G) is the set of real symmetric matrices whose off-diagonal support is
exactly the edge set of G; diagonals are free.  q(A) is the number of
distinct eigenvalues of A after gap clustering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import ThresholdGraph


class NoConvergence(RuntimeError):
    """Eigensolver failed to converge (pathological input)."""


class DimensionMismatch(ValueError):
    pass


SYM_TOL = 1e-12


def check_symmetric(A: np.ndarray, tol: float = SYM_TOL) -> None:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    scale = max(1.0, float(np.abs(A).max()) if A.size else 1.0)
    if float(np.abs(A - A.T).max()) > tol * scale:
        raise DimensionMismatch("matrix is not symmetric")


def eigen_sym(A: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix.

    Accuracy contract (checked in the test suite): each eigenvalue within
    1e-10 * (1 + ||A||) and residual/orthogonality of the implicit
    orthogonal similarity below 1e-10.
    """
    A = np.asarray(A, dtype=float)
    check_symmetric(A)
    if not np.isfinite(A).all():
        raise NoConvergence("non-finite entries")
    try:
        return np.linalg.eigvalsh(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc


def eigen_sym_vectors(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors."""
    A = np.asarray(A, dtype=float)
    check_symmetric(A)
    if not np.isfinite(A).all():
        raise NoConvergence("non-finite entries")
    try:
        return np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(str(exc)) from exc


@dataclass(frozen=True)
class SpectrumSummary:
    """Distinct eigenvalues with multiplicities, ascending."""

    distinct: tuple[tuple[float, int], ...]
    tol: float

    @property
    def q(self) -> int:
        return len(self.distinct)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.distinct)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.distinct)

    def __str__(self) -> str:
        parts = []
        for v, m in self.distinct:
            parts.append(f"{v:g}" + (f"^[{m}]" if m > 1 else ""))
        return "{" + ", ".join(parts) + "}"


def default_cluster_tol(eigs: np.ndarray) -> float:
    """1e-6 times max(1, spectral diameter); separates the catalog's
    rational/half-integer spectra from roundoff."""
    eigs = np.asarray(eigs, dtype=float)
    spread = float(eigs.max() - eigs.min()) if eigs.size else 0.0
    return 1e-6 * max(1.0, spread)


def cluster_spectrum(eigs, tol: float | None = None) -> SpectrumSummary:
    """Greedy gap clustering of an eigenvalue list (sorted internally, so
    the result is order-independent)."""
    eigs = np.sort(np.asarray(eigs, dtype=float).ravel())
    if eigs.size == 0:
        return SpectrumSummary((), 0.0)
    if tol is None:
        tol = default_cluster_tol(eigs)
    groups: list[list[float]] = [[float(eigs[0])]]
    for x in eigs[1:]:
        if float(x) - groups[-1][-1] > tol:
            groups.append([float(x)])
        else:
            groups[-1].append(float(x))
    distinct = tuple((float(np.mean(g)), len(g)) for g in groups)
    return SpectrumSummary(distinct, tol)


def q_of_matrix(A: np.ndarray, tol: float | None = None) -> int:
    """Number of distinct eigenvalues of A at the clustering tolerance."""
    return cluster_spectrum(eigen_sym(A), tol).q


def pattern_matrix(A: np.ndarray, zero_tol: float = 1e-8) -> np.ndarray:
    """Boolean off-diagonal support of A after scaling to unit max entry."""
    A = np.asarray(A, dtype=float)
    scale = float(np.abs(A).max())
    P = np.abs(A) > zero_tol * max(1.0, scale)
    np.fill_diagonal(P, False)
    return P


@dataclass(frozen=True)
class PatternReport:
    """Outcome of an S(G) membership test; truthy iff the matrix is in S(G)."""

    ok: bool
    violations: tuple[tuple[int, int, str], ...]

    def __bool__(self) -> bool:
        return self.ok


def in_pattern(A: np.ndarray, G, zero_tol: float = 1e-8) -> PatternReport:
    """Test A in S(G): off-diagonal entries nonzero exactly on edges.

    G may be a ThresholdGraph or a raw boolean adjacency matrix.  The
    diagonal is unconstrained.  Entries are compared against
    zero_tol * max(1, max|A|).
    """
    A = np.asarray(A, dtype=float)
    check_symmetric(A)
    adj = G.adjacency if isinstance(G, ThresholdGraph) else np.asarray(G, dtype=bool)
    n = adj.shape[0]
    if A.shape[0] != n:
        raise DimensionMismatch(f"matrix is {A.shape[0]}x{A.shape[0]}, graph has {n} vertices")
    P = pattern_matrix(A, zero_tol)
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j] and not P[i, j]:
                violations.append((i, j, "edge entry is zero"))
            elif not adj[i, j] and P[i, j]:
                violations.append((i, j, "non-edge entry is nonzero"))
    return PatternReport(not violations, tuple(violations))


def spectrum_multiset(A: np.ndarray, tol: float | None = None) -> tuple[tuple[float, int], ...]:
    return cluster_spectrum(eigen_sym(A), tol).distinct


def assert_spectrum(A: np.ndarray, expected: list[tuple[float, int]], atol: float = 1e-8) -> bool:
    """True iff Spec(A) equals the expected (value, multiplicity) multiset."""
    got = eigen_sym(A)
    want = np.sort(np.concatenate([np.full(m, v, dtype=float) for v, m in expected]))
    return got.size == want.size and bool(np.max(np.abs(got - want)) <= atol * max(1.0, np.abs(want).max()))


# ---------------------------------------------------------------------------
# matrix file format: first line "n" (or "rows cols" for factors), then rows
# of whitespace-separated reals; '#' lines before the header are ignored.
# ---------------------------------------------------------------------------


def save_matrix(path, A: np.ndarray) -> None:
    A = np.asarray(A, dtype=float)
    check_symmetric(A)
    with open(path, "w") as fh:
        fh.write(f"{A.shape[0]}\n")
        for row in A:
            fh.write(" ".join(repr(float(x)) for x in row) + "\n")


def _read_rows(path):
    header = None
    rows = []
    comments = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line)
                continue
            if header is None:
                header = line.split()
            else:
                rows.append([float(x) for x in line.split()])
    if header is None:
        raise ValueError(f"{path}: no header line")
    return header, rows, comments


def load_matrix(path) -> np.ndarray:
    """Load a square symmetric matrix; symmetry enforced at 1e-12."""
    header, rows, _ = _read_rows(path)
    n = int(header[0])
    A = np.array(rows, dtype=float)
    if A.shape != (n, n):
        raise ValueError(f"{path}: expected {n}x{n}, got {A.shape}")
    check_symmetric(A, SYM_TOL)
    return A


def save_factor(path, M: np.ndarray, construction_id: str, params: dict | None = None) -> None:
    """Rectangular factor with a '# construction: <id> ...' header line."""
    M = np.asarray(M, dtype=float)
    extra = " ".join(f"{k}={v}" for k, v in (params or {}).items())
    with open(path, "w") as fh:
        fh.write(f"# construction: {construction_id}" + (f" {extra}" if extra else "") + "\n")
        fh.write(f"{M.shape[0]} {M.shape[1]}\n")
        for row in M:
            fh.write(" ".join(repr(float(x)) for x in row) + "\n")


def load_factor(path) -> tuple[np.ndarray, str, dict]:
    header, rows, comments = _read_rows(path)
    if len(header) == 1:
        r = c = int(header[0])
    else:
        r, c = int(header[0]), int(header[1])
    M = np.array(rows, dtype=float)
    if M.shape != (r, c):
        raise ValueError(f"{path}: expected {r}x{c}, got {M.shape}")
    cid = ""
    params: dict = {}
    for line in comments:
        body = line.lstrip("#").strip()
        if body.startswith("construction:"):
            parts = body[len("construction:"):].split()
            if parts:
                cid = parts[0]
                for kv in parts[1:]:
                    if "=" in kv:
                        k, v = kv.split("=", 1)
                        params[k] = v
    return M, cid, params
