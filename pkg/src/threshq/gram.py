"""Vertex-clique incidence factors and spectrum-preserving duplications.

A factor M has rows indexed by vertices and columns by the cliques of an
edge clique cover; arranging the entries so that row inner products are
nonzero exactly on edges puts M M^T in S(G), and the nonzero spectrum of
M M^T equals that of the small cogram M^T M.  The catalog below collects
the explicit factors used by the classification engine, each stored with
rows already permuted into creation order of its target graph (raw-pattern
targets keep their printed row order).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .orthosearch import Feasible, SupportPattern, decide_column_orthogonal
from .sequences import CreationSequence, ThresholdGraph, build_graph, graph_from_text
from .spectra import eigen_sym, in_pattern, pattern_matrix


class BadParams(ValueError):
    pass


class DiagonalNotEigenvalue(ValueError):
    pass


class BadAngle(ValueError):
    pass


class DegenerateRow(ValueError):
    pass


class InfeasibleRepair(RuntimeError):
    pass


@dataclass(frozen=True)
class GramFactor:
    """Rectangular factor with its target pattern and catalog metadata.

    expected_spectrum lists (eigenvalue, multiplicity) of M M^T when the
    catalog pins it; spectrum_atol is the comparison tolerance (loose only
    for thm10, whose reference values are printed as 4-digit decimals).
    dup_slots lists (vertex, eigenvalue) pairs valid for dup_realization.
    """

    M: np.ndarray
    target: object  # ThresholdGraph or raw boolean adjacency
    construction_id: str
    params: dict = field(default_factory=dict)
    expected_spectrum: tuple[tuple[float, int], ...] | None = None
    spectrum_atol: float = 1e-8
    dup_slots: tuple[tuple[int, float], ...] = ()

    @property
    def n(self) -> int:
        return self.M.shape[0]


def gram(f: GramFactor) -> np.ndarray:
    return f.M @ f.M.T


def cogram(f: GramFactor) -> np.ndarray:
    return f.M.T @ f.M


def _frozen(M) -> np.ndarray:
    A = np.array(M, dtype=float)
    A.setflags(write=False)
    return A


# ---------------------------------------------------------------------------
# catalog constructions
# ---------------------------------------------------------------------------


def _thm00(t: int) -> GramFactor:
    """Alternating sequence (0,1)^t: cogram is (t^2-t+1) I + t (J - I)."""
    if t < 2:
        raise BadParams("thm00 needs t >= 2")
    M = np.zeros((2 * t, t))
    M[0, 0] = math.sqrt(t * t - t + 1)
    M[1, 0] = 1.0
    for r in range(2, t + 1):  # dominating rows: ones then the run index
        M[r, : r - 1] = 1.0
        M[r, r - 1] = r
    for i in range(2, t):  # isolated tails chosen to equalize column norms
        M[t + i - 1, i - 1] = math.sqrt(t * t + 1 - i * i - (t - i))
    M[2 * t - 1, t - 1] = 1.0
    perm = [0] * (2 * t)
    for i in range(1, t + 1):
        perm[2 * i - 1] = i
    for i in range(2, t + 1):
        perm[2 * i - 2] = t + i - 1
    M = M[perm]
    lam = float(t * t - t + 1)
    spec = ((0.0, t), (lam, t - 1), (float(2 * t * t - t + 1), 1))
    return GramFactor(
        _frozen(M),
        build_graph(CreationSequence((0, 1) * t)),
        "thm00",
        {"t": t},
        expected_spectrum=spec,
        dup_slots=((0, lam),),
    )


def _salter(s: int) -> GramFactor:
    """(0,1)^s followed by an extra 1: cogram is (s^2-s+1) I_s.

    Dominating block is a reversed Helmert frame; column scales avoid zero
    dominating pair products, then columns are unit-normalized and scaled so
    every factor column has squared norm s^2-s+1 with unit isolated tails.
    """
    if s < 2:
        raise BadParams("salter needs s >= 2")
    D = np.zeros((s + 1, s))
    D[0, 0] = 1.0
    for i in range(1, s):
        D[i, :i] = 1.0
        D[i, i] = -(s - i)
    D[s, :] = 1.0
    c2 = np.ones(s)
    for i in range(1, s):
        if abs(c2[:i].sum() - c2[i] * (s - i)) < 1e-9:
            c2[i] = 2.0
    D = D * np.sqrt(c2)
    c = float(s * s - s + 1)
    D = D / np.linalg.norm(D, axis=0) * math.sqrt(c - 1.0)
    n = 2 * s + 1
    M = np.zeros((n, s))
    for i in range(s):
        M[2 * i, i] = 1.0
        M[2 * i + 1] = D[i]
    M[2 * s] = D[s]
    bits = tuple([0, 1] * s + [1])
    return GramFactor(
        _frozen(M),
        build_graph(CreationSequence(bits)),
        "salter",
        {"s": s},
        expected_spectrum=((0.0, s + 1), (c, s)),
    )


def _fixed(cid, rows, perm, bits, spec, dup_slots=(), atol=1e-8, params=None):
    M = np.array(rows, dtype=float)[perm]
    return GramFactor(
        _frozen(M),
        graph_from_text(bits),
        cid,
        params or {},
        expected_spectrum=spec,
        spectrum_atol=atol,
        dup_slots=dup_slots,
    )


R2 = math.sqrt(2)
R3 = math.sqrt(3)
R5 = math.sqrt(5)
R7 = math.sqrt(7)
R8 = math.sqrt(8)


def _thm060() -> GramFactor:
    rows = [[R3, 0], [1, 0], [1, 2], [0, 1]]
    return _fixed("thm060", rows, [0, 1, 3, 2], "0101",
                  ((0.0, 2), (3.0, 1), (7.0, 1)), dup_slots=((0, 3.0),))


def _thm061() -> GramFactor:
    rows = [[1, 0], [1, 0], [1, 1], [0, R2]]
    return _fixed("thm061", rows, [0, 1, 3, 2], "0101",
                  ((0.0, 2), (2.0, 1), (4.0, 1)), dup_slots=((2, 2.0),))


def _thm01() -> GramFactor:
    rows = [[3, 0, 0], [1, -3, 0], [1, 1, -2], [0, 1, 0], [0, 0, R7]]
    return _fixed("thm01", rows, [0, 3, 1, 4, 2], "00101",
                  ((0.0, 2), (7.0, 1), (13.0, 2)), dup_slots=((3, 7.0),))


def _thm10() -> GramFactor:
    rows = [[1, 0, 0], [1, 0, 0], [1, 1, 1], [0, 1, 0], [0, 0, 1]]
    # reference spectrum printed to 4 decimals; compared at 1e-3
    return _fixed("thm10", rows, [0, 1, 3, 4, 2], "01001",
                  ((0.0, 2), (1.0, 1), (1.5857, 1), (4.4142, 1)),
                  dup_slots=((0, 1.0), (3, 1.0), (2, 1.0)), atol=1e-3)


def _thm05() -> GramFactor:
    rows = [[R7, 0, 0], [R2, 0, 0], [1, -3, 0], [1, 1, -2], [0, 1, 0], [0, 0, R7]]
    return _fixed("thm05", rows, [0, 1, 4, 2, 5, 3], "010101",
                  ((0.0, 3), (7.0, 1), (13.0, 2)), dup_slots=((0, 7.0), (4, 7.0)))


def _thm06() -> GramFactor:
    rows = [[R2, 0, 0], [1, 0, 0], [1, 1, 0], [1, 1, 2], [0, R3, 0], [0, 0, 1]]
    # cogram is 3I + 2J on three points: eigenvalues 9 and 3 (twice)
    return _fixed("thm06", rows, [0, 1, 4, 2, 5, 3], "010101",
                  ((0.0, 3), (3.0, 2), (9.0, 1)), dup_slots=((2, 3.0),))


def _qlt4() -> GramFactor:
    rows = [[1, 0, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 1],
            [0, R2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    return _fixed("qlt4", rows, [0, 1, 4, 2, 5, 6, 3], "0101001",
                  ((0.0, 3), (1.0, 1), (2.0, 2), (7.0, 1)),
                  dup_slots=((0, 1.0), (2, 2.0), (4, 1.0), (5, 1.0)))


def _Tn2() -> GramFactor:
    rows = [[1, 0], [2, 1], [-2, 1], [1, 0], [0, R8]]
    return _fixed("Tn2", rows, [0, 3, 4, 1, 2], "01011",
                  ((0.0, 3), (10.0, 2)))


def _Tn3_mid() -> GramFactor:
    rows = [[1, -2, 0], [1, 1, -1], [1, 1, 1], [2, 0, 0], [0, 1, 0], [0, 0, R5]]
    return _fixed("Tn3_mid", rows, [3, 4, 0, 5, 1, 2], "001011",
                  ((0.0, 3), (7.0, 3)))


def _prop_a15a19() -> GramFactor:
    rows = [
        [R8, 0, 0, 0, 0],
        [1, -R2, 0, 0, 0],
        [R2, 1, 0, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 0, R3, 0, 0],
        [0, 0, 0, R3, 0],
        [0, 1, 1, 1, 2],
        [0, 0, 0, 0, 1],
    ]
    M = np.array(rows, dtype=float)
    target = pattern_matrix(M @ M.T)  # raw pattern; embeds in two order-8 graphs
    target.setflags(write=False)
    return GramFactor(
        _frozen(M), target, "prop_a15a19", {},
        expected_spectrum=((0.0, 3), (3.0, 3), (11.0, 2)),
    )


PROP37_BLOCK = np.array(
    [[1, -3, 0, 0], [1, 1, -2, 0], [1, 1, 1, -1], [1, 1, 1, 1]], dtype=float)

PROP40_BLOCK = np.array(
    [[1, 1.5, 4.5, 0], [2, 0.5, -3.5, 0], [0.5, -1, 1, 2], [-1, 2, -2, 1]], dtype=float)


def _prop37() -> GramFactor:
    G = graph_from_text("00101011")
    M = _certificate_factor(PROP37_BLOCK, G)
    return GramFactor(_frozen(M), G, "prop37", {})


def _prop38() -> GramFactor:
    G = graph_from_text("00100111")
    out = decide_column_orthogonal(SupportPattern.from_graph(G), seed=38)
    if not isinstance(out, Feasible):
        raise InfeasibleRepair("prop38 staircase unexpectedly infeasible")
    M = _certificate_factor(out.matrix, G)
    return GramFactor(_frozen(M), G, "prop38", {})


def _prop40() -> GramFactor:
    G = graph_from_text("00011011")
    M = _certificate_factor(PROP40_BLOCK, G)
    return GramFactor(_frozen(M), G, "prop40", {})


def _prop41() -> GramFactor:
    tails = [math.sqrt(129) / 2, math.sqrt(31), 1.0, math.sqrt(67 / 2)]
    M = np.zeros((8, 4))
    M[0, 0] = tails[0]
    M[1, 1] = tails[1]
    M[2, 2] = tails[2]
    M[3] = PROP40_BLOCK[0]
    M[4] = PROP40_BLOCK[1]
    M[5, 3] = tails[3]
    M[6] = PROP40_BLOCK[2]
    M[7] = PROP40_BLOCK[3]
    return GramFactor(
        _frozen(M), graph_from_text("00011011"), "prop41", {},
        expected_spectrum=((0.0, 4), (38.5, 4)),
    )


def _c4hub(n: int) -> GramFactor:
    """Four-cycle with every extra vertex attached to one hub of the cycle."""
    if n < 5:
        raise BadParams("c4hub needs n >= 5")
    M = np.zeros((n, n - 2))
    M[0, 0] = math.sqrt(n - 3)
    M[1, 0] = -1.0
    M[1, 1] = 1.0
    M[2, 0] = 1.0
    M[2, 1] = 1.0
    M[3, 1] = 1.0
    M[3, 2:] = 1.0
    for j in range(3, n - 1):
        M[j + 1, j - 1] = R2
    target = pattern_matrix(M @ M.T)
    target.setflags(write=False)
    spec = ((0.0, 2), (2.0, n - 4), (float(n - 1), 2))
    return GramFactor(_frozen(M), target, "c4hub", {"n": n}, expected_spectrum=spec)


def section12_factor(s: int, m: int) -> GramFactor:
    """Seed for the general upper bound: blocks all (0,1) except block m,
    which is (0,0,1).  Columns pair greedily; each pair's two tails solve
    the equal-norm equations, giving eigenvalue 3 per ordinary pair and
    eigenvalue 1 from the middle pair, so q is at most 3 plus the number of
    unpaired-or-pair leftovers, within floor((s+9)/2) for every parity.
    Every isolated diagonal entry (1 or 3) is an eigenvalue, so all zero
    blocks may be grown by duplication.
    """
    if s < 2 or not (1 <= m <= s):
        raise BadParams("need s >= 2 and 1 <= m <= s")
    p1 = m - 1
    cols = s + 1
    mid = p1 + 1  # the one column with no dominating run ending at it

    pairs: list[tuple[int, int]] = []
    unpaired: list[int] = []
    i = 1
    while i < mid:
        if i + 1 < mid:
            pairs.append((i, i + 1))
            i += 2
        else:
            unpaired.append(i)
            i += 1
    mid_pair = (mid, mid + 1)
    pairs.append(mid_pair)
    i = mid + 2
    while i <= cols:
        if i + 1 <= cols:
            pairs.append((i, i + 1))
            i += 2
        else:
            unpaired.append(i)
            i += 1

    sigma = {}
    for a, b in pairs:
        if (a, b) == mid_pair:
            sigma[b] = 1.0
        else:
            sigma[a] = 1.0
            sigma[b] = 2.0
    for a in unpaired:
        sigma[a] = 1.0

    def run_end(i):  # column where dominating run i stops
        if i <= p1:
            return i
        if i == p1 + 1:
            return p1 + 2
        return i + 1

    D = np.zeros((s, cols))
    for i in range(1, s + 1):
        ci = run_end(i)
        D[i - 1, :ci] = 1.0
        D[i - 1, ci - 1] = sigma[ci]
    norms = (D * D).sum(axis=0)
    B = D.T @ D
    f2 = np.ones(cols)
    for a, b in pairs:
        d = B[a - 1, b - 1]
        cc = d + (1.0 if (a, b) == mid_pair else 3.0)
        f2[a - 1] = cc - norms[a - 1]
        f2[b - 1] = cc - norms[b - 1]
    if not (f2 > 1e-9).all():
        raise BadParams("tail equations degenerate")

    bits: list[int] = []
    zcols: list[int] = []
    col = 1
    for j in range(1, s + 1):
        for _ in range(2 if j == m else 1):
            bits.append(0)
            zcols.append(col)
            col += 1
        bits.append(1)
    n = len(bits)
    M = np.zeros((n, cols))
    di = zi = 0
    slots = []
    for pos, b in enumerate(bits):
        if b:
            M[pos] = D[di]
            di += 1
        else:
            c = zcols[zi]
            M[pos, c - 1] = math.sqrt(f2[c - 1])
            slots.append((pos, float(f2[c - 1])))
            zi += 1
    return GramFactor(
        _frozen(M),
        build_graph(CreationSequence(tuple(bits))),
        "ub_case1",
        {"s": s, "m": m, "p1": p1, "p2": s - m},
        dup_slots=tuple(slots),
    )


def _ub_case1(s: int | None = None, p1: int | None = None, p2: int | None = None,
              m: int | None = None) -> GramFactor:
    if p1 is not None and p2 is not None:
        s = p1 + p2 + 1
        m = p1 + 1
    elif s is not None:
        m = m if m is not None else (s + 1) // 2
    else:
        raise BadParams("give s (and optionally m), or p1 and p2")
    return section12_factor(s, m)


CONSTRUCTIONS = {
    "thm00": _thm00,
    "salter": _salter,
    "thm060": _thm060,
    "thm061": _thm061,
    "thm01": _thm01,
    "thm10": _thm10,
    "thm05": _thm05,
    "thm06": _thm06,
    "qlt4": _qlt4,
    "Tn2": _Tn2,
    "Tn3_mid": _Tn3_mid,
    "prop_a15a19": _prop_a15a19,
    "prop37": _prop37,
    "prop38": _prop38,
    "prop40": _prop40,
    "prop41": _prop41,
    "ub_case1": _ub_case1,
    "c4hub": _c4hub,
}


def construct_library(construction_id: str, **params) -> GramFactor:
    """Build a catalog factor by id; BadParams on invalid id or parameters."""
    try:
        builder = CONSTRUCTIONS[construction_id]
    except KeyError:
        raise BadParams(f"unknown construction {construction_id!r}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise BadParams(f"{construction_id}: {exc}") from None


# ---------------------------------------------------------------------------
# spectrum-controlled duplication
# ---------------------------------------------------------------------------


def _plane_rotation_extend(A: np.ndarray, v: int, lam: float, theta: float) -> np.ndarray:
    """Rotate A + [lam] in the (v, n) coordinate plane by theta."""
    n = A.shape[0]
    C = np.zeros((n + 1, n + 1))
    C[:n, :n] = A
    C[n, n] = lam
    c, s = math.cos(theta), math.sin(theta)
    R = np.eye(n + 1)
    R[v, v] = c
    R[v, n] = s
    R[n, v] = -s
    R[n, n] = c
    out = R @ C @ R.T
    return (out + out.T) / 2  # storage keeps symmetry exact


def dup_realization(A: np.ndarray, v: int, lam: float, theta: float = math.pi / 4,
                    tol: float = 1e-8) -> np.ndarray:
    """Duplicate vertex v of A without an edge: requires a_vv = lam and
    lam in Spec(A).  The result has Spec(A) plus one extra lam, the new
    vertex adjacent exactly to N(v), and a zero (v, new) entry."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if not 0 < theta < math.pi / 2:
        raise BadAngle("theta must lie strictly between 0 and pi/2")
    scale = max(1.0, float(np.abs(A).max()))
    if abs(A[v, v] - lam) > tol * scale:
        raise DiagonalNotEigenvalue(f"a_vv = {A[v, v]} != {lam}")
    eigs = eigen_sym(A)
    if float(np.min(np.abs(eigs - lam))) > tol * scale:
        raise DiagonalNotEigenvalue(f"{lam} is not an eigenvalue")
    return _plane_rotation_extend(A, v, lam, theta)


def jdup_realization(A: np.ndarray, v: int, theta: float = math.pi / 4,
                     tol: float = 1e-8) -> np.ndarray:
    """Duplicate vertex v of A with an edge to the copy, appending one more
    copy of the smallest eigenvalue, so q is preserved.

    Realized as the (v, new)-plane rotation of A + [lambda_min]; the new
    off-diagonal entry is sin(theta)cos(theta)(a_vv - lambda_min), hence the
    requirement a_vv != lambda_min.  Deleting the new row and column gives
    A with row/column v scaled by cos(theta) (pattern-equal to A), and the
    (v, v) entry equal to cos^2 a_vv + sin^2 lambda_min.
    """
    A = np.asarray(A, dtype=float)
    if not 0 < theta < math.pi / 2:
        raise BadAngle("theta must lie strictly between 0 and pi/2")
    lam_min = float(eigen_sym(A)[0])
    scale = max(1.0, float(np.abs(A).max()))
    if abs(A[v, v] - lam_min) <= tol * scale:
        raise DegenerateRow("a_vv equals the smallest eigenvalue; joined copy would vanish")
    return _plane_rotation_extend(A, v, lam_min, theta)


# ---------------------------------------------------------------------------
# orthogonality certificates for q = 2
# ---------------------------------------------------------------------------


def _repair_scales(B: np.ndarray, budget: int, seed: int) -> np.ndarray:
    """Column rescaling making every dominating pair product nonzero.

    Every pair shares the first isolated column's support, so the products
    are nonzero polynomials in the scales and a random draw repairs them;
    failure within the budget raises InfeasibleRepair.
    """
    T = B.shape[0]
    if T <= 1:
        return B
    rng = np.random.default_rng(seed)
    for attempt in range(budget):
        d = np.ones(B.shape[1]) if attempt == 0 else rng.uniform(0.5, 1.5, B.shape[1])
        BD = B * d
        Gd = BD @ BD.T
        off = np.abs(Gd[~np.eye(T, dtype=bool)])
        if off.min() > 1e-6 * max(1.0, float(np.abs(Gd).max())):
            return BD
    raise InfeasibleRepair("no diagonal rescaling repaired the dominating products")


def _certificate_factor(B: np.ndarray, G: ThresholdGraph, budget: int = 200,
                        seed: int = 0) -> np.ndarray:
    BD = _repair_scales(np.asarray(B, dtype=float), budget, seed)
    norms = (BD * BD).sum(axis=0)
    C2 = float(norms.max()) + 1.0
    y = np.sqrt(C2 - norms)
    dom, iso = G.dominating, G.isolated
    M = np.zeros((G.n, len(iso)))
    for r, i in enumerate(dom):
        M[i] = BD[r]
    for c, i in enumerate(iso):
        M[i, c] = y[c]
    return M


def orthogonal_certificate(B: np.ndarray, G: ThresholdGraph, budget: int = 200,
                           seed: int = 0) -> np.ndarray:
    """Two-eigenvalue realization of S(G) from a column-orthogonal
    dominating-by-isolated block B.

    B's support must match the dominating-by-isolated staircase of G and its
    columns must be pairwise orthogonal to 1e-8.  Column rescaling repairs
    zero dominating products, isolated tails equalize all column norms to a
    common C^2, and the returned Gram has spectrum {C^2 with multiplicity
    n-T, 0 with multiplicity T}.
    """
    B = np.asarray(B, dtype=float)
    P = SupportPattern.from_graph(G)
    if B.shape != P.support.shape:
        raise BadParams(f"block must be {P.support.shape}, got {B.shape}")
    if not np.array_equal(np.abs(B) > 1e-12, P.support):
        raise BadParams("block support does not match the graph staircase")
    norms = np.linalg.norm(B, axis=0)
    U = B / norms
    off = (U.T @ U) - np.eye(B.shape[1])
    if float(np.abs(off).max(initial=0.0)) > 1e-8:
        raise BadParams("columns are not orthogonal")
    M = _certificate_factor(B, G, budget, seed)
    A = M @ M.T
    A = (A + A.T) / 2
    if not in_pattern(A, G):
        raise InfeasibleRepair("certificate left the pattern")  # pragma: no cover
    return A
