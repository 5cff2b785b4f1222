"""Certified lower/upper bounds and exact values of q(G) for threshold graphs.

Lower bounds: connectivity, unique shortest paths, the trace bound, the
column-counting bound, and the full column-orthogonality gate (an exact
characterization of q = 2).  Upper bounds: explicit two-eigenvalue
certificates, duplication chains from the catalog constructions, one
spectral-transfer citation family, and the general floor((s+9)/2) bound.
Every certificate re-verifies independently of the search that found it.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import gram as gramlib
from .orthosearch import (
    Feasible,
    Infeasible,
    SupportPattern,
    decide_column_orthogonal,
    ssp_check,
    verify_infeasible,
)
from .sequences import (
    CreationSequence,
    ThresholdGraph,
    block_form,
    build_graph,
    creation_order_of,
    graph_from_text,
    unique_path_bound,
)
from .spectra import in_pattern, pattern_matrix, q_of_matrix


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable witness for one side of a bound.

    kinds: ConnectedLB, DiameterLB, TraceLB, Compare1LB, ConstructionUB,
    DupChainUB, OrthoUB, TableCitation.  payload carries matrices or
    combinatorial witnesses; verify_certificate re-validates without
    re-running any search.
    """

    kind: str
    value: int
    provenance: str
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class QBound:
    """Interval [lower, upper] for q(G) with certificates for both sides."""

    lower: int
    upper: int
    lower_certs: tuple[Certificate, ...]
    upper_certs: tuple[Certificate, ...]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        if self.exact:
            return f"q = {self.lower} (exact)"
        return f"q in [{self.lower}, {self.upper}]"


# ---------------------------------------------------------------------------
# lower bounds
# ---------------------------------------------------------------------------


def lb_connected(G: ThresholdGraph) -> int:
    return 2 if G.connected and G.n >= 2 else 1


def lb_diameter(G: ThresholdGraph) -> int:
    """d+1 for the longest unique shortest path (d <= 2 here), else 2."""
    hit = unique_path_bound(G)
    return hit[0] + 1 if hit else 2


def lb_trace(G: ThresholdGraph) -> int:
    """Trace below ceil(n/2) rules out two distinct eigenvalues."""
    return 3 if G.trace < math.ceil(G.n / 2) else 2


def lb_compare1(G: ThresholdGraph) -> int:
    """Zero-run at least as long as the remaining trace rules out q = 2."""
    bf = block_form(G.creation)
    ks, ts = bf.ks, bf.ts
    for i in range(1, bf.s):
        if ks[i] >= sum(ts[i:]):
            return 3
    return 2


def _lower_certificates(G: ThresholdGraph, gate_result) -> list[Certificate]:
    certs = [Certificate("ConnectedLB", 2, "connected graph")]
    hit = unique_path_bound(G)
    if hit:
        d, pair = hit
        certs.append(Certificate("DiameterLB", d + 1, "unique shortest path",
                                 {"distance": d, "pair": pair}))
    if lb_trace(G) == 3:
        certs.append(Certificate("TraceLB", 3, "trace below half the order",
                                 {"trace": G.trace, "n": G.n}))
    bf = block_form(G.creation)
    for i in range(1, bf.s):
        if bf.ks[i] >= sum(bf.ts[i:]):
            certs.append(Certificate("Compare1LB", 3, "zero-run column count",
                                     {"block": i, "k": bf.ks[i], "tail_trace": sum(bf.ts[i:])}))
            break
    if isinstance(gate_result, Infeasible):
        certs.append(Certificate(
            "Compare1LB", 3, "orthogonality gate counting witness",
            {"columns": gate_result.columns, "rows": gate_result.rows}))
    exact4 = _trace_two_exact4(G)
    if exact4:
        certs.append(exact4)
    return certs


def _trace_two_exact4(G: ThresholdGraph) -> Certificate | None:
    """Exact value 4 for the trace-2 family (0^k1, 1, 0^k2, 1) with k1 >= 3
    and k2 >= 2; the supporting argument is cited, so the certificate's
    checkable content is the block shape itself."""
    bf = block_form(G.creation)
    if G.n >= 5 and bf.s == 2 and bf.ts == (1, 1) and bf.ks[0] >= 3 and bf.ks[1] >= 2:
        return Certificate("TableCitation", 4, "trace-two family exact value",
                           {"ks": bf.ks, "ts": bf.ts})
    return None


# ---------------------------------------------------------------------------
# upper bounds: orthogonality certificate (q = 2)
# ---------------------------------------------------------------------------


def ortho_gate(G: ThresholdGraph, seed: int = 0):
    return decide_column_orthogonal(SupportPattern.from_graph(G), seed=seed)


def q2_certificate(G: ThresholdGraph, gate_result=None, seed: int = 0) -> Certificate | None:
    if gate_result is None:
        gate_result = ortho_gate(G, seed)
    if not isinstance(gate_result, Feasible):
        return None
    A = gramlib.orthogonal_certificate(gate_result.matrix, G, seed=seed)
    assert q_of_matrix(A) == 2
    return Certificate("OrthoUB", 2, "column-orthogonal completion",
                       {"matrix": A, "block": gate_result.matrix})


# ---------------------------------------------------------------------------
# upper bounds: duplication chains from catalog seeds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainPlan:
    """Seed factor plus duplication schedule reaching a target sequence.

    dup_steps: (vertex index in the seed matrix, eigenvalue) repeated per
    extra zero; jdup_steps: dominating seed index repeated per extra one.
    """

    seed: gramlib.GramFactor
    dup_steps: tuple[tuple[int, float], ...]
    jdup_steps: tuple[int, ...]


def _chain_plan(bf) -> ChainPlan | None:
    """Choose a catalog seed and duplication schedule for the block form."""
    ks, ts, s = bf.ks, bf.ts, bf.s
    dup: list[tuple[int, float]] = []

    if s == 1:
        return None  # handled by the star chain, which is not Gram-seeded
    if all(k == 1 for k in ks):
        seed = gramlib.construct_library("thm00", t=s)
        dom = [2 * i + 1 for i in range(s)]
    elif s == 2:
        k1, k2 = ks
        if k1 == 1:
            seed = gramlib.construct_library("thm061")
            dup += [(2, 2.0)] * (k2 - 1)
            dom = [1, 3]
        elif k1 == 2:
            seed = gramlib.construct_library("thm01")
            dup += [(3, 7.0)] * (k2 - 1)
            dom = [2, 4]
        elif k2 == 1:
            seed = gramlib.construct_library("thm060")
            dup += [(0, 3.0)] * (k1 - 1)
            dom = [1, 3]
        else:
            seed = gramlib.construct_library("thm10")
            dup += [(0, 1.0)] * (k1 - 1) + [(3, 1.0)] * (k2 - 2)
            dom = [1, 4]
    elif s == 3:
        k1, k2, k3 = ks
        if k2 == 1:
            seed = gramlib.construct_library("thm05")
            dup += [(0, 7.0)] * (k1 - 1) + [(4, 7.0)] * (k3 - 1)
            dom = [1, 3, 5]
        elif k1 == 1 and k3 == 1:
            seed = gramlib.construct_library("thm06")
            dup += [(2, 3.0)] * (k2 - 1)
            dom = [1, 3, 5]
        elif k3 >= 2:
            seed = gramlib.construct_library("qlt4")
            dup += [(0, 1.0)] * (k1 - 1) + [(2, 2.0)] * (k2 - 1) + [(5, 1.0)] * (k3 - 2)
            dom = [1, 3, 6]
        else:
            return _section12_plan(bf)
    else:
        return _section12_plan(bf)

    jd: list[int] = []
    for i in range(s):
        jd += [dom[i]] * (ts[i] - 1)
    return ChainPlan(seed, tuple(dup), tuple(jd))


def _section12_plan(bf) -> ChainPlan | None:
    """General seed: needs some zero-run of length >= 2."""
    ks, ts, s = bf.ks, bf.ts, bf.s
    candidates = [m for m in range(1, s + 1) if ks[m - 1] >= 2]
    if not candidates:
        return None
    # prefer even parities on both sides (most column pairs), then smallest m
    def badness(m):
        return ((m - 1) % 2) + ((s - m) % 2)

    m = min(candidates, key=lambda x: (badness(x), x))
    seed = gramlib.section12_factor(s, m)
    sbits = seed.target.creation.bits
    dom = [i for i, b in enumerate(sbits) if b == 1]
    zeros = [i for i, b in enumerate(sbits) if b == 0]
    slots = dict(seed.dup_slots)
    dup: list[tuple[int, float]] = []
    zi = 0
    for j in range(1, s + 1):
        base = 2 if j == m else 1
        v = zeros[zi]  # grow the block by duplicating its first zero vertex
        dup += [(v, slots[v])] * (ks[j - 1] - base)
        zi += base
    jd: list[int] = []
    for i in range(s):
        jd += [dom[i]] * (ts[i] - 1)
    return ChainPlan(seed, tuple(dup), tuple(jd))


def _star_chain(bf) -> tuple[np.ndarray, list[str]] | None:
    """Complete split graphs with k > t: adjacency of the star, then joined
    duplications of the dominating vertex."""
    if bf.s != 1:
        return None
    k, t = bf.ks[0], bf.ts[0]
    A = np.zeros((k + 1, k + 1))
    A[k, :k] = 1.0
    A[:k, k] = 1.0
    steps = []
    for _ in range(t - 1):
        A = gramlib.jdup_realization(A, k)
        steps.append(f"jdup({k})")
    return A, steps


def run_chain(plan: ChainPlan) -> tuple[np.ndarray, list[str]]:
    A = gramlib.gram(plan.seed)
    steps = [f"seed:{plan.seed.construction_id}{plan.seed.params or ''}"]
    for v, lam in plan.dup_steps:
        A = gramlib.dup_realization(A, v, lam)
        steps.append(f"dup({v},{lam:g})")
    for v in plan.jdup_steps:
        A = gramlib.jdup_realization(A, v)
        steps.append(f"jdup({v})")
    return A, steps


def chain_certificate(G: ThresholdGraph) -> Certificate | None:
    """Upper bound from a duplication chain, with the final matrix permuted
    to creation order and re-verified."""
    bf = block_form(G.creation)
    if bf.s == 1:
        out = _star_chain(bf)
        if out is None:
            return None
        A, steps = out
        seed_q = 3 if bf.ks[0] >= 2 else 2
    else:
        plan = _chain_plan(bf)
        if plan is None:
            return None
        A, steps = run_chain(plan)
        seed_q = q_of_matrix(gramlib.gram(plan.seed))
    bits, order = creation_order_of(pattern_matrix(A))
    if bits != G.creation.bits:
        raise AssertionError(f"chain landed on {bits}, wanted {G.creation.bits}")
    Ac = A[np.ix_(order, order)]
    if not in_pattern(Ac, G):
        raise AssertionError("chain certificate left the pattern")
    value = q_of_matrix(Ac)
    assert value == seed_q
    kind = "ConstructionUB" if len(steps) == 1 else "DupChainUB"
    return Certificate(kind, value, "duplication chain", {"matrix": Ac, "chain": tuple(steps)})


# ---------------------------------------------------------------------------
# upper bounds: spectral-transfer citations
# ---------------------------------------------------------------------------


def _transfer_seeds() -> list[tuple[ThresholdGraph, gramlib.GramFactor, list[int]]]:
    """Order-8 targets whose q <= 3 comes from a verified matrix with the
    strong spectral property whose pattern embeds in the target."""
    f = gramlib.construct_library("prop_a15a19")
    out = []
    for bits in ("00100101", "00010011"):
        H = graph_from_text(bits)
        emb = _find_embedding(f.target, H.adjacency)
        if emb is not None:
            out.append((H, f, emb))
    return out


def _find_embedding(sub: np.ndarray, sup: np.ndarray) -> list[int] | None:
    """Permutation mapping every edge of `sub` onto an edge of `sup`
    (degree-pruned backtracking; both graphs here have 8 vertices)."""
    n = sub.shape[0]
    sub_deg = sub.sum(axis=1)
    sup_deg = sup.sum(axis=1)
    order = sorted(range(n), key=lambda v: -sub_deg[v])
    assign: list[int] = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or sup_deg[w] < sub_deg[v]:
                continue
            ok = True
            for v2 in order[:k]:
                if sub[v, v2] and not sup[w, assign[v2]]:
                    ok = False
                    break
            if ok:
                assign[v] = w
                used[w] = True
                if place(k + 1):
                    return True
                used[w] = False
                assign[v] = -1
        return False

    return assign if place(0) else None


def transfer_certificate(G: ThresholdGraph) -> Certificate | None:
    """q <= 3 for the transfer seeds themselves; joined-duplication images
    inherit the bound through the reduction lift in classify_q."""
    for H, f, emb in _transfer_seeds():
        if G.creation.bits == H.creation.bits:
            A = gramlib.gram(f)
            rep = ssp_check(A)
            if not rep.is_ssp or q_of_matrix(A) != 3:
                continue  # pragma: no cover - seed is fixed
            return Certificate(
                "TableCitation", 3, "spectral transfer across supergraphs",
                {"matrix": A, "embedding": tuple(emb), "base": H.creation.text})
    return None


# ---------------------------------------------------------------------------
# the general upper bound
# ---------------------------------------------------------------------------


def ub_section12(G: ThresholdGraph) -> tuple[int, Certificate]:
    """floor((s+9)/2) with a construction-backed certificate.

    For block forms with a zero-run of length >= 2 the certificate matrix is
    the paired-column seed grown by duplication; otherwise the alternating
    or complete-split chain (q <= 3) witnesses the bound a fortiori.
    """
    bf = block_form(G.creation)
    bound = (bf.s + 9) // 2
    plan = _section12_plan(bf) if bf.s >= 2 else None
    if plan is not None:
        A, steps = run_chain(plan)
        bits, order = creation_order_of(pattern_matrix(A))
        Ac = A[np.ix_(order, order)]
        value = q_of_matrix(Ac)
        parity_even = plan.seed.params["p1"] % 2 == 0 and plan.seed.params["p2"] % 2 == 0
        kind = "ConstructionUB" if parity_even else "DupChainUB"
        cert = Certificate(kind, bound, "paired-column construction",
                           {"matrix": Ac, "chain": tuple(steps), "achieved": value})
        assert value <= bound
        return bound, cert
    cert = chain_certificate(G)
    assert cert is not None and cert.value <= bound
    return bound, Certificate("DupChainUB", bound, "alternating-family chain",
                              {"matrix": cert.payload["matrix"], "achieved": cert.value})


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------


def jdup_reductions(bits: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Ways of writing the sequence as a joined duplication of something
    smaller: (reduced bits, vertex of the reduced graph to re-duplicate).

    Removing a 1 from a run of length >= 2 undoes a joined copy of that
    run's dominating vertex; when the sequence starts (0, 1, 0...), the
    lone leading 1 is a joined copy of the first isolated vertex of the
    merged graph.
    """
    blocks = block_form(CreationSequence(bits)).blocks
    out = []
    pos = 0
    for i, (k, t) in enumerate(blocks):
        if t >= 2:
            reduced = []
            for j, (kj, tj) in enumerate(blocks):
                reduced += [0] * kj + [1] * (tj - 1 if j == i else tj)
            out.append((tuple(reduced), pos + k))
        pos += k + t
    if len(blocks) >= 2 and blocks[0] == (1, 1):
        reduced = [0] * (1 + blocks[1][0])
        for j, (kj, tj) in enumerate(blocks[1:], start=1):
            reduced += ([1] * tj) if j == 1 else ([0] * kj + [1] * tj)
        out.append((tuple(reduced), 0))
    return out


def _lift_jdup(cert: Certificate, v: int, G: ThresholdGraph) -> Certificate | None:
    """Push an upper certificate of a reduced graph through one joined
    duplication; matrix payloads are rebuilt, citations extend their chain."""
    if "matrix" in cert.payload and cert.kind in ("OrthoUB", "ConstructionUB", "DupChainUB"):
        A = gramlib.jdup_realization(cert.payload["matrix"], v)
        bits, order = creation_order_of(pattern_matrix(A))
        if bits != G.creation.bits:  # pragma: no cover - reductions are exact
            return None
        Ac = A[np.ix_(order, order)]
        chain = tuple(cert.payload.get("chain", ())) + (f"jdup({v})",)
        payload = {"matrix": Ac, "chain": chain}
        if "achieved" in cert.payload:  # joined duplication preserves q
            payload["achieved"] = cert.payload["achieved"]
        return Certificate("DupChainUB", cert.value, "duplication chain", payload)
    if cert.kind == "TableCitation" and "base" in cert.payload:
        return Certificate("TableCitation", cert.value, cert.provenance, dict(cert.payload))
    return None  # pragma: no cover


def classify_q(G: ThresholdGraph, seed: int = 0) -> QBound:
    """Certified interval for q(G); exact when the sides meet.

    The upper side is closed under joined-duplication reductions: a
    certificate for any reduced form lifts to one for G, so bounds are
    monotone along joined duplications by construction.
    """
    if not G.connected:
        raise ValueError("classify_q needs a connected graph")
    return _classify_bits(G.creation.bits, seed)


@functools.lru_cache(maxsize=8192)
def _classify_bits(bits: tuple[int, ...], seed: int) -> QBound:
    G = build_graph(CreationSequence(bits))
    gate = ortho_gate(G, seed)
    lower_certs = _lower_certificates(G, gate)
    lower = max(c.value for c in lower_certs)

    upper_certs: list[Certificate] = []
    c2 = q2_certificate(G, gate, seed)
    if c2 is not None:
        upper_certs.append(c2)
    else:
        chain = chain_certificate(G)
        if chain is not None:
            upper_certs.append(chain)
        transfer = transfer_certificate(G)
        if transfer is not None:
            upper_certs.append(transfer)
        bf = block_form(G.creation)
        if bf.s >= 2 and any(k >= 2 for k in bf.ks):
            bound, cert = ub_section12(G)
            upper_certs.append(cert)
        best = min(c.value for c in upper_certs)
        for rbits, v in jdup_reductions(bits):
            sub = _classify_bits(rbits, seed)
            if sub.upper >= best:
                continue
            sub_best = min(sub.upper_certs, key=lambda c: c.value)
            lifted = _lift_jdup(sub_best, v, G)
            if lifted is not None:
                upper_certs.append(lifted)
                best = lifted.value
    upper = min(c.value for c in upper_certs)
    return QBound(lower, upper, tuple(lower_certs), tuple(upper_certs))


# ---------------------------------------------------------------------------
# certificate re-verification
# ---------------------------------------------------------------------------


def verify_certificate(G: ThresholdGraph, cert: Certificate) -> bool:
    """Re-validate a certificate from its payload alone."""
    if cert.kind == "ConnectedLB":
        return G.connected and cert.value == 2
    if cert.kind == "DiameterLB":
        hit = unique_path_bound(G)
        return hit is not None and hit[0] + 1 >= cert.value
    if cert.kind == "TraceLB":
        return G.trace < math.ceil(G.n / 2) and cert.value == 3
    if cert.kind == "Compare1LB":
        if "columns" in cert.payload:
            w = Infeasible(tuple(cert.payload["columns"]), tuple(cert.payload["rows"]))
            return verify_infeasible(SupportPattern.from_graph(G), w) and cert.value == 3
        bf = block_form(G.creation)
        i = cert.payload["block"]
        return bf.ks[i] >= sum(bf.ts[i:]) and cert.value == 3
    if cert.kind == "OrthoUB":
        A = cert.payload["matrix"]
        return bool(in_pattern(A, G)) and q_of_matrix(A) == 2 == cert.value
    if cert.kind in ("ConstructionUB", "DupChainUB"):
        A = cert.payload["matrix"]
        achieved = cert.payload.get("achieved", cert.value)
        return bool(in_pattern(A, G)) and q_of_matrix(A) == achieved and achieved <= cert.value
    if cert.kind == "TableCitation":
        if "matrix" in cert.payload:  # spectral transfer
            A = cert.payload["matrix"]
            emb = list(cert.payload["embedding"])
            base = graph_from_text(cert.payload["base"])
            P = pattern_matrix(A)
            edges_ok = all(
                base.adjacency[emb[i], emb[j]]
                for i in range(A.shape[0]) for j in range(i + 1, A.shape[0]) if P[i, j])
            chain_ok = _reaches_by_jdup(base.creation.bits, G.creation.bits)
            return edges_ok and chain_ok and ssp_check(A).is_ssp and q_of_matrix(A) == cert.value
        bf = block_form(G.creation)  # trace-two exact-4 family shape
        return (cert.value == 4 and G.n >= 5 and bf.s == 2 and bf.ts == (1, 1)
                and bf.ks[0] >= 3 and bf.ks[1] >= 2)
    return False


@functools.lru_cache(maxsize=65536)
def _reaches_by_jdup(base: tuple[int, ...], target: tuple[int, ...]) -> bool:
    """Is target obtainable from base by joined duplications only?"""
    if base == target:
        return True
    if len(target) <= len(base):
        return False
    return any(_reaches_by_jdup(base, r) for r, _ in jdup_reductions(target))


def verify_qbound(G: ThresholdGraph, qb: QBound) -> bool:
    """Every certificate re-validates and the interval is consistent."""
    if not (1 <= qb.lower <= qb.upper <= G.n):
        return False
    certs_ok = all(verify_certificate(G, c) for c in qb.lower_certs + qb.upper_certs)
    sides_ok = (qb.lower == max(c.value for c in qb.lower_certs)
                and qb.upper == min(c.value for c in qb.upper_certs))
    return certs_ok and sides_ok


def classify_text(text: str, seed: int = 0) -> QBound:
    return classify_q(graph_from_text(text), seed=seed)
