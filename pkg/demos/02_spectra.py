#!/usr/bin/env python3
"""Spectra, distinct-eigenvalue clustering, and pattern membership.

S(G) holds every real symmetric matrix whose off-diagonal support is the
edge set of G; q(A) counts distinct eigenvalues after gap clustering, and
q(G) is the minimum over the class.
"""

import numpy as np

from threshq import cluster_spectrum, eigen_sym, graph_from_text, in_pattern, q_of_matrix

print("== a star and its adjacency spectrum ==")
G = graph_from_text("000000001")  # star on 9 vertices
A = np.asarray(G.adjacency, dtype=float)
w = eigen_sym(A)
print("eigenvalues:", np.round(w, 6))
print("clustered:  ", cluster_spectrum(w))
print("q(adjacency) =", q_of_matrix(A))

print()
print("== pattern membership ==")
print("adjacency in S(G)?", bool(in_pattern(A, G)))
B = A.copy()
B[0, 8] = B[8, 0] = 0.0  # kill an edge entry
rep = in_pattern(B, G)
print("after zeroing an edge entry:", bool(rep), "->", rep.violations)

print()
print("== clustering tolerance ==")
eigs = np.array([0.0, 0.0, 1e-9, 7.0, 7.0 - 1e-9, 7.0])
s = cluster_spectrum(eigs, tol=1e-6)
print(f"{list(eigs)} at tol 1e-6 -> {s} (q={s.q})")

print()
print("== diagonal freedom ==")
# shifting the diagonal moves eigenvalues but never the pattern
C = A + 3.0 * np.eye(9)
print("shifted in S(G)?", bool(in_pattern(C, G)), " q =", q_of_matrix(C))
