#!/usr/bin/env python3
"""Creation sequences and threshold graphs: parsing, blocks, duplication.

A threshold graph grows one vertex at a time, each either isolated (0) or
dominating (1).  The bit string is the whole graph: everything downstream
(patterns, spectra, bounds) is keyed by it.
"""

from threshq import (
    block_form,
    build_graph,
    dup_graph,
    enumerate_connected,
    graph_from_text,
    jdup_graph,
    parse_creation_sequence,
    to_edge_list,
    unique_path_bound,
)

print("== parsing ==")
seq = parse_creation_sequence("0101001")
print(f"sequence {seq}: n={seq.n}, trace={seq.trace}, connected={seq.connected}")

bf = block_form(seq)
print(f"block form: {bf.blocks}  (s={bf.s} runs, trace={bf.trace})")

print()
print("== the graph ==")
G = build_graph(seq)
print(f"degrees in creation order: {[int(d) for d in G.degrees()]}")
print(f"dominating vertices: {G.dominating}, isolated: {G.isolated}")
print("edge list (1-indexed):")
print(to_edge_list(G), end="")

print()
print("== unique shortest paths ==")
star = graph_from_text("0000001")
print(f"star {star.creation}: unique path witness {unique_path_bound(star)}")
print(f"complete graph: {unique_path_bound(graph_from_text('011111'))}")

print()
print("== duplication ==")
K2 = graph_from_text("01")
print(f"dup(K2, 0)  -> {dup_graph(K2, 0).creation}   (a path)")
print(f"jdup(K2, 0) -> {jdup_graph(K2, 0).creation}  (a triangle)")
H = graph_from_text("00101")
print(f"dup of the pendant vertex of {H.creation} -> {dup_graph(H, 3).creation}")

print()
print("== enumeration ==")
for n in (3, 4, 5):
    seqs = list(enumerate_connected(n))
    print(f"n={n}: {len(seqs)} connected sequences: {[s.text for s in seqs]}")
