"""Step through the biobjective algorithm on a five-by-five example.

The first Q point is already covered and drops out. The other four point
at each other in pairs; mutual pairs merge into their ideal point until the
last merged node reaches a P point.
Run: python demos/02_merge_trace.py
"""

from dommove import compute_dom_2d, fixture_path, read_points
from dommove.biobjective import build_graph

P = read_points(fixture_path("worked_P.txt"))
Q = read_points(fixture_path("worked_Q.txt"))


def name(ref, iq):
    return f"p{-ref}" if ref < 0 else f"q{iq[ref] + 1}"


graph, ip, iq = build_graph(P, Q)
print("Q points kept after reduction:", [f"q{j + 1}" for j in iq])
print("Initial inward neighbors:")
for pos, ref in enumerate(graph.nbr):
    print(f"  q{iq[pos] + 1} -> {name(ref, iq)}")

res = compute_dom_2d(P, Q)
print("\nMerges:")
for e in res.trace:
    print(f"  node at q{e.left + 1} + node at q{e.right + 1} -> ideal point {e.ideal}")

print("\nGroups:")
for g in res.partition.groups:
    members = ", ".join(f"q{j + 1}" for j in sorted(g.members))
    print(f"  p{g.anchor + 1}: {members}  (move {g.move:g})")
print(f"D(P, Q) = {res.value:g}")
