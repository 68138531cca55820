"""Why the fast method is limited to two objectives.

With three objectives, pairing every Q point with its own closest P point
is no longer optimal: here a single P point covering all of Q is cheaper.
Run: python demos/01_three_objectives.py
"""

from dommove import Partition, dom_brute_force, fixture_path, ideal_point, move_point_to_point, read_points

P = read_points(fixture_path("counterexample_P.txt"))
Q = read_points(fixture_path("counterexample_Q.txt"))

print("P:", P.rows())
print("Q:", Q.rows())

print("\nEach q with the matching p:")
for i in range(3):
    print(f"  d(p{i + 1}, q{i + 1}) = {move_point_to_point(P[i], Q[i]):.2f}")
pointwise = Partition.from_assignment(P, Q, [0, 1, 2])
print(f"  total {pointwise.total_move:.2f}")

best = dom_brute_force(P, Q)
(group,) = best.partition.groups
print(f"\nOptimal (exhaustive search): all of Q on p{group.anchor + 1}, total {best.value:.2f}")
print("p2 moves to the ideal point of itself and Q:", ideal_point([P[1], *Q]).tolist())
