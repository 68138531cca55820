"""How the dominance move reacts to each quality aspect of a set.

Each generated pair differs in one aspect only (convergence, spread,
extent, size). The better set always needs the smaller move; additive
epsilon and hypervolume are shown alongside.
Run: python demos/03_quality_aspects.py
"""

from dommove import GENERATORS, compare_sets, dom_brute_force, epsilon_additive, fixture_path, read_points

REF = (2.2, 2.2)

print(f"{'pair':<18}{'better':>7}{'D(A,B)':>9}{'D(B,A)':>9}{'eps(A,B)':>10}{'eps(B,A)':>10}{'HV(A)':>8}{'HV(B)':>8}")
for name, spec in GENERATORS.items():
    A, B = spec.func()
    r = compare_sets(A, B, ref=REF)
    print(
        f"{name:<18}{spec.better:>7}{r.dom_pq:>9.3f}{r.dom_qp:>9.3f}"
        f"{r.eps_pq:>10.3f}{r.eps_qp:>10.3f}{r.hv_p:>8.3f}{r.hv_q:>8.3f}"
    )

print("\nA ten-objective pair that epsilon cannot separate:")
p, q = read_points(fixture_path("eps10_p.txt")), read_points(fixture_path("eps10_q.txt"))
print(f"  eps(p,q) = {epsilon_additive(p, q):g}, eps(q,p) = {epsilon_additive(q, p):g}")
print(f"  D(p,q)   = {dom_brute_force(p, q).value:g}, D(q,p)   = {dom_brute_force(q, p).value:g}")
