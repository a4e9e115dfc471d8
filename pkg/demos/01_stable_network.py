"""A perfectly stable network: one random graph repeated over 64 snapshots.

Every edge is present at every time, so each edge collapses into a single
interval and the interval-graph encoding is by far the cheapest.
"""
import tnetcost as tc

ls = tc.gen_stable(n=100, m_edges=640, t_snapshots=64, seed=0)
print(ls)

r = tc.report(ls)
print("n, m, e, t, i, t' =", r.params)
for rep, bits in r.costs.items():
    print(f"  {rep.value:5s} {bits:12.2f} bits")
print("cheapest:", r.best.value)

# Aggregating shrinks the time alphabet; at a single window all snapshots
# merge and the link stream wins again.
print("\nwindow    t  best")
for row in tc.run_sweep(ls):
    print(f"{row.window:6d} {row.params.t:4d}  {row.best.value}")

# Static graphs follow the same rule: the matrix wins when dense.
for n, m in [(100, 640), (4, 6)]:
    matrix, edgelist = tc.static_costs(n, m)
    print(f"\nstatic n={n} m={m}: matrix {matrix:.0f} bits, edge list {edgelist:.1f} bits")
