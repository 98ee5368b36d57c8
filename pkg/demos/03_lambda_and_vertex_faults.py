# Preserving lambda edge-disjoint paths, and tolerating vertex failures.
#
# Run: python demos/03_lambda_and_vertex_faults.py

from ftreach import BuildParams, Digraph, FaultMode, build_lambda_ftrs, query_connectivity, query_reachable
from ftreach.oracle import verify_lambda_ftrs

# Two parallel routes from 0 to 5 plus a shortcut.
g = Digraph.from_pairs(6, [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5), (1, 4)])

res = build_lambda_ftrs(g, BuildParams(source=0, k=1, lam=2))
print("alpha for (k=1, lambda=2):", res.alpha)
print("two disjoint paths to 5, no faults:", query_connectivity(res, [], 5))
print("two disjoint paths to 5, edge 0 failed:", query_connectivity(res, [0], 5))
print("exhaustive (lambda=2, k=1) check:", verify_lambda_ftrs(g, res.certificate, 0, 1, 2).passed)

# Vertex faults: every vertex but the source is split into an in/out pair
# joined by one edge, and a vertex failure becomes a failure of that edge.
vres = build_lambda_ftrs(g, BuildParams(source=0, k=1, fault_mode=FaultMode.VERTEX))
for w in range(1, 5):
    print(f"vertex {w} down: 5 reachable = {query_reachable(vres, [w], 5)}")
print("certificate in original terms:", vres.original_certificate())
