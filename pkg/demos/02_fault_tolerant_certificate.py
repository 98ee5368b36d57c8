# Building a sparse certificate that survives k edge failures.
#
# Run: python demos/02_fault_tolerant_certificate.py

import random

from ftreach import Digraph, GenSpec, build_ftrs, gen_random, query_reachable
from ftreach.oracle import verify_ftrs

# A funnel: the source reaches 12 relays and every relay links to vertex 13.
# Vertex 13 has in-degree 12, above the k=0 threshold of 4.
funnel = Digraph.from_pairs(14, [(0, i) for i in range(1, 13)] + [(i, 13) for i in range(1, 13)])
res = build_ftrs(funnel, source=0, k=0)
print(f"alpha={res.alpha}, deleted {len(res.deleted)} edges, in-degree of 13 now {res.certificate.in_degree(13)}")
print("0-FTRS check:", verify_ftrs(funnel, res.certificate, 0, 0))

# Random multigraph with a popular vertex, k = 1 (threshold 32).
rng = random.Random(4)
pairs = []
while len(pairs) < 400:
    u, v = rng.randrange(20), (19 if rng.random() < 0.4 else rng.randrange(20))
    if u != v:
        pairs.append((u, v))
g = Digraph.from_pairs(20, pairs)
res = build_ftrs(g, source=0, k=1)
print(f"\n{g.m} edges -> {res.certificate.m} edges, max in-degree {res.max_in_degree()} (alpha {res.alpha})")
print("sampled 1-FTRS check:", verify_ftrs(g, res.certificate, 0, 1, sample=400, seed=1).passed)

# Queries use the ids of the original graph, deleted or not.
failed = [res.deleted[-1].edge]
print(f"vertex 19 reachable after failing edge {failed[0]}:", query_reachable(res, failed, 19))

# The scale the tests exercise.
big = gen_random(GenSpec(200, 2000, seed=9))
res = build_ftrs(big, 0, 0)
print(f"\nn=200 m=2000 k=0: {res.stats.iterations} separator rounds, {len(res.deleted)} deletions")
