# Important separators on a small network.
#
# Run: python demos/01_important_separators.py

from ftreach import Digraph, enumerate_important, furthest_min_cut, min_cut
from ftreach.oracle import important_separators_bruteforce

# s=0 feeds two relays (1, 2); both relays feed a hub 3, relay 1 also has a
# private link to the sink 4, and the hub reaches the sink over two links.
g = Digraph.from_pairs(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 4), (1, 4)])
for e, t, h in g.edges():
    print(f"edge {e}: {t} -> {h}")

# A minimum cut can sit close to the source or far from it.
print("closest min cut :", min_cut(g, {0}, {4}, budget=5))
print("furthest min cut:", furthest_min_cut(g, {0}, {4}, budget=5))

# Important separators: cuts that cannot be pushed further from the source
# without growing. Their number is at most 4^budget.
for budget in range(5):
    family = enumerate_important(g, {0}, {4}, budget)
    print(f"budget {budget}: {len(family)} important separator(s) (bound {4 ** budget})")
    for sep in family:
        print("   ", sep)

# The brute-force oracle agrees.
fast = enumerate_important(g, {0}, {4}, 3).edge_sets()
slow = {c.edges for c in important_separators_bruteforce(g, {0}, {4}, 3)}
print("matches brute force:", fast == slow)
