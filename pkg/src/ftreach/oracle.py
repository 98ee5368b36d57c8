"""Brute-force ground truth for cuts, separators, path packings and certificates.

Nothing here reuses the flow or separator code: cuts are found by trying edge
subsets and connectivity by exhaustive search. Only the :class:`Digraph`
container is shared.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import GraphInputError, SizeError
from .graph import Digraph

MAX_SUBSETS = 250_000
MAX_PACKING_EDGES = 16


def _bfs(g: Digraph, sources: Iterable[int], gone: frozenset[int] | set[int]) -> set[int]:
    seen = set(sources)
    todo = deque(seen)
    while todo:
        u = todo.popleft()
        for e in g.out_edges(u):
            if e not in gone and g.head(e) not in seen:
                seen.add(g.head(e))
                todo.append(g.head(e))
    return seen


def _subsets(items: list[int], max_size: int) -> Iterator[tuple[int, ...]]:
    """Subsets of ``items`` by ascending size, lexicographic within a size."""
    for r in range(max_size + 1):
        yield from combinations(items, r)


def _subset_count(m: int, max_size: int) -> int:
    return sum(comb(m, r) for r in range(max_size + 1))


@dataclass(frozen=True)
class Counterexample:
    faults: tuple[int, ...]
    target: int
    in_g: int | bool
    in_h: int | bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive (or sampled) certificate check.

    For reachability checks ``in_g``/``in_h`` of the counterexample are
    booleans; for λ-connectivity checks they are the capped flow values.
    """

    passed: bool
    counterexample: Counterexample | None
    cases_checked: int


def _check_spanning(g: Digraph, h: Digraph) -> None:
    if g.n != h.n:
        raise GraphInputError(f"certificate has {h.n} vertices, original has {g.n}")
    for e, t, hd in h.edges():
        if not g.is_alive(e) or g.endpoints(e) != (t, hd):
            raise GraphInputError(f"certificate edge {e} = ({t},{hd}) is not an edge of the original graph")


def _fault_sets(g: Digraph, k: int, sample: int | None, seed: int) -> Iterator[tuple[int, ...]]:
    ids = g.edge_ids()
    if sample is None:
        yield from _subsets(ids, k)
        return
    rng = random.Random(seed)
    for _ in range(sample):
        size = rng.randint(0, min(k, len(ids)))
        yield tuple(sorted(rng.sample(ids, size)))


def verify_ftrs(
    g: Digraph,
    h: Digraph,
    source: int,
    k: int,
    sample: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Check that ``h`` preserves reachability from ``source`` under every set of at most ``k`` failed edges.

    Fault sets are visited by ascending size and in lexicographic id order, so
    the first counterexample reported is a smallest one. With ``sample`` set,
    that many random fault sets are drawn instead.
    """
    _check_spanning(g, h)
    g.check_vertex(source)
    if sample is None and _subset_count(g.m, k) > MAX_SUBSETS:
        raise SizeError(f"{_subset_count(g.m, k)} fault sets exceed the exhaustive limit {MAX_SUBSETS}")
    cases = 0
    for faults in _fault_sets(g, k, sample, seed):
        gone = frozenset(faults)
        rg = _bfs(g, [source], gone)
        rh = _bfs(h, [source], gone)
        for v in range(g.n):
            cases += 1
            if (v in rg) != (v in rh):
                return VerificationReport(False, Counterexample(faults, v, v in rg, v in rh), cases)
    return VerificationReport(True, None, cases)


def capped_connectivity(g: Digraph, source: int, lam: int, gone: Iterable[int] = ()) -> list[int]:
    """``min(edge connectivity from source to v, lam)`` for every vertex ``v``, by cut enumeration.

    Tries every edge subset of size below ``lam``: the connectivity to ``v``
    is the size of the smallest subset that disconnects it. The source is
    reported as ``lam``.
    """
    gone = frozenset(gone)
    ids = [e for e in g.edge_ids() if e not in gone]
    best = [lam] * g.n
    open_targets = set(range(g.n)) - {source}
    for cut in _subsets(ids, lam - 1):
        if not open_targets:
            break
        reach = _bfs(g, [source], gone | set(cut))
        for v in list(open_targets):
            if v not in reach:
                best[v] = len(cut)
                open_targets.discard(v)
    return best


def verify_lambda_ftrs(
    g: Digraph,
    h: Digraph,
    source: int,
    k: int,
    lam: int,
    sample: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Check that ``h`` preserves ``lam`` edge-disjoint paths from ``source`` under at most ``k`` edge failures."""
    if lam < 1:
        raise GraphInputError(f"lambda must be at least 1, got {lam}")
    _check_spanning(g, h)
    g.check_vertex(source)
    if sample is None:
        work = _subset_count(g.m, k) * _subset_count(g.m, lam - 1)
        if work > MAX_SUBSETS * 20:
            raise SizeError(f"about {work} reachability sweeps exceed the exhaustive limit")
    cases = 0
    for faults in _fault_sets(g, k, sample, seed):
        cg = capped_connectivity(g, source, lam, faults)
        ch = capped_connectivity(h, source, lam, faults)
        for v in range(g.n):
            if v == source:
                continue
            cases += 1
            if cg[v] != ch[v]:
                return VerificationReport(False, Counterexample(faults, v, cg[v], ch[v]), cases)
    return VerificationReport(True, None, cases)


@dataclass(frozen=True)
class BruteCut:
    edges: frozenset[int]
    reach: frozenset[int]


def all_cuts_bruteforce(g: Digraph, S: Iterable[int], T: Iterable[int], budget: int) -> list[BruteCut]:
    """Every edge subset of size at most ``budget`` that separates ``S`` from ``T``, with its reach."""
    S, T = set(S), set(T)
    if S & T:
        raise GraphInputError("S and T overlap")
    ids = g.edge_ids()
    if _subset_count(len(ids), budget) > MAX_SUBSETS:
        raise SizeError(f"{_subset_count(len(ids), budget)} edge subsets exceed the limit {MAX_SUBSETS}")
    out = []
    for sub in _subsets(ids, budget):
        reach = _bfs(g, S, frozenset(sub))
        if not reach & T:
            out.append(BruteCut(frozenset(sub), frozenset(reach)))
    return out


def important_separators_bruteforce(g: Digraph, S: Iterable[int], T: Iterable[int], budget: int) -> list[BruteCut]:
    """Important (S,T)-separators of size at most ``budget``, straight from the definition.

    Every separating subset is reduced to the edges that leave its reach;
    a reduced cut survives unless some other reduced cut is no larger and
    reaches a superset of its vertices.
    """
    reduced: dict[frozenset[int], BruteCut] = {}
    for cut in all_cuts_bruteforce(g, S, T, budget):
        leaving = frozenset(e for e in g.edge_ids() if g.tail(e) in cut.reach and g.head(e) not in cut.reach)
        reduced[leaving] = BruteCut(leaving, cut.reach)
    cuts = list(reduced.values())
    keep = []
    for x in cuts:
        beaten = any(
            y.edges != x.edges and len(y.edges) <= len(x.edges) and x.reach <= y.reach for y in cuts
        )
        if not beaten:
            keep.append(x)
    keep.sort(key=lambda c: (len(c.edges), sorted(c.edges)))
    return keep


def edge_disjoint_paths_bruteforce(g: Digraph, s: int, t: int) -> int:
    """Largest number of pairwise edge-disjoint ``s -> t`` paths, by exhaustive packing."""
    g.check_vertex(s)
    g.check_vertex(t)
    if g.m > MAX_PACKING_EDGES:
        raise SizeError(f"{g.m} edges exceed the packing-search limit {MAX_PACKING_EDGES}")
    if s == t:
        raise GraphInputError("s and t must differ")

    paths: list[frozenset[int]] = []

    def walk(u: int, visited: set[int], used: list[int]) -> None:
        if u == t:
            paths.append(frozenset(used))
            return
        for e in g.out_edges(u):
            w = g.head(e)
            if w not in visited:
                visited.add(w)
                used.append(e)
                walk(w, visited, used)
                used.pop()
                visited.discard(w)

    walk(s, {s}, [])
    # an optimal packing never needs a path that strictly contains another
    paths = sorted(set(paths), key=len)
    paths = [p for i, p in enumerate(paths) if not any(q < p for q in paths[:i])]
    bound = min(g.out_degree(s), g.in_degree(t))
    best = 0

    def pack(start: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if best >= bound:
            return
        for i in range(start, len(paths)):
            if count + (len(paths) - i) <= best:
                return
            if not paths[i] & used:
                pack(i + 1, used | paths[i], count + 1)
                if best >= bound:
                    return

    pack(0, frozenset(), 0)
    return best
