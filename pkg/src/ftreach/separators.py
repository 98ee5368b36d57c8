"""Minimum cuts, furthest minimum cuts and important separator enumeration.

A cut is always reported in minimal form: its edge set is exactly the set of
edges leaving its reachability set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetError, GraphInputError, InvariantViolation
from .graph import Digraph, max_flow_bounded, reachable_set

DEFAULT_BUDGET_LIMIT = 16


@dataclass(frozen=True)
class Separator:
    edges: frozenset[int]
    reach: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.edges), tuple(sorted(self.edges))

    def __str__(self) -> str:
        edges = ",".join(map(str, sorted(self.edges))) or "-"
        reach = ",".join(map(str, sorted(self.reach)))
        return f"size={len(self.edges)} edges={edges} reach={reach}"


@dataclass
class ImportantFamily:
    members: list[Separator]
    budget: int

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Separator]:
        return iter(self.members)

    def edge_union(self) -> set[int]:
        return {e for x in self.members for e in x.edges}

    def edge_sets(self) -> set[frozenset[int]]:
        return {x.edges for x in self.members}


def dominates(x: Separator, y: Separator) -> bool:
    """True if ``x`` is no larger than ``y``, reaches at least as far, and differs from it."""
    return len(x.edges) <= len(y.edges) and y.reach <= x.reach and x != y


def minimal_form(g: Digraph, S: Iterable[int], cut: Iterable[int], removed: Iterable[int] = ()) -> Separator:
    """Shrink the cut ``cut`` to the edges leaving its reachability set."""
    removed = set(removed)
    reach = reachable_set(g, S, removed=removed | set(cut))
    return Separator(frozenset(g.delta_out(reach) - removed), frozenset(reach))


def _check_terminals(g: Digraph, S, T) -> tuple[frozenset[int], frozenset[int]]:
    S, T = frozenset(S), frozenset(T)
    if not S or not T:
        raise GraphInputError("S and T must be non-empty")
    for v in S | T:
        g.check_vertex(v)
    if S & T:
        raise GraphInputError(f"S and T overlap on {sorted(S & T)}")
    return S, T


def min_cut(g: Digraph, S: Iterable[int], T: Iterable[int], budget: int) -> Separator | None:
    """A minimum (S,T)-cut closest to S, or None if every cut is larger than ``budget``."""
    S, T = _check_terminals(g, S, T)
    res = max_flow_bounded(g, S, T, budget)
    if res.overflow:
        return None
    return minimal_form(g, S, g.delta_out(res.source_side))


def _furthest(g: Digraph, S, T, budget: int, removed) -> Separator | None:
    res = max_flow_bounded(g, S, T, budget, removed=removed)
    if res.overflow:
        return None
    far_side = set(range(g.n)) - res.sink_side
    cut = g.delta_out(far_side) - removed
    return minimal_form(g, S, cut, removed)


def furthest_min_cut(g: Digraph, S: Iterable[int], T: Iterable[int], budget: int) -> Separator | None:
    """The minimum (S,T)-cut whose reachability set contains that of every other minimum cut.

    Returns None when the minimum cut is larger than ``budget``.
    """
    S, T = _check_terminals(g, S, T)
    if budget < 0:
        raise GraphInputError(f"budget must be non-negative, got {budget}")
    return _furthest(g, S, T, budget, frozenset())


def enumerate_important(
    g: Digraph,
    S: Iterable[int],
    T: Iterable[int],
    budget: int,
    limit: int = DEFAULT_BUDGET_LIMIT,
) -> ImportantFamily:
    """All important (S,T)-separators with at most ``budget`` edges.

    Bounded search: take the furthest minimum cut ``X`` of the current
    instance and its smallest-id edge ``e = (u, v)``. Either ``e`` stays out
    of the separator, in which case ``v`` joins the source side, or ``e`` is
    taken and the budget drops by one. Every important separator is emitted
    by some branch; the candidates are then reduced to minimal form and
    dominated ones discarded.

    Members are sorted by size, then by their sorted edge ids.
    """
    S, T = _check_terminals(g, S, T)
    if budget < 0:
        raise GraphInputError(f"budget must be non-negative, got {budget}")
    if budget > limit:
        raise BudgetError(f"separator budget {budget} exceeds the hard limit {limit}")

    candidates: set[frozenset[int]] = set()
    stack: list[tuple[frozenset[int], int, frozenset[int]]] = [(S, budget, frozenset())]
    while stack:
        src, left, taken = stack.pop()
        x = _furthest(g, src, T, left, taken)
        if x is None:
            continue
        candidates.add(taken | x.edges)
        if not x.edges:
            continue
        e = min(x.edges)
        v = g.head(e)
        stack.append((x.reach, left - 1, taken | {e}))
        if v not in T:
            stack.append((x.reach | {v}, left, taken))

    forms = {}
    for cand in candidates:
        sep = minimal_form(g, S, cand)
        if sep.reach & T:
            raise InvariantViolation(f"candidate {sorted(cand)} does not separate S from T")
        forms[sep.edges] = sep
    pool = list(forms.values())
    members = [x for x in pool if len(x) <= budget and not any(dominates(y, x) for y in pool)]
    members.sort(key=Separator.sort_key)
    return ImportantFamily(members, budget)
