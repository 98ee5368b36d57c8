"""Sparse fault-tolerant reachability certificates and fault queries against them."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from .errors import BudgetError, ContractError, GraphInputError, InvariantViolation
from .graph import Digraph, SplitMap, max_flow_bounded, normalize, reachable_set, self_loops, split_vertices
from .separators import DEFAULT_BUDGET_LIMIT, ImportantFamily, enumerate_important

log = logging.getLogger(__name__)


class FaultMode(str, Enum):
    EDGE = "edge"
    VERTEX = "vertex"


class DeletionReason(str, Enum):
    SOURCE_IN_EDGE = "in-edge-of-source"
    DEGREE_REDUCTION = "degree-reduction"


@dataclass(frozen=True)
class BuildParams:
    source: int
    k: int = 0
    lam: int = 1
    fault_mode: FaultMode = FaultMode.EDGE

    def __post_init__(self):
        if self.k < 0:
            raise GraphInputError(f"k must be non-negative, got {self.k}")
        if self.lam < 1:
            raise GraphInputError(f"lambda must be at least 1, got {self.lam}")
        object.__setattr__(self, "fault_mode", FaultMode(self.fault_mode))

    @property
    def budget(self) -> int:
        """Fault budget of the plain certificate that yields the (lam, k) guarantee."""
        return self.k + self.lam - 1


@dataclass(frozen=True)
class Deletion:
    edge: int
    reason: DeletionReason


@dataclass
class BuildStats:
    iterations: int = 0
    family_sizes: Counter = field(default_factory=Counter)


@dataclass
class FtrsResult:
    """A certificate together with what is needed to query it.

    ``certificate`` lives in build space: in vertex mode that is the split
    graph, with ``split_map`` relating it to ``original``. ``source`` and
    fault ids in queries are always given in original terms.
    """

    certificate: Digraph
    original: Digraph
    source: int
    k: int
    lam: int
    alpha: int
    deleted: list[Deletion] = field(default_factory=list)
    fault_mode: FaultMode = FaultMode.EDGE
    split_map: SplitMap | None = None
    stats: BuildStats = field(default_factory=BuildStats)

    @property
    def build_source(self) -> int:
        return self.split_map.vertex_out[self.source] if self.split_map else self.source

    def original_certificate(self) -> Digraph:
        """The certificate as a subgraph of ``original``.

        In vertex mode an original edge stays alive iff its image survived;
        split edges are never deleted, so nothing else is lost. Deleted edges
        remain in the edge table as dead edges.
        """
        if self.split_map is None:
            return self.certificate
        edges = [(e, *self.original.endpoints(e)) for e in self.split_map.edge_image]
        gone = [e for e, img in self.split_map.edge_image.items() if not self.certificate.is_alive(img)]
        return Digraph(self.original.n, edges, dead=gone)

    def max_in_degree(self, exclude_source: bool = True) -> int:
        h = self.certificate
        return max((h.in_degree(v) for v in range(h.n) if not (exclude_source and v == self.build_source)),
                   default=0)


def alpha_for(budget: int) -> int:
    """In-degree threshold for a certificate tolerating ``budget`` edge failures."""
    return (budget + 1) * 4 ** (budget + 1)


def delete_candidate(g: Digraph, v: int, family: ImportantFamily) -> int:
    """Smallest-id alive in-edge of ``v`` that lies in no member of ``family``."""
    covered = family.edge_union()
    for e in g.in_edges(v):
        if e not in covered:
            return e
    raise InvariantViolation(
        f"every in-edge of vertex {v} (in-degree {g.in_degree(v)}) lies in one of "
        f"{len(family)} important separators"
    )


def build_ftrs(
    g: Digraph,
    source: int,
    k: int,
    limit: int = DEFAULT_BUDGET_LIMIT,
    on_delete: Callable[[Digraph, Deletion], None] | None = None,
) -> FtrsResult:
    """Certificate preserving reachability from ``source`` under any ``k`` edge failures.

    Drops the in-edges of the source, then visits the other vertices in id
    order. While a vertex ``v`` has more than ``alpha`` in-edges, the
    important ``(source, v)``-separators of size at most ``k + 1`` are
    recomputed on the current graph and one in-edge of ``v`` outside all of
    them is deleted.

    ``on_delete`` is called with the working graph after every deletion.
    """
    if k < 0:
        raise GraphInputError(f"k must be non-negative, got {k}")
    if k + 1 > limit:
        raise BudgetError(f"separator budget k+1 = {k + 1} exceeds the hard limit {limit}")
    g.check_vertex(source)
    if self_loops(g):
        g = normalize(g)
    alpha = alpha_for(k)
    h = g.compact()
    deleted: list[Deletion] = []
    stats = BuildStats()

    def drop(e: int, reason: DeletionReason) -> None:
        h.delete(e)
        d = Deletion(e, reason)
        deleted.append(d)
        if on_delete is not None:
            on_delete(h, d)

    for e in h.in_edges(source):
        drop(e, DeletionReason.SOURCE_IN_EDGE)
    for v in range(h.n):
        if v == source:
            continue
        while h.in_degree(v) > alpha:
            family = enumerate_important(h, {source}, {v}, k + 1, limit=limit)
            stats.iterations += 1
            stats.family_sizes[len(family)] += 1
            drop(delete_candidate(h, v, family), DeletionReason.DEGREE_REDUCTION)
    log.debug("built %d-FTRS: %d edges deleted, alpha=%d", k, len(deleted), alpha)
    return FtrsResult(h, g, source, k, 1, alpha, deleted, stats=stats)


def build_lambda_ftrs(g: Digraph, params: BuildParams, limit: int = DEFAULT_BUDGET_LIMIT) -> FtrsResult:
    """Certificate preserving ``lam`` edge-disjoint paths from the source under any ``k`` failures.

    A certificate tolerating ``k + lam - 1`` failures already has this
    property. In vertex mode the graph is split first, with the source kept
    whole, and failures of vertex ``v`` become failures of its split edge.
    """
    if params.k + params.lam > limit:
        raise BudgetError(f"k + lambda = {params.k + params.lam} exceeds the hard limit {limit}")
    g.check_vertex(params.source)
    if self_loops(g):
        g = normalize(g)
    if params.fault_mode is FaultMode.EDGE:
        res = build_ftrs(g, params.source, params.budget, limit=limit)
        res.k, res.lam = params.k, params.lam
        return res
    split, smap = split_vertices(g, protected={params.source})
    res = build_ftrs(split, smap.vertex_out[params.source], params.budget, limit=limit)
    if any(d.edge in smap.split_edge.values() for d in res.deleted):
        raise InvariantViolation("a split edge was deleted")
    return FtrsResult(res.certificate, g, params.source, params.k, params.lam, res.alpha,
                      res.deleted, FaultMode.VERTEX, smap, res.stats)


def certificate_result(h: Digraph, params: BuildParams) -> FtrsResult:
    """Wrap an already built certificate (e.g. loaded from disk) for querying.

    In vertex mode ``h`` is given in original terms and is split here.
    """
    h.check_vertex(params.source)
    alpha = alpha_for(params.budget)
    if params.fault_mode is FaultMode.EDGE:
        return FtrsResult(h, h, params.source, params.k, params.lam, alpha)
    split, smap = split_vertices(h, protected={params.source})
    return FtrsResult(split, h, params.source, params.k, params.lam, alpha,
                      fault_mode=FaultMode.VERTEX, split_map=smap)


def _resolve(result: FtrsResult, faults: Iterable[int], target: int) -> tuple[set[int], int]:
    faults = set(faults)
    if len(faults) > result.k:
        raise ContractError(f"{len(faults)} faults exceed the certificate's budget k={result.k}")
    result.original.check_vertex(target)
    if result.split_map is None:
        for e in faults:
            if not result.original.has_edge(e):
                raise GraphInputError(f"unknown edge id {e}")
        return faults, target
    for v in faults:
        result.original.check_vertex(v)
        if v == result.source:
            raise GraphInputError("the source vertex cannot fail")
    return result.split_map.fault_edges(faults), result.split_map.vertex_out[target]


def query_reachable(result: FtrsResult, faults: Iterable[int], target: int) -> bool:
    """Is ``target`` reachable from the source once ``faults`` have failed?"""
    removed, t = _resolve(result, faults, target)
    return t in reachable_set(result.certificate, [result.build_source], removed=removed)


def query_connectivity(result: FtrsResult, faults: Iterable[int], target: int) -> bool:
    """Are there ``lam`` edge-disjoint source-target paths once ``faults`` have failed?"""
    removed, t = _resolve(result, faults, target)
    s = result.build_source
    if t == s:
        return True
    flow = max_flow_bounded(result.certificate, {s}, {t}, result.lam, removed=removed)
    return flow.value >= result.lam
