"""Directed multigraphs with stable edge ids, reachability and bounded unit-capacity flow."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import GraphInputError

log = logging.getLogger(__name__)

Edge = tuple[int, int, int]  # (edge_id, tail, head)


class Digraph:
    """Directed multigraph on vertices ``0..n-1``.

    Every edge has an integer id that never changes. Deleting an edge only
    marks it dead, so ids stay addressable for the life of the object and of
    all its copies. Parallel edges are ordinary distinct edges.

    Instances are treated as values: the only mutating method is
    :meth:`delete`, meant for private working copies obtained via :meth:`copy`.
    """

    __slots__ = ("n", "_tail", "_head", "_dead", "_out", "_in")

    def __init__(self, n: int, edges: Iterable[Edge] = (), dead: Iterable[int] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._tail: dict[int, int] = {}
        self._head: dict[int, int] = {}
        self._out: list[list[int]] = [[] for _ in range(n)]
        self._in: list[list[int]] = [[] for _ in range(n)]
        for eid, tail, head in sorted(edges):
            if eid < 0:
                raise GraphInputError(f"edge id must be non-negative, got {eid}")
            if eid in self._tail:
                raise GraphInputError(f"duplicate edge id {eid}")
            if not (0 <= tail < n and 0 <= head < n):
                raise GraphInputError(f"edge {eid} = ({tail},{head}) has an endpoint outside 0..{n - 1}")
            self._tail[eid] = tail
            self._head[eid] = head
            self._out[tail].append(eid)
            self._in[head].append(eid)
        self._dead: set[int] = set()
        for eid in dead:
            self._check_id(eid)
            self._dead.add(eid)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Digraph:
        """Build a graph whose edge ids are the positions in ``pairs``."""
        return cls(n, ((i, t, h) for i, (t, h) in enumerate(pairs)))

    def _check_id(self, eid: int) -> None:
        if eid not in self._tail:
            raise GraphInputError(f"unknown edge id {eid}")

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphInputError(f"vertex {v!r} is outside 0..{self.n - 1}")

    # -- inspection -------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of alive edges."""
        return len(self._tail) - len(self._dead)

    def has_edge(self, eid: int) -> bool:
        """True if ``eid`` was ever an edge of this graph (alive or dead)."""
        return eid in self._tail

    def is_alive(self, eid: int) -> bool:
        return eid in self._tail and eid not in self._dead

    def tail(self, eid: int) -> int:
        return self._tail[eid]

    def head(self, eid: int) -> int:
        return self._head[eid]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._tail[eid], self._head[eid]

    def all_edge_ids(self) -> list[int]:
        return sorted(self._tail)

    def edge_ids(self) -> list[int]:
        """Alive edge ids in ascending order."""
        return [e for e in sorted(self._tail) if e not in self._dead]

    def edges(self) -> list[Edge]:
        """Alive edges as ``(id, tail, head)`` sorted by id."""
        return [(e, self._tail[e], self._head[e]) for e in self.edge_ids()]

    def dead_edge_ids(self) -> list[int]:
        return sorted(self._dead)

    def out_edges(self, v: int) -> list[int]:
        return [e for e in self._out[v] if e not in self._dead]

    def in_edges(self, v: int) -> list[int]:
        return [e for e in self._in[v] if e not in self._dead]

    def in_degree(self, v: int) -> int:
        return len(self.in_edges(v))

    def out_degree(self, v: int) -> int:
        return len(self.out_edges(v))

    def delta_out(self, region: Iterable[int]) -> set[int]:
        """Alive edges with tail inside ``region`` and head outside."""
        region = set(region)
        return {e for v in region for e in self.out_edges(v) if self._head[e] not in region}

    def delta_in(self, region: Iterable[int]) -> set[int]:
        """Alive edges with head inside ``region`` and tail outside."""
        region = set(region)
        return {e for v in region for e in self.in_edges(v) if self._tail[e] not in region}

    # -- derived graphs ---------------------------------------------------

    def copy(self) -> Digraph:
        return Digraph(self.n, ((e, self._tail[e], self._head[e]) for e in self._tail), self._dead)

    def without(self, eids: Iterable[int]) -> Digraph:
        """Copy of the graph with ``eids`` marked dead."""
        g = self.copy()
        for e in eids:
            g.delete(e)
        return g

    def compact(self) -> Digraph:
        """Copy that drops dead edges from the edge table (ids of alive edges kept)."""
        return Digraph(self.n, self.edges())

    def delete(self, eid: int) -> None:
        """Mark ``eid`` dead in place."""
        self._check_id(eid)
        self._dead.add(eid)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges())))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}:{t}->{h}" for e, t, h in self.edges())
        return f"Digraph(n={self.n}, [{body}])"


def self_loops(g: Digraph) -> list[int]:
    return [e for e, t, h in g.edges() if t == h]


def normalize(g: Digraph) -> Digraph:
    """Return ``g`` without self-loops; every other edge keeps its id.

    Dead edges are dropped from the edge table as well.
    """
    loops = self_loops(g)
    for e in loops:
        log.warning("removing self-loop %d at vertex %d", e, g.tail(e))
    return Digraph(g.n, ((e, t, h) for e, t, h in g.edges() if t != h))


def _vertex_set(g: Digraph, vertices: Iterable[int], what: str) -> frozenset[int]:
    vs = frozenset(vertices)
    if not vs:
        raise GraphInputError(f"{what} must be non-empty")
    for v in vs:
        g.check_vertex(v)
    return vs


def reachable_set(g: Digraph, sources: Iterable[int], removed: Iterable[int] = ()) -> set[int]:
    """Vertices reachable from ``sources`` over alive edges not in ``removed``."""
    seen = set(_vertex_set(g, sources, "sources"))
    removed = removed if isinstance(removed, (set, frozenset)) else set(removed)
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for e in g.out_edges(u):
            if e in removed:
                continue
            w = g.head(e)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@dataclass(frozen=True)
class FlowResult:
    """Outcome of :func:`max_flow_bounded`.

    ``source_side`` and ``sink_side`` are the residual-reachable and
    residual-coreachable vertex sets; both are empty when ``overflow`` is set.
    """

    value: int
    source_side: frozenset[int]
    sink_side: frozenset[int]
    overflow: bool
    flow_edges: frozenset[int] = field(default=frozenset(), repr=False)


def max_flow_bounded(
    g: Digraph,
    sources: Iterable[int],
    sinks: Iterable[int],
    budget: int,
    removed: Iterable[int] = (),
) -> FlowResult:
    """Unit-capacity maximum flow from ``sources`` to ``sinks``, capped at ``budget + 1``.

    Augments along BFS paths and stops after ``budget + 1`` augmentations, so
    the cost is ``O(budget * (n + m))``. Edges in ``removed`` are treated as
    deleted.
    """
    S = _vertex_set(g, sources, "S")
    T = _vertex_set(g, sinks, "T")
    if S & T:
        raise GraphInputError(f"S and T overlap on {sorted(S & T)}")
    if budget < 0:
        raise GraphInputError(f"budget must be non-negative, got {budget}")
    removed = removed if isinstance(removed, (set, frozenset)) else set(removed)

    flow: set[int] = set()
    value = 0
    while value <= budget:
        parent = _augmenting_bfs(g, S, T, flow, removed)
        if isinstance(parent, set):
            # no augmenting path: ``parent`` is the residual source side
            sink_side = _residual_coreach(g, T, flow, removed)
            return FlowResult(value, frozenset(parent), frozenset(sink_side), False, frozenset(flow))
        end, prev = parent
        v = end
        while v not in S:
            e, forward = prev[v]
            if forward:
                flow.add(e)
                v = g.tail(e)
            else:
                flow.discard(e)
                v = g.head(e)
        value += 1
    return FlowResult(value, frozenset(), frozenset(), True, frozenset(flow))


def _augmenting_bfs(g, S, T, flow, removed):
    """Return ``(sink_reached, parent_map)`` or the visited set if no sink is reachable."""
    prev: dict[int, tuple[int, bool]] = {}
    seen = set(S)
    queue = deque(sorted(S))
    while queue:
        u = queue.popleft()
        for e in g.out_edges(u):
            if e in flow or e in removed:
                continue
            w = g.head(e)
            if w in seen:
                continue
            seen.add(w)
            prev[w] = (e, True)
            if w in T:
                return w, prev
            queue.append(w)
        for e in g.in_edges(u):
            if e not in flow:
                continue
            w = g.tail(e)
            if w in seen:
                continue
            seen.add(w)
            prev[w] = (e, False)
            if w in T:
                return w, prev
            queue.append(w)
    return seen


def _residual_coreach(g, T, flow, removed) -> set[int]:
    # residual arcs: forward u->w for unused edges, backward w->u for used edges (u,w)
    seen = set(T)
    queue = deque(sorted(T))
    while queue:
        w = queue.popleft()
        for e in g.in_edges(w):
            if e in flow or e in removed:
                continue
            u = g.tail(e)
            if u not in seen:
                seen.add(u)
                queue.append(u)
        for e in g.out_edges(w):
            if e not in flow:
                continue
            u = g.head(e)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


@dataclass(frozen=True)
class SplitMap:
    """Correspondence between a graph and its vertex-split image.

    Protected vertices map to a single image vertex (``vertex_in[v] ==
    vertex_out[v]``) and have no split edge. Original edges keep their ids.
    """

    vertex_in: dict[int, int]
    vertex_out: dict[int, int]
    split_edge: dict[int, int]
    edge_image: dict[int, int]

    def fault_edges(self, vertices: Iterable[int]) -> set[int]:
        """Split edges whose failure models the failure of ``vertices``."""
        out = set()
        for v in vertices:
            if v not in self.split_edge:
                raise GraphInputError(f"vertex {v} is protected or unknown and cannot fail")
            out.add(self.split_edge[v])
        return out

    def original_edge(self) -> dict[int, int]:
        return {img: e for e, img in self.edge_image.items()}


def split_vertices(g: Digraph, protected: Iterable[int] = ()) -> tuple[Digraph, SplitMap]:
    """Replace each unprotected vertex ``v`` by an edge ``v_in -> v_out``.

    In-edges of ``v`` are redirected into ``v_in`` and out-edges leave from
    ``v_out``, so deleting vertex ``v`` in ``g`` corresponds to deleting the
    split edge of ``v``. Original edges keep their ids; split edges get fresh
    ids above every id of ``g``, in vertex order.
    """
    protected = set(protected)
    for v in protected:
        g.check_vertex(v)
    vin: dict[int, int] = {}
    vout: dict[int, int] = {}
    nxt = 0
    for v in range(g.n):
        if v in protected:
            vin[v] = vout[v] = nxt
            nxt += 1
        else:
            vin[v], vout[v] = nxt, nxt + 1
            nxt += 2
    edges = [(e, vout[t], vin[h]) for e, t, h in g.edges()]
    next_id = max(g.all_edge_ids(), default=-1) + 1
    split_edge = {}
    for v in range(g.n):
        if v not in protected:
            split_edge[v] = next_id
            edges.append((next_id, vin[v], vout[v]))
            next_id += 1
    image = {e: e for e in g.edge_ids()}
    return Digraph(nxt, edges), SplitMap(vin, vout, split_edge, image)
