"""Line-oriented graph files and seeded random instances.

Grammar (``#`` starts a comment)::

    p <n> <m>        header, first non-comment line
    s <vertex>       source, exactly once
    e <tail> <head>  exactly m lines

Edge ids are the 0-based order of the ``e`` lines unless every ``e`` line
carries an ``# id=<int>`` annotation, which is how certificates keep the ids
of the graph they were built from. Deleted edges of a certificate are written
as ``# deleted id=<int> <tail> <head>`` comment lines and restored as dead
edges on parsing.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GraphInputError
from .graph import Digraph

_ID_NOTE = re.compile(r"^id=(\d+)$")
_DELETED = re.compile(r"^#\s*deleted\s+id=(\d+)\s+(\d+)\s+(\d+)\s*$")


@dataclass
class ParsedGraph:
    graph: Digraph
    source: int
    warnings: list[str] = field(default_factory=list)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> ParsedGraph:
    """Parse graph text. Self-loops are dropped with a warning."""
    n = m = source = None
    edges: list[tuple[int | None, int, int, int]] = []
    dead: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        dm = _DELETED.match(stripped)
        if dm:
            dead.append(tuple(int(x) for x in dm.groups()))
            continue
        body, _, note = raw.partition("#")
        tokens = body.split()
        if not tokens:
            continue
        kind, args = tokens[0], tokens[1:]
        if n is None and kind != "p":
            raise GraphInputError(f"line {lineno}: expected 'p <n> <m>' header first, got {kind!r}")
        if kind == "p":
            if n is not None:
                raise GraphInputError(f"line {lineno}: duplicate header")
            if len(args) != 2:
                raise GraphInputError(f"line {lineno}: header needs 'p <n> <m>'")
            n, m = _ints(args, lineno)
            if n < 0 or m < 0:
                raise GraphInputError(f"line {lineno}: negative count in header")
        elif kind == "s":
            if source is not None:
                raise GraphInputError(f"line {lineno}: source declared twice")
            if len(args) != 1:
                raise GraphInputError(f"line {lineno}: source needs 's <vertex>'")
            (source,) = _ints(args, lineno)
            if not 0 <= source < n:
                raise GraphInputError(f"line {lineno}: source vertex {source} out of range 0..{n - 1}")
        elif kind == "e":
            if len(args) != 2:
                raise GraphInputError(f"line {lineno}: edge needs 'e <tail> <head>'")
            tail, head = _ints(args, lineno)
            for v in (tail, head):
                if not 0 <= v < n:
                    raise GraphInputError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
            idm = _ID_NOTE.match(note.strip())
            edges.append((int(idm.group(1)) if idm else None, tail, head, lineno))
        else:
            raise GraphInputError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphInputError("missing 'p <n> <m>' header")
    if source is None:
        raise GraphInputError("missing 's <vertex>' source declaration")
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges but {len(edges)} edge lines were found")

    annotated = [e[0] is not None for e in edges]
    if any(annotated) and not all(annotated):
        raise GraphInputError("either every edge line carries '# id=<n>' or none does")
    if dead and edges and not all(annotated):
        raise GraphInputError("deleted-edge records require id-annotated edge lines")
    warnings = []
    triples = []
    for i, (eid, t, h, lineno) in enumerate(edges):
        eid = i if eid is None else eid
        if t == h:
            warnings.append(f"line {lineno}: self-loop at vertex {t} removed (edge id {eid})")
        else:
            triples.append((eid, t, h))
    for eid, t, h in dead:
        if not (0 <= t < n and 0 <= h < n):
            raise GraphInputError(f"deleted edge {eid} has an endpoint out of range")
    g = Digraph(n, triples + dead, dead=[d[0] for d in dead])
    return ParsedGraph(g, source, warnings)


def read_graph(path: str | Path) -> ParsedGraph:
    return parse_graph(Path(path).read_text())


def serialize_graph(g: Digraph, source: int, comments: list[str] = ()) -> str:
    """Canonical text of ``g``: alive edges sorted by id, each tagged with its id."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.append(f"s {source}")
    lines.extend(f"e {t} {h} # id={e}" for e, t, h in g.edges())
    lines.extend(f"# deleted id={e} {g.tail(e)} {g.head(e)}" for e in g.dead_edge_ids())
    return "\n".join(lines) + "\n"


def write_graph(path: str | Path, g: Digraph, source: int, comments: list[str] = ()) -> None:
    Path(path).write_text(serialize_graph(g, source, comments))


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int
    model: str = "uniform"


def gen_random(spec: GenSpec) -> Digraph:
    """Deterministic random graph without self-loops or parallel edges.

    ``uniform`` draws ``m`` distinct ordered pairs. ``layered`` cuts
    ``0..n-1`` into about ``sqrt(n)`` consecutive levels and draws ``m``
    distinct pairs going from a lower level to a higher one, which gives a
    DAG in which vertex 0 sits on the first level.
    """
    n, m = spec.n, spec.m
    if n < 0 or m < 0:
        raise GraphInputError("n and m must be non-negative")
    rng = random.Random(spec.seed)
    if spec.model == "uniform":
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    elif spec.model == "layered":
        levels = max(1, round(n ** 0.5))
        level = [v * levels // n for v in range(n)]
        pairs = [(u, v) for u in range(n) for v in range(n) if level[u] < level[v]]
    else:
        raise GraphInputError(f"unknown model {spec.model!r}")
    if m > len(pairs):
        raise GraphInputError(f"{spec.model} model on {n} vertices admits at most {len(pairs)} edges, asked for {m}")
    chosen = sorted(rng.sample(range(len(pairs)), m))
    return Digraph.from_pairs(n, (pairs[i] for i in chosen))
