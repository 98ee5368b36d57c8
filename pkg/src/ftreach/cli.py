"""Command line driver: ``build``, ``separators``, ``query``, ``verify`` and ``gen``.

Exit codes: 0 success, 1 verification failed, 2 input error, 3 budget or size error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .errors import FtreachError, GraphInputError
from .ftrs import BuildParams, FaultMode, build_lambda_ftrs, certificate_result, query_connectivity, query_reachable
from .graph import split_vertices
from .oracle import verify_ftrs, verify_lambda_ftrs
from .separators import DEFAULT_BUDGET_LIMIT, enumerate_important

log = logging.getLogger("ftreach")


def _faults(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"fault list must be comma-separated integers, got {text!r}") from None


def _limit(args) -> int:
    if args.budget_limit != DEFAULT_BUDGET_LIMIT:
        log.warning("hard budget limit overridden: %d (default %d)", args.budget_limit, DEFAULT_BUDGET_LIMIT)
    return args.budget_limit


def _load(path: str):
    parsed = io.read_graph(path)
    for w in parsed.warnings:
        log.warning("%s: %s", path, w)
    return parsed


def cmd_build(args) -> int:
    parsed = _load(args.input)
    mode = FaultMode.VERTEX if args.vertex_faults else FaultMode.EDGE
    params = BuildParams(parsed.source, args.k, args.lam, mode)
    res = build_lambda_ftrs(parsed.graph, params, limit=_limit(args))
    h = res.original_certificate()
    comments = [f"certificate k={args.k} lambda={args.lam} mode={mode.value} alpha={res.alpha}"]
    io.write_graph(args.output, h, parsed.source, comments)
    if args.stats:
        sizes = ",".join(f"{s}:{c}" for s, c in sorted(res.stats.family_sizes.items())) or "-"
        print(f"vertices {h.n}")
        print(f"edges_in {parsed.graph.m}")
        print(f"edges_out {h.m}")
        print(f"deleted {len(res.deleted)}")
        print(f"alpha {res.alpha}")
        print(f"iterations {res.stats.iterations}")
        print(f"max_in_degree {res.max_in_degree()}")
        print(f"family_sizes {sizes}")
    return 0


def cmd_separators(args) -> int:
    parsed = _load(args.input)
    family = enumerate_important(parsed.graph, {args.source}, {args.sink}, args.budget, limit=_limit(args))
    for sep in family:
        print(sep)
    return 0


def cmd_query(args) -> int:
    parsed = _load(args.certificate)
    mode = FaultMode.VERTEX if args.vertex_faults else FaultMode.EDGE
    res = certificate_result(parsed.graph, BuildParams(parsed.source, args.k, args.lam, mode))
    if args.lam == 1:
        ok = query_reachable(res, args.faults, args.target)
    else:
        ok = query_connectivity(res, args.faults, args.target)
    print("yes" if ok else "no")
    return 0


def cmd_verify(args) -> int:
    g = _load(args.original)
    h = _load(args.certificate)
    if g.source != h.source:
        raise GraphInputError(f"source mismatch: original {g.source}, certificate {h.source}")
    original, cert, source = g.graph, h.graph.compact(), g.source
    if args.vertex_faults:
        original, smap = split_vertices(original, protected={source})
        cert, _ = split_vertices(cert, protected={source})
        source = smap.vertex_out[source]
    sample = args.sample
    if args.lam == 1:
        rep = verify_ftrs(original, cert, source, args.k, sample=sample, seed=args.seed)
    else:
        rep = verify_lambda_ftrs(original, cert, source, args.k, args.lam, sample=sample, seed=args.seed)
    if rep.passed:
        print(f"passed cases={rep.cases_checked}")
        return 0
    c = rep.counterexample
    faults = ",".join(map(str, c.faults)) or "-"
    print(f"failed cases={rep.cases_checked} faults={faults} target={c.target} original={c.in_g} certificate={c.in_h}")
    return 1


def cmd_gen(args) -> int:
    g = io.gen_random(io.GenSpec(args.n, args.m, args.seed, args.model))
    io.write_graph(args.output, g, 0, [f"gen n={args.n} m={args.m} seed={args.seed} model={args.model}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ftreach", description="Fault-tolerant reachability certificates.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def limit_opt(sp):
        sp.add_argument("--budget-limit", type=int, default=DEFAULT_BUDGET_LIMIT,
                        help="hard cap on k + lambda (default %(default)s)")

    b = sub.add_parser("build", help="build a (lambda,k) certificate")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--lambda", dest="lam", type=int, default=1)
    b.add_argument("--vertex-faults", action="store_true")
    b.add_argument("--stats", action="store_true")
    b.add_argument("input")
    b.add_argument("-o", "--output", required=True)
    limit_opt(b)
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("separators", help="list important separators")
    s.add_argument("--source", type=int, required=True)
    s.add_argument("--sink", type=int, required=True)
    s.add_argument("--budget", type=int, required=True)
    s.add_argument("input")
    limit_opt(s)
    s.set_defaults(func=cmd_separators)

    q = sub.add_parser("query", help="answer a fault query against a certificate")
    q.add_argument("--certificate", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--lambda", dest="lam", type=int, default=1)
    q.add_argument("--faults", type=_faults, default=[])
    q.add_argument("--target", type=int, required=True)
    q.add_argument("--vertex-faults", action="store_true")
    q.set_defaults(func=cmd_query)

    v = sub.add_parser("verify", help="check a certificate against its original graph")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--lambda", dest="lam", type=int, default=1)
    v.add_argument("--original", required=True)
    v.add_argument("--certificate", required=True)
    v.add_argument("--sample", type=int, default=None, help="check this many random fault sets instead of all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--vertex-faults", action="store_true")
    v.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", help="write a seeded random graph")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--m", type=int, required=True)
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("--model", choices=["uniform", "layered"], default="uniform")
    gn.add_argument("-o", "--output", required=True)
    gn.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except FtreachError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
