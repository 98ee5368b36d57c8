"""Fault-tolerant single-source reachability certificates built from important separators."""

from .errors import BudgetError, ContractError, GraphInputError, InvariantViolation, SizeError
from .ftrs import (
    BuildParams,
    FaultMode,
    FtrsResult,
    alpha_for,
    build_ftrs,
    build_lambda_ftrs,
    certificate_result,
    delete_candidate,
    query_connectivity,
    query_reachable,
)
from .graph import Digraph, FlowResult, SplitMap, max_flow_bounded, normalize, reachable_set, split_vertices
from .io import GenSpec, gen_random, parse_graph, read_graph, serialize_graph, write_graph
from .separators import (
    ImportantFamily,
    Separator,
    dominates,
    enumerate_important,
    furthest_min_cut,
    min_cut,
)

__version__ = "0.1.0"
