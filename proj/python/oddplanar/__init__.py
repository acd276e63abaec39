"""Combinatorial drawings of graphs: odd crossings, redrawing and bounds."""

import json

from ._oddplanar import (
    Drawing,
    Multigraph,
    OddplanarError,
    embed,
    lemma1_redraw,
    modd_upper,
    parse_drawing,
    random_graph,
    random_planar_graph,
    render_svg,
    serialize_drawing,
)
from . import _oddplanar as _core

__all__ = [
    "Drawing",
    "Multigraph",
    "OddplanarError",
    "audit",
    "bounds",
    "crossing_value",
    "embed",
    "lemma1_redraw",
    "load_drawing",
    "mk_upper",
    "modd_upper",
    "parse_drawing",
    "random_drawing",
    "random_graph",
    "random_planar_graph",
    "render_svg",
    "sample",
    "search",
    "serialize_drawing",
    "stats",
    "transform",
    "validate",
]


def load_drawing(path):
    with open(path, encoding="utf-8") as f:
        return parse_drawing(f.read())


def validate(drawing):
    """List of {"kind", "locus"} violations; empty when valid."""
    return json.loads(_core.validate_json(drawing))


def stats(drawing):
    return json.loads(_core.stats_json(drawing))


def transform(drawing, k):
    """k-plane redrawing of a k-odd-plane drawing and its trace."""
    result, trace = _core.transform(drawing, k)
    return result, json.loads(trace)


def mk_upper(k, n):
    """(value, exact) upper bound on edges of a k-plane graph on n vertices."""
    return _core.mk_upper(k, n)


def bounds(k, n, m=0):
    return json.loads(_core.bounds_json(k, n, m))


def audit(drawing, k):
    return json.loads(_core.audit_json(drawing, k))


def sample(drawing, p, trials, seed=1, threads=0):
    return json.loads(_core.sample_json(drawing, p, trials, seed, threads))


def crossing_value(graph, variant="cr", rule="+", max_crossings=1, max_candidates=0,
                   time_limit=0.0, threads=0):
    """Exact minimum of a crossing number variant, as a dict.

    Raises OddplanarError("...", "BudgetExceeded") when a budget runs out.
    """
    exact, value, witness, candidates = _core.oracle(
        graph, variant, rule, max_crossings, max_candidates, time_limit, threads)
    return {"exact": exact, "value": value, "witness": witness, "candidates": candidates}


def search(k, n, iterations=20000, seed=1, time_limit=0.0):
    return json.loads(_core.search_json(k, n, iterations, seed, time_limit))


def random_drawing(graph, seed=1, model="convex", moves=3):
    return _core.random_drawing(graph, seed, model, moves)
