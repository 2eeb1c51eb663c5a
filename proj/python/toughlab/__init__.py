"""Exact toughness and minimal toughness of small graphs."""

import json
from fractions import Fraction

from ._core import (
    Graph,
    classify,
    complement,
    connectivity,
    enumerate_graphs,
    join,
    local_connectivity,
    minimal_toughness,
    named,
    parse_graph6,
    report_json,
    toughness,
    write_graph6,
)

__all__ = [
    "Graph",
    "classify",
    "complement",
    "connectivity",
    "enumerate_graphs",
    "join",
    "local_connectivity",
    "minimal_toughness",
    "named",
    "parse_graph6",
    "report",
    "toughness",
    "toughness_fraction",
    "write_graph6",
]


def toughness_fraction(graph):
    """Toughness as a Fraction, or None for complete graphs (infinite toughness)."""
    text = toughness(graph)
    return None if text == "inf" else Fraction(text)


def report(target, n_max=8, l_max=None, jobs=1):
    """Run a verification report and return it as a dict.

    target is a theorem id such as "P4FREE", one of "table1", "wheels",
    "codiam", "probe", or "kriesell:<class>".
    """
    return json.loads(report_json(target, n_max=n_max, l_max=l_max, jobs=jobs))
