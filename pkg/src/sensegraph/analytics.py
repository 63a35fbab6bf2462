"""Temporal and structural analyses over a built graph.

All functions are read-only except ``annotate_centrality``, which fills the
nodes' centrality fields as a convenience for the service and CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .builder import TemporalGraph
from .errors import InvalidParamsError

DISAPPEARED = "disappeared"
EMERGED_IN = "emerged_in"
EMERGED_AFTER = "emerged_after"
STABLE = "stable"
CATEGORIES = (DISAPPEARED, EMERGED_IN, EMERGED_AFTER, STABLE)


@dataclass(frozen=True)
class TimeDiffReport:
    """Lifecycle category of every node relative to a reference interval."""

    reference: int
    category_by_word: dict[str, str]

    def to_json(self) -> dict:
        return {
            "reference": self.reference,
            "category_by_word": {w: self.category_by_word[w] for w in sorted(self.category_by_word)},
        }


@dataclass(frozen=True)
class CentralityReport:
    betweenness_by_word: dict[str, float]

    def to_json(self) -> dict:
        return {
            "betweenness_by_word": {
                w: self.betweenness_by_word[w] for w in sorted(self.betweenness_by_word)
            }
        }


def categorize(first: int, last: int, reference: int) -> str:
    """Lifecycle category from a node's first/last occurrence interval."""
    if last < reference:
        return DISAPPEARED
    if first == reference:
        return EMERGED_IN
    if first > reference:
        return EMERGED_AFTER
    return STABLE


def time_diff(graph: TemporalGraph, reference: int) -> TimeDiffReport:
    """Categorize every node relative to the reference interval.

    A node disappeared if its last occurrence precedes the reference,
    emerged in or after it depending on its first occurrence, and is
    stable otherwise. The categories partition the node set.
    """
    if reference not in graph.params.intervals:
        raise InvalidParamsError(
            f"reference interval {reference} is not among the selected intervals {graph.params.intervals}"
        )
    categories = {}
    for word, node in graph.nodes.items():
        categories[word] = categorize(min(node.present_in), max(node.present_in), reference)
    return TimeDiffReport(reference, categories)


def interval_slice(graph: TemporalGraph, interval: int) -> tuple[set[str], set[tuple[str, str]]]:
    """Nodes present and edges weighted in one selected interval."""
    if interval not in graph.params.intervals:
        raise InvalidParamsError(
            f"interval {interval} is not among the selected intervals {graph.params.intervals}"
        )
    nodes = {word for word, node in graph.nodes.items() if interval in node.present_in}
    edges = {key for key, edge in graph.edges.items() if interval in edge.weight_by_interval}
    return nodes, edges


def betweenness(graph: TemporalGraph, backend: str | None = None) -> CentralityReport:
    """Unweighted shortest-path betweenness on the merged graph.

    Normalized by (N-1)(N-2)/2; graphs with fewer than three nodes score
    all zeros.
    """
    words = graph.words()
    n = len(words)
    if n < 3:
        return CentralityReport({word: 0.0 for word in words})

    index = {word: i for i, word in enumerate(words)}
    indptr, indices, _ = kernels.to_csr(
        n,
        ((index[edge.source], index[edge.target], 1.0) for edge in graph.edges.values()),
    )
    raw = kernels.get_backend(backend).brandes(indptr, indices, n)
    norm = (n - 1) * (n - 2) / 2.0
    return CentralityReport({word: (raw[i] / 2.0) / norm for i, word in enumerate(words)})


def annotate_centrality(graph: TemporalGraph, backend: str | None = None) -> CentralityReport:
    report = betweenness(graph, backend)
    for word, node in graph.nodes.items():
        node.centrality = report.betweenness_by_word[word]
    return report


def score_series(
    graph: TemporalGraph, element: str | tuple[str, str]
) -> list[tuple[int, float | None]]:
    """Per-interval score development of a node or an edge.

    Covers the full selected range; intervals without a score yield None.
    """
    if isinstance(element, str):
        scores = graph.node(element).score_by_interval
    else:
        scores = graph.edge(*element).weight_by_interval
    return [(t, scores.get(t)) for t in graph.params.intervals]
