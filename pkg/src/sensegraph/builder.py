"""Construction of merged neighbourhood graphs over time.

Three variants control how nodes enter the graph for a target word:

    interval  top-n neighbours of the target per selected interval; the
              merged graph is dynamically sized (n .. n * |intervals|).
    dynamic   exactly n unique neighbours, picked round-robin across the
              selected intervals in chronological order; every similarity
              record of a chosen word is then attached.
    global    nodes as in dynamic, edges capped by a global budget of
              ceil(|nodes| * d / 2) merged edges, best records first.

For the interval and dynamic variants, edges are chosen per interval: each
node nominates its top-d co-present neighbours and an edge survives if
either endpoint nominated it, so a merged node's degree may exceed d.
Nodes and edges that refer to the same word(s) in different intervals are
merged and keep one score per interval.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidParamsError, NotFoundError
from .store import Corpus

VARIANTS = ("interval", "dynamic", "global")
AGGREGATES = ("sum", "max", "mean")


@dataclass(frozen=True)
class GraphParams:
    """Build parameters: variant plus the (i, n, d) triple for a target."""

    target: str
    variant: str
    n: int
    d: int
    intervals: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise InvalidParamsError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.n < 1:
            raise InvalidParamsError(f"n must be >= 1, got {self.n}")
        if self.d < 1:
            raise InvalidParamsError(f"d must be >= 1, got {self.d}")
        if not self.intervals:
            raise InvalidParamsError("at least one interval must be selected")
        if len(set(self.intervals)) != len(self.intervals):
            raise InvalidParamsError("selected intervals contain duplicates")
        # chronological == ascending index order
        object.__setattr__(self, "intervals", tuple(sorted(self.intervals)))

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "variant": self.variant,
            "n": self.n,
            "d": self.d,
            "intervals": list(self.intervals),
        }


@dataclass
class GraphNode:
    word: str
    present_in: set[int]
    score_by_interval: dict[int, float]
    cluster_id: int | None = None
    centrality: float | None = None


@dataclass
class GraphEdge:
    source: str
    target: str
    weight_by_interval: dict[int, float]
    aggregate_weight: float


@dataclass
class TemporalGraph:
    params: GraphParams
    nodes: dict[str, GraphNode]
    edges: dict[tuple[str, str], GraphEdge]
    warnings: list[str] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def words(self) -> list[str]:
        return sorted(self.nodes)

    def node(self, word: str) -> GraphNode:
        try:
            return self.nodes[word]
        except KeyError:
            raise NotFoundError(f"graph has no node {word!r}") from None

    def edge(self, word1: str, word2: str) -> GraphEdge:
        key = _edge_key(word1, word2)
        try:
            return self.edges[key]
        except KeyError:
            raise NotFoundError(f"graph has no edge {word1!r} -- {word2!r}") from None


def _edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


Presence = dict[str, dict[int, float]]
EdgeRecords = dict[tuple[str, str], dict[int, float]]


def select_nodes_interval(corpus: Corpus, target: str, n: int, intervals: Iterable[int]) -> Presence:
    """Top-n neighbours of the target, independently per interval."""
    presence: Presence = {}
    for t in intervals:
        for word, score in corpus.query_neighbours(target, t, limit=n):
            presence.setdefault(word, {})[t] = score
    return presence


def select_nodes_dynamic(corpus: Corpus, target: str, n: int, intervals: Iterable[int]) -> Presence:
    """Exactly min(n, available) unique neighbours via chronological round-robin.

    Each pass takes the next best not-yet-chosen neighbour from every
    interval in turn; afterwards every similarity record of a chosen word
    across the selected intervals is attached.
    """
    intervals = list(intervals)
    ranked = {t: corpus.query_neighbours(target, t) for t in intervals}
    cursor = {t: 0 for t in intervals}
    chosen: list[str] = []
    chosen_set: set[str] = set()
    progressed = True
    while len(chosen) < n and progressed:
        progressed = False
        for t in intervals:
            lst = ranked[t]
            i = cursor[t]
            while i < len(lst) and lst[i][0] in chosen_set:
                i += 1
            cursor[t] = i
            if i < len(lst):
                word = lst[i][0]
                chosen.append(word)
                chosen_set.add(word)
                cursor[t] = i + 1
                progressed = True
                if len(chosen) == n:
                    break

    presence: Presence = {}
    for word in chosen:
        scores = corpus.query_edge_scores(target, word)
        presence[word] = {t: scores[t] for t in intervals if t in scores}
    return presence


def _candidate_records(corpus: Corpus, presence: Presence, intervals: Iterable[int]) -> EdgeRecords:
    """All similarity records between chosen words, limited to intervals
    where both endpoints are present."""
    records: EdgeRecords = {}
    words = set(presence)
    for t in intervals:
        co_present = {w for w in words if t in presence[w]}
        for u in sorted(co_present):
            for v, score in corpus.query_neighbours(u, t):
                if v <= u or v not in co_present:
                    continue
                records.setdefault((u, v), {})[t] = score
    return records


def select_edges(
    corpus: Corpus,
    presence: Presence,
    d: int,
    intervals: Iterable[int],
    variant: str,
) -> EdgeRecords:
    """Pick the edge records that survive under the variant's density rule."""
    intervals = list(intervals)
    candidates = _candidate_records(corpus, presence, intervals)
    if variant == "global":
        return _select_edges_global(candidates, len(presence), d)
    return _select_edges_nominated(candidates, presence, d, intervals)


def _select_edges_nominated(
    candidates: EdgeRecords, presence: Presence, d: int, intervals: list[int]
) -> EdgeRecords:
    # per interval, each node ranks its co-present neighbours and nominates
    # the top d; a record is kept if either endpoint nominated the other
    by_node: dict[int, dict[str, list[tuple[float, str]]]] = {t: {} for t in intervals}
    for (u, v), by_interval in candidates.items():
        for t, score in by_interval.items():
            by_node[t].setdefault(u, []).append((score, v))
            by_node[t].setdefault(v, []).append((score, u))

    kept: EdgeRecords = {}
    for t in intervals:
        for u, ranked in by_node[t].items():
            ranked.sort(key=lambda item: (-item[0], item[1]))
            for score, v in ranked[:d]:
                kept.setdefault(_edge_key(u, v), {})[t] = score
    return kept


def _select_edges_global(candidates: EdgeRecords, node_count: int, d: int) -> EdgeRecords:
    budget = math.ceil(node_count * d / 2)
    pool = [
        (score, u, v, t)
        for (u, v), by_interval in candidates.items()
        for t, score in by_interval.items()
    ]
    pool.sort(key=lambda rec: (-rec[0], rec[1], rec[2], rec[3]))

    kept: EdgeRecords = {}
    for score, u, v, t in pool:
        key = (u, v)
        if key not in kept and len(kept) >= budget:
            continue
        kept.setdefault(key, {})[t] = score
    return kept


def _aggregate(weights: dict[int, float], mode: str) -> float:
    values = [weights[t] for t in sorted(weights)]
    if mode == "max":
        return max(values)
    if mode == "mean":
        return sum(values) / len(values)
    return sum(values)


def build_graph(corpus: Corpus, params: GraphParams, aggregate: str = "sum") -> TemporalGraph:
    """Select nodes and edges for the target and merge them by word identity.

    Deterministic for fixed inputs. An unknown target yields an empty graph
    with a warning rather than an error.
    """
    if aggregate not in AGGREGATES:
        raise InvalidParamsError(f"aggregate must be one of {AGGREGATES}, got {aggregate!r}")
    for t in params.intervals:
        corpus.check_interval(t)

    if params.variant == "interval":
        presence = select_nodes_interval(corpus, params.target, params.n, params.intervals)
    else:
        presence = select_nodes_dynamic(corpus, params.target, params.n, params.intervals)

    graph = TemporalGraph(params, {}, {})
    if not presence:
        graph.warnings.append(
            f"target {params.target!r} has no neighbours in the selected intervals"
        )
        return graph

    for word in sorted(presence):
        scores = presence[word]
        graph.nodes[word] = GraphNode(word, set(scores), dict(scores))

    records = select_edges(corpus, presence, params.d, params.intervals, params.variant)
    for key in sorted(records):
        weights = records[key]
        graph.edges[key] = GraphEdge(key[0], key[1], dict(weights), _aggregate(weights, aggregate))
    return graph


# --- serialization ---------------------------------------------------------
# Shared wire format (service responses, CLI output files): interval keys are
# integer indices rendered as strings; node and edge lists are sorted.


def graph_to_dict(graph: TemporalGraph, clustering=None) -> dict:
    doc = {
        "params": graph.params.to_json(),
        "nodes": [
            {
                "word": node.word,
                "present_in": sorted(node.present_in),
                "score_by_interval": {str(t): node.score_by_interval[t] for t in sorted(node.score_by_interval)},
                "cluster_id": node.cluster_id,
                "centrality": node.centrality,
            }
            for node in (graph.nodes[w] for w in graph.words())
        ],
        "edges": [
            {
                "source": edge.source,
                "target": edge.target,
                "weight_by_interval": {str(t): edge.weight_by_interval[t] for t in sorted(edge.weight_by_interval)},
                "aggregate_weight": edge.aggregate_weight,
            }
            for edge in (graph.edges[k] for k in sorted(graph.edges))
        ],
    }
    if graph.warnings:
        doc["warnings"] = list(graph.warnings)
    if clustering is not None:
        doc["clustering"] = {"seed": clustering.seed, "iterations": clustering.iterations}
    return doc


def graph_from_dict(doc: dict) -> TemporalGraph:
    params = GraphParams(
        target=doc["params"]["target"],
        variant=doc["params"]["variant"],
        n=doc["params"]["n"],
        d=doc["params"]["d"],
        intervals=tuple(doc["params"]["intervals"]),
    )
    graph = TemporalGraph(params, {}, {}, warnings=list(doc.get("warnings", [])))
    for node in doc["nodes"]:
        scores = {int(t): float(s) for t, s in node["score_by_interval"].items()}
        graph.nodes[node["word"]] = GraphNode(
            node["word"],
            set(node["present_in"]),
            scores,
            node.get("cluster_id"),
            node.get("centrality"),
        )
    for edge in doc["edges"]:
        key = _edge_key(edge["source"], edge["target"])
        weights = {int(t): float(s) for t, s in edge["weight_by_interval"].items()}
        graph.edges[key] = GraphEdge(key[0], key[1], weights, float(edge["aggregate_weight"]))
    return graph


def dumps_canonical(doc: dict) -> str:
    """Stable JSON encoding used by both the CLI and the HTTP service."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
