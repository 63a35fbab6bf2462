"""Shared test helpers: independent oracles and fixture builders.

The oracles deliberately avoid the library's own code paths so that
equality checks against them are meaningful.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from itertools import combinations
from pathlib import Path

from sensegraph.builder import GraphEdge, GraphNode, GraphParams, TemporalGraph

# --- oracles ----------------------------------------------------------------


def lmi_reference(joint: int, word: int, feature: int, total: int) -> float:
    """LMI via natural logs, structurally unlike the implementation."""
    log2 = math.log(2.0)
    return joint * (math.log(joint) + math.log(total) - math.log(word) - math.log(feature)) / log2


def rank_reference(scores: dict[str, float], k: int) -> list[str]:
    """Top-k features: lmi descending, feature string ascending."""
    return [f for f, _ in sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]]


def thesaurus_reference(
    table: dict[str, dict[str, float]], k: int, min_score: int
) -> dict[tuple[str, str], int]:
    """Brute-force all-pairs top-k feature intersection."""
    tops = {w: set(rank_reference(scores, k)) for w, scores in table.items()}
    out = {}
    for a, b in combinations(sorted(table), 2):
        overlap = len(tops[a] & tops[b])
        if overlap >= min_score:
            out[(a, b)] = overlap
    return out


def betweenness_reference(n: int, edges: list[tuple[int, int]]) -> dict[int, float]:
    """Betweenness by explicit shortest-path enumeration (small n only)."""
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def all_shortest_paths(s: int, t: int) -> list[tuple[int, ...]]:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        if t not in dist:
            return []
        paths: list[tuple[int, ...]] = []

        def walk(u: int, path: list[int]) -> None:
            if u == t:
                paths.append(tuple(path))
                return
            for v in adj[u]:
                if dist.get(v) == dist[u] + 1 and dist[v] <= dist[t]:
                    walk(v, path + [v])

        walk(s, [s])
        return paths

    bc = {v: 0.0 for v in range(n)}
    for s, t in combinations(range(n), 2):
        paths = all_shortest_paths(s, t)
        if not paths:
            continue
        for v in range(n):
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p)
            bc[v] += through / len(paths)
    if n < 3:
        return {v: 0.0 for v in bc}
    norm = (n - 1) * (n - 2) / 2
    return {v: bc[v] / norm for v in bc}


# --- in-memory graph builders ------------------------------------------------


def weighted_graph(edges, words=None, intervals=(0,), target="t/NN") -> TemporalGraph:
    """Single-interval graph from (a, b, weight) triples, for clustering and
    centrality tests."""
    node_words = set(words or ())
    for a, b, _ in edges:
        node_words.update((a, b))
    params = GraphParams(target=target, variant="interval", n=max(1, len(node_words)), d=1, intervals=tuple(intervals))
    t0 = params.intervals[0]
    graph = TemporalGraph(params, {}, {})
    for w in sorted(node_words):
        graph.nodes[w] = GraphNode(w, {t0}, {t0: 1.0})
    for a, b, weight in edges:
        key = (a, b) if a <= b else (b, a)
        graph.edges[key] = GraphEdge(key[0], key[1], {t0: weight}, float(weight))
    return graph


def presence_graph(presence: dict[str, set[int]], intervals, edges=()) -> TemporalGraph:
    """Graph with explicit per-node interval presence, for temporal tests.

    ``edges`` entries are (a, b, {interval: weight}).
    """
    params = GraphParams(target="t/NN", variant="interval", n=max(1, len(presence)), d=1, intervals=tuple(intervals))
    graph = TemporalGraph(params, {}, {})
    for w in sorted(presence):
        ts = set(presence[w])
        graph.nodes[w] = GraphNode(w, ts, {t: 1.0 for t in sorted(ts)})
    for a, b, weights in edges:
        key = (a, b) if a <= b else (b, a)
        graph.edges[key] = GraphEdge(key[0], key[1], dict(weights), float(sum(weights.values())))
    return graph


def clique_bridge_graph() -> tuple[TemporalGraph, set[str], set[str]]:
    """Two 5-cliques (weight 1.0) joined by a single 0.01 bridge edge."""
    left = {f"left{i}/NN" for i in range(5)}
    right = {f"right{i}/NN" for i in range(5)}
    edges = []
    for group in (sorted(left), sorted(right)):
        for a, b in combinations(group, 2):
            edges.append((a, b, 1.0))
    edges.append((sorted(left)[0], sorted(right)[0], 0.01))
    return weighted_graph(edges), left, right


# --- corpus fixture writers ---------------------------------------------------

SHIFT_TARGET = "bank/NN"
SHIFT_OLD = [
    "river/NN", "shore/NN", "stream/NN", "meadow/NN",
    "ferry/NN", "mill/NN", "fishing/NN", "towpath/NN",
]
SHIFT_NEW = [
    "loan/NN", "credit/NN", "deposit/NN", "teller/NN",
    "mortgage/NN", "branch/NN", "account/NN", "currency/NN",
]
SHIFT_INTERVALS = [
    (0, "1900-1919", 1900, 1919),
    (1, "1920-1939", 1920, 1939),
    (2, "1940-1959", 1940, 1959),
    (3, "1960-1979", 1960, 1979),
    (4, "1980-1999", 1980, 1999),
    (5, "2000-2019", 2000, 2019),
]


def write_sense_shift_corpus(path: Path) -> Path:
    """Synthetic corpus where the target swaps neighbour sets mid-history.

    Old-sense words neighbour the target in intervals 0-2, new-sense words
    in 3-5; the two sets never co-occur, and each set is densely similar
    within itself.
    """
    path.mkdir(parents=True, exist_ok=True)
    with open(path / "intervals.tsv", "w", encoding="utf-8") as fh:
        for index, label, start, end in SHIFT_INTERVALS:
            fh.write(f"{index}\t{label}\t{start}\t{end}\n")

    sim_lines = []
    for eras, group in (((0, 1, 2), SHIFT_OLD), ((3, 4, 5), SHIFT_NEW)):
        for t in eras:
            for i, word in enumerate(group):
                sim_lines.append(f"{SHIFT_TARGET}\t{word}\t{30 - i}\t{t}")
            for i, j in combinations(range(len(group)), 2):
                sim_lines.append(f"{group[i]}\t{group[j]}\t{12 + (i + j) % 5}\t{t}")
    (path / "similarity.tsv").write_text("\n".join(sim_lines) + "\n", encoding="utf-8")

    feat_lines = []
    for eras, group, shared in (
        ((0, 1, 2), SHIFT_OLD, "-nn/water/NN"),
        ((3, 4, 5), SHIFT_NEW, "-nn/money/NN"),
    ):
        for t in eras:
            for i, word in enumerate(group):
                stem = word.split("/")[0]
                feat_lines.append(f"{word}\t{shared}\t{8.0 + i}\t{t}")
                feat_lines.append(f"{word}\t-dep/{stem}/JJ\t{3.5 + i}\t{t}")
                feat_lines.append(f"{SHIFT_TARGET}\t-nn/{stem}/NN\t{2.0 + i}\t{t}")
            feat_lines.append(f"{SHIFT_TARGET}\t{shared}\t9.5\t{t}")
    (path / "features.tsv").write_text("\n".join(feat_lines) + "\n", encoding="utf-8")

    sentences = []
    for sid, (t, word, shared) in enumerate(
        [(0, "river/NN", "-nn/water/NN"), (1, "ferry/NN", "-nn/water/NN"),
         (3, "loan/NN", "-nn/money/NN"), (5, "credit/NN", "-nn/money/NN")]
    ):
        sentences.append(
            {
                "sentence_id": f"s{sid:03d}",
                "text": f"the {SHIFT_TARGET} near the {word} was busy",
                "interval_index": t,
                "attested": [[SHIFT_TARGET, shared], [word, shared]],
            }
        )
    with open(path / "sentences.jsonl", "w", encoding="utf-8") as fh:
        for obj in sentences:
            fh.write(json.dumps(obj) + "\n")
    return path


def write_tiny_corpus(path: Path) -> Path:
    """Two intervals, a handful of pairs, features, and sentences."""
    path.mkdir(parents=True, exist_ok=True)
    (path / "intervals.tsv").write_text(
        "0\t1900-1949\t1900\t1949\n1\t1950-1999\t1950\t1999\n", encoding="utf-8"
    )
    (path / "similarity.tsv").write_text(
        "\n".join(
            [
                "rock/NN\tstone/NN\t12\t0",
                "rock/NN\tcliff/NN\t9\t0",
                "stone/NN\tcliff/NN\t7\t0",
                "rock/NN\tstone/NN\t10\t1",
                "rock/NN\tmusic/NN\t11\t1",
                "music/NN\tstone/NN\t2\t1",
            ]
        )
        + "\n",
        encoding="utf-8",
    )
    (path / "features.tsv").write_text(
        "\n".join(
            [
                "rock/NN\t-nn/hard/JJ\t5.0\t0",
                "rock/NN\t-dep/solid/JJ\t4.0\t0",
                "stone/NN\t-nn/hard/JJ\t3.0\t0",
                "rock/NN\t-nn/loud/JJ\t6.0\t1",
                "music/NN\t-nn/loud/JJ\t4.5\t1",
                "stone/NN\t-nn/hard/JJ\t2.5\t1",
            ]
        )
        + "\n",
        encoding="utf-8",
    )
    sentences = [
        {
            "sentence_id": "t001",
            "text": "a rock/NN as hard as stone/NN",
            "interval_index": 0,
            "attested": [["rock/NN", "-nn/hard/JJ"], ["stone/NN", "-nn/hard/JJ"]],
        },
        {
            "sentence_id": "t002",
            "text": "loud rock/NN music/NN played",
            "interval_index": 1,
            "attested": [["rock/NN", "-nn/loud/JJ"], ["music/NN", "-nn/loud/JJ"]],
        },
        {
            "sentence_id": "t003",
            "text": "the rock/NN stood alone",
            "interval_index": 0,
            "attested": [],
        },
    ]
    with open(path / "sentences.jsonl", "w", encoding="utf-8") as fh:
        for obj in sentences:
            fh.write(json.dumps(obj) + "\n")
    return path


def cluster_purity(assignment: dict[str, int], groups: list[set[str]]) -> float:
    """Fraction of nodes whose cluster's majority group is their own."""
    by_cluster: dict[int, list[str]] = defaultdict(list)
    for word, cid in assignment.items():
        by_cluster[cid].append(word)
    correct = 0
    for members in by_cluster.values():
        counts = [sum(1 for m in members if m in g) for g in groups]
        correct += max(counts)
    return correct / len(assignment)
