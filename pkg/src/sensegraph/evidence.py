"""Model-transparency drill-down: ranked syntagmatic features and example
sentences for nodes, edges, and whole clusters."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParamsError
from .store import Corpus, SentenceRecord

SCOPES = ("node", "edge", "cluster")


@dataclass(frozen=True)
class FeatureRanking:
    scope: str
    members: tuple[str, ...]
    interval: int | None
    ranked: list[tuple[str, float]]

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "members": list(self.members),
            "interval": self.interval,
            "ranked": [[feature, lmi] for feature, lmi in self.ranked],
        }


def rank_features(
    corpus: Corpus,
    members: list[str],
    scope: str,
    interval: int | None = None,
    limit: int = 50,
) -> FeatureRanking:
    """LMI-ranked context features for a node, an edge, or a cluster.

    Node scope ranks one word's features; cluster scope sums LMI across all
    members; edge scope keeps only features shared by both endpoints, with
    their LMI summed. Without an interval filter, LMI is summed over all
    intervals.
    """
    if scope not in SCOPES:
        raise InvalidParamsError(f"scope must be one of {SCOPES}, got {scope!r}")
    if not members:
        raise InvalidParamsError("members must not be empty")
    if limit < 1:
        raise InvalidParamsError(f"limit must be >= 1, got {limit}")
    if scope == "node" and len(members) != 1:
        raise InvalidParamsError(f"node scope takes exactly 1 member, got {len(members)}")
    if scope == "edge" and len(members) != 2:
        raise InvalidParamsError(f"edge scope takes exactly 2 members, got {len(members)}")

    maps = [corpus.feature_scores(word, interval) for word in members]
    if scope == "edge":
        shared = set(maps[0]) & set(maps[1])
        totals = {feature: maps[0][feature] + maps[1][feature] for feature in shared}
    else:
        totals = {}
        for scores in maps:
            for feature, lmi in scores.items():
                totals[feature] = totals.get(feature, 0.0) + lmi

    ranked = sorted(totals.items(), key=lambda item: (-item[1], item[0]))[:limit]
    return FeatureRanking(scope, tuple(members), interval, ranked)


def fetch_evidence(
    corpus: Corpus,
    word: str,
    feature: str,
    interval: int | None = None,
    limit: int = 20,
) -> list[SentenceRecord]:
    """Example sentences attesting a (word, feature) pair, in stable order."""
    return corpus.query_sentences(word, feature, interval, limit)
