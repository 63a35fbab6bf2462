"""Distributional-thesaurus computation from word-feature count data.

Words are ranked against their syntagmatic context features by LMI
(frequency-weighted pointwise mutual information), feature lists are
truncated to the top ``TOP_FEATURES`` entries, and the similarity of two
words is the number of features their truncated lists share.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import IngestError, InvalidParamsError, NotFoundError

TOP_FEATURES = 1000
DEFAULT_MIN_SCORE = 2


def lmi_score(joint_count: int, word_count: int, feature_count: int, total_count: int) -> float:
    """LMI of a (word, feature) pair: joint * log2(joint * total / (word * feature)).

    All counts must be positive; zero or negative counts raise
    InvalidParamsError.
    """
    counts = {
        "joint_count": joint_count,
        "word_count": word_count,
        "feature_count": feature_count,
        "total_count": total_count,
    }
    for name, value in counts.items():
        if value < 1:
            raise InvalidParamsError(f"{name} must be >= 1, got {value}")
    return joint_count * math.log2(joint_count * total_count / (word_count * feature_count))


@dataclass(frozen=True)
class FeatureScore:
    """One LMI-scored (word, feature) association in one interval."""

    word: str
    feature: str
    interval: int
    lmi: float


@dataclass(frozen=True)
class SimilarityRecord:
    """Similarity of an unordered word pair in one interval (word1 < word2)."""

    word1: str
    word2: str
    interval: int
    score: float

    @classmethod
    def make(cls, a: str, b: str, interval: int, score: float) -> "SimilarityRecord":
        if a == b:
            raise InvalidParamsError(f"self-similarity record for {a!r}")
        if score < 0:
            raise InvalidParamsError(f"negative similarity score {score} for ({a!r}, {b!r})")
        if b < a:
            a, b = b, a
        return cls(a, b, interval, score)


class FeatureTable:
    """Per-interval feature rankings for every word, truncated to TOP_FEATURES.

    Entries are sorted by LMI descending with lexicographic tie-break on the
    feature string, so rankings are deterministic across runs.
    """

    def __init__(self) -> None:
        self._ranked: dict[tuple[str, int], list[FeatureScore]] = {}
        self._intervals: set[int] = set()

    @classmethod
    def from_counts(cls, counts: Iterable[tuple[str, str, int, int]]) -> "FeatureTable":
        """Score raw (word, feature, count, interval) rows with LMI.

        Marginals and the grand total are computed per interval.
        """
        joint: dict[int, dict[tuple[str, str], int]] = defaultdict(dict)
        for word, feature, count, interval in counts:
            if count < 1:
                raise InvalidParamsError(f"count must be >= 1 for ({word!r}, {feature!r})")
            key = (word, feature)
            joint[interval][key] = joint[interval].get(key, 0) + count

        table = cls()
        for interval, pairs in joint.items():
            word_totals: dict[str, int] = defaultdict(int)
            feature_totals: dict[str, int] = defaultdict(int)
            total = 0
            for (word, feature), count in pairs.items():
                word_totals[word] += count
                feature_totals[feature] += count
                total += count
            for (word, feature), count in pairs.items():
                score = lmi_score(count, word_totals[word], feature_totals[feature], total)
                table._add(FeatureScore(word, feature, interval, score))
        table._finalize()
        return table

    @classmethod
    def from_scores(cls, scores: Iterable[tuple[str, str, float, int]]) -> "FeatureTable":
        """Load pre-scored (word, feature, lmi, interval) rows."""
        table = cls()
        for word, feature, lmi, interval in scores:
            if not math.isfinite(lmi):
                raise IngestError(f"non-finite lmi for ({word!r}, {feature!r})")
            table._add(FeatureScore(word, feature, interval, lmi))
        table._finalize()
        return table

    def _add(self, score: FeatureScore) -> None:
        self._ranked.setdefault((score.word, score.interval), []).append(score)
        self._intervals.add(score.interval)

    def _finalize(self) -> None:
        for key, scores in self._ranked.items():
            scores.sort(key=lambda s: (-s.lmi, s.feature))
            del scores[TOP_FEATURES:]

    def intervals(self) -> set[int]:
        return set(self._intervals)

    def words(self, interval: int) -> list[str]:
        """Words with at least one scored feature in the interval, sorted."""
        self._check_interval(interval)
        return sorted(w for (w, t) in self._ranked if t == interval)

    def top_features(self, word: str, interval: int, k: int = TOP_FEATURES) -> list[FeatureScore]:
        """The k highest-LMI features of a word in one interval.

        Unknown words yield an empty list; unknown intervals raise
        NotFoundError.
        """
        if k < 1:
            raise InvalidParamsError(f"k must be >= 1, got {k}")
        self._check_interval(interval)
        return list(self._ranked.get((word, interval), ())[:k])

    def overlap_similarity(self, word1: str, word2: str, interval: int, k: int = TOP_FEATURES) -> int:
        """Number of features shared by the two words' top-k lists."""
        left = {s.feature for s in self.top_features(word1, interval, k)}
        right = {s.feature for s in self.top_features(word2, interval, k)}
        return len(left & right)

    def _check_interval(self, interval: int) -> None:
        if interval not in self._intervals:
            raise NotFoundError(f"unknown interval index {interval}")


def build_thesaurus(
    table: FeatureTable,
    interval: int,
    k: int = TOP_FEATURES,
    min_score: int = DEFAULT_MIN_SCORE,
) -> set[SimilarityRecord]:
    """All word pairs of an interval whose top-k feature overlap is >= min_score.

    Pairs are found through an inverted feature index, so only words that
    actually share a feature are compared; the result equals the brute-force
    all-pairs intersection.
    """
    by_feature: dict[str, list[str]] = defaultdict(list)
    for word in table.words(interval):
        for score in table.top_features(word, interval, k):
            by_feature[score.feature].append(word)

    overlap: dict[tuple[str, str], int] = defaultdict(int)
    for words in by_feature.values():
        for a, b in combinations(sorted(words), 2):
            overlap[(a, b)] += 1

    return {
        SimilarityRecord(a, b, interval, float(count))
        for (a, b), count in overlap.items()
        if count >= min_score
    }


def validate_similarity_records(records: Iterable[SimilarityRecord]) -> None:
    """Check invariants of a pre-computed similarity set.

    Raises InvalidParamsError on self-pairs, negative scores, or two records
    for the same (pair, interval) with conflicting scores.
    """
    seen: dict[tuple[str, str, int], float] = {}
    for rec in records:
        if rec.word1 == rec.word2:
            raise InvalidParamsError(f"self-similarity record for {rec.word1!r}")
        if rec.score < 0:
            raise InvalidParamsError(
                f"negative similarity score {rec.score} for ({rec.word1!r}, {rec.word2!r})"
            )
        a, b = sorted((rec.word1, rec.word2))
        key = (a, b, rec.interval)
        if key in seen and seen[key] != rec.score:
            raise InvalidParamsError(
                f"conflicting scores for pair ({a!r}, {b!r}) in interval {rec.interval}: "
                f"{seen[key]} vs {rec.score}"
            )
        seen[key] = rec.score


def iter_similarity_pairs(records: Iterable[SimilarityRecord]) -> Iterator[tuple[str, str, int, float]]:
    """Yield canonicalized (word1, word2, interval, score) tuples."""
    for rec in records:
        a, b = sorted((rec.word1, rec.word2))
        yield a, b, rec.interval, rec.score
