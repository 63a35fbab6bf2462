"""File-backed corpus storage with an immutable in-memory snapshot per corpus.

A corpus is a directory; the files are the persistent form:

    intervals.tsv    index TAB label TAB start_year TAB end_year
    similarity.tsv   word1 TAB word2 TAB score TAB interval_index
    features.tsv     word TAB feature TAB lmi TAB interval_index
    counts.tsv       word TAB feature TAB count TAB interval_index
    sentences.jsonl  {"sentence_id", "text", "interval_index", "attested"}
    meta.json        {"corpus_id", "name"}            (optional)

``intervals.tsv`` is required. Similarity, feature, and count tables may be
split across several files (``similarity*.tsv`` etc., e.g. one per
interval); they are merged on load. Similarity and feature scores may also
be derived from counts (LMI ranking plus top-k feature overlap). Ingesting
into a data directory writes a normalized single-file copy of the corpus,
which is itself a valid source directory; re-ingest replaces the snapshot
wholesale, so readers never observe partial state.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import thesaurus
from .errors import IngestError, InvalidParamsError, NotFoundError

INTERVALS_FILE = "intervals.tsv"
SIMILARITY_FILE = "similarity.tsv"
FEATURES_FILE = "features.tsv"
COUNTS_FILE = "counts.tsv"
SENTENCES_FILE = "sentences.jsonl"
META_FILE = "meta.json"


@dataclass(frozen=True, order=True)
class Interval:
    """One contiguous time slice of a corpus."""

    index: int
    label: str
    start_year: int
    end_year: int

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "label": self.label,
            "start_year": self.start_year,
            "end_year": self.end_year,
        }


@dataclass(frozen=True)
class CorpusHandle:
    corpus_id: str
    name: str
    intervals: tuple[Interval, ...]

    @property
    def interval_count(self) -> int:
        return len(self.intervals)

    def to_json(self) -> dict:
        return {
            "corpus_id": self.corpus_id,
            "name": self.name,
            "interval_count": self.interval_count,
            "intervals": [iv.to_json() for iv in self.intervals],
        }


@dataclass(frozen=True)
class SentenceRecord:
    """An example sentence with its (word, feature) attestations."""

    sentence_id: str
    text: str
    interval: int
    word_index: frozenset[str]
    feature_index: frozenset[tuple[str, str]]

    def to_json(self) -> dict:
        return {
            "sentence_id": self.sentence_id,
            "text": self.text,
            "interval_index": self.interval,
            "attested": sorted([w, f] for w, f in self.feature_index),
        }


def _fmt_score(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def _read_rows(path: Path) -> Iterator[tuple[int, list[str]]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise IngestError(f"{path.name}:{lineno}: expected 4 tab-separated columns, got {len(fields)}")
            yield lineno, fields


def _parse_intervals(path: Path) -> tuple[Interval, ...]:
    intervals: dict[int, Interval] = {}
    for lineno, (index_s, label, start_s, end_s) in _read_rows(path):
        try:
            index, start, end = int(index_s), int(start_s), int(end_s)
        except ValueError as exc:
            raise IngestError(f"{path.name}:{lineno}: {exc}") from None
        if index in intervals:
            raise IngestError(f"{path.name}:{lineno}: duplicate interval index {index}")
        if start > end:
            raise IngestError(f"{path.name}:{lineno}: start_year {start} > end_year {end}")
        intervals[index] = Interval(index, label, start, end)
    if not intervals:
        raise IngestError(f"{path.name}: no intervals defined")
    ordered = tuple(intervals[i] for i in sorted(intervals))
    if sorted(intervals) != list(range(len(intervals))):
        raise IngestError(f"{path.name}: interval indices must be dense starting at 0")
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start_year < prev.start_year:
            raise IngestError(
                f"{path.name}: interval {cur.index} starts before interval {prev.index}"
            )
    return ordered


class Corpus:
    """Immutable queryable snapshot of one ingested corpus."""

    def __init__(
        self,
        handle: CorpusHandle,
        pair_scores: dict[tuple[str, str], dict[int, float]],
        feature_scores: dict[tuple[str, int], list[tuple[str, float]]],
        sentences: list[SentenceRecord],
    ) -> None:
        self.handle = handle
        self._pairs = pair_scores
        self._features = feature_scores
        self._sentences = sorted(sentences, key=lambda s: s.sentence_id)

        # neighbour lists per interval, sorted by score desc then token
        self._nbrs: dict[int, dict[str, list[tuple[str, float]]]] = {
            iv.index: defaultdict(list) for iv in handle.intervals
        }
        for (a, b), by_interval in self._pairs.items():
            for t, score in by_interval.items():
                self._nbrs[t][a].append((b, score))
                self._nbrs[t][b].append((a, score))
        for by_word in self._nbrs.values():
            for nbrs in by_word.values():
                nbrs.sort(key=lambda item: (-item[1], item[0]))

        self._by_word: dict[str, list[int]] = defaultdict(list)
        self._by_pair: dict[tuple[str, str], list[int]] = defaultdict(list)
        for i, sent in enumerate(self._sentences):
            for word in sent.word_index:
                self._by_word[word].append(i)
            for pair in sent.feature_index:
                self._by_pair[pair].append(i)

    @property
    def corpus_id(self) -> str:
        return self.handle.corpus_id

    @property
    def interval_indices(self) -> list[int]:
        return [iv.index for iv in self.handle.intervals]

    def check_interval(self, interval: int) -> Interval:
        for iv in self.handle.intervals:
            if iv.index == interval:
                return iv
        raise NotFoundError(f"corpus {self.corpus_id!r} has no interval {interval}")

    def query_neighbours(self, word: str, interval: int, limit: int | None = None) -> list[tuple[str, float]]:
        """Neighbours of ``word`` in one interval, best first.

        Sorted by similarity descending with lexicographic tie-break;
        unknown words yield an empty list.
        """
        if limit is not None and limit < 1:
            raise InvalidParamsError(f"limit must be >= 1, got {limit}")
        self.check_interval(interval)
        nbrs = self._nbrs[interval].get(word, [])
        return list(nbrs if limit is None else nbrs[:limit])

    def query_edge_scores(self, word1: str, word2: str) -> dict[int, float]:
        """Per-interval similarity of a pair; symmetric in the arguments."""
        a, b = sorted((word1, word2))
        return dict(self._pairs.get((a, b), {}))

    def query_sentences(
        self,
        word: str,
        feature: str | None = None,
        interval: int | None = None,
        limit: int = 20,
    ) -> list[SentenceRecord]:
        """Example sentences containing ``word``, ordered by sentence_id.

        With ``feature``, only sentences attesting the (word, feature) pair
        are returned; with ``interval``, only sentences from that interval.
        """
        if limit < 1:
            raise InvalidParamsError(f"limit must be >= 1, got {limit}")
        if interval is not None:
            self.check_interval(interval)
        if feature is None:
            hits = self._by_word.get(word, [])
        else:
            hits = self._by_pair.get((word, feature), [])
        out = []
        for i in hits:
            sent = self._sentences[i]
            if interval is not None and sent.interval != interval:
                continue
            out.append(sent)
            if len(out) == limit:
                break
        return out

    def feature_scores(self, word: str, interval: int | None = None) -> dict[str, float]:
        """LMI per feature for a word; summed over intervals when none given."""
        if interval is not None:
            self.check_interval(interval)
            return dict(self._features.get((word, interval), ()))
        summed: dict[str, float] = defaultdict(float)
        for iv in self.handle.intervals:
            for feature, lmi in self._features.get((word, iv.index), ()):
                summed[feature] += lmi
        return dict(summed)

    def similarity_rows(self) -> Iterator[tuple[str, str, float, int]]:
        """Canonical (word1, word2, score, interval) rows, sorted."""
        for (a, b) in sorted(self._pairs):
            by_interval = self._pairs[(a, b)]
            for t in sorted(by_interval):
                yield a, b, by_interval[t], t

    def export_similarity(self, path: Path | str) -> None:
        _write_similarity(Path(path), self.similarity_rows())

    def feature_rows(self) -> Iterator[tuple[str, str, float, int]]:
        for (word, t) in sorted(self._features):
            for feature, lmi in self._features[(word, t)]:
                yield word, feature, lmi, t


def _write_similarity(path: Path, rows) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for a, b, score, t in rows:
            fh.write(f"{a}\t{b}\t{_fmt_score(score)}\t{t}\n")


def _load_similarity(paths: list[Path], valid: set[int]) -> dict[tuple[str, str], dict[int, float]]:
    pairs: dict[tuple[str, str], dict[int, float]] = defaultdict(dict)
    for path in paths:
        for lineno, (w1, w2, score_s, t_s) in _read_rows(path):
            try:
                score, t = float(score_s), int(t_s)
            except ValueError as exc:
                raise IngestError(f"{path.name}:{lineno}: {exc}") from None
            if w1 == w2:
                raise IngestError(f"{path.name}:{lineno}: self-similarity for {w1!r}")
            if score < 0 or not math.isfinite(score):
                raise IngestError(f"{path.name}:{lineno}: invalid score {score_s}")
            if t not in valid:
                raise IngestError(f"{path.name}:{lineno}: unknown interval index {t}")
            a, b = sorted((w1, w2))
            existing = pairs[(a, b)].get(t)
            if existing is not None and existing != score:
                raise IngestError(
                    f"{path.name}:{lineno}: conflicting score for symmetric pair "
                    f"({a!r}, {b!r}) in interval {t}: {existing} vs {score}"
                )
            pairs[(a, b)][t] = score
    return dict(pairs)


def _load_features(paths: list[Path], valid: set[int], column: str) -> thesaurus.FeatureTable:
    rows = []
    for path in paths:
        for lineno, (word, feature, value_s, t_s) in _read_rows(path):
            try:
                t = int(t_s)
                value = int(value_s) if column == "count" else float(value_s)
            except ValueError as exc:
                raise IngestError(f"{path.name}:{lineno}: {exc}") from None
            if t not in valid:
                raise IngestError(f"{path.name}:{lineno}: unknown interval index {t}")
            if column == "count" and value < 1:
                raise IngestError(f"{path.name}:{lineno}: count must be >= 1")
            rows.append((word, feature, value, t))
    if column == "count":
        return thesaurus.FeatureTable.from_counts(rows)
    return thesaurus.FeatureTable.from_scores(rows)


def _load_sentences(path: Path, valid: set[int]) -> list[SentenceRecord]:
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                sentence_id = str(obj["sentence_id"])
                text = str(obj["text"])
                t = int(obj["interval_index"])
                attested = [(str(w), str(f)) for w, f in obj.get("attested", [])]
            except (ValueError, KeyError, TypeError) as exc:
                raise IngestError(f"{path.name}:{lineno}: {exc}") from None
            if t not in valid:
                raise IngestError(f"{path.name}:{lineno}: unknown interval index {t}")
            words = frozenset(text.split()) | {w for w, _ in attested}
            sentences.append(
                SentenceRecord(sentence_id, text, t, words, frozenset(attested))
            )
    return sentences


def load_corpus(source_dir: Path | str, corpus_id: str, name: str | None = None) -> Corpus:
    """Parse and index a corpus directory into an immutable snapshot."""
    source = Path(source_dir)
    if not source.is_dir():
        raise IngestError(f"{source}: not a directory")
    intervals_path = source / INTERVALS_FILE
    if not intervals_path.is_file():
        raise IngestError(f"{source}: missing {INTERVALS_FILE}")
    intervals = _parse_intervals(intervals_path)
    valid = {iv.index for iv in intervals}

    meta_path = source / META_FILE
    if name is None and meta_path.is_file():
        try:
            name = json.loads(meta_path.read_text(encoding="utf-8")).get("name")
        except ValueError as exc:
            raise IngestError(f"{META_FILE}: {exc}") from None
    handle = CorpusHandle(corpus_id, name or corpus_id, intervals)

    table: thesaurus.FeatureTable | None = None
    feature_paths = sorted(source.glob("features*.tsv"))
    count_paths = sorted(source.glob("counts*.tsv"))
    if feature_paths:
        table = _load_features(feature_paths, valid, "lmi")
    elif count_paths:
        table = _load_features(count_paths, valid, "count")

    similarity_paths = sorted(source.glob("similarity*.tsv"))
    if similarity_paths:
        pairs = _load_similarity(similarity_paths, valid)
    elif table is not None:
        pairs = defaultdict(dict)
        for t in sorted(table.intervals()):
            for rec in thesaurus.build_thesaurus(table, t):
                pairs[(rec.word1, rec.word2)][t] = rec.score
        pairs = dict(pairs)
    else:
        raise IngestError(
            f"{source}: need {SIMILARITY_FILE}, {COUNTS_FILE} or {FEATURES_FILE}"
        )

    feature_lists: dict[tuple[str, int], list[tuple[str, float]]] = {}
    if table is not None:
        for t in sorted(table.intervals()):
            for word in table.words(t):
                feature_lists[(word, t)] = [
                    (fs.feature, fs.lmi) for fs in table.top_features(word, t)
                ]

    sentences_path = source / SENTENCES_FILE
    sentences = _load_sentences(sentences_path, valid) if sentences_path.is_file() else []

    return Corpus(handle, pairs, feature_lists, sentences)


def write_corpus(corpus: Corpus, target_dir: Path | str) -> None:
    """Write the normalized on-disk form of a corpus snapshot."""
    target = Path(target_dir)
    target.mkdir(parents=True, exist_ok=True)
    with open(target / INTERVALS_FILE, "w", encoding="utf-8") as fh:
        for iv in corpus.handle.intervals:
            fh.write(f"{iv.index}\t{iv.label}\t{iv.start_year}\t{iv.end_year}\n")
    _write_similarity(target / SIMILARITY_FILE, corpus.similarity_rows())
    feature_rows = list(corpus.feature_rows())
    if feature_rows:
        with open(target / FEATURES_FILE, "w", encoding="utf-8") as fh:
            for word, feature, lmi, t in feature_rows:
                fh.write(f"{word}\t{feature}\t{repr(lmi)}\t{t}\n")
    if corpus._sentences:
        with open(target / SENTENCES_FILE, "w", encoding="utf-8") as fh:
            for sent in corpus._sentences:
                fh.write(json.dumps(sent.to_json(), sort_keys=True) + "\n")
    meta = {"corpus_id": corpus.corpus_id, "name": corpus.handle.name}
    (target / META_FILE).write_text(json.dumps(meta, sort_keys=True) + "\n", encoding="utf-8")


class Store:
    """Registry of corpora, optionally persisted under a data directory."""

    def __init__(self, data_dir: Path | str | None = None) -> None:
        self.data_dir = Path(data_dir) if data_dir is not None else None
        self._corpora: dict[str, Corpus] = {}
        if self.data_dir is not None and self.data_dir.is_dir():
            self.discover()

    def discover(self) -> None:
        """Load every corpus directory found under the data directory."""
        assert self.data_dir is not None
        for child in sorted(self.data_dir.iterdir()):
            if child.is_dir() and (child / INTERVALS_FILE).is_file():
                self._corpora[child.name] = load_corpus(child, child.name)

    def ingest(self, source_dir: Path | str, corpus_id: str, name: str | None = None) -> CorpusHandle:
        """Ingest a source directory, replacing any same-id corpus.

        With a data directory configured, the normalized form is written to
        ``data_dir/corpus_id`` so later processes can load it directly.
        """
        corpus = load_corpus(source_dir, corpus_id, name)
        if self.data_dir is not None:
            target = self.data_dir / corpus_id
            if Path(source_dir).resolve() != target.resolve():
                write_corpus(corpus, target)
        self._corpora[corpus_id] = corpus
        return corpus.handle

    def corpus(self, corpus_id: str) -> Corpus:
        try:
            return self._corpora[corpus_id]
        except KeyError:
            raise NotFoundError(f"unknown corpus {corpus_id!r}") from None

    def corpora(self) -> list[CorpusHandle]:
        return [self._corpora[cid].handle for cid in sorted(self._corpora)]
