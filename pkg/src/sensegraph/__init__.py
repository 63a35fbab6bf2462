"""sensegraph: temporal sense-graph engine for time-sliced distributional
thesauri — merged neighbourhood graphs over time, Chinese Whispers sense
clusters, diachronic time-diff analytics, and feature/sentence evidence."""

from .analytics import (
    CentralityReport,
    TimeDiffReport,
    annotate_centrality,
    betweenness,
    interval_slice,
    score_series,
    time_diff,
)
from .builder import (
    GraphEdge,
    GraphNode,
    GraphParams,
    TemporalGraph,
    build_graph,
    dumps_canonical,
    graph_from_dict,
    graph_to_dict,
)
from .clustering import Clustering, apply_clustering, chinese_whispers, recluster
from .errors import IngestError, InvalidParamsError, NotFoundError, SenseGraphError
from .evidence import FeatureRanking, fetch_evidence, rank_features
from .store import Corpus, CorpusHandle, Interval, SentenceRecord, Store, load_corpus
from .thesaurus import (
    FeatureScore,
    FeatureTable,
    SimilarityRecord,
    build_thesaurus,
    lmi_score,
    validate_similarity_records,
)

__version__ = "0.1.0"

__all__ = [
    "CentralityReport",
    "Clustering",
    "Corpus",
    "CorpusHandle",
    "FeatureRanking",
    "FeatureScore",
    "FeatureTable",
    "GraphEdge",
    "GraphNode",
    "GraphParams",
    "IngestError",
    "Interval",
    "InvalidParamsError",
    "NotFoundError",
    "SenseGraphError",
    "SentenceRecord",
    "SimilarityRecord",
    "Store",
    "TemporalGraph",
    "TimeDiffReport",
    "annotate_centrality",
    "apply_clustering",
    "betweenness",
    "build_graph",
    "build_thesaurus",
    "chinese_whispers",
    "dumps_canonical",
    "fetch_evidence",
    "graph_from_dict",
    "graph_to_dict",
    "interval_slice",
    "lmi_score",
    "load_corpus",
    "rank_features",
    "recluster",
    "score_series",
    "time_diff",
    "validate_similarity_records",
]
