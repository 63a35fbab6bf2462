// Wire formats of the engine's REST API. Interval keys inside score maps are
// integer indices rendered as strings.

export interface GraphParams {
  target: string;
  variant: string;
  n: number;
  d: number;
  intervals: number[];
}

export interface GraphNode {
  word: string;
  present_in: number[];
  score_by_interval: Record<string, number>;
  cluster_id: number | null;
  centrality: number | null;
}

export interface GraphEdge {
  source: string;
  target: string;
  weight_by_interval: Record<string, number>;
  aggregate_weight: number;
}

export interface ClusteringMeta {
  seed: number;
  iterations: number;
}

export interface GraphPayload {
  params: GraphParams;
  nodes: GraphNode[];
  edges: GraphEdge[];
  clustering?: ClusteringMeta;
  warnings?: string[];
}

export interface GraphRequest {
  corpus_id: string;
  target: string;
  variant: string;
  n: number;
  d: number;
  interval_indices?: number[];
  seed?: number;
  iterations?: number;
}

export type TimeDiffCategory = "disappeared" | "emerged_in" | "emerged_after" | "stable";

export interface TimeDiffReport {
  reference: number;
  category_by_word: Record<string, TimeDiffCategory>;
}

export interface IntervalInfo {
  index: number;
  label: string;
  start_year: number;
  end_year: number;
}

export interface CorpusInfo {
  corpus_id: string;
  name: string;
  interval_count: number;
  intervals: IntervalInfo[];
}

export interface FeatureRanking {
  scope: string;
  members: string[];
  interval: number | null;
  ranked: [string, number][];
}

export interface SentenceRecord {
  sentence_id: string;
  text: string;
  interval_index: number;
  attested: [string, string][];
}

export type Mode = "cluster" | "timediff" | "slider";

export type Selection =
  | { kind: "node"; word: string }
  | { kind: "edge"; source: string; target: string }
  | { kind: "cluster"; clusterId: number };

// Client-local annotations; never sent to the server.
export interface Edits {
  labels: Record<string, string>; // cluster id (as string key) -> name
  reassignments: Record<string, number>; // word -> cluster id
}

// Export format: the graph payload plus the annotations.
export interface AnnotatedGraph extends GraphPayload {
  labels: Record<string, string>;
  reassignments: Record<string, number>;
}
