// Pure view-model logic. Everything here is a function of API payloads plus
// client-local edits; no analytics are recomputed, only payload fields are
// projected (presence sets, score maps, cluster ids).

import { clusterColor, TIMEDIFF_COLORS } from "./colors";
import type {
  AnnotatedGraph,
  Edits,
  GraphPayload,
  GraphRequest,
  Mode,
  Selection,
  TimeDiffReport,
} from "./types";

export interface ViewParams {
  charge: number;
  linkDistance: number;
  zoom: number;
}

export interface ViewState {
  request: GraphRequest | null;
  payload: GraphPayload | null;
  mode: Mode;
  reference: number | null;
  slider: number | null;
  selection: Selection | null;
  edits: Edits;
  view: ViewParams;
}

export function initialState(): ViewState {
  return {
    request: null,
    payload: null,
    mode: "cluster",
    reference: null,
    slider: null,
    selection: null,
    edits: { labels: {}, reassignments: {} },
    view: { charge: -120, linkDistance: 55, zoom: 1 },
  };
}

export function edgeKey(source: string, target: string): string {
  // tokens come from tab-separated files, so a tab is a safe separator
  return source <= target ? `${source}\t${target}` : `${target}\t${source}`;
}

export function effectiveCluster(payload: GraphPayload, edits: Edits, word: string): number | null {
  if (word in edits.reassignments) {
    return edits.reassignments[word];
  }
  const node = payload.nodes.find((n) => n.word === word);
  return node ? node.cluster_id : null;
}

export function clusterIds(payload: GraphPayload, edits: Edits): number[] {
  const ids = new Set<number>();
  for (const node of payload.nodes) {
    const cid = effectiveCluster(payload, edits, node.word);
    if (cid !== null) ids.add(cid);
  }
  return [...ids].sort((a, b) => a - b);
}

export function clusterLabel(edits: Edits, clusterId: number): string {
  return edits.labels[String(clusterId)] ?? `cluster ${clusterId}`;
}

/** Cluster-view colors: one stable color per (possibly reassigned) cluster id. */
export function clusterColors(payload: GraphPayload, edits: Edits): Map<string, string> {
  const colors = new Map<string, string>();
  for (const node of payload.nodes) {
    colors.set(node.word, clusterColor(effectiveCluster(payload, edits, node.word)));
  }
  return colors;
}

/** Time-diff colors, one per node, straight from the report categories. */
export function timeDiffColors(report: TimeDiffReport): Map<string, string> {
  const colors = new Map<string, string>();
  for (const [word, category] of Object.entries(report.category_by_word)) {
    colors.set(word, TIMEDIFF_COLORS[category]);
  }
  return colors;
}

/** Nodes present and edges weighted in one interval (projection of payload fields). */
export function intervalSlice(
  payload: GraphPayload,
  interval: number
): { nodes: Set<string>; edges: Set<string> } {
  const nodes = new Set<string>();
  for (const node of payload.nodes) {
    if (node.present_in.includes(interval)) nodes.add(node.word);
  }
  const edges = new Set<string>();
  for (const edge of payload.edges) {
    if (String(interval) in edge.weight_by_interval) {
      edges.add(edgeKey(edge.source, edge.target));
    }
  }
  return { nodes, edges };
}

/** Complement of the slice: what the slider dims. */
export function dimmedSet(
  payload: GraphPayload,
  interval: number
): { nodes: Set<string>; edges: Set<string> } {
  const slice = intervalSlice(payload, interval);
  const nodes = new Set<string>();
  for (const node of payload.nodes) {
    if (!slice.nodes.has(node.word)) nodes.add(node.word);
  }
  const edges = new Set<string>();
  for (const edge of payload.edges) {
    const key = edgeKey(edge.source, edge.target);
    if (!slice.edges.has(key)) edges.add(key);
  }
  return { nodes, edges };
}

/** Score development across the full selected range; null marks absence. */
export function scoreSeries(
  payload: GraphPayload,
  selection: Selection
): [number, number | null][] {
  let scores: Record<string, number> | undefined;
  if (selection.kind === "node") {
    scores = payload.nodes.find((n) => n.word === selection.word)?.score_by_interval;
  } else if (selection.kind === "edge") {
    const key = edgeKey(selection.source, selection.target);
    scores = payload.edges.find((e) => edgeKey(e.source, e.target) === key)?.weight_by_interval;
  }
  if (!scores) return [];
  const found = scores;
  return payload.params.intervals.map((t) => [t, found[String(t)] ?? null]);
}

/** Node radius from server-side centrality; uniform when all scores are zero. */
export function radiusByCentrality(payload: GraphPayload): Map<string, number> {
  const base = 7;
  const radii = new Map<string, number>();
  const max = Math.max(0, ...payload.nodes.map((n) => n.centrality ?? 0));
  for (const node of payload.nodes) {
    const c = node.centrality ?? 0;
    radii.set(node.word, max > 0 ? base + 11 * Math.sqrt(c / max) : base);
  }
  return radii;
}

export function exportAnnotated(payload: GraphPayload, edits: Edits): AnnotatedGraph {
  return {
    ...payload,
    labels: { ...edits.labels },
    reassignments: { ...edits.reassignments },
  };
}

export function parseAnnotated(doc: AnnotatedGraph): { payload: GraphPayload; edits: Edits } {
  const { labels, reassignments, ...payload } = doc;
  return {
    payload,
    edits: { labels: { ...(labels ?? {}) }, reassignments: { ...(reassignments ?? {}) } },
  };
}
