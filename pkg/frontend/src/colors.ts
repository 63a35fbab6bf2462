import type { TimeDiffCategory } from "./types";

// Categorical palette for cluster ids. Assignment is a pure function of the
// id, so a payload re-render always shows the same color per cluster.
export const CLUSTER_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#76b7b2",
  "#edc948",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
];

export const UNCLUSTERED_COLOR = "#8a8f98";

export function clusterColor(clusterId: number | null | undefined): string {
  if (clusterId === null || clusterId === undefined || clusterId < 0) {
    return UNCLUSTERED_COLOR;
  }
  return CLUSTER_PALETTE[clusterId % CLUSTER_PALETTE.length];
}

// Time-diff mode: red for nodes gone before the reference, greens for nodes
// arriving in/after it, neutral grey for stable ones.
export const TIMEDIFF_COLORS: Record<TimeDiffCategory, string> = {
  disappeared: "#d62728",
  emerged_in: "#1b9e77",
  emerged_after: "#66c2a5",
  stable: "#9aa0a6",
};

export const DIMMED_OPACITY = 0.15;
