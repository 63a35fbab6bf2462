// DOM-level rendering checks (jsdom): the force view must reflect the
// payload's clusters, the time-diff recolor, and the slider dimming.

import { afterEach, describe, expect, it } from "vitest";

import { DIMMED_OPACITY, TIMEDIFF_COLORS } from "../src/colors";
import { GraphView } from "../src/graphView";
import { clusterColors, dimmedSet, edgeKey, radiusByCentrality, timeDiffColors } from "../src/state";
import type { GraphPayload, TimeDiffReport } from "../src/types";

import payloadJson from "./fixtures/payload.json";
import sliceJson from "./fixtures/slice0.json";
import timediffJson from "./fixtures/timediff.json";

const payload = payloadJson as unknown as GraphPayload;
const report = timediffJson as unknown as TimeDiffReport;
const slice = sliceJson as unknown as { nodes: string[]; edges: [string, string][] };

const noEdits = { labels: {}, reassignments: {} };

let view: GraphView | null = null;

function renderFixture(): GraphView {
  document.body.innerHTML = `<div id="graph"><svg></svg></div>`;
  const svg = document.querySelector("svg") as SVGSVGElement;
  view = new GraphView(svg);
  view.render(payload, clusterColors(payload, noEdits), radiusByCentrality(payload));
  return view;
}

function circleFills(): Map<string, string> {
  const fills = new Map<string, string>();
  document.querySelectorAll<SVGCircleElement>("circle.node").forEach((c) => {
    fills.set(c.getAttribute("data-word")!, c.getAttribute("fill")!);
  });
  return fills;
}

afterEach(() => {
  view?.stop();
  view = null;
});

describe("GraphView", () => {
  it("renders every node and edge of the payload", () => {
    renderFixture();
    expect(document.querySelectorAll("circle.node").length).toBe(payload.nodes.length);
    expect(document.querySelectorAll("line.edge").length).toBe(payload.edges.length);
  });

  it("shows exactly two distinct cluster colors for the sense-shift payload", () => {
    renderFixture();
    expect(new Set(circleFills().values()).size).toBe(2);
  });

  it("re-rendering the same payload keeps the same color per cluster", () => {
    const v = renderFixture();
    const before = circleFills();
    v.render(payload, clusterColors(payload, noEdits), radiusByCentrality(payload));
    expect(circleFills()).toEqual(before);
  });

  it("time-diff mode recolors nodes to the report categories 1:1", () => {
    const v = renderFixture();
    v.setColors(timeDiffColors(report), false);
    const fills = circleFills();
    for (const node of payload.nodes) {
      expect(fills.get(node.word)).toBe(TIMEDIFF_COLORS[report.category_by_word[node.word]]);
    }
  });

  it("slider dims exactly the interval_slice complement", () => {
    const v = renderFixture();
    v.setDimmed(dimmedSet(payload, 0));
    const sliceNodes = new Set(slice.nodes);
    document.querySelectorAll<SVGCircleElement>("circle.node").forEach((c) => {
      const dimmed = c.getAttribute("opacity") === String(DIMMED_OPACITY);
      expect(dimmed).toBe(!sliceNodes.has(c.getAttribute("data-word")!));
    });
    const sliceEdges = new Set(slice.edges.map(([s, t]) => edgeKey(s, t)));
    document.querySelectorAll<SVGLineElement>("line.edge").forEach((l) => {
      const dimmed = l.getAttribute("opacity") === String(DIMMED_OPACITY);
      expect(dimmed).toBe(!sliceEdges.has(l.getAttribute("data-key")!));
    });
  });

  it("empty graphs show the empty-state hint instead of nodes", () => {
    document.body.innerHTML = `<div id="graph"><svg></svg></div>`;
    const svg = document.querySelector("svg") as SVGSVGElement;
    view = new GraphView(svg);
    const empty: GraphPayload = { params: { ...payload.params, target: "ghost/NN" }, nodes: [], edges: [] };
    view.render(empty, new Map(), new Map());
    expect(document.querySelectorAll("circle.node").length).toBe(0);
    const hint = document.querySelector(".empty-state") as SVGTextElement;
    expect(hint.textContent).toContain("ghost/NN");
  });

  it("uniform centrality yields uniform node radii", () => {
    document.body.innerHTML = `<div id="graph"><svg></svg></div>`;
    const svg = document.querySelector("svg") as SVGSVGElement;
    view = new GraphView(svg);
    const flat: GraphPayload = {
      ...payload,
      nodes: payload.nodes.map((n) => ({ ...n, centrality: 0 })),
    };
    view.render(flat, clusterColors(flat, noEdits), radiusByCentrality(flat));
    const radii = new Set<string>();
    document
      .querySelectorAll<SVGCircleElement>("circle.node")
      .forEach((c) => radii.add(c.getAttribute("r")!));
    expect(radii.size).toBe(1);
  });
});
