// Force-directed graph rendering (d3). The view keeps simulation positions
// per word across re-renders, so switching modes or reclustering does not
// reshuffle the layout.

import * as d3 from "d3";

import { DIMMED_OPACITY } from "./colors";
import { edgeKey } from "./state";
import type { GraphPayload, Selection } from "./types";

interface SimNode extends d3.SimulationNodeDatum {
  word: string;
  radius: number;
}

interface SimLink extends d3.SimulationLinkDatum<SimNode> {
  key: string;
  weight: number;
}

export interface GraphViewCallbacks {
  onSelect?: (selection: Selection) => void;
  onHover?: (selection: Selection | null) => void;
}

export class GraphView {
  private svg: d3.Selection<SVGSVGElement, unknown, null, undefined>;
  private zoomLayer: d3.Selection<SVGGElement, unknown, null, undefined>;
  private linkLayer: d3.Selection<SVGGElement, unknown, null, undefined>;
  private nodeLayer: d3.Selection<SVGGElement, unknown, null, undefined>;
  private labelLayer: d3.Selection<SVGGElement, unknown, null, undefined>;
  private emptyState: d3.Selection<SVGTextElement, unknown, null, undefined>;
  private simulation: d3.Simulation<SimNode, SimLink>;
  private positions = new Map<string, { x: number; y: number }>();
  private callbacks: GraphViewCallbacks;
  private width: number;
  private height: number;

  constructor(element: SVGSVGElement, callbacks: GraphViewCallbacks = {}) {
    this.callbacks = callbacks;
    this.width = element.clientWidth || 900;
    this.height = element.clientHeight || 600;
    this.svg = d3.select(element);
    this.zoomLayer = this.svg.append("g").attr("class", "zoom-layer");
    this.linkLayer = this.zoomLayer.append("g").attr("class", "links");
    this.nodeLayer = this.zoomLayer.append("g").attr("class", "nodes");
    this.labelLayer = this.zoomLayer.append("g").attr("class", "labels");
    this.emptyState = this.svg
      .append("text")
      .attr("class", "empty-state")
      .attr("x", this.width / 2)
      .attr("y", this.height / 2)
      .attr("text-anchor", "middle")
      .style("display", "none");

    this.simulation = d3
      .forceSimulation<SimNode>()
      .force("charge", d3.forceManyBody().strength(-120))
      .force("link", d3.forceLink<SimNode, SimLink>().id((d) => d.word).distance(55))
      .force("center", d3.forceCenter(this.width / 2, this.height / 2))
      .force("collide", d3.forceCollide<SimNode>().radius((d) => d.radius + 2));

    const zoom = d3
      .zoom<SVGSVGElement, unknown>()
      .scaleExtent([0.2, 6])
      .on("zoom", (event) => this.zoomLayer.attr("transform", event.transform));
    this.svg.call(zoom);
  }

  setViewParams(charge: number, linkDistance: number): void {
    (this.simulation.force("charge") as d3.ForceManyBody<SimNode>).strength(charge);
    (this.simulation.force("link") as d3.ForceLink<SimNode, SimLink>).distance(linkDistance);
    this.simulation.alpha(0.4).restart();
  }

  render(payload: GraphPayload, colors: Map<string, string>, radii: Map<string, number>): void {
    if (payload.nodes.length === 0) {
      this.linkLayer.selectAll("*").remove();
      this.nodeLayer.selectAll("*").remove();
      this.labelLayer.selectAll("*").remove();
      this.emptyState
        .style("display", null)
        .text(
          `no neighbours found for "${payload.params.target}" — try other intervals or a larger n`
        );
      this.simulation.nodes([]);
      return;
    }
    this.emptyState.style("display", "none");

    const nodes: SimNode[] = payload.nodes.map((n) => ({
      word: n.word,
      radius: radii.get(n.word) ?? 7,
      ...this.positions.get(n.word),
    }));
    const links: SimLink[] = payload.edges.map((e) => ({
      key: edgeKey(e.source, e.target),
      source: e.source,
      target: e.target,
      weight: e.aggregate_weight,
    }));
    const maxWeight = Math.max(1, ...links.map((l) => l.weight));

    const link = this.linkLayer
      .selectAll<SVGLineElement, SimLink>("line")
      .data(links, (d) => d.key)
      .join("line")
      .attr("class", "edge")
      .attr("data-key", (d) => d.key)
      .attr("stroke", "#b5bac2")
      .attr("stroke-width", (d) => 1 + 2.5 * (d.weight / maxWeight))
      .on("mouseenter", (_event, d) => {
        const [source, target] = d.key.split("\t");
        this.callbacks.onHover?.({ kind: "edge", source, target });
      })
      .on("mouseleave", () => this.callbacks.onHover?.(null))
      .on("click", (_event, d) => {
        const [source, target] = d.key.split("\t");
        this.callbacks.onSelect?.({ kind: "edge", source, target });
      });

    const node = this.nodeLayer
      .selectAll<SVGCircleElement, SimNode>("circle")
      .data(nodes, (d) => d.word)
      .join("circle")
      .attr("class", "node")
      .attr("data-word", (d) => d.word)
      .attr("r", (d) => d.radius)
      .on("mouseenter", (_event, d) => this.callbacks.onHover?.({ kind: "node", word: d.word }))
      .on("mouseleave", () => this.callbacks.onHover?.(null))
      .on("click", (_event, d) => this.callbacks.onSelect?.({ kind: "node", word: d.word }))
      .call(
        d3
          .drag<SVGCircleElement, SimNode>()
          .on("start", (event, d) => {
            if (!event.active) this.simulation.alphaTarget(0.2).restart();
            d.fx = d.x;
            d.fy = d.y;
          })
          .on("drag", (event, d) => {
            d.fx = event.x;
            d.fy = event.y;
          })
          .on("end", (event, d) => {
            if (!event.active) this.simulation.alphaTarget(0);
            d.fx = null;
            d.fy = null;
          })
      );

    const label = this.labelLayer
      .selectAll<SVGTextElement, SimNode>("text")
      .data(nodes, (d) => d.word)
      .join("text")
      .attr("class", "node-label")
      .attr("dy", (d) => -d.radius - 3)
      .attr("text-anchor", "middle")
      .text((d) => d.word.split("/")[0]);

    this.setColors(colors, false);

    this.simulation.nodes(nodes).on("tick", () => {
      for (const n of nodes) {
        this.positions.set(n.word, { x: n.x ?? 0, y: n.y ?? 0 });
      }
      link
        .attr("x1", (d) => (d.source as SimNode).x ?? 0)
        .attr("y1", (d) => (d.source as SimNode).y ?? 0)
        .attr("x2", (d) => (d.target as SimNode).x ?? 0)
        .attr("y2", (d) => (d.target as SimNode).y ?? 0);
      node.attr("cx", (d) => d.x ?? 0).attr("cy", (d) => d.y ?? 0);
      label.attr("x", (d) => d.x ?? 0).attr("y", (d) => d.y ?? 0);
    });
    (this.simulation.force("link") as d3.ForceLink<SimNode, SimLink>).links(links);
    this.simulation.alpha(0.8).restart();
  }

  /** Recolor nodes without relayout (mode switches, recluster animation). */
  setColors(colors: Map<string, string>, animate = true): void {
    const circles = this.nodeLayer.selectAll<SVGCircleElement, SimNode>("circle");
    const target = animate ? circles.transition().duration(300) : circles;
    target.attr("fill", (d) => colors.get(d.word) ?? "#8a8f98");
  }

  /** Halt the force simulation (tests and teardown). */
  stop(): void {
    this.simulation.stop();
  }

  /** Dim the given node words and edge keys; pass null to clear. */
  setDimmed(dimmed: { nodes: Set<string>; edges: Set<string> } | null): void {
    this.nodeLayer
      .selectAll<SVGCircleElement, SimNode>("circle")
      .attr("opacity", (d) => (dimmed && dimmed.nodes.has(d.word) ? DIMMED_OPACITY : 1));
    this.labelLayer
      .selectAll<SVGTextElement, SimNode>("text")
      .attr("opacity", (d) => (dimmed && dimmed.nodes.has(d.word) ? DIMMED_OPACITY : 1));
    this.linkLayer
      .selectAll<SVGLineElement, SimLink>("line")
      .attr("opacity", (d) => (dimmed && dimmed.edges.has(d.key) ? DIMMED_OPACITY : 0.8));
  }
}
