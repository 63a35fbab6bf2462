// Side-panel renderers: ranked features, example sentences, score-series
// sparkline, cluster editor, and error banners. Plain DOM, no framework.

import { clusterColor } from "./colors";
import { clusterIds, clusterLabel, scoreSeries } from "./state";
import type { Edits, FeatureRanking, GraphPayload, Selection, SentenceRecord } from "./types";

function clear(el: HTMLElement): void {
  el.replaceChildren();
}

function heading(el: HTMLElement, text: string): void {
  const h = document.createElement("h3");
  h.textContent = text;
  el.appendChild(h);
}

export function renderFeatures(el: HTMLElement, ranking: FeatureRanking): void {
  clear(el);
  const scopeNote = ranking.interval === null ? "all intervals" : `interval ${ranking.interval}`;
  heading(el, `features — ${ranking.scope} (${scopeNote})`);
  if (ranking.ranked.length === 0) {
    const p = document.createElement("p");
    p.className = "muted";
    p.textContent = "no shared features";
    el.appendChild(p);
    return;
  }
  const table = document.createElement("table");
  for (const [feature, lmi] of ranking.ranked) {
    const row = table.insertRow();
    row.insertCell().textContent = feature;
    const cell = row.insertCell();
    cell.className = "num";
    cell.textContent = lmi.toFixed(2);
  }
  el.appendChild(table);
}

export function renderSentences(el: HTMLElement, word: string, sentences: SentenceRecord[]): void {
  clear(el);
  heading(el, `sentences — ${word}`);
  if (sentences.length === 0) {
    const p = document.createElement("p");
    p.className = "muted";
    p.textContent = "no example sentences";
    el.appendChild(p);
    return;
  }
  const list = document.createElement("ul");
  for (const sentence of sentences) {
    const item = document.createElement("li");
    const meta = document.createElement("span");
    meta.className = "muted";
    meta.textContent = `[${sentence.sentence_id} · interval ${sentence.interval_index}] `;
    item.appendChild(meta);
    item.appendChild(document.createTextNode(sentence.text));
    list.appendChild(item);
  }
  el.appendChild(list);
}

/** Inline SVG sparkline of a score series; gaps mark absent intervals. */
export function renderSeries(el: HTMLElement, payload: GraphPayload, selection: Selection): void {
  clear(el);
  if (selection.kind === "cluster") return;
  const series = scoreSeries(payload, selection);
  const name =
    selection.kind === "node" ? selection.word : `${selection.source} — ${selection.target}`;
  heading(el, `scores over time — ${name}`);

  const width = 260;
  const height = 64;
  const pad = 8;
  const values = series.map(([, v]) => v).filter((v): v is number => v !== null);
  if (values.length === 0) return;
  const max = Math.max(...values);
  const x = (i: number) =>
    pad + (series.length === 1 ? 0 : (i * (width - 2 * pad)) / (series.length - 1));
  const y = (v: number) => height - pad - (max === 0 ? 0 : (v / max) * (height - 2 * pad));

  const ns = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(ns, "svg");
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));
  svg.setAttribute("class", "sparkline");

  let path = "";
  let pen = false;
  series.forEach(([, value], i) => {
    if (value === null) {
      pen = false;
      return;
    }
    path += `${pen ? "L" : "M"}${x(i).toFixed(1)},${y(value).toFixed(1)}`;
    pen = true;
  });
  const line = document.createElementNS(ns, "path");
  line.setAttribute("d", path);
  line.setAttribute("fill", "none");
  line.setAttribute("stroke", "#4e79a7");
  line.setAttribute("stroke-width", "2");
  svg.appendChild(line);

  series.forEach(([t, value], i) => {
    const dot = document.createElementNS(ns, "circle");
    dot.setAttribute("cx", String(x(i)));
    dot.setAttribute("cy", String(value === null ? height - pad : y(value)));
    dot.setAttribute("r", value === null ? "2" : "3");
    dot.setAttribute("fill", value === null ? "#c6cad1" : "#4e79a7");
    dot.setAttribute("data-interval", String(t));
    dot.setAttribute("data-absent", value === null ? "1" : "0");
    svg.appendChild(dot);
  });
  el.appendChild(svg);
}

export interface ClusterEditorCallbacks {
  onRename: (clusterId: number, name: string) => void;
  onReassign: (word: string, clusterId: number) => void;
  onExport: () => void;
}

export function renderClusterEditor(
  el: HTMLElement,
  payload: GraphPayload,
  edits: Edits,
  selected: string | null,
  callbacks: ClusterEditorCallbacks
): void {
  clear(el);
  heading(el, "clusters");
  const ids = clusterIds(payload, edits);
  const list = document.createElement("div");
  for (const cid of ids) {
    const row = document.createElement("div");
    row.className = "cluster-row";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.backgroundColor = clusterColor(cid);
    row.appendChild(swatch);
    const input = document.createElement("input");
    input.value = clusterLabel(edits, cid);
    input.setAttribute("data-cluster", String(cid));
    input.addEventListener("change", () => callbacks.onRename(cid, input.value));
    row.appendChild(input);
    list.appendChild(row);
  }
  el.appendChild(list);

  if (selected !== null) {
    const row = document.createElement("div");
    row.className = "reassign-row";
    const label = document.createElement("label");
    label.textContent = `move ${selected.split("/")[0]} to `;
    const select = document.createElement("select");
    for (const cid of ids) {
      const option = document.createElement("option");
      option.value = String(cid);
      option.textContent = clusterLabel(edits, cid);
      select.appendChild(option);
    }
    select.addEventListener("change", () => callbacks.onReassign(selected, Number(select.value)));
    label.appendChild(select);
    row.appendChild(label);
    el.appendChild(row);
  }

  const exportBtn = document.createElement("button");
  exportBtn.textContent = "export annotated graph";
  exportBtn.id = "export-btn";
  exportBtn.addEventListener("click", callbacks.onExport);
  el.appendChild(exportBtn);
}

/** Dismissible error banner; API failures are never silent. */
export function showBanner(el: HTMLElement, message: string): void {
  const banner = document.createElement("div");
  banner.className = "banner";
  const text = document.createElement("span");
  text.textContent = message;
  banner.appendChild(text);
  const dismiss = document.createElement("button");
  dismiss.textContent = "×";
  dismiss.addEventListener("click", () => banner.remove());
  banner.appendChild(dismiss);
  el.appendChild(banner);
}
