// Application wiring: parameter form, mode switching, graph view, panels.

import { ApiClient, ApiError } from "./api";
import { GraphView } from "./graphView";
import {
  renderClusterEditor,
  renderFeatures,
  renderSentences,
  renderSeries,
  showBanner,
} from "./panels";
import {
  clusterColors,
  dimmedSet,
  exportAnnotated,
  initialState,
  parseAnnotated,
  radiusByCentrality,
  timeDiffColors,
} from "./state";
import type { AnnotatedGraph, GraphRequest, Mode, Selection, TimeDiffReport } from "./types";
import "./style.css";

const api = new ApiClient();
const state = initialState();
let lastTimeDiff: TimeDiffReport | null = null;

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

const view = new GraphView($<HTMLElement>("graph").querySelector("svg") as unknown as SVGSVGElement, {
  onHover: (selection) => {
    if (selection && state.payload) renderSeries($("series-panel"), state.payload, selection);
  },
  onSelect: (selection) => void inspect(selection),
});

function fail(error: unknown): void {
  const message =
    error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
  showBanner($("banners"), message);
}

async function loadCorpora(): Promise<void> {
  const corpora = await api.corpora();
  const select = $<HTMLSelectElement>("corpus");
  select.replaceChildren();
  for (const corpus of corpora) {
    const option = document.createElement("option");
    option.value = corpus.corpus_id;
    option.textContent = `${corpus.name} (${corpus.interval_count} intervals)`;
    select.appendChild(option);
  }
  if (corpora.length > 0) populateIntervals(corpora[0].corpus_id);
  select.addEventListener("change", () => populateIntervals(select.value));
}

async function populateIntervals(corpusId: string): Promise<void> {
  const intervals = await api.intervals(corpusId);
  for (const id of ["reference", "slider"]) {
    const select = $<HTMLSelectElement>(id);
    select.replaceChildren();
    for (const interval of intervals) {
      const option = document.createElement("option");
      option.value = String(interval.index);
      option.textContent = interval.label;
      select.appendChild(option);
    }
  }
}

function requestFromForm(): GraphRequest {
  const intervalsRaw = $<HTMLInputElement>("intervals").value.trim();
  const seedRaw = $<HTMLInputElement>("seed").value.trim();
  const request: GraphRequest = {
    corpus_id: $<HTMLSelectElement>("corpus").value,
    target: $<HTMLInputElement>("target").value.trim(),
    variant: $<HTMLSelectElement>("variant").value,
    n: Number($<HTMLInputElement>("n").value),
    d: Number($<HTMLInputElement>("d").value),
    iterations: Number($<HTMLInputElement>("iterations").value) || 15,
  };
  if (intervalsRaw) request.interval_indices = intervalsRaw.split(",").map((s) => Number(s.trim()));
  if (seedRaw) request.seed = Number(seedRaw);
  return request;
}

function redraw(): void {
  if (!state.payload) return;
  view.render(state.payload, clusterColors(state.payload, state.edits), radiusByCentrality(state.payload));
  view.setDimmed(null);
  renderClusterEditor($("cluster-panel"), state.payload, state.edits, selectedWord(), editorCallbacks);
  applyMode();
}

function selectedWord(): string | null {
  return state.selection?.kind === "node" ? state.selection.word : null;
}

async function buildGraph(reuseSeed = false): Promise<void> {
  try {
    const request = requestFromForm();
    if (reuseSeed && state.payload?.clustering) request.seed = state.payload.clustering.seed;
    state.request = request;
    state.payload = await api.buildGraph(request);
    lastTimeDiff = null;
    $<HTMLInputElement>("seed").value = String(state.payload.clustering?.seed ?? "");
    for (const warning of state.payload.warnings ?? []) showBanner($("banners"), warning);
    redraw();
  } catch (error) {
    if ((error as Error).name !== "AbortError") fail(error);
  }
}

async function reclusterGraph(): Promise<void> {
  if (!state.request) return;
  try {
    const request = { ...state.request };
    delete request.seed; // server draws and echoes a fresh one
    state.payload = await api.recluster(request);
    lastTimeDiff = null;
    $<HTMLInputElement>("seed").value = String(state.payload.clustering?.seed ?? "");
    // re-render in place: positions persist, colors animate to the new labels
    redraw();
  } catch (error) {
    if ((error as Error).name !== "AbortError") fail(error);
  }
}

async function applyMode(): Promise<void> {
  if (!state.payload) return;
  if (state.mode === "cluster") {
    view.setColors(clusterColors(state.payload, state.edits));
    view.setDimmed(null);
  } else if (state.mode === "timediff") {
    const reference = Number($<HTMLSelectElement>("reference").value);
    state.reference = reference;
    try {
      if (!lastTimeDiff || lastTimeDiff.reference !== reference) {
        lastTimeDiff = await api.timeDiff({ ...state.request! }, reference);
      }
      view.setColors(timeDiffColors(lastTimeDiff));
      view.setDimmed(null);
    } catch (error) {
      fail(error);
    }
  } else {
    const interval = Number($<HTMLSelectElement>("slider").value);
    state.slider = interval;
    view.setColors(clusterColors(state.payload, state.edits));
    view.setDimmed(dimmedSet(state.payload, interval));
  }
}

async function inspect(selection: Selection): Promise<void> {
  state.selection = selection;
  if (!state.payload || !state.request) return;
  const corpus = state.request.corpus_id;
  try {
    if (selection.kind === "node") {
      const ranking = await api.features(corpus, [selection.word], "node");
      renderFeatures($("features-panel"), ranking);
      const top = ranking.ranked[0]?.[0];
      renderSentences(
        $("sentences-panel"),
        selection.word,
        top ? await api.sentences(corpus, selection.word, top) : []
      );
    } else if (selection.kind === "edge") {
      const ranking = await api.features(corpus, [selection.source, selection.target], "edge");
      renderFeatures($("features-panel"), ranking);
    } else {
      const members = state.payload.nodes
        .filter((n) => n.cluster_id === selection.clusterId)
        .map((n) => n.word);
      const ranking = await api.features(corpus, members, "cluster");
      renderFeatures($("features-panel"), ranking);
    }
    renderClusterEditor($("cluster-panel"), state.payload, state.edits, selectedWord(), editorCallbacks);
  } catch (error) {
    fail(error);
  }
}

const editorCallbacks = {
  onRename: (clusterId: number, name: string) => {
    state.edits.labels[String(clusterId)] = name;
  },
  onReassign: (word: string, clusterId: number) => {
    state.edits.reassignments[word] = clusterId;
    redraw();
  },
  onExport: () => {
    if (!state.payload) return;
    const doc = exportAnnotated(state.payload, state.edits);
    const blob = new Blob([JSON.stringify(doc, null, 2)], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = `${state.payload.params.target.replace("/", "_")}-annotated.json`;
    link.click();
    URL.revokeObjectURL(link.href);
  },
};

function importAnnotated(file: File): void {
  file
    .text()
    .then((text) => {
      const { payload, edits } = parseAnnotated(JSON.parse(text) as AnnotatedGraph);
      state.payload = payload;
      state.edits = edits;
      lastTimeDiff = null;
      redraw();
    })
    .catch(fail);
}

function wireUp(): void {
  $("build-btn").addEventListener("click", () => void buildGraph());
  $("recluster-btn").addEventListener("click", () => void reclusterGraph());
  for (const mode of ["cluster", "timediff", "slider"] as Mode[]) {
    $(`mode-${mode}`).addEventListener("click", () => {
      state.mode = mode;
      document
        .querySelectorAll(".mode-btn")
        .forEach((b) => b.classList.toggle("active", b.id === `mode-${mode}`));
      void applyMode();
    });
  }
  $<HTMLSelectElement>("reference").addEventListener("change", () => void applyMode());
  $<HTMLSelectElement>("slider").addEventListener("change", () => void applyMode());
  $<HTMLInputElement>("charge").addEventListener("input", (e) => {
    state.view.charge = Number((e.target as HTMLInputElement).value);
    view.setViewParams(state.view.charge, state.view.linkDistance);
  });
  $<HTMLInputElement>("link-distance").addEventListener("input", (e) => {
    state.view.linkDistance = Number((e.target as HTMLInputElement).value);
    view.setViewParams(state.view.charge, state.view.linkDistance);
  });
  $<HTMLInputElement>("import-file").addEventListener("change", (e) => {
    const file = (e.target as HTMLInputElement).files?.[0];
    if (file) importAnnotated(file);
  });
  loadCorpora().catch(fail);
}

wireUp();
