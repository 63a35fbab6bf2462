// Thin client for the engine's REST API. Graph builds are cancellable: a new
// request aborts the previous in-flight one.

import type {
  CorpusInfo,
  FeatureRanking,
  GraphPayload,
  GraphRequest,
  IntervalInfo,
  SentenceRecord,
  TimeDiffReport,
} from "./types";

export class ApiError extends Error {
  code: string;

  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

async function readError(response: Response): Promise<ApiError> {
  try {
    const body = await response.json();
    return new ApiError(body.code ?? String(response.status), body.message ?? response.statusText);
  } catch {
    return new ApiError(String(response.status), response.statusText);
  }
}

export class ApiClient {
  private base: string;
  private inflight: AbortController | null = null;

  constructor(base = "") {
    this.base = base;
  }

  private async getJson<T>(path: string, params?: Record<string, string>): Promise<T> {
    const query = params ? `?${new URLSearchParams(params)}` : "";
    const response = await fetch(`${this.base}${path}${query}`);
    if (!response.ok) throw await readError(response);
    return response.json();
  }

  private async postJson<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const response = await fetch(`${this.base}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!response.ok) throw await readError(response);
    return response.json();
  }

  corpora(): Promise<CorpusInfo[]> {
    return this.getJson("/api/corpora");
  }

  intervals(corpusId: string): Promise<IntervalInfo[]> {
    return this.getJson(`/api/corpora/${encodeURIComponent(corpusId)}/intervals`);
  }

  private cancellable(): AbortSignal {
    this.inflight?.abort();
    this.inflight = new AbortController();
    return this.inflight.signal;
  }

  buildGraph(request: GraphRequest): Promise<GraphPayload> {
    return this.postJson("/api/graph", request, this.cancellable());
  }

  recluster(request: GraphRequest): Promise<GraphPayload> {
    return this.postJson("/api/graph/recluster", request, this.cancellable());
  }

  timeDiff(request: GraphRequest, reference: number): Promise<TimeDiffReport> {
    return this.postJson("/api/timediff", { ...request, reference_interval: reference });
  }

  features(
    corpus: string,
    words: string[],
    scope: string,
    interval?: number | null,
    limit = 25
  ): Promise<FeatureRanking> {
    const params: Record<string, string> = {
      corpus,
      words: words.join(","),
      scope,
      limit: String(limit),
    };
    if (interval !== null && interval !== undefined) params.interval = String(interval);
    return this.getJson("/api/features", params);
  }

  sentences(
    corpus: string,
    word: string,
    feature?: string,
    interval?: number | null,
    limit = 10
  ): Promise<SentenceRecord[]> {
    const params: Record<string, string> = { corpus, word, limit: String(limit) };
    if (feature) params.feature = feature;
    if (interval !== null && interval !== undefined) params.interval = String(interval);
    return this.getJson("/api/sentences", params);
  }
}
