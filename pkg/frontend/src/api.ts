/** Typed client for the documented GET endpoints; nothing else is ever called. */

export type Measure = "pmi" | "lr";

export interface SearchResult {
  doc_id: string;
  title: string;
  score: number;
  snippet: string;
}

export interface GraphNodeDto {
  term: string;
  seed: boolean;
}

export interface GraphEdgeDto {
  from: string;
  to: string;
  measure: string;
  score: number;
}

export interface GraphDto {
  nodes: GraphNodeDto[];
  edges: GraphEdgeDto[];
}

export interface KeyphraseDto {
  terms: string[];
  score: number;
  spans: [number, number][];
}

export interface DocumentDto {
  doc_id: string;
  title: string;
  text: string;
  keyphrases: KeyphraseDto[];
  highlights: [number, number][];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url, { method: "GET" });
  if (!response.ok) {
    let message = `request failed with status ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      /* non-json error body; keep the generic message */
    }
    throw new ApiError(response.status, message);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  private readonly base: string;

  constructor(base: string) {
    this.base = base.replace(/\/+$/, "");
  }

  private url(path: string, params: [string, string][]): string {
    const query = new URLSearchParams(params).toString();
    return `${this.base}${path}${query ? `?${query}` : ""}`;
  }

  search(q: string, limit = 10): Promise<{ results: SearchResult[] }> {
    return getJson(this.url("/api/search", [["q", q], ["limit", String(limit)]]));
  }

  graph(terms: string[], measure: Measure, k = 7, depth = 1): Promise<GraphDto> {
    const params: [string, string][] = terms.map((t) => ["term", t] as [string, string]);
    params.push(["measure", measure], ["k", String(k)], ["depth", String(depth)]);
    return getJson(this.url("/api/graph", params));
  }

  document(docId: string): Promise<DocumentDto> {
    return getJson(this.url(`/api/documents/${encodeURIComponent(docId)}`, []));
  }

  suggest(prefix: string, limit = 10): Promise<{ terms: string[] }> {
    return getJson(this.url("/api/suggest", [["prefix", prefix], ["limit", String(limit)]]));
  }

  health(): Promise<{ status: string; docs: number }> {
    return getJson(this.url("/api/health", []));
  }
}
