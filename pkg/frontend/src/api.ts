/**
 * Typed client for the compute API. The UI never derives weights, scores
 * or fit results itself; every displayed number round-trips through these
 * endpoints.
 */

export interface AhpResponse {
  labels: string[];
  weights: number[];
  lambda_max: number;
  ci: number;
  ri: number;
  cr: number;
  consistent: boolean;
}

export interface RankedRow {
  entity: string;
  score: number;
  proportion: number;
  rank: number;
}

export interface AllocateResponse {
  method: string;
  weights?: AhpResponse;
  ranking: RankedRow[];
}

export interface ForecastResponse {
  model: string;
  series: { periods: string[]; values: number[] };
  params: Record<string, number>;
  fitted: number[];
  forecast: number[];
  accuracy?: { q: number; c: number; p: number; grade: string };
  quality?: { r2: number; rss: number; converged: boolean };
  saturation: { time: number; value: number } | null;
}

export interface IndicatorsBody {
  entities: string[];
  criteria: string[];
  values: number[][];
}

export class ApiFailure extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export async function postJson<T>(
  url: string,
  body: unknown,
  fetchImpl: FetchLike = fetch,
): Promise<T> {
  const resp = await fetchImpl(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const text = await resp.text();
  if (!resp.ok) {
    let code = `HTTP ${resp.status}`;
    let message = text;
    try {
      const parsed = JSON.parse(text);
      if (parsed.error) {
        code = parsed.error.code;
        message = parsed.error.message;
      } else if (parsed.detail) {
        message = typeof parsed.detail === "string" ? parsed.detail : JSON.stringify(parsed.detail);
      }
    } catch {
      /* non-JSON error body: keep raw text */
    }
    throw new ApiFailure(resp.status, code, message);
  }
  return JSON.parse(text) as T;
}

/**
 * Last-write-wins gate: each keyed request gets a sequence number and a
 * stale response resolves to null instead of clobbering newer renders.
 */
export class LatestOnly {
  private seq = new Map<string, number>();

  async run<T>(key: string, work: () => Promise<T>): Promise<T | null> {
    const ticket = (this.seq.get(key) ?? 0) + 1;
    this.seq.set(key, ticket);
    const result = await work();
    return this.seq.get(key) === ticket ? result : null;
  }
}
