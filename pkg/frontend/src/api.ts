/** Typed client for the /api/v1 endpoints.
 *
 * Distinguishes structured API errors (4xx/5xx with {error, detail}
 * bodies, e.g. validation failures or solver cap refusals) from network
 * failures, so the UI can show inline field errors for the former and a
 * retry banner for the latter.
 */
import type {
  ApiErrorBody, CardWire, InstanceWire, Rational, SolutionWire, SweepWire,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.error}: ${body.detail}`);
  }
}

export class NetworkError extends Error {
  constructor(cause: unknown) {
    super(`request failed: ${cause instanceof Error ? cause.message : String(cause)}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      if (cause instanceof DOMException && cause.name === "AbortError") throw cause;
      throw new NetworkError(cause);
    }
    if (!response.ok) {
      let body: ApiErrorBody;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = { error: `http_${response.status}`, detail: response.statusText };
      }
      throw new ApiError(response.status, body);
    }
    return (await response.json()) as T;
  }

  solve(instance: InstanceWire, signal?: AbortSignal): Promise<SolutionWire> {
    return this.request<SolutionWire>("/api/v1/solve", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ instance }),
      signal,
    });
  }

  sweep(instance: InstanceWire, lambdas: Rational[],
        signal?: AbortSignal): Promise<SweepWire> {
    return this.request<SweepWire>("/api/v1/sweep", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ instance, lambdas }),
      signal,
    });
  }

  async cards(query: string): Promise<CardWire[]> {
    const body = await this.request<{ cards: CardWire[] }>(
      `/api/v1/cards?query=${encodeURIComponent(query)}`);
    return body.cards;
  }

  async health(): Promise<boolean> {
    try {
      const body = await this.request<{ status: string }>("/api/v1/health");
      return body.status === "ok";
    } catch {
      return false;
    }
  }
}
