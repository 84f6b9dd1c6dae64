// Typed client for the four endpoints. Requests on the same channel are
// latest-wins: firing a new one aborts the in-flight predecessor.

import type {
  AggregateRow,
  ApiErrorBody,
  ComparisonPayload,
  MetaPayload,
  TweetPage,
} from "./types.js";

export class ApiError extends Error {
  readonly body: ApiErrorBody;

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.body = body;
  }
}

export class RequestSuperseded extends Error {
  constructor() {
    super("request superseded by a newer one");
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly inflight = new Map<string, AbortController>();

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  url(path: string, params: Record<string, string> = {}): string {
    const search = new URLSearchParams(params).toString();
    return `${this.baseUrl}${path}${search ? `?${search}` : ""}`;
  }

  private async get<T>(
    path: string,
    params: Record<string, string>,
    channel?: string,
  ): Promise<T> {
    let signal: AbortSignal | undefined;
    let controller: AbortController | undefined;
    if (channel !== undefined) {
      this.inflight.get(channel)?.abort();
      controller = new AbortController();
      this.inflight.set(channel, controller);
      signal = controller.signal;
    }
    let response: Response;
    try {
      response = await this.fetchFn(this.url(path, params), { signal });
    } catch (err) {
      if (controller?.signal.aborted) throw new RequestSuperseded();
      throw err;
    }
    if (controller && this.inflight.get(channel!) !== controller) {
      throw new RequestSuperseded();
    }
    if (!response.ok) {
      throw new ApiError((await response.json()) as ApiErrorBody);
    }
    return (await response.json()) as T;
  }

  meta(): Promise<MetaPayload> {
    return this.get<MetaPayload>("/api/meta", {});
  }

  aggregate(params: Record<string, string>): Promise<AggregateRow[]> {
    return this.get<AggregateRow[]>("/api/aggregate", params, "aggregate");
  }

  compare(params: Record<string, string>): Promise<ComparisonPayload> {
    return this.get<ComparisonPayload>("/api/compare", params, "compare");
  }

  tweets(params: Record<string, string>): Promise<TweetPage> {
    return this.get<TweetPage>("/api/tweets", params, "tweets");
  }
}
