import type { Queue, Report, VerdictInfo } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number | null = null,
  ) {
    super(message);
  }
}

async function asJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = `HTTP ${resp.status}`;
    try {
      const body = await resp.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* body not JSON */
    }
    throw new ApiError(detail, resp.status);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    private readonly base = "",
  ) {}

  async report(): Promise<Report> {
    return asJson<Report>(await this.call("/api/report"));
  }

  async queue(tau: number): Promise<Queue> {
    return asJson<Queue>(await this.call(`/api/queue?tau=${encodeURIComponent(tau)}`));
  }

  async review(req: string, stmt: string, decision: "accept" | "reject", reviewer: string): Promise<{ ok: boolean; verdict: string }> {
    return asJson(
      await this.call("/api/review", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ req, stmt, decision, reviewer }),
      }),
    );
  }

  async verdict(): Promise<VerdictInfo> {
    return asJson<VerdictInfo>(await this.call("/api/verdict"));
  }

  private async call(path: string, init?: RequestInit): Promise<Response> {
    try {
      return await this.fetchFn(this.base + path, init);
    } catch (err) {
      throw new ApiError(err instanceof Error ? err.message : "network failure");
    }
  }
}
