/** Backend boundary. The HTTP implementation talks to the service; the
 * demo implementation resolves everything from the static bundle. */

import {
  ChallengeRequest,
  ChallengeResponse,
  DemoBundleData,
  SessionLogData,
  UnlockRequest,
  UnlockResult,
} from "./types.js";

export interface Backend {
  challenge(req: ChallengeRequest): Promise<ChallengeResponse>;
  unlock(req: UnlockRequest): Promise<UnlockResult>;
  exportSession(log: SessionLogData): Promise<string>;
  demoBundle(): Promise<DemoBundleData>;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorCode: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export function describeError(error: unknown): string {
  if (error instanceof ApiError) return `${error.errorCode}: ${error.message}`;
  if (error instanceof Error) return error.message;
  return String(error);
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class HttpBackend implements Backend {
  constructor(
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
    private getApiKey: () => string | null = () => null,
    private baseUrl = "",
  ) {}

  private withKey<T extends { api_key?: string }>(body: T): T {
    const key = this.getApiKey();
    return key ? { ...body, api_key: key } : body;
  }

  private async postJson(path: string, body: unknown): Promise<Response> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let code = `HTTP ${resp.status}`;
      let message = "request failed";
      try {
        const payload = await resp.json();
        code = payload.error_code ?? code;
        message = payload.message ?? message;
      } catch {
        // body was not JSON; keep the status text
      }
      throw new ApiError(resp.status, code, message);
    }
    return resp;
  }

  async challenge(req: ChallengeRequest): Promise<ChallengeResponse> {
    const resp = await this.postJson("/challenge", this.withKey(req));
    return resp.json();
  }

  async unlock(req: UnlockRequest): Promise<UnlockResult> {
    const resp = await this.postJson("/unlock", this.withKey(req));
    return resp.json();
  }

  async exportSession(log: SessionLogData): Promise<string> {
    const resp = await this.postJson("/export", log);
    return resp.text();
  }

  async demoBundle(): Promise<DemoBundleData> {
    const resp = await this.fetchFn(this.baseUrl + "/demo/bundle", { method: "GET" });
    if (!resp.ok) throw new ApiError(resp.status, `HTTP ${resp.status}`, "demo bundle unavailable");
    return resp.json();
  }
}

/** Resolves the whole loop from the pre-baked bundle: zero model calls.
 * Export still delegates to the service when one is reachable. */
export class DemoBackend implements Backend {
  constructor(
    private bundle: DemoBundleData,
    private exportVia: Backend | null = null,
  ) {}

  async challenge(req: ChallengeRequest): Promise<ChallengeResponse> {
    const persona = req.persona ?? "reviewer2";
    if (!req.essay.trim()) throw new ApiError(400, "EmptyEssay", "essay is required");
    const feedback = this.bundle.feedback[persona];
    if (!feedback) throw new ApiError(400, "UnknownPersona", `no demo feedback for ${persona}`);
    return feedback;
  }

  async unlock(req: UnlockRequest): Promise<UnlockResult> {
    if (!req.user_defense.trim()) {
      throw new ApiError(400, "EmptyDefense", "a written defense is required");
    }
    const result = this.bundle.unlocks[req.label];
    if (!result) throw new ApiError(400, "UnknownLabel", `no demo unlock for ${req.label}`);
    return result;
  }

  async exportSession(log: SessionLogData): Promise<string> {
    if (this.exportVia) return this.exportVia.exportSession(log);
    throw new ApiError(503, "ExportUnavailable", "demo export needs the service");
  }

  async demoBundle(): Promise<DemoBundleData> {
    return this.bundle;
  }
}
