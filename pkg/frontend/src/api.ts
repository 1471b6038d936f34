import type {
  CreateSessionBody,
  HintResponse,
  PressState,
  SessionSummary,
  SolutionResponse,
  SolveMethod,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** What the board needs from a client; ApiClient is the real one. */
export interface HintServiceClient {
  createSession(body: CreateSessionBody): Promise<SessionSummary>;
  getSession(id: string): Promise<SessionSummary>;
  press(id: string, v: number): Promise<PressState>;
  hint(id: string): Promise<HintResponse>;
  solution(id: string, method: SolveMethod): Promise<SolutionResponse>;
  scramble(id: string, k: number, seed?: number): Promise<PressState>;
  reset(id: string): Promise<PressState>;
}

/** Thin typed client for the hint service. */
export class ApiClient implements HintServiceClient {
  readonly baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let resp: Response;
    try {
      resp = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `cannot reach ${this.baseUrl}: ${String(err)}`);
    }
    if (!resp.ok) {
      let message = `${resp.status} ${resp.statusText}`;
      try {
        const body = (await resp.json()) as { error?: string };
        if (body && typeof body.error === "string") message = body.error;
      } catch {
        // keep the status-line message
      }
      throw new ApiError(resp.status, message);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createSession(body: CreateSessionBody): Promise<SessionSummary> {
    return this.post("/sessions", body);
  }

  getSession(id: string): Promise<SessionSummary> {
    return this.request(`/sessions/${id}`);
  }

  press(id: string, v: number): Promise<PressState> {
    return this.post(`/sessions/${id}/press`, { v });
  }

  hint(id: string): Promise<HintResponse> {
    return this.request(`/sessions/${id}/hint`);
  }

  solution(id: string, method: SolveMethod): Promise<SolutionResponse> {
    return this.request(`/sessions/${id}/solution?method=${method}`);
  }

  scramble(id: string, k: number, seed?: number): Promise<PressState> {
    const body: { k: number; seed?: number } = { k };
    if (seed !== undefined) body.seed = seed;
    return this.post(`/sessions/${id}/scramble`, body);
  }

  reset(id: string): Promise<PressState> {
    return this.post(`/sessions/${id}/reset`, {});
  }
}
