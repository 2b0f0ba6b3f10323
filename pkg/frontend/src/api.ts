// Thin typed client for the engine service. All game knowledge lives on
// the server; this module only moves JSON.

import type {
  Edge,
  EvaluateResponse,
  MoveResponse,
  PositionDoc,
  PresetEntry,
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

export interface EngineApi {
  getPresets(): Promise<PresetEntry[]>;
  evaluate(position: PositionDoc): Promise<EvaluateResponse>;
  move(position: PositionDoc, edge: Edge, engineReplies: boolean): Promise<MoveResponse>;
}

async function parseOrThrow<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = (await resp.json()) as { detail?: unknown };
      if (body.detail !== undefined) detail = JSON.stringify(body.detail);
    } catch {
      // body was not JSON; keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class ApiClient implements EngineApi {
  constructor(private readonly baseUrl: string = "") {}

  async getPresets(): Promise<PresetEntry[]> {
    return parseOrThrow(await fetch(`${this.baseUrl}/presets`));
  }

  async evaluate(position: PositionDoc): Promise<EvaluateResponse> {
    return parseOrThrow(
      await fetch(`${this.baseUrl}/evaluate`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ position }),
      }),
    );
  }

  async move(
    position: PositionDoc,
    edge: Edge,
    engineReplies: boolean,
  ): Promise<MoveResponse> {
    return parseOrThrow(
      await fetch(`${this.baseUrl}/move`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ position, edge, engine_replies: engineReplies }),
      }),
    );
  }
}
