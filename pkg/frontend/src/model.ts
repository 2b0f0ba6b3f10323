// Board view model. Holds exactly what the view renders: the served
// position, per-edge verdict badges from the last successful evaluation,
// the game status, a history stack for undo, and the engine-side toggle.
// It never computes game values itself; every verdict comes from the
// service.

import { ApiError, type EngineApi } from "./api.js";
import {
  edgeKey,
  winnerOf,
  type Edge,
  type PlayerColor,
  type PositionDoc,
  type PresetEntry,
  type StatusDoc,
  type Value,
} from "./types.js";

export type EngineSide = PlayerColor | "off";

export type EdgeState = "uncolored" | "green" | "red";

export interface HistoryEntry {
  position: PositionDoc;
  status: StatusDoc;
}

function clonePosition(doc: PositionDoc): PositionDoc {
  return {
    n: doc.n,
    green: doc.green.map(([i, j]) => [i, j] as Edge),
    red: doc.red.map(([i, j]) => [i, j] as Edge),
  };
}

export class BoardViewModel {
  position: PositionDoc = { n: 6, green: [], red: [] };
  status: StatusDoc = { state: "live", loser: null };
  toMove: PlayerColor = "green";
  banner: Value | null = null;
  badges: Map<string, Value> = new Map();
  engineSide: EngineSide = "off";
  history: HistoryEntry[] = [];
  pending = false;
  lastError: string | null = null;
  lastEngineMove: Edge | null = null;
  onChange: () => void = () => {};

  constructor(private readonly api: EngineApi) {}

  get n(): number {
    return this.position.n;
  }

  edgeState(i: number, j: number): EdgeState {
    const key = edgeKey(i, j);
    if (this.position.green.some(([a, b]) => edgeKey(a, b) === key)) return "green";
    if (this.position.red.some(([a, b]) => edgeKey(a, b) === key)) return "red";
    return "uncolored";
  }

  badgeFor(i: number, j: number): Value | null {
    return this.badges.get(edgeKey(i, j)) ?? null;
  }

  get gameOver(): boolean {
    return this.status.state !== "live";
  }

  get canUndo(): boolean {
    return this.history.length > 0 && !this.pending;
  }

  async loadPreset(preset: PresetEntry): Promise<void> {
    await this.loadPosition(preset.position);
  }

  async loadPosition(doc: PositionDoc): Promise<void> {
    this.position = clonePosition(doc);
    this.history = [];
    this.badges = new Map();
    this.banner = null;
    this.status = { state: "live", loser: null };
    this.lastEngineMove = null;
    this.lastError = null;
    this.onChange();
    await this.refreshEvaluation();
  }

  /** Fetch banner value and per-edge badges for the current position. */
  async refreshEvaluation(): Promise<void> {
    try {
      const evaluation = await this.api.evaluate(this.position);
      this.banner = evaluation.value;
      this.toMove = evaluation.to_move;
      this.status = evaluation.status;
      this.badges = new Map(
        evaluation.moves.map((m) => [edgeKey(m.edge[0], m.edge[1]), m.value]),
      );
      this.lastError = null;
    } catch (err) {
      this.banner = null;
      this.badges = new Map();
      this.lastError = err instanceof Error ? err.message : String(err);
    }
    this.onChange();
  }

  /**
   * Human click on an edge. Ignored (with a visible cue via lastError)
   * when a request is already in flight, the game is over, the edge is
   * colored, or it is the engine's turn.
   */
  async clickEdge(i: number, j: number): Promise<void> {
    if (this.pending) return; // single in-flight mutation: ignore
    if (this.gameOver) {
      this.lastError = "game over";
      this.onChange();
      return;
    }
    if (this.edgeState(i, j) !== "uncolored") {
      this.lastError = "edge already colored";
      this.onChange();
      return;
    }
    if (this.engineSide === this.toMove) {
      this.lastError = "engine to move";
      this.onChange();
      return;
    }
    const opponentIsEngine = this.engineSide !== "off";
    await this.applyMove([i, j] as Edge, opponentIsEngine);
  }

  /** When the engine side is to move on a live board, play its reply. */
  async maybeEngineMove(): Promise<void> {
    if (this.pending || this.gameOver || this.engineSide !== this.toMove) return;
    const evaluation = await this.api.evaluate(this.position);
    const mover = evaluation.to_move;
    const rank = (v: Value): number => {
      const w = winnerOf(v);
      if (w === mover) return 2;
      if (w === null) return 1;
      return 0;
    };
    // deterministic: best achievable value, lowest edge first (the
    // service lists moves in ascending edge order)
    let choice: Edge | null = null;
    let best = -1;
    for (const { edge, value } of evaluation.moves) {
      if (rank(value) > best) {
        best = rank(value);
        choice = edge;
      }
    }
    if (choice !== null) {
      await this.applyMove(choice, false);
    }
  }

  async toggleEngine(side: EngineSide): Promise<void> {
    this.engineSide = side;
    this.onChange();
    await this.maybeEngineMove();
  }

  undo(): void {
    const entry = this.history.pop();
    if (!entry) return;
    this.position = entry.position;
    this.status = entry.status;
    this.badges = new Map();
    this.banner = null;
    this.lastEngineMove = null;
    this.onChange();
  }

  private async applyMove(edge: Edge, engineReplies: boolean): Promise<void> {
    this.pending = true;
    this.lastError = null;
    this.onChange();
    const before: HistoryEntry = {
      position: clonePosition(this.position),
      status: this.status,
    };
    try {
      const result = await this.api.move(this.position, edge, engineReplies);
      this.history.push(before);
      this.position = result.position;
      this.status = result.status;
      this.lastEngineMove = result.engine_move;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.lastError = "move rejected: occupied edge or finished game";
      } else {
        this.lastError = err instanceof Error ? err.message : String(err);
      }
      this.pending = false;
      this.onChange();
      return;
    }
    this.pending = false;
    if (this.status.state === "live") {
      await this.refreshEvaluation();
    } else {
      // terminal: the banner reports the served outcome, no values needed
      this.badges = new Map();
      this.banner =
        this.status.state === "draw"
          ? "Draw"
          : this.status.loser === "green"
            ? "RedWins"
            : "GreenWins";
      this.onChange();
    }
  }
}
