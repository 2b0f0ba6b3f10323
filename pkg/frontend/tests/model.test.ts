import { describe, expect, it } from "vitest";

import { ApiError, type EngineApi } from "../src/api.js";
import { BoardViewModel } from "../src/model.js";
import type {
  Edge,
  EvaluateResponse,
  MoveResponse,
  PositionDoc,
  PresetEntry,
} from "../src/types.js";

const THM2_6: PositionDoc = {
  n: 6,
  green: [
    [0, 1],
    [0, 4],
    [1, 2],
    [2, 3],
    [3, 4],
  ],
  red: [
    [0, 3],
    [1, 3],
    [1, 4],
    [2, 4],
  ],
};

const THM2_EVAL: EvaluateResponse = {
  value: "RedWins",
  to_move: "red",
  status: { state: "live", loser: null },
  moves: [
    { edge: [0, 2], value: "RedWins" },
    { edge: [0, 5], value: "RedWins" },
    { edge: [1, 5], value: "RedWins" },
    { edge: [2, 5], value: "RedWins" },
    { edge: [3, 5], value: "RedWins" },
    { edge: [4, 5], value: "RedWins" },
  ],
};

class StubApi implements EngineApi {
  evaluateCalls = 0;
  moveCalls: Edge[] = [];
  evaluateResponse: EvaluateResponse = THM2_EVAL;
  moveResponse: MoveResponse | null = null;
  failEvaluate = false;
  moveError: Error | null = null;
  moveGate: Promise<void> | null = null;

  async getPresets(): Promise<PresetEntry[]> {
    return [{ name: "thm2", params: { n: 6 }, position: THM2_6 }];
  }

  async evaluate(_position: PositionDoc): Promise<EvaluateResponse> {
    this.evaluateCalls += 1;
    if (this.failEvaluate) throw new ApiError(503, "unavailable");
    return structuredClone(this.evaluateResponse);
  }

  async move(
    position: PositionDoc,
    edge: Edge,
    _engineReplies: boolean,
  ): Promise<MoveResponse> {
    if (this.moveGate) await this.moveGate;
    this.moveCalls.push(edge);
    if (this.moveError) throw this.moveError;
    if (this.moveResponse) return structuredClone(this.moveResponse);
    return {
      position: {
        n: position.n,
        green: position.green,
        red: [...position.red, edge],
      },
      status: { state: "live", loser: null },
      engine_move: null,
    };
  }
}

function freshModel(stub = new StubApi()) {
  return { stub, model: new BoardViewModel(stub) };
}

describe("BoardViewModel", () => {
  it("loading a preset shows the served banner value and badges", async () => {
    const { stub, model } = freshModel();
    expect(model.banner).toBeNull();
    await model.loadPosition(THM2_6);
    expect(model.banner).toBe("RedWins");
    expect(model.toMove).toBe("red");
    expect(model.badgeFor(0, 2)).toBe("RedWins");
    expect(stub.evaluateCalls).toBe(1);
  });

  it("shows an error state instead of badges when the service fails", async () => {
    const { stub, model } = freshModel();
    stub.failEvaluate = true;
    await model.loadPosition(THM2_6);
    expect(model.banner).toBeNull();
    expect(model.badges.size).toBe(0);
    expect(model.lastError).not.toBeNull();
  });

  it("ignores clicks on colored edges without calling the service", async () => {
    const { stub, model } = freshModel();
    await model.loadPosition(THM2_6);
    await model.clickEdge(0, 1); // green edge
    expect(stub.moveCalls).toHaveLength(0);
    expect(model.lastError).toContain("colored");
  });

  it("ignores clicks while a mutation is in flight (single in-flight rule)", async () => {
    const { stub, model } = freshModel();
    await model.loadPosition(THM2_6);
    let release!: () => void;
    stub.moveGate = new Promise((resolve) => {
      release = resolve;
    });
    const first = model.clickEdge(0, 2);
    const second = model.clickEdge(0, 5); // returns immediately: pending
    await second;
    release();
    await first;
    expect(stub.moveCalls).toEqual([[0, 2]]);
  });

  it("ignores clicks when it is the engine's turn", async () => {
    const { stub, model } = freshModel();
    await model.loadPosition(THM2_6);
    model.engineSide = "red"; // red to move
    await model.clickEdge(0, 2);
    expect(stub.moveCalls).toHaveLength(0);
    expect(model.lastError).toContain("engine");
  });

  it("keeps the position and surfaces a cue on a 409 rejection", async () => {
    const { stub, model } = freshModel();
    await model.loadPosition(THM2_6);
    stub.moveError = new ApiError(409, "occupied");
    const before = JSON.stringify(model.position);
    await model.clickEdge(0, 2);
    expect(JSON.stringify(model.position)).toBe(before);
    expect(model.lastError).toContain("rejected");
    expect(model.pending).toBe(false);
  });

  it("undo restores the previous position byte-identically", async () => {
    const { model } = freshModel();
    await model.loadPosition(THM2_6);
    const before = JSON.stringify(model.position);
    await model.clickEdge(0, 2);
    expect(JSON.stringify(model.position)).not.toBe(before);
    expect(model.canUndo).toBe(true);
    model.undo();
    expect(JSON.stringify(model.position)).toBe(before);
    expect(model.canUndo).toBe(false);
  });

  it("engine move picks the lowest optimal edge from served values", async () => {
    const { stub, model } = freshModel();
    stub.evaluateResponse = {
      ...THM2_EVAL,
      moves: [
        { edge: [0, 2], value: "GreenWins" },
        { edge: [0, 5], value: "RedWins" },
        { edge: [1, 5], value: "RedWins" },
      ],
    };
    await model.loadPosition(THM2_6);
    model.engineSide = "red";
    await model.maybeEngineMove();
    expect(stub.moveCalls).toEqual([[0, 5]]); // first red-winning edge, not [0, 2]
  });

  it("locks the board and reports the loser when a move finishes the game", async () => {
    const { stub, model } = freshModel();
    await model.loadPosition(THM2_6);
    stub.moveResponse = {
      position: THM2_6,
      status: { state: "finished", loser: "red" },
      engine_move: null,
    };
    await model.clickEdge(0, 2);
    expect(model.gameOver).toBe(true);
    expect(model.banner).toBe("GreenWins");
    await model.clickEdge(0, 5);
    expect(stub.moveCalls).toHaveLength(1); // no move after game over
  });
});
