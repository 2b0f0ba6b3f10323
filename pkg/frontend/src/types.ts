// Wire types shared with the engine service. Position documents are the
// same JSON shape the CLI reads and writes.

export type PlayerColor = "green" | "red";

export type Value = "GreenWins" | "RedWins" | "Draw";

export type Edge = [number, number];

export interface PositionDoc {
  n: number;
  green: Edge[];
  red: Edge[];
  to_move?: PlayerColor;
}

export interface StatusDoc {
  state: "live" | "finished" | "draw";
  loser: PlayerColor | null;
}

export interface MoveValue {
  edge: Edge;
  value: Value;
}

export interface EvaluateResponse {
  value: Value;
  to_move: PlayerColor;
  status: StatusDoc;
  moves: MoveValue[];
}

export interface MoveResponse {
  position: PositionDoc;
  status: StatusDoc;
  engine_move: Edge | null;
}

export interface PresetEntry {
  name: string;
  params: Record<string, number>;
  position: PositionDoc;
}

export function edgeKey(i: number, j: number): string {
  return i < j ? `${i}-${j}` : `${j}-${i}`;
}

export function winnerOf(value: Value): PlayerColor | null {
  if (value === "GreenWins") return "green";
  if (value === "RedWins") return "red";
  return null;
}
