// Bootstrap: wire the view model, board view, and control strip.

import { ApiClient } from "./api.js";
import { BoardViewModel, type EngineSide } from "./model.js";
import { BoardView } from "./view.js";
import type { PresetEntry } from "./types.js";

function presetLabel(p: PresetEntry): string {
  const params = Object.entries(p.params)
    .map(([k, v]) => `${k}=${v}`)
    .join(", ");
  return `${p.name}(${params})`;
}

async function start(): Promise<void> {
  const api = new ApiClient("");
  const model = new BoardViewModel(api);

  const boardRoot = document.getElementById("board")!;
  const banner = document.getElementById("banner")!;
  const toMove = document.getElementById("to-move")!;
  const toast = document.getElementById("toast")!;
  const presetSelect = document.getElementById("preset") as HTMLSelectElement;
  const engineSelect = document.getElementById("engine") as HTMLSelectElement;
  const undoButton = document.getElementById("undo") as HTMLButtonElement;
  const emptySize = document.getElementById("empty-n") as HTMLSelectElement;
  const emptyButton = document.getElementById("load-empty") as HTMLButtonElement;

  const view = new BoardView(boardRoot, model);

  model.onChange = () => {
    view.render();
    banner.textContent = model.gameOver
      ? model.status.state === "draw"
        ? "Draw"
        : `${model.status.loser} completed a triangle and loses`
      : model.banner
        ? `exact value: ${model.banner}`
        : "evaluating…";
    banner.className = model.banner ? `banner banner-${model.banner}` : "banner";
    toMove.textContent = model.gameOver ? "game over" : `${model.toMove} to move`;
    toast.textContent = model.lastError ?? "";
    toast.classList.toggle("visible", model.lastError !== null);
    undoButton.disabled = !model.canUndo;
  };

  let presets: PresetEntry[] = [];
  try {
    presets = await api.getPresets();
  } catch (err) {
    toast.textContent = `service unreachable: ${err instanceof Error ? err.message : err}`;
    toast.classList.add("visible");
    return;
  }
  for (const [idx, p] of presets.entries()) {
    const option = document.createElement("option");
    option.value = String(idx);
    option.textContent = presetLabel(p);
    presetSelect.appendChild(option);
  }

  presetSelect.addEventListener("change", () => {
    const preset = presets[Number(presetSelect.value)];
    if (preset) void model.loadPreset(preset).then(() => model.maybeEngineMove());
  });
  engineSelect.addEventListener("change", () => {
    void model.toggleEngine(engineSelect.value as EngineSide);
  });
  undoButton.addEventListener("click", () => {
    model.undo();
    void model.refreshEvaluation();
  });
  emptyButton.addEventListener("click", () => {
    const n = Number(emptySize.value);
    void model
      .loadPosition({ n, green: [], red: [] })
      .then(() => model.maybeEngineMove());
  });

  await model.loadPreset(presets[0]!);
}

void start();
