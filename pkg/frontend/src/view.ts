// SVG rendering of the circular board plus the control strip. Pure
// function of the view model; re-rendered wholesale on every change
// (boards have at most 45 edges, so there is nothing to optimize).

import { allEdges, midpoint, vertexPositions } from "./layout.js";
import type { BoardViewModel } from "./model.js";
import { edgeKey, type Value } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 520;
const RADIUS = 220;

const BADGE_CLASS: Record<Value, string> = {
  GreenWins: "badge-green",
  RedWins: "badge-red",
  Draw: "badge-draw",
};

export class BoardView {
  private svg: SVGSVGElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly model: BoardViewModel,
  ) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    this.svg.classList.add("board");
    this.root.appendChild(this.svg);
  }

  render(): void {
    this.svg.replaceChildren();
    const n = this.model.n;
    const points = vertexPositions(n, SIZE / 2, SIZE / 2, RADIUS);

    for (const [i, j] of allEdges(n)) {
      const a = points[i]!;
      const b = points[j]!;
      const state = this.model.edgeState(i, j);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.classList.add("edge", `edge-${state}`);
      line.dataset.edge = edgeKey(i, j);
      if (state === "uncolored" && !this.model.gameOver) {
        line.classList.add("clickable");
        line.addEventListener("click", () => void this.model.clickEdge(i, j));
      }
      this.svg.appendChild(line);

      const badge = this.model.badgeFor(i, j);
      if (badge && state === "uncolored") {
        const m = midpoint(a, b);
        const dot = document.createElementNS(SVG_NS, "circle");
        dot.setAttribute("cx", String(m.x));
        dot.setAttribute("cy", String(m.y));
        dot.setAttribute("r", "7");
        dot.classList.add("badge", BADGE_CLASS[badge]);
        dot.addEventListener("click", () => void this.model.clickEdge(i, j));
        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = `${badge} after this move`;
        dot.appendChild(title);
        this.svg.appendChild(dot);
      }
    }

    points.forEach((p, v) => {
      const c = document.createElementNS(SVG_NS, "circle");
      c.setAttribute("cx", String(p.x));
      c.setAttribute("cy", String(p.y));
      c.setAttribute("r", "14");
      c.classList.add("vertex");
      this.svg.appendChild(c);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(p.x));
      label.setAttribute("y", String(p.y + 5));
      label.classList.add("vertex-label");
      label.textContent = String(v);
      this.svg.appendChild(label);
    });
  }
}
