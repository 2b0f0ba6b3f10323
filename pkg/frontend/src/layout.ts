// Circular board geometry: vertices evenly spaced on a circle, edges as
// straight chords, so the drawn K5's cycle/chord structure is visible.

export interface Point {
  x: number;
  y: number;
}

export function vertexPositions(
  n: number,
  cx: number,
  cy: number,
  radius: number,
): Point[] {
  const out: Point[] = [];
  for (let v = 0; v < n; v++) {
    // vertex 0 at the top, clockwise
    const angle = -Math.PI / 2 + (2 * Math.PI * v) / n;
    out.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  return out;
}

export function allEdges(n: number): [number, number][] {
  const out: [number, number][] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) out.push([i, j]);
  }
  return out;
}

export function midpoint(a: Point, b: Point): Point {
  return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
}
