import { mulberry32 } from "./rng.js";
import type { Edge } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export type LayoutKind = "grid" | "circle" | "force";

/** Grid graphs get a grid, cycles and completes a circle, everything else springs. */
export function layoutKindFor(generator: string | null): LayoutKind {
  if (generator === "grid") return "grid";
  if (generator === "cycle" || generator === "complete") return "circle";
  return "force";
}

export interface LayoutRequest {
  kind: LayoutKind;
  n: number;
  edges: Edge[];
  seed: number;
  rows?: number;
  cols?: number;
}

/** Per-vertex positions in the unit square; deterministic for a fixed request. */
export function computeLayout(req: LayoutRequest): Point[] {
  if (req.n === 0) return [];
  if (req.kind === "grid" && req.rows && req.cols && req.rows * req.cols === req.n) {
    return gridLayout(req.rows, req.cols);
  }
  if (req.kind === "circle") {
    return circleLayout(req.n);
  }
  return forceLayout(req.n, req.edges, req.seed);
}

function gridLayout(rows: number, cols: number): Point[] {
  const points: Point[] = [];
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      points.push({
        x: cols === 1 ? 0.5 : c / (cols - 1),
        y: rows === 1 ? 0.5 : r / (rows - 1),
      });
    }
  }
  return points;
}

function circleLayout(n: number): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    points.push({ x: 0.5 + 0.45 * Math.cos(angle), y: 0.5 + 0.45 * Math.sin(angle) });
  }
  return points;
}

function forceLayout(n: number, edges: Edge[], seed: number): Point[] {
  const rand = mulberry32(seed);
  const xs = new Array<number>(n);
  const ys = new Array<number>(n);
  for (let i = 0; i < n; i++) {
    xs[i] = rand();
    ys[i] = rand();
  }
  if (n === 1) return [{ x: 0.5, y: 0.5 }];

  const ideal = 1 / Math.sqrt(n);
  const iterations = 120;
  for (let iter = 0; iter < iterations; iter++) {
    const temp = 0.1 * (1 - iter / iterations) + 0.005;
    const dx = new Array<number>(n).fill(0);
    const dy = new Array<number>(n).fill(0);
    // pairwise repulsion
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = xs[i]! - xs[j]!;
        let vy = ys[i]! - ys[j]!;
        let dist2 = vx * vx + vy * vy;
        if (dist2 < 1e-8) {
          // split coincident points deterministically
          vx = 1e-4 * (1 + i - j);
          vy = 1e-4;
          dist2 = vx * vx + vy * vy;
        }
        const push = (ideal * ideal) / dist2;
        dx[i] = dx[i]! + vx * push;
        dy[i] = dy[i]! + vy * push;
        dx[j] = dx[j]! - vx * push;
        dy[j] = dy[j]! - vy * push;
      }
    }
    // spring attraction along edges
    for (const [a, b] of edges) {
      const vx = xs[a]! - xs[b]!;
      const vy = ys[a]! - ys[b]!;
      const dist = Math.sqrt(vx * vx + vy * vy) + 1e-9;
      const pull = dist / ideal;
      dx[a] = dx[a]! - (vx / dist) * pull * 0.05;
      dy[a] = dy[a]! - (vy / dist) * pull * 0.05;
      dx[b] = dx[b]! + (vx / dist) * pull * 0.05;
      dy[b] = dy[b]! + (vy / dist) * pull * 0.05;
    }
    for (let i = 0; i < n; i++) {
      const len = Math.sqrt(dx[i]! * dx[i]! + dy[i]! * dy[i]!) + 1e-9;
      const cap = Math.min(len, temp);
      xs[i] = xs[i]! + (dx[i]! / len) * cap;
      ys[i] = ys[i]! + (dy[i]! / len) * cap;
    }
  }

  // normalize into the unit square
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    points.push({ x: (xs[i]! - minX) / spanX, y: (ys[i]! - minY) / spanY });
  }
  return points;
}
