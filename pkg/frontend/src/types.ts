/** Payload shapes of the hint-service JSON API. */

export type Edge = [number, number];

export interface SessionSummary {
  id: string;
  n: number;
  edges: Edge[];
  current: string;
  goal: string;
  moves: number;
  solved: boolean;
  solvable: boolean;
}

export interface PressState {
  current: string;
  moves: number;
  solved: boolean;
}

export interface HintOk {
  status: "ok";
  vertex: number;
  remaining: number;
}

export interface HintDone {
  status: "already solved";
}

export interface HintUnsolvable {
  status: "unsolvable";
}

export type HintResponse = HintOk | HintDone | HintUnsolvable;

export interface TraceEvent {
  event: string;
  vertices?: number[];
  vertex?: number;
  a?: number;
  b?: number;
}

export interface SolutionOk {
  status: "ok";
  method: string;
  press_set: string;
  indices: number[];
  weight: number;
  trace?: TraceEvent[];
}

export interface SolutionUnsolvable {
  status: "unsolvable";
  method: string;
}

export type SolutionResponse = SolutionOk | SolutionUnsolvable;

export type GraphSpec =
  | { kind: string; params?: number[]; seed?: number }
  | { n: number; edges: Edge[] }
  | { text: string };

export interface CreateSessionBody {
  graph: GraphSpec;
  initial?: string;
  goal?: string;
  seed?: number;
}

export type SolveMethod = "gf2" | "inductive";
