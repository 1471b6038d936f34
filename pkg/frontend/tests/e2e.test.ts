/**
 * End-to-end: a jsdom-driven board against the real hint service.
 *
 * Spawns the Python service as a subprocess and exercises the full loops
 * the playground exists for: scramble/hint/click-until-solved on a 5x5
 * grid, and step-through of the constructive solution on a 4-path. After
 * every action the rendered DOM must match a fresh GET of the session.
 */

import { type ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { Board } from "../src/board.js";

const PORT = 8765;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let client: ApiClient;

async function waitForServer(timeoutMs = 45_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/openapi.json`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((res) => setTimeout(res, 200));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  const bootstrap = [
    "from toggled.service import create_app",
    "import uvicorn",
    `uvicorn.run(create_app(), host="127.0.0.1", port=${PORT}, log_level="warning")`,
  ].join("\n");
  server = spawn("python3", ["-c", bootstrap], { stdio: "ignore" });
  client = new ApiClient(BASE);
  await waitForServer();
});

afterAll(() => {
  server?.kill();
});

function host(): HTMLElement {
  const el = document.createElement("div");
  document.body.appendChild(el);
  return el;
}

async function expectDomMatchesService(board: Board): Promise<void> {
  const live = await client.getSession(board.session.id);
  expect(board.domBits()).toBe(live.current);
  expect(board.session.current).toBe(live.current);
  expect(board.shownSolved).toBe(live.solved);
}

describe("playground against the live service", () => {
  it("scrambles a 5x5 grid and follows hints to the goal", async () => {
    const board = await Board.create(
      host(),
      client,
      { graph: { kind: "grid", params: [5, 5] } },
      { kind: "grid", rows: 5, cols: 5 },
    );
    expect(board.domBits()).toBe("0".repeat(25));
    await expectDomMatchesService(board);

    await board.scramble(9, 4242);
    await expectDomMatchesService(board);
    expect(board.session.solved).toBe(false);

    let clicks = 0;
    while (!board.session.solved && clicks < 40) {
      const hint = await board.requestHint();
      expect(hint).not.toBeNull();
      if (!hint || hint.status !== "ok") throw new Error(`unexpected hint ${JSON.stringify(hint)}`);
      expect(board.vertexElement(hint.vertex).classList.contains("hint")).toBe(true);
      await board.clickVertex(hint.vertex);
      clicks += 1;
      await expectDomMatchesService(board);
    }
    expect(board.session.solved).toBe(true);
    expect(board.shownSolved).toBe(true);
    expect(clicks).toBeGreaterThan(0);

    const done = await board.requestHint();
    expect(done).toEqual({ status: "already solved" });
  });

  it("steps through the constructive solution on a 4-path in exactly 2 steps", async () => {
    const boardHost = host();
    const board = await Board.create(
      boardHost,
      client,
      { graph: { kind: "path", params: [4] } },
      { kind: "force" },
    );
    const before = board.session.current;
    await expectDomMatchesService(board);

    const solution = await board.showSolution("inductive");
    expect(solution).not.toBeNull();
    if (!solution || solution.status !== "ok") throw new Error("inductive solve failed");
    expect(solution.indices).toEqual([0, 3]);
    expect(board.overlayRemaining).toBe(2);
    expect(board.vertexElement(0).classList.contains("mark")).toBe(true);
    expect(board.vertexElement(3).classList.contains("mark")).toBe(true);

    const outline = boardHost.querySelector(".proof-outline") as HTMLElement;
    expect(outline.hidden).toBe(false);
    expect(outline.textContent).toContain("toggle pair (0, 3)");
    expect(outline.textContent).toContain("press every vertex once");

    let steps = 0;
    while (await board.step()) {
      steps += 1;
      await expectDomMatchesService(board);
    }
    expect(steps).toBe(2);
    expect(board.session.solved).toBe(true);
    expect(board.shownSolved).toBe(true);
    // the board now shows the complement of the pre-overlay state
    const complemented = before
      .split("")
      .map((b) => (b === "1" ? "0" : "1"))
      .join("");
    expect(board.domBits()).toBe(complemented);
  });

  it("marks an unsolvable custom goal distinctly", async () => {
    const board = await Board.create(
      host(),
      client,
      { graph: { n: 2, edges: [[0, 1]] }, initial: "00", goal: "01" },
      { kind: "force" },
    );
    const hint = await board.requestHint();
    expect(hint).toEqual({ status: "unsolvable" });
    const badge = board["badgeEl" as keyof Board] as unknown as HTMLElement;
    expect(badge.hidden).toBe(false);
  });

  it("keeps rapid clicks ordered against the live service", async () => {
    const board = await Board.create(
      host(),
      client,
      { graph: { kind: "cycle", params: [5] } },
      { kind: "circle" },
    );
    const all = Promise.all([
      board.clickVertex(0),
      board.clickVertex(1),
      board.clickVertex(0),
    ]);
    await all;
    await expectDomMatchesService(board);
    const live = await client.getSession(board.session.id);
    expect(live.moves).toBe(3);
  });
});
