import { beforeEach, describe, expect, it } from "vitest";

import type { HintServiceClient } from "../src/api.js";
import { App } from "../src/app.js";
import type {
  CreateSessionBody,
  SessionSummary,
} from "../src/types.js";

class RecordingClient implements HintServiceClient {
  created: CreateSessionBody[] = [];

  private summary(n: number): SessionSummary {
    return {
      id: "rec",
      n,
      edges: [],
      current: "0".repeat(n),
      goal: "1".repeat(n),
      moves: 0,
      solved: false,
      solvable: true,
    };
  }

  async createSession(body: CreateSessionBody): Promise<SessionSummary> {
    this.created.push(body);
    return this.summary(3);
  }

  async getSession(): Promise<SessionSummary> {
    return this.summary(3);
  }

  async press(): Promise<never> {
    throw new Error("unused");
  }

  async hint(): Promise<never> {
    throw new Error("unused");
  }

  async solution(): Promise<never> {
    throw new Error("unused");
  }

  async scramble(): Promise<never> {
    throw new Error("unused");
  }

  async reset(): Promise<never> {
    throw new Error("unused");
  }
}

function makeApp(): { app: App; client: RecordingClient; root: HTMLElement } {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const client = new RecordingClient();
  return { app: new App(root, client), client, root };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("App graph chooser", () => {
  it("offers every generator plus file upload", () => {
    const { root } = makeApp();
    const options = Array.from(root.querySelectorAll("#kind option")).map(
      (o) => (o as HTMLOptionElement).value,
    );
    expect(options).toEqual(["grid", "path", "cycle", "complete", "petersen", "erdos_renyi"]);
    expect(root.querySelector('input[type="file"]')).not.toBeNull();
  });

  it("builds a grid spec with a grid layout", () => {
    const { app } = makeApp();
    const { spec, layout } = app.chooserSelection();
    expect(spec).toEqual({ kind: "grid", params: [5, 5] });
    expect(layout).toEqual({ kind: "grid", rows: 5, cols: 5 });
  });

  it("shows the seed input only for the random generator", () => {
    const { app, root } = makeApp();
    const select = root.querySelector("#kind") as HTMLSelectElement;
    const seed = root.querySelector(".seed") as HTMLInputElement;
    expect(seed.hidden).toBe(true);
    select.value = "erdos_renyi";
    select.dispatchEvent(new Event("change"));
    expect(seed.hidden).toBe(false);
    const { spec, layout } = app.chooserSelection();
    expect(spec).toMatchObject({ kind: "erdos_renyi" });
    expect((spec as { seed?: number }).seed).toBe(1);
    expect(layout.kind).toBe("force");
  });

  it("creates a session from the chooser", async () => {
    const { app, client, root } = makeApp();
    const board = await app.createFromChooser();
    expect(board).not.toBeNull();
    expect(client.created).toEqual([{ graph: { kind: "grid", params: [5, 5] } }]);
    expect(root.querySelectorAll("#board-host .vertex")).toHaveLength(3);
  });

  it("uploads an edge-list file as a text graph spec", async () => {
    const { app, client } = makeApp();
    const file = new File(["3\n0 1\n1 2\n"], "graph.txt", { type: "text/plain" });
    const board = await app.createFromFile(file);
    expect(board).not.toBeNull();
    expect(client.created).toEqual([{ graph: { text: "3\n0 1\n1 2\n" } }]);
  });

  it("surfaces creation failures as a message", async () => {
    const { app, client, root } = makeApp();
    client.createSession = async () => {
      throw new Error("graph spec must be an object");
    };
    const board = await app.createFromChooser();
    expect(board).toBeNull();
    expect((root.querySelector(".app-message") as HTMLElement).textContent).toContain(
      "graph spec must be an object",
    );
  });
});
