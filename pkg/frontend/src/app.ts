import type { HintServiceClient } from "./api.js";
import { Board, type BoardLayoutInfo } from "./board.js";
import { layoutKindFor } from "./layout.js";
import type { CreateSessionBody, GraphSpec, SolveMethod } from "./types.js";

interface KindConfig {
  label: string;
  params: string[];
  needsSeed?: boolean;
}

const KINDS: Record<string, KindConfig> = {
  grid: { label: "grid", params: ["rows", "cols"] },
  path: { label: "path", params: ["n"] },
  cycle: { label: "cycle", params: ["n"] },
  complete: { label: "complete", params: ["n"] },
  petersen: { label: "petersen", params: [] },
  erdos_renyi: { label: "random (n, p)", params: ["n", "p"], needsSeed: true },
};

/** Control panel: graph chooser, upload, and the action buttons. */
export class App {
  readonly client: HintServiceClient;
  board: Board | null = null;

  private readonly root: HTMLElement;
  private boardHost!: HTMLElement;
  private kindSelect!: HTMLSelectElement;
  private paramInputs: HTMLInputElement[] = [];
  private paramBox!: HTMLElement;
  private seedInput!: HTMLInputElement;
  private scrambleInput!: HTMLInputElement;
  private messageEl!: HTMLElement;

  constructor(root: HTMLElement, client: HintServiceClient) {
    this.root = root;
    this.client = client;
    this.buildControls();
  }

  private buildControls(): void {
    const controls = document.createElement("div");
    controls.className = "controls";

    this.kindSelect = document.createElement("select");
    this.kindSelect.id = "kind";
    for (const [value, cfg] of Object.entries(KINDS)) {
      const opt = document.createElement("option");
      opt.value = value;
      opt.textContent = cfg.label;
      this.kindSelect.appendChild(opt);
    }
    this.kindSelect.value = "grid";
    this.kindSelect.addEventListener("change", () => this.renderParamInputs());

    this.paramBox = document.createElement("span");
    this.paramBox.className = "params";

    this.seedInput = document.createElement("input");
    this.seedInput.type = "number";
    this.seedInput.placeholder = "seed";
    this.seedInput.value = "1";
    this.seedInput.className = "seed";

    const createBtn = document.createElement("button");
    createBtn.id = "create";
    createBtn.textContent = "new board";
    createBtn.addEventListener("click", () => {
      void this.createFromChooser();
    });

    const upload = document.createElement("input");
    upload.type = "file";
    upload.id = "upload";
    upload.addEventListener("change", () => {
      const file = upload.files?.[0];
      if (file) void this.createFromFile(file);
    });

    const actions = document.createElement("div");
    actions.className = "actions";
    this.scrambleInput = document.createElement("input");
    this.scrambleInput.type = "number";
    this.scrambleInput.value = "10";
    this.scrambleInput.className = "scramble-k";
    actions.append(
      this.scrambleInput,
      this.actionButton("scramble", () => this.board?.scramble(this.scrambleK(), Date.now() >>> 0)),
      this.actionButton("hint", () => this.board?.requestHint()),
      this.actionButton("solve (gf2)", () => this.board?.showSolution("gf2")),
      this.actionButton("solve (constructive)", () => this.board?.showSolution("inductive")),
      this.actionButton("step", () => this.board?.step()),
      this.actionButton("reset", () => this.board?.reset()),
    );

    this.messageEl = document.createElement("div");
    this.messageEl.className = "app-message";

    this.boardHost = document.createElement("div");
    this.boardHost.id = "board-host";

    controls.append(this.kindSelect, this.paramBox, this.seedInput, createBtn, upload);
    this.root.append(controls, actions, this.messageEl, this.boardHost);
    this.renderParamInputs();
  }

  private actionButton(label: string, onClick: () => unknown): HTMLButtonElement {
    const btn = document.createElement("button");
    btn.textContent = label;
    btn.addEventListener("click", () => {
      void onClick();
    });
    return btn;
  }

  private renderParamInputs(): void {
    const cfg = KINDS[this.kindSelect.value]!;
    this.paramBox.textContent = "";
    this.paramInputs = cfg.params.map((name) => {
      const input = document.createElement("input");
      input.type = "number";
      input.placeholder = name;
      input.value = name === "p" ? "0.3" : "5";
      if (name === "p") input.step = "0.05";
      this.paramBox.appendChild(input);
      return input;
    });
    this.seedInput.hidden = !cfg.needsSeed;
  }

  private scrambleK(): number {
    const k = Number(this.scrambleInput.value);
    return Number.isFinite(k) && k >= 0 ? Math.floor(k) : 0;
  }

  /** The graph spec and layout the chooser currently describes. */
  chooserSelection(): { spec: GraphSpec; layout: BoardLayoutInfo } {
    const kind = this.kindSelect.value;
    const cfg = KINDS[kind]!;
    const params = this.paramInputs.map((el) => Number(el.value));
    const spec: GraphSpec = { kind, params };
    if (cfg.needsSeed) {
      (spec as { seed?: number }).seed = Number(this.seedInput.value) || 0;
    }
    const layout: BoardLayoutInfo = { kind: layoutKindFor(kind) };
    if (kind === "grid") {
      layout.rows = params[0];
      layout.cols = params[1];
    }
    return { spec, layout };
  }

  async createFromChooser(): Promise<Board | null> {
    const { spec, layout } = this.chooserSelection();
    return this.createBoard({ graph: spec }, layout);
  }

  async createFromFile(file: File): Promise<Board | null> {
    const text = await readFileText(file);
    return this.createBoard({ graph: { text } }, { kind: "force" });
  }

  async createBoard(body: CreateSessionBody, layout: BoardLayoutInfo): Promise<Board | null> {
    try {
      this.board = await Board.create(this.boardHost, this.client, body, layout);
      this.messageEl.textContent = "";
      return this.board;
    } catch (err) {
      this.messageEl.textContent = String(err instanceof Error ? err.message : err);
      return null;
    }
  }

  solve(method: SolveMethod): Promise<unknown> | undefined {
    return this.board?.showSolution(method);
  }
}

function readFileText(file: File): Promise<string> {
  if (typeof file.text === "function") {
    return file.text();
  }
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onload = () => resolve(String(reader.result));
    reader.onerror = () => reject(reader.error);
    reader.readAsText(file);
  });
}
