import { ApiError, type HintServiceClient } from "./api.js";
import { computeLayout, type LayoutKind, type Point } from "./layout.js";
import { ActionQueue } from "./queue.js";
import { hashString } from "./rng.js";
import type {
  HintResponse,
  SessionSummary,
  SolutionResponse,
  SolveMethod,
  TraceEvent,
} from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 480;
const PAD = 40;
const FLASH_MS = 350;

export interface BoardLayoutInfo {
  kind: LayoutKind;
  rows?: number;
  cols?: number;
}

interface Overlay {
  method: SolveMethod;
  indices: number[];
  next: number;
}

/**
 * Renders one session as an SVG board and owns every interaction with it.
 *
 * All actions go through a queue so the server sees them in click order;
 * after each round-trip the board re-renders from a fresh GET of the
 * session, so the lamps always mirror the service's configuration.
 */
export class Board {
  readonly client: HintServiceClient;
  readonly queue = new ActionQueue();
  session: SessionSummary;

  private readonly root: HTMLElement;
  private readonly positions: Point[];
  private readonly neighbors: number[][];
  private vertexEls: SVGGElement[] = [];
  private statusMoves!: HTMLElement;
  private statusFlag!: HTMLElement;
  private badgeEl!: HTMLElement;
  private bannerEl!: HTMLElement;
  private bannerText!: HTMLElement;
  private toastEl!: HTMLElement;
  private outlineEl!: HTMLPreElement;
  private hintVertex: number | null = null;
  private overlay: Overlay | null = null;
  private flashTimer: ReturnType<typeof setTimeout> | null = null;

  static async create(
    root: HTMLElement,
    client: HintServiceClient,
    body: Parameters<HintServiceClient["createSession"]>[0],
    layout: BoardLayoutInfo,
  ): Promise<Board> {
    const session = await client.createSession(body);
    return new Board(root, client, session, layout);
  }

  constructor(root: HTMLElement, client: HintServiceClient, session: SessionSummary, layout: BoardLayoutInfo) {
    this.root = root;
    this.client = client;
    this.session = session;
    this.positions = computeLayout({
      kind: layout.kind,
      n: session.n,
      edges: session.edges,
      seed: hashString(session.id),
      rows: layout.rows,
      cols: layout.cols,
    });
    this.neighbors = Array.from({ length: session.n }, () => []);
    for (const [a, b] of session.edges) {
      this.neighbors[a]!.push(b);
      this.neighbors[b]!.push(a);
    }
    this.buildDom();
    this.renderState();
  }

  // ------------------------------------------------------------ actions

  /** Press a vertex; queued so rapid clicks are applied in order. */
  clickVertex(v: number): Promise<void> {
    return this.queue.run(async () => {
      try {
        await this.client.press(this.session.id, v);
        await this.refreshNow();
        if (this.hintVertex === v) this.hintVertex = null;
        if (this.overlay && this.overlay.indices[this.overlay.next] === v) this.overlay.next += 1;
        this.renderState();
        this.flashNeighborhood(v);
      } catch (err) {
        this.surface(err);
      }
    });
  }

  requestHint(): Promise<HintResponse | null> {
    return this.queue.run(async () => {
      try {
        const hint = await this.client.hint(this.session.id);
        if (hint.status === "ok") {
          this.hintVertex = hint.vertex;
          this.badgeEl.hidden = true;
        } else if (hint.status === "already solved") {
          this.showToast("already solved");
        } else {
          this.badgeEl.hidden = false;
        }
        this.renderState();
        return hint;
      } catch (err) {
        this.surface(err);
        return null;
      }
    });
  }

  dismissHint(): void {
    this.hintVertex = null;
    this.renderState();
  }

  /** Fetch a full solution and mark it as an overlay with step-through. */
  showSolution(method: SolveMethod): Promise<SolutionResponse | null> {
    return this.queue.run(async () => {
      try {
        const solution = await this.client.solution(this.session.id, method);
        if (solution.status === "ok") {
          this.overlay = { method, indices: [...solution.indices], next: 0 };
          this.badgeEl.hidden = true;
          if (solution.trace) {
            this.outlineEl.textContent = traceOutline(solution.trace).join("\n");
            this.outlineEl.hidden = false;
          } else {
            this.outlineEl.hidden = true;
          }
        } else {
          this.overlay = null;
          this.badgeEl.hidden = false;
        }
        this.renderState();
        return solution;
      } catch (err) {
        this.surface(err);
        return null;
      }
    });
  }

  /** Press the next overlay vertex; resolves false when no steps remain. */
  step(): Promise<boolean> {
    return this.queue.run(async () => {
      if (!this.overlay || this.overlay.next >= this.overlay.indices.length) {
        return false;
      }
      const v = this.overlay.indices[this.overlay.next]!;
      try {
        await this.client.press(this.session.id, v);
        this.overlay.next += 1;
        await this.refreshNow();
        this.renderState();
        this.flashNeighborhood(v);
        return true;
      } catch (err) {
        this.surface(err);
        return false;
      }
    });
  }

  scramble(k: number, seed?: number): Promise<void> {
    return this.queue.run(async () => {
      try {
        await this.client.scramble(this.session.id, k, seed);
        await this.refreshNow();
        this.renderState();
      } catch (err) {
        this.surface(err);
      }
    });
  }

  reset(): Promise<void> {
    return this.queue.run(async () => {
      try {
        await this.client.reset(this.session.id);
        this.overlay = null;
        this.hintVertex = null;
        await this.refreshNow();
        this.renderState();
      } catch (err) {
        this.surface(err);
      }
    });
  }

  /** Re-sync from the service without performing any action. */
  refresh(): Promise<void> {
    return this.queue.run(async () => {
      try {
        await this.refreshNow();
        this.renderState();
      } catch (err) {
        this.surface(err);
      }
    });
  }

  // ------------------------------------------------------------ test hooks

  /** The on/off states currently shown, as a 0/1 string in vertex order. */
  domBits(): string {
    return this.vertexEls
      .map((el) => (el.classList.contains("on") ? "1" : "0"))
      .join("");
  }

  vertexElement(v: number): SVGGElement {
    const el = this.vertexEls[v];
    if (!el) throw new Error(`no vertex ${v}`);
    return el;
  }

  get overlayRemaining(): number {
    return this.overlay ? this.overlay.indices.length - this.overlay.next : 0;
  }

  get shownSolved(): boolean {
    return this.statusFlag.classList.contains("solved");
  }

  get bannerMessage(): string | null {
    return this.bannerEl.hidden ? null : this.bannerText.textContent;
  }

  dismissBanner(): void {
    this.bannerEl.hidden = true;
  }

  // ------------------------------------------------------------ internals

  private async refreshNow(): Promise<void> {
    this.session = await this.client.getSession(this.session.id);
  }

  private surface(err: unknown): void {
    const message = err instanceof ApiError ? err.message : String(err);
    this.bannerText.textContent = message;
    this.bannerEl.hidden = false;
  }

  private showToast(message: string): void {
    this.toastEl.textContent = message;
    this.toastEl.hidden = false;
    setTimeout(() => {
      this.toastEl.hidden = true;
    }, 1500);
  }

  private flashNeighborhood(v: number): void {
    const hit = [v, ...(this.neighbors[v] ?? [])];
    for (const u of hit) this.vertexEls[u]?.classList.add("flash");
    if (this.flashTimer) clearTimeout(this.flashTimer);
    this.flashTimer = setTimeout(() => {
      for (const el of this.vertexEls) el.classList.remove("flash");
    }, FLASH_MS);
  }

  private scale(p: Point): [number, number] {
    return [PAD + p.x * (SIZE - 2 * PAD), PAD + p.y * (SIZE - 2 * PAD)];
  }

  private buildDom(): void {
    this.root.textContent = "";
    const wrap = document.createElement("div");
    wrap.className = "board";

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    svg.setAttribute("class", "board-svg");

    const edgeGroup = document.createElementNS(SVG_NS, "g");
    edgeGroup.setAttribute("class", "edges");
    for (const [a, b] of this.session.edges) {
      const [x1, y1] = this.scale(this.positions[a]!);
      const [x2, y2] = this.scale(this.positions[b]!);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      edgeGroup.appendChild(line);
    }
    svg.appendChild(edgeGroup);

    const vertexGroup = document.createElementNS(SVG_NS, "g");
    vertexGroup.setAttribute("class", "vertices");
    const radius = Math.max(8, Math.min(22, 180 / Math.sqrt(this.session.n || 1)));
    for (let v = 0; v < this.session.n; v++) {
      const [x, y] = this.scale(this.positions[v]!);
      const g = document.createElementNS(SVG_NS, "g");
      g.setAttribute("class", "vertex off");
      g.dataset.v = String(v);
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", String(radius));
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y + 4));
      label.setAttribute("text-anchor", "middle");
      label.textContent = String(v);
      g.appendChild(circle);
      g.appendChild(label);
      g.addEventListener("click", () => {
        void this.clickVertex(v);
      });
      vertexGroup.appendChild(g);
      this.vertexEls.push(g);
    }
    svg.appendChild(vertexGroup);
    wrap.appendChild(svg);

    const status = document.createElement("div");
    status.className = "board-status";
    this.statusMoves = document.createElement("span");
    this.statusMoves.className = "moves";
    this.statusFlag = document.createElement("span");
    this.statusFlag.className = "state-flag";
    this.badgeEl = document.createElement("span");
    this.badgeEl.className = "badge-unsolvable";
    this.badgeEl.textContent = "unsolvable";
    this.badgeEl.hidden = true;
    status.append(this.statusMoves, this.statusFlag, this.badgeEl);
    wrap.appendChild(status);

    this.bannerEl = document.createElement("div");
    this.bannerEl.className = "banner";
    this.bannerEl.hidden = true;
    this.bannerText = document.createElement("span");
    this.bannerText.className = "banner-text";
    const dismiss = document.createElement("button");
    dismiss.textContent = "dismiss";
    dismiss.addEventListener("click", () => this.dismissBanner());
    this.bannerEl.append(this.bannerText, dismiss);
    wrap.appendChild(this.bannerEl);

    this.toastEl = document.createElement("div");
    this.toastEl.className = "toast";
    this.toastEl.hidden = true;
    wrap.appendChild(this.toastEl);

    this.outlineEl = document.createElement("pre");
    this.outlineEl.className = "proof-outline";
    this.outlineEl.hidden = true;
    wrap.appendChild(this.outlineEl);

    this.root.appendChild(wrap);
  }

  private renderState(): void {
    for (let v = 0; v < this.session.n; v++) {
      const el = this.vertexEls[v]!;
      const on = this.session.current.charAt(v) === "1";
      el.classList.toggle("on", on);
      el.classList.toggle("off", !on);
      el.classList.toggle("hint", this.hintVertex === v);
      const marked =
        this.overlay !== null && this.overlay.indices.slice(this.overlay.next).includes(v);
      el.classList.toggle("mark", marked);
    }
    this.statusMoves.textContent = `moves: ${this.session.moves}`;
    this.statusFlag.textContent = this.session.solved ? "solved" : "unsolved";
    this.statusFlag.classList.toggle("solved", this.session.solved);
  }
}

/** Human-readable outline of a constructive-solver trace. */
export function traceOutline(events: TraceEvent[]): string[] {
  const lines: string[] = [];
  let depth = 0;
  for (const ev of events) {
    const pad = "  ".repeat(Math.max(depth, 0));
    switch (ev.event) {
      case "recursion-enter":
        lines.push(`${pad}solve {${(ev.vertices ?? []).join(",")}}`);
        depth += 1;
        break;
      case "recursion-exit":
        depth -= 1;
        break;
      case "base-case":
        lines.push(`${pad}press the lone vertex`);
        break;
      case "short-circuit":
        lines.push(`${pad}sub-answer already toggles ${ev.vertex}: done`);
        break;
      case "pair":
        lines.push(`${pad}toggle pair (${ev.a}, ${ev.b})`);
        break;
      case "press-all":
        lines.push(`${pad}press every vertex once`);
        break;
      default:
        lines.push(`${pad}${ev.event}`);
    }
  }
  return lines;
}
