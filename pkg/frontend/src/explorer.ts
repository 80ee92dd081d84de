/** One cluster session: diagram, panels, flip queue, undo.
 *
 * The explorer is a thin shell over the HTTP session. It never mutates a
 * cluster locally: clicks become mutate calls, the diagram is whatever SVG
 * the server sent last, and the hash in the header always echoes the most
 * recent server response. At most one mutation is in flight per session;
 * clicks that land while one is pending coalesce to the latest arc.
 */

import {
  ApiClient,
  ApiError,
  type ArcJson,
  type ClusterBody,
  type ClusterJson,
  type HistoryResponse,
  type NeighborsResponse,
} from "./api";
import { arcKey, arcLabel } from "./labels";
import { labelPaths, markFrozen, markSelected, mountSvg } from "./svg";
import { renderCheckResult, renderHistory, renderHomdimResult, renderNeighbors } from "./panels";
import { toastInto, type ToastKind } from "./toast";
import { UndoStack } from "./undo";

export interface ExplorerDelegate {
  showCactus(cluster: ClusterJson, source: Explorer): void;
}

export interface ExplorerInit {
  api: ApiClient;
  container: HTMLElement;
  title: string;
  payload: { poset: unknown; seed?: unknown };
  delegate?: ExplorerDelegate;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class Explorer {
  readonly api: ApiClient;
  readonly sessionId: string;
  readonly root: HTMLElement;
  readonly undoStack = new UndoStack();
  /** Every distinct cluster hash any server response has mentioned. */
  readonly seenHashes = new Set<string>();

  cluster: ClusterBody;
  lastNeighbors: NeighborsResponse | null = null;
  serverHistory: HistoryResponse | null = null;
  selectedKey: string | null = null;

  private readonly delegate: ExplorerDelegate | undefined;
  private busy = false;
  private queuedArc: ArcJson | null = null;

  private readonly hashEl: HTMLElement;
  private readonly counterEl: HTMLElement;
  private readonly hoverEl: HTMLElement;
  private readonly lastFlipEl: HTMLElement;
  private readonly diagramHost: HTMLElement;
  private readonly neighborsOut: HTMLElement;
  private readonly homdimOut: HTMLElement;
  private readonly checkOut: HTMLElement;
  private readonly historyOut: HTMLElement;
  private readonly toastsEl: HTMLElement;
  private readonly undoBtn: HTMLButtonElement;
  private readonly redoBtn: HTMLButtonElement;
  private readonly checkBtn: HTMLButtonElement;
  private readonly refreshBtn: HTMLButtonElement;
  private readonly srcInput: HTMLInputElement;
  private readonly tgtInput: HTMLInputElement;
  private readonly extInput: HTMLInputElement;

  static async open(init: ExplorerInit): Promise<Explorer> {
    const state = await init.api.createSession(init.payload);
    const ex = new Explorer(init, state.id, state.cluster);
    init.container.appendChild(ex.root);
    await ex.setState(state.cluster, state.svg);
    return ex;
  }

  private constructor(init: ExplorerInit, sessionId: string, cluster: ClusterBody) {
    this.api = init.api;
    this.sessionId = sessionId;
    this.cluster = cluster;
    this.delegate = init.delegate;

    this.root = el("section", "explorer");
    const head = el("div", "explorer-head");
    head.appendChild(el("span", "title", init.title));
    this.hashEl = el("span", "hash");
    head.appendChild(this.hashEl);
    this.counterEl = el("span", "counter");
    head.appendChild(this.counterEl);
    this.undoBtn = el("button", "undo-btn", "Undo");
    this.undoBtn.addEventListener("click", () => this.undoLatest());
    head.appendChild(this.undoBtn);
    this.redoBtn = el("button", "redo-btn", "Redo");
    this.redoBtn.addEventListener("click", () => this.redoLatest());
    head.appendChild(this.redoBtn);
    this.checkBtn = el("button", "check-btn", "Check triangulation");
    this.checkBtn.addEventListener("click", () => this.checkTriangulation());
    head.appendChild(this.checkBtn);
    this.refreshBtn = el("button", "refresh-btn", "Resync");
    this.refreshBtn.addEventListener("click", () => {
      void this.runExclusive(() => this.forceRefresh());
    });
    head.appendChild(this.refreshBtn);
    this.root.appendChild(head);

    const body = el("div", "explorer-body");
    this.diagramHost = el("div", "diagram-host");
    body.appendChild(this.diagramHost);

    const side = el("div", "side");
    this.hoverEl = el("div", "hover-label");
    side.appendChild(this.hoverEl);
    this.lastFlipEl = el("div", "last-flip mono");
    side.appendChild(this.lastFlipEl);

    const nbPanel = el("div", "panel neighbors");
    nbPanel.appendChild(el("h3", undefined, "Exchange moves"));
    this.neighborsOut = el("div", "neighbors-out");
    nbPanel.appendChild(this.neighborsOut);
    side.appendChild(nbPanel);

    const hdPanel = el("div", "panel homdim");
    hdPanel.appendChild(el("h3", undefined, "Hom and Ext dimensions"));
    this.srcInput = el("input");
    this.srcInput.type = "text";
    this.srcInput.className = "homdim-src";
    this.srcInput.placeholder = "source x,y";
    this.tgtInput = el("input");
    this.tgtInput.type = "text";
    this.tgtInput.className = "homdim-tgt";
    this.tgtInput.placeholder = "target x,y";
    this.extInput = el("input");
    this.extInput.type = "checkbox";
    this.extInput.className = "homdim-ext";
    const extLabel = el("label", undefined, " ext ");
    extLabel.prepend(this.extInput);
    const computeBtn = el("button", "compute-btn", "Compute");
    computeBtn.addEventListener("click", () => this.computeHomdim());
    hdPanel.append(this.srcInput, " ", this.tgtInput, " ", extLabel, computeBtn);
    this.homdimOut = el("div", "homdim-out");
    hdPanel.appendChild(this.homdimOut);
    side.appendChild(hdPanel);

    const ckPanel = el("div", "panel check");
    ckPanel.appendChild(el("h3", undefined, "Triangulation"));
    this.checkOut = el("div", "check-out");
    ckPanel.appendChild(this.checkOut);
    side.appendChild(ckPanel);

    const hiPanel = el("div", "panel history");
    hiPanel.appendChild(el("h3", undefined, "Flips"));
    this.historyOut = el("div", "history-out");
    hiPanel.appendChild(this.historyOut);
    side.appendChild(hiPanel);

    body.appendChild(side);
    this.root.appendChild(body);
    this.toastsEl = el("div", "toasts");
    this.root.appendChild(this.toastsEl);

    this.diagramHost.addEventListener("click", (e) => {
      const path = (e.target as Element | null)?.closest?.("path[data-arc]");
      if (!path) return;
      if (path.classList.contains("frozen")) {
        this.toast("info", "That arc is frozen and cannot be flipped.");
        return;
      }
      const raw = path.getAttribute("data-arc");
      if (!raw) return;
      this.requestFlip(JSON.parse(raw) as ArcJson);
    });
    this.diagramHost.addEventListener("mouseover", (e) => {
      const path = (e.target as Element | null)?.closest?.("path[data-arc]");
      if (path) this.hoverEl.textContent = path.getAttribute("aria-label") ?? "";
    });

    this.updateButtons();
  }

  get hash(): string {
    return this.cluster.hash;
  }

  /** Distinct cluster hashes reported by the server so far. */
  get seenCount(): number {
    return this.seenHashes.size;
  }

  /** Resolves once no mutation is in flight or queued. */
  async idle(): Promise<void> {
    while (this.busy || this.queuedArc !== null) {
      await new Promise((r) => setTimeout(r, 5));
    }
  }

  toast(kind: ToastKind, text: string): HTMLElement {
    return toastInto(this.toastsEl, kind, text);
  }

  private noteHash(hash: string): void {
    this.seenHashes.add(hash);
    this.counterEl.textContent = `clusters seen: ${this.seenHashes.size}`;
  }

  private applyState(cluster: ClusterBody, svg: string): void {
    this.cluster = cluster;
    this.hashEl.textContent = cluster.hash;
    this.noteHash(cluster.hash);
    mountSvg(this.diagramHost, svg);
    labelPaths(this.diagramHost, cluster.poset);
    markSelected(this.diagramHost, this.selectedKey);
  }

  private async setState(cluster: ClusterBody, svg: string): Promise<void> {
    this.applyState(cluster, svg);
    await this.refreshNeighbors();
    this.renderHistoryPanel();
  }

  private async refreshNeighbors(): Promise<void> {
    const res = await this.api.neighbors(this.sessionId);
    this.lastNeighbors = res;
    for (const nb of res.neighbors) this.noteHash(nb.hash);
    markFrozen(this.diagramHost, new Set(res.neighbors.map((n) => arcKey(n.arc))));
    renderNeighbors(this.neighborsOut, res, this.cluster.poset, (arc) => this.requestFlip(arc));
  }

  private renderHistoryPanel(): void {
    renderHistory(
      this.historyOut,
      this.undoStack.entries(),
      this.undoStack.position,
      this.serverHistory,
      this.cluster.poset,
    );
    this.updateButtons();
  }

  private updateButtons(): void {
    this.undoBtn.disabled = this.busy || !this.undoStack.canUndo();
    this.redoBtn.disabled = this.busy || !this.undoStack.canRedo();
    this.checkBtn.disabled = this.busy;
    this.refreshBtn.disabled = this.busy;
  }

  private async runExclusive(job: () => Promise<void>): Promise<void> {
    this.busy = true;
    this.updateButtons();
    try {
      await job();
    } finally {
      this.busy = false;
      this.updateButtons();
      const next = this.queuedArc;
      this.queuedArc = null;
      if (next) this.requestFlip(next);
    }
  }

  /** Flip an arc of the current cluster. Coalesces while one is pending. */
  requestFlip(arc: ArcJson): void {
    if (this.busy) {
      this.queuedArc = arc;
      return;
    }
    void this.runExclusive(() => this.doFlip(arc));
  }

  private async doFlip(arc: ArcJson): Promise<void> {
    const before = this.cluster.hash;
    try {
      const res = await this.api.mutate(this.sessionId, arc);
      this.undoStack.push({
        flipped: arc,
        partner: res.exchange_partner,
        hashBefore: before,
        hashAfter: res.cluster.hash,
      });
      this.selectedKey = arcKey(res.exchange_partner);
      this.lastFlipEl.textContent =
        `removed ${arcLabel(res.removed, res.cluster.poset)}, ` +
        `added ${arcLabel(res.exchange_partner, res.cluster.poset)}, ` +
        `ext pair ${JSON.stringify(res.ext_changes.removed_vs_added)}`;
      await this.setState(res.cluster, res.svg);
    } catch (err) {
      await this.handleError(err);
    }
  }

  undoLatest(): void {
    if (this.busy || !this.undoStack.canUndo()) return;
    void this.runExclusive(async () => {
      const rec = this.undoStack.peekUndo();
      if (!rec) return;
      try {
        const res = await this.api.mutate(this.sessionId, rec.partner);
        this.undoStack.noteUndone();
        this.selectedKey = arcKey(res.exchange_partner);
        await this.setState(res.cluster, res.svg);
        await this.confirmServerHistory(rec.hashBefore);
      } catch (err) {
        await this.handleError(err);
      }
    });
  }

  redoLatest(): void {
    if (this.busy || !this.undoStack.canRedo()) return;
    void this.runExclusive(async () => {
      const rec = this.undoStack.peekRedo();
      if (!rec) return;
      try {
        const res = await this.api.mutate(this.sessionId, rec.flipped);
        this.undoStack.noteRedone();
        this.selectedKey = arcKey(res.exchange_partner);
        await this.setState(res.cluster, res.svg);
        await this.confirmServerHistory(rec.hashAfter);
      } catch (err) {
        await this.handleError(err);
      }
    });
  }

  /** Undo and redo must land exactly where the server history says. */
  private async confirmServerHistory(expectedHash: string): Promise<void> {
    const hist = await this.api.history(this.sessionId);
    this.serverHistory = hist;
    for (const entry of hist.history) this.noteHash(entry.hash);
    this.renderHistoryPanel();
    if (hist.current_hash !== expectedHash) {
      this.toast("error", "History diverged from the server; resyncing.");
      await this.forceRefresh();
    }
  }

  checkTriangulation(): void {
    if (this.busy) return;
    void this.runExclusive(async () => {
      try {
        const res = await this.api.triangulationCheck(this.cluster);
        const offerCactus = !res.verdict && res.kind === "symbolic" && this.delegate;
        renderCheckResult(
          this.checkOut,
          res,
          offerCactus ? () => this.delegate?.showCactus(this.cluster, this) : null,
        );
      } catch (err) {
        await this.handleError(err);
      }
    });
  }

  computeHomdim(): void {
    if (this.busy) return;
    const from = this.srcInput.value.trim();
    const to = this.tgtInput.value.trim();
    if (!from || !to) {
      this.toast("info", "Enter source and target arcs as x,y endpoints.");
      return;
    }
    void this.runExclusive(async () => {
      try {
        const res = await this.api.homdim({
          poset: this.cluster.poset,
          from,
          to,
          ext: this.extInput.checked,
        });
        renderHomdimResult(this.homdimOut, res);
      } catch (err) {
        await this.handleError(err);
      }
    });
  }

  /** Reload authoritative state, e.g. after a stale-view conflict. */
  async forceRefresh(): Promise<void> {
    const state = await this.api.getSession(this.sessionId);
    this.undoStack.clear();
    this.selectedKey = null;
    await this.setState(state.cluster, state.svg);
    this.toast("info", "View reloaded from the server.");
  }

  private async handleError(err: unknown): Promise<void> {
    if (err instanceof ApiError) {
      this.toast("error", `${err.kind}: ${err.message}`);
      if (err.kind === "NotInCluster") {
        try {
          await this.forceRefresh();
        } catch {
          this.toast("error", "Resync failed; the session may be gone.");
        }
      }
      return;
    }
    throw err;
  }
}
