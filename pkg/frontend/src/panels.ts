/** Render helpers for the side panels.
 *
 * Each helper repaints one dynamic region from a server response; none of
 * them transform the numbers they are given.
 */

import type {
  ArcJson,
  CactusDisk,
  CactusResponse,
  HistoryResponse,
  HomdimResponse,
  NeighborsResponse,
  PosetDescriptor,
  TriangulationCheckResponse,
} from "./api";
import { arcKey, arcLabel } from "./labels";
import type { FlipRecord } from "./undo";

function clear(el: HTMLElement): void {
  el.textContent = "";
}

export function renderNeighbors(
  el: HTMLElement,
  data: NeighborsResponse,
  poset: PosetDescriptor,
  onFlip: (arc: ArcJson) => void,
): void {
  clear(el);
  const ul = document.createElement("ul");
  for (const nb of data.neighbors) {
    const li = document.createElement("li");
    li.className = "neighbor";
    li.dataset["hash"] = nb.hash;
    li.dataset["key"] = arcKey(nb.arc);
    const from = document.createElement("code");
    from.textContent = arcLabel(nb.arc, poset);
    const to = document.createElement("code");
    to.textContent = arcLabel(nb.partner, poset);
    li.append("flip ", from, " -> ", to);
    li.addEventListener("click", () => onFlip(nb.arc));
    ul.appendChild(li);
  }
  el.appendChild(ul);
  if (data.frozen.length > 0) {
    const frozen = document.createElement("div");
    frozen.className = "frozen-list";
    frozen.append("frozen: ");
    data.frozen.forEach((arc, i) => {
      if (i > 0) frozen.append(", ");
      const code = document.createElement("code");
      code.textContent = arcLabel(arc, poset);
      frozen.appendChild(code);
    });
    el.appendChild(frozen);
  }
}

export function renderCheckResult(
  el: HTMLElement,
  res: TriangulationCheckResponse,
  onCactus: (() => void) | null,
): void {
  clear(el);
  const verdict = document.createElement("div");
  verdict.className = res.verdict ? "verdict verdict-pass" : "verdict verdict-fail";
  verdict.textContent = res.verdict ? "triangulation: yes" : "triangulation: no";
  el.appendChild(verdict);

  const detail = document.createElement("div");
  detail.className = "check-detail";
  const bits: string[] = [`kind: ${res.kind}`];
  if (res.locally_finite !== undefined) bits.push(`locally finite: ${res.locally_finite}`);
  if (res.witness) bits.push(`witness: ${res.witness}`);
  if (res.defect) bits.push(`defect: ${res.defect}`);
  if (res.rho) bits.push(`glued sites: ${JSON.stringify(res.rho)}`);
  detail.textContent = bits.join("; ");
  el.appendChild(detail);

  if (!res.verdict && onCactus) {
    const btn = document.createElement("button");
    btn.className = "show-cactus";
    btn.textContent = "View pinched disks";
    btn.addEventListener("click", onCactus);
    el.appendChild(btn);
  }
}

export function renderHomdimResult(el: HTMLElement, res: HomdimResponse): void {
  clear(el);
  const line = document.createElement("div");
  line.className = "homdim-result";
  const kind = res.ext ? "ext" : "hom";
  const value = document.createElement("span");
  value.className = "dim-value";
  value.textContent = String(res.dim);
  line.append(`${kind} dim = `, value, ` (statuses: ${res.statuses.join(", ")})`);
  el.appendChild(line);
}

export function renderHistory(
  el: HTMLElement,
  records: readonly FlipRecord[],
  position: number,
  server: HistoryResponse | null,
  poset: PosetDescriptor,
): void {
  clear(el);
  const ol = document.createElement("ol");
  records.forEach((rec, i) => {
    const li = document.createElement("li");
    li.className = i < position ? "flip applied" : "flip undone";
    const a = arcLabel(rec.flipped, poset);
    const b = arcLabel(rec.partner, poset);
    li.textContent = `${a} -> ${b} [${rec.hashAfter}]${i < position ? "" : " (undone)"}`;
    ol.appendChild(li);
  });
  el.appendChild(ol);
  if (server) {
    const summary = document.createElement("div");
    summary.className = "server-history mono";
    summary.textContent =
      `server: ${server.history.length} flips, ` +
      `seed ${server.seed_hash}, now ${server.current_hash}`;
    el.appendChild(summary);
  }
}

export function renderCactus(
  el: HTMLElement,
  res: CactusResponse,
  onExplore: ((disk: CactusDisk, index: number) => void) | null,
): void {
  clear(el);
  const head = document.createElement("div");
  head.className = "cactus-summary";
  head.textContent =
    `${res.disk_count} disks from ${res.sites.length} glued sites; ` +
    `tree edges: ${JSON.stringify(res.tree)}`;
  el.appendChild(head);

  res.disks.forEach((disk, i) => {
    const card = document.createElement("div");
    card.className = "disk";
    card.dataset["disk"] = String(i);
    const title = document.createElement("div");
    title.textContent =
      `disk ${i}: marked sites ${JSON.stringify(disk.marked)}, ` +
      `pinch points ${JSON.stringify(disk.pinch_points)}`;
    card.appendChild(title);
    if (disk.cluster && onExplore) {
      const btn = document.createElement("button");
      btn.className = "explore-disk";
      btn.textContent = "Explore this disk";
      btn.addEventListener("click", () => onExplore(disk, i));
      card.appendChild(btn);
    }
    el.appendChild(card);
  });
}
