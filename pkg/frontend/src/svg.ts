/** Helpers around the server-rendered SVG.
 *
 * The server stamps each arc path with a data-arc attribute holding the
 * endpoint pair as JSON, so the client can wire events to paths without
 * recomputing any geometry.
 */

import type { ArcJson, PosetDescriptor } from "./api";
import { arcKey, arcLabel } from "./labels";

export interface ArcPathInfo {
  el: Element;
  arc: ArcJson;
  key: string;
}

export function mountSvg(host: HTMLElement, svg: string): void {
  host.innerHTML = svg;
}

/** All arc-bearing paths under `host`, with parsed endpoints. */
export function arcPaths(host: ParentNode): ArcPathInfo[] {
  const out: ArcPathInfo[] = [];
  for (const el of host.querySelectorAll("path[data-arc]")) {
    const raw = el.getAttribute("data-arc");
    if (!raw) continue;
    let arc: ArcJson;
    try {
      arc = JSON.parse(raw) as ArcJson;
    } catch {
      continue;
    }
    out.push({ el, arc, key: arcKey(arc) });
  }
  return out;
}

export function findArcPath(host: ParentNode, key: string): Element | null {
  for (const info of arcPaths(host)) {
    if (info.key === key) return info.el;
  }
  return null;
}

/** Label every arc path for tooltips and assistive tech. */
export function labelPaths(host: ParentNode, poset: PosetDescriptor): void {
  for (const { el, arc } of arcPaths(host)) {
    el.setAttribute("aria-label", arcLabel(arc, poset));
  }
}

/** Freeze every path that is not a flippable candidate.
 *
 * The flippable set comes from the neighbors endpoint, so boundary arcs
 * and the deep tail arcs of families all end up frozen without the client
 * having to know why the server refuses them.
 */
export function markFrozen(host: ParentNode, flippableKeys: Set<string>): void {
  for (const { el, key } of arcPaths(host)) {
    el.classList.toggle("frozen", !flippableKeys.has(key));
  }
}

export function markSelected(host: ParentNode, key: string | null): void {
  for (const info of arcPaths(host)) {
    info.el.classList.toggle("selected", info.key === key);
  }
}
