/** Display names for arcs and endpoints.
 *
 * Everything here is formatting of server-provided endpoint data; no
 * dimensions or mutation results are ever derived locally.
 */

import type { ArcJson, PointJson, PosetDescriptor } from "./api";

export function isSymbolicPoint(p: PointJson): p is { limit: number; pos: number } {
  return typeof p === "object" && p !== null;
}

/** Two evenly spaced limit lines get the three-component E/F/G naming. */
export function isTwoLimit(poset: PosetDescriptor | undefined): boolean {
  if (!poset || poset.kind !== "z_zinfty") return false;
  const lim = poset["limits"];
  return lim === 2 || (Array.isArray(lim) && lim.length === 2);
}

/** Endpoint in the same notation the command line accepts. */
export function pointText(p: PointJson): string {
  return isSymbolicPoint(p) ? `${p.limit}:${p.pos}` : String(p);
}

/** Stable identity for an arc regardless of endpoint order. */
export function arcKey(arc: ArcJson): string {
  const keys = arc.map((p) => (isSymbolicPoint(p) ? `L${p.limit}:${p.pos}` : `i${p}`));
  keys.sort();
  return keys.join("|");
}

export function sameArc(a: ArcJson, b: ArcJson): boolean {
  return arcKey(a) === arcKey(b);
}

/** Object label for an arc.
 *
 * On a two-limit carrier the rep-theory naming applies: both endpoints on
 * limit line 0 gives E_{i,j}, both on line 1 gives F_{i,j}, one on each
 * gives G_{i,j} with i the line-0 position and j the line-1 position.
 * Everything else falls back to the generic E(x, y) notation.
 */
export function arcLabel(arc: ArcJson, poset?: PosetDescriptor): string {
  const [a, b] = arc;
  if (isTwoLimit(poset) && isSymbolicPoint(a) && isSymbolicPoint(b)) {
    if (a.limit === 0 && b.limit === 0) {
      const [i, j] = a.pos <= b.pos ? [a.pos, b.pos] : [b.pos, a.pos];
      return `E_{${i},${j}}`;
    }
    if (a.limit === 1 && b.limit === 1) {
      const [i, j] = a.pos <= b.pos ? [a.pos, b.pos] : [b.pos, a.pos];
      return `F_{${i},${j}}`;
    }
    const zero = a.limit === 0 ? a : b;
    const one = a.limit === 0 ? b : a;
    return `G_{${zero.pos},${one.pos}}`;
  }
  return `E(${pointText(a)}, ${pointText(b)})`;
}
