/** Linear undo/redo over flips.
 *
 * A flip is undone by flipping the exchange partner the server reported,
 * never by restoring a cached cluster: the stack only remembers which arc
 * to send and which server hash the result must equal.
 */

import type { ArcJson } from "./api";

export interface FlipRecord {
  /** Arc the user flipped. */
  flipped: ArcJson;
  /** Arc the server put in its place. */
  partner: ArcJson;
  /** Server cluster hash before the flip. */
  hashBefore: string;
  /** Server cluster hash after the flip. */
  hashAfter: string;
}

export class UndoStack {
  private records: FlipRecord[] = [];
  private cursor = 0;

  get length(): number {
    return this.records.length;
  }

  /** Number of records currently applied. */
  get position(): number {
    return this.cursor;
  }

  entries(): readonly FlipRecord[] {
    return this.records;
  }

  push(rec: FlipRecord): void {
    this.records.length = this.cursor;
    this.records.push(rec);
    this.cursor += 1;
  }

  canUndo(): boolean {
    return this.cursor > 0;
  }

  canRedo(): boolean {
    return this.cursor < this.records.length;
  }

  peekUndo(): FlipRecord | null {
    return this.canUndo() ? (this.records[this.cursor - 1] ?? null) : null;
  }

  peekRedo(): FlipRecord | null {
    return this.canRedo() ? (this.records[this.cursor] ?? null) : null;
  }

  noteUndone(): void {
    if (this.cursor > 0) this.cursor -= 1;
  }

  noteRedone(): void {
    if (this.cursor < this.records.length) this.cursor += 1;
  }

  clear(): void {
    this.records = [];
    this.cursor = 0;
  }
}
