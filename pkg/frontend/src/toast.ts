/** Non-blocking notifications. */

export type ToastKind = "error" | "info";

const TOAST_MS = 5000;

export function toastInto(container: HTMLElement, kind: ToastKind, text: string): HTMLElement {
  const el = document.createElement("div");
  el.className = `toast ${kind}`;
  el.textContent = text;
  container.appendChild(el);
  setTimeout(() => el.remove(), TOAST_MS);
  return el;
}
