/** App shell: preset picker, explorer workspace, pinched-disk view. */

import "./style.css";
import { ApiClient, type CactusDisk, type ClusterJson } from "./api";
import { Explorer, type ExplorerDelegate } from "./explorer";
import { renderCactus } from "./panels";
import { PRESETS, presetById, type Preset } from "./presets";
import { toastInto } from "./toast";

export interface App {
  root: HTMLElement;
  api: ApiClient;
  explorers: Explorer[];
  openPreset(id: string): Promise<Explorer | null>;
  openSession(title: string, payload: { poset: unknown; seed?: unknown }): Promise<Explorer>;
  showCactusForCluster(cluster: ClusterJson): Promise<void>;
}

export function createApp(root: HTMLElement, baseUrl = ""): App {
  const api = new ApiClient(baseUrl);
  const explorers: Explorer[] = [];

  root.textContent = "";
  const header = document.createElement("header");
  header.className = "app-header";
  const h1 = document.createElement("h1");
  h1.textContent = "Cyclic poset cluster explorer";
  const sub = document.createElement("div");
  sub.className = "sub";
  sub.textContent = "Click an arc to flip it; every number on screen comes from the server.";
  header.append(h1, sub);
  root.appendChild(header);

  const presetBar = document.createElement("div");
  presetBar.className = "preset-bar";
  root.appendChild(presetBar);

  const workspace = document.createElement("div");
  workspace.className = "workspace";
  root.appendChild(workspace);

  const appToasts = document.createElement("div");
  appToasts.className = "toasts";
  root.appendChild(appToasts);

  const delegate: ExplorerDelegate = {
    showCactus(cluster) {
      void app.showCactusForCluster(cluster).catch((err) => {
        toastInto(appToasts, "error", String(err));
      });
    },
  };

  async function openSession(
    title: string,
    payload: { poset: unknown; seed?: unknown },
  ): Promise<Explorer> {
    const ex = await Explorer.open({ api, container: workspace, title, payload, delegate });
    explorers.push(ex);
    return ex;
  }

  function cactusContainer(title: string): HTMLElement {
    const view = document.createElement("div");
    view.className = "cactus-view";
    const head = document.createElement("div");
    head.className = "cactus-title";
    head.textContent = title;
    view.appendChild(head);
    const out = document.createElement("div");
    out.className = "cactus-out";
    view.appendChild(out);
    workspace.appendChild(view);
    return out;
  }

  async function showCactusForCluster(cluster: ClusterJson): Promise<void> {
    const res = await api.cactusFromCluster(cluster);
    const out = cactusContainer("Pinched-disk decomposition");
    renderCactus(out, res, (disk: CactusDisk, index: number) => {
      if (!disk.cluster) return;
      void openSession(`Disk ${index}`, {
        poset: disk.cluster.poset,
        seed: disk.cluster,
      }).catch((err) => toastInto(appToasts, "error", String(err)));
    });
  }

  async function openPreset(id: string): Promise<Explorer | null> {
    const preset: Preset | undefined = presetById(id);
    if (!preset) {
      toastInto(appToasts, "error", `Unknown preset ${id}`);
      return null;
    }
    if (preset.kind === "cactus") {
      const res = await api.cactusFromPartition(preset.poset, preset.classes);
      const out = cactusContainer(preset.name);
      renderCactus(out, res, null);
      return null;
    }
    return openSession(preset.name, preset.payload);
  }

  for (const preset of PRESETS) {
    const btn = document.createElement("button");
    btn.dataset["preset"] = preset.id;
    const name = document.createElement("span");
    name.textContent = preset.name;
    const blurb = document.createElement("span");
    blurb.className = "blurb";
    blurb.textContent = preset.blurb;
    btn.append(name, blurb);
    btn.addEventListener("click", () => {
      void openPreset(preset.id).catch((err) => {
        toastInto(appToasts, "error", String(err));
      });
    });
    presetBar.appendChild(btn);
  }

  const app: App = { root, api, explorers, openPreset, openSession, showCactusForCluster };
  return app;
}

const mount = document.getElementById("app");
if (mount) createApp(mount);
