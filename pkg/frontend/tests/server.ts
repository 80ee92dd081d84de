/** Spawn a real backend for the e2e suite. */

import { spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join } from "node:path";

export interface BackendHandle {
  baseUrl: string;
  stop(): Promise<void>;
}

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.listen(0, "127.0.0.1", () => {
      const addr = probe.address();
      if (addr && typeof addr === "object") {
        const port = addr.port;
        probe.close(() => resolve(port));
      } else {
        probe.close(() => reject(new Error("could not pick a port")));
      }
    });
    probe.on("error", reject);
  });
}

export async function startBackend(): Promise<BackendHandle> {
  const port = await freePort();
  const stateDir = mkdtempSync(join(tmpdir(), "cycloset-ui-"));
  const child = spawn(
    "python3",
    ["-m", "cycloset.cli", "serve", "--port", String(port), "--state-dir", stateDir],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  let log = "";
  child.stdout?.on("data", (d: Buffer) => {
    log += String(d);
  });
  child.stderr?.on("data", (d: Buffer) => {
    log += String(d);
  });

  const baseUrl = `http://127.0.0.1:${port}`;
  const deadline = Date.now() + 30_000;
  for (;;) {
    if (child.exitCode !== null) {
      throw new Error(`backend exited before coming up:\n${log}`);
    }
    try {
      const res = await fetch(`${baseUrl}/api/posets`);
      if (res.ok) break;
    } catch {
      // not listening yet
    }
    if (Date.now() > deadline) {
      child.kill("SIGKILL");
      throw new Error(`backend did not come up in time:\n${log}`);
    }
    await new Promise((r) => setTimeout(r, 150));
  }

  return {
    baseUrl,
    stop(): Promise<void> {
      return new Promise((resolve) => {
        const hardKill = setTimeout(() => {
          child.kill("SIGKILL");
          resolve();
        }, 3000);
        child.once("exit", () => {
          clearTimeout(hardKill);
          rmSync(stateDir, { recursive: true, force: true });
          resolve();
        });
        child.kill("SIGTERM");
      });
    },
  };
}
