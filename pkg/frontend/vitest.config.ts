import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    // The e2e suite spawns a real backend and walks a 132-cluster
    // exchange graph, so the defaults are far too tight.
    testTimeout: 120_000,
    hookTimeout: 60_000,
    // One worker: tests share a spawned server per file and jsdom
    // windows are not cheap.
    pool: "forks",
    maxWorkers: 1,
  },
});
