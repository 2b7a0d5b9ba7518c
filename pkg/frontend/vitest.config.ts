import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["test/**/*.test.ts"],
    // The live suite spawns the Python scoring service; give startup and the
    // HTTP round-trips room to breathe.
    testTimeout: 20_000,
    hookTimeout: 90_000,
  },
});
