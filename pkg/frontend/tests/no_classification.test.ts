/** Proof that the client never classifies: verdicts on screen are exactly
 * the server's words, even when they contradict the numbers, and the
 * client sources contain no trace of the temperature bands. */

import { readFileSync, readdirSync } from "node:fs";
import { join } from "node:path";

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { initApp } from "../src/app.js";
import {
  SRC_DIR,
  diagnosisPayload,
  flush,
  mountPage,
  setInput,
  stubFetch,
  submitForm,
} from "./helpers.js";

beforeEach(() => {
  mountPage();
});

afterEach(() => {
  vi.unstubAllGlobals();
});

async function submitQuartetWithServerVerdict(verdict: string): Promise<void> {
  stubFetch((url, init) => {
    if (init?.method === "POST") {
      return {
        status: 201,
        body: diagnosisPayload({
          teats: [42.0, 42.0, 42.0, 42.0],
          status_worst_teat: verdict,
          status_legacy: verdict,
        }),
      };
    }
    if (url.includes("/animals/")) {
      return { status: 200, body: [] };
    }
    return { status: 404, body: {} };
  });
  await initApp(document);
  setInput("animal-id", "12");
  setInput("reading-date", "2020-10-29");
  for (const id of ["teat-1", "teat-2", "teat-3", "teat-4"]) {
    setInput(id, "42.0"); // readings that would rate Sick on the server
  }
  submitForm();
  await flush();
}

function verdictBadges(): string[] {
  return [...document.querySelectorAll("#diagnosis .verdict .badge")].map(
    (el) => el.textContent ?? "",
  );
}

describe("the client displays verdicts, it does not compute them", () => {
  it("shows whatever status the server sends for identical inputs", async () => {
    await submitQuartetWithServerVerdict("Healthy");
    expect(verdictBadges()).toEqual(["Healthy", "Healthy"]);

    vi.unstubAllGlobals();
    mountPage();

    await submitQuartetWithServerVerdict("Sick");
    expect(verdictBadges()).toEqual(["Sick", "Sick"]);
  });

  it("shows unknown future statuses verbatim rather than failing", async () => {
    await submitQuartetWithServerVerdict("Quarantined");
    expect(verdictBadges()).toEqual(["Quarantined", "Quarantined"]);
    const badge = document.querySelector("#diagnosis .verdict .badge");
    expect(badge!.className).toContain("severity-unknown");
  });

  it("keeps the classification cut-offs out of the client sources", () => {
    const sources = readdirSync(SRC_DIR).filter((name) =>
      name.endsWith(".ts"),
    );
    expect(sources.length).toBeGreaterThanOrEqual(5);
    for (const name of sources) {
      const text = readFileSync(join(SRC_DIR, name), "utf-8");
      // band cut-offs in any spelling
      expect(text).not.toMatch(/33\.0|34\.5|36\.5/);
      // no comparison against any temperature-band literal (30-43)
      expect(text).not.toMatch(/[<>]=?\s*(3\d|4[0-3])(\.\d+)?\b/);
      expect(text).not.toMatch(/\b(3\d|4[0-3])(\.\d+)?\s*[<>]=?/);
    }
  });
});
