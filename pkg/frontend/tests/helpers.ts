/** Shared test plumbing: mount the real page markup, drive the form. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

const here = dirname(fileURLToPath(import.meta.url));

export const SRC_DIR = join(here, "..", "src");

/** Body markup from index.html with script tags stripped. */
export function pageMarkup(): string {
  const html = readFileSync(join(here, "..", "index.html"), "utf-8");
  const body = html.match(/<body>([\s\S]*)<\/body>/);
  if (!body || body[1] === undefined) {
    throw new Error("index.html has no <body>");
  }
  return body[1].replace(/<script[\s\S]*?<\/script>/g, "");
}

export function mountPage(): void {
  document.body.innerHTML = pageMarkup();
}

export function setInput(id: string, value: string): void {
  const input = document.getElementById(id) as HTMLInputElement;
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function setCheckbox(id: string, checked: boolean): void {
  (document.getElementById(id) as HTMLInputElement).checked = checked;
}

export function submitForm(): void {
  const form = document.getElementById("reading-form") as HTMLFormElement;
  form.dispatchEvent(new Event("submit", { cancelable: true }));
}

export function textOf(id: string): string {
  return document.getElementById(id)?.textContent ?? "";
}

/** Let queued promise chains and zero-delay timers run to completion. */
export async function flush(rounds = 6): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export interface StubCall {
  url: string;
  method: string;
  body: unknown;
}

export interface StubResponse {
  status: number;
  body: unknown;
}

/** Replace global fetch with a recording stub driven by `handler`. */
export function stubFetch(
  handler: (url: string, init?: RequestInit) => StubResponse,
): StubCall[] {
  const calls: StubCall[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (url: string | URL, init?: RequestInit) => {
      const target = String(url);
      calls.push({
        url: target,
        method: init?.method ?? "GET",
        body: init?.body ? JSON.parse(String(init.body)) : undefined,
      });
      const { status, body } = handler(target, init);
      return new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
      });
    }),
  );
  return calls;
}

export function diagnosisPayload(overrides: Record<string, unknown> = {}) {
  return {
    record_id: 1,
    animal_id: 12,
    date: "2020-10-29",
    teats: [35.5, 35.6, 35.4, 35.6],
    cup_test: false,
    status_legacy: "Attention",
    status_worst_teat: "Attention",
    reference_ranges: [
      { status: "Healthy", range: "33.0 < t ≤ 34.5 °C" },
      { status: "Attention", range: "34.5 < t ≤ 36.5 °C" },
      { status: "Sick", range: "t > 36.5 °C" },
    ],
    ...overrides,
  };
}
