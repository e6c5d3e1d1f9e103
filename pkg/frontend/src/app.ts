/** Page wiring: form submission, hint display, diagnosis and history
 * panels. All verdicts come from the server; this module only moves
 * values between the form, the API client, and the render helpers. */

import { ApiClient } from "./api.js";
import { ApiError, Diagnosis, ReadingSubmission } from "./types.js";
import { parseTeatInput, thermometerHint } from "./validation.js";
import {
  clear,
  renderDiagnosis,
  renderFieldErrors,
  renderHistory,
  renderNotice,
} from "./views.js";

const TEAT_IDS = ["teat-1", "teat-2", "teat-3", "teat-4"] as const;

function element<T extends HTMLElement>(doc: Document, id: string): T {
  const found = doc.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

/** Read the form into a submission; throws with a message on unusable
 * local input (missing animal id or non-numeric teat). Range issues are
 * NOT errors here: the server decides those. */
export function readForm(doc: Document): ReadingSubmission {
  const animalId = Number(element<HTMLInputElement>(doc, "animal-id").value);
  if (!Number.isInteger(animalId) || animalId < 1) {
    throw new Error("animal id must be a positive integer");
  }
  const date = element<HTMLInputElement>(doc, "reading-date").value;
  if (!date) {
    throw new Error("pick a reading date");
  }
  const teats: number[] = [];
  for (const id of TEAT_IDS) {
    const value = parseTeatInput(element<HTMLInputElement>(doc, id).value);
    if (value === null) {
      throw new Error("all four teat temperatures are required");
    }
    teats.push(value);
  }
  return {
    animal_id: animalId,
    date,
    teats: teats as [number, number, number, number],
    cup_test: element<HTMLInputElement>(doc, "cup-test").checked,
  };
}

function showHint(doc: Document, teatId: string): void {
  const input = element<HTMLInputElement>(doc, teatId);
  const hint = element<HTMLElement>(doc, `${teatId}-hint`);
  const value = parseTeatInput(input.value);
  const message = value === null ? null : thermometerHint(value);
  hint.textContent = message ?? "";
  input.classList.toggle("suspect", message !== null);
}

async function refreshHistory(
  doc: Document,
  client: ApiClient,
  animalId: number,
): Promise<void> {
  const rows = await client.animalHistory(animalId);
  renderHistory(element(doc, "history"), rows);
  element(doc, "history-title").textContent = `History for animal ${animalId}`;
}

async function showLast(doc: Document, client: ApiClient): Promise<void> {
  const panel = element<HTMLElement>(doc, "diagnosis");
  const last: Diagnosis | null = await client.lastReading();
  if (last === null) {
    renderNotice(panel, "No readings stored yet.");
  } else {
    renderDiagnosis(panel, last);
  }
}

/** Attach behaviour to the already-present markup. Returns a promise that
 * settles once the initial last-reading load finishes. */
export function initApp(doc: Document, baseUrl = ""): Promise<void> {
  const client = new ApiClient(baseUrl);
  const form = element<HTMLFormElement>(doc, "reading-form");
  const errorsPanel = element<HTMLElement>(doc, "form-errors");

  for (const id of TEAT_IDS) {
    element<HTMLInputElement>(doc, id).addEventListener("input", () =>
      showHint(doc, id),
    );
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void (async () => {
      clear(errorsPanel);
      let submission: ReadingSubmission;
      try {
        submission = readForm(doc);
      } catch (problem) {
        renderNotice(errorsPanel, (problem as Error).message);
        return;
      }
      try {
        const diagnosis = await client.submitReading(submission);
        renderDiagnosis(element(doc, "diagnosis"), diagnosis);
        await refreshHistory(doc, client, diagnosis.animal_id);
      } catch (problem) {
        if (problem instanceof ApiError) {
          renderFieldErrors(errorsPanel, problem.errors);
        } else {
          renderNotice(errorsPanel, `service unreachable: ${String(problem)}`);
        }
      }
    })();
  });

  return showLast(doc, client).catch(() => {
    renderNotice(element(doc, "diagnosis"), "service unreachable");
  });
}
