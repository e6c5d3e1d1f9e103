/** DOM rendering. Statuses arrive as strings from the API and are shown
 * verbatim; the mapping below only picks a colour for a known label. */

import { Diagnosis, FieldError } from "./types.js";

const SEVERITY_CLASS: Record<string, string> = {
  Healthy: "severity-green",
  Attention: "severity-amber",
  Sick: "severity-red",
  Indeterminate: "severity-gray",
};

export function severityClass(label: string): string {
  return SEVERITY_CLASS[label] ?? "severity-unknown";
}

export function clear(target: HTMLElement): void {
  target.replaceChildren();
}

function badge(doc: Document, label: string): HTMLElement {
  const span = doc.createElement("span");
  span.className = `badge ${severityClass(label)}`;
  span.textContent = label;
  return span;
}

/** Latest-diagnosis panel: verdict badges plus the server's ranges. */
export function renderDiagnosis(target: HTMLElement, diagnosis: Diagnosis): void {
  const doc = target.ownerDocument;
  clear(target);

  const heading = doc.createElement("p");
  heading.className = "diagnosis-heading";
  heading.textContent =
    `Animal ${diagnosis.animal_id} on ${diagnosis.date}, teats ` +
    diagnosis.teats.map((t) => t.toFixed(1)).join(" / ") +
    ` °C, cup test ${diagnosis.cup_test ? "positive" : "negative"}`;
  target.appendChild(heading);

  const verdict = doc.createElement("p");
  verdict.className = "verdict";
  verdict.append("Status: ", badge(doc, diagnosis.status_worst_teat));
  const legacyNote = doc.createElement("small");
  legacyNote.className = "legacy-note";
  legacyNote.append(" device-era rule: ", badge(doc, diagnosis.status_legacy));
  verdict.appendChild(legacyNote);
  target.appendChild(verdict);

  const list = doc.createElement("ul");
  list.className = "reference-ranges";
  for (const entry of diagnosis.reference_ranges) {
    const item = doc.createElement("li");
    item.append(badge(doc, entry.status), ` ${entry.range}`);
    list.appendChild(item);
  }
  target.appendChild(list);
}

/** History table for one animal, newest row last. */
export function renderHistory(target: HTMLElement, rows: Diagnosis[]): void {
  const doc = target.ownerDocument;
  clear(target);
  if (rows.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "history-empty";
    empty.textContent = "No readings for this animal yet.";
    target.appendChild(empty);
    return;
  }
  const table = doc.createElement("table");
  table.className = "history";
  const head = doc.createElement("tr");
  for (const column of ["Date", "Teats (°C)", "Cup test", "Status"]) {
    const cell = doc.createElement("th");
    cell.textContent = column;
    head.appendChild(cell);
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = doc.createElement("tr");
    const cells = [
      row.date,
      row.teats.map((t) => t.toFixed(1)).join(" / "),
      row.cup_test ? "positive" : "negative",
    ];
    for (const text of cells) {
      const td = doc.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    const statusCell = doc.createElement("td");
    statusCell.appendChild(badge(doc, row.status_worst_teat));
    tr.appendChild(statusCell);
    table.appendChild(tr);
  }
  target.appendChild(table);
}

/** Inline list of the server's field errors. */
export function renderFieldErrors(target: HTMLElement, errors: FieldError[]): void {
  const doc = target.ownerDocument;
  clear(target);
  const list = doc.createElement("ul");
  list.className = "field-errors";
  for (const error of errors) {
    const item = doc.createElement("li");
    item.textContent = `${error.field}: ${error.message}`;
    list.appendChild(item);
  }
  target.appendChild(list);
}

export function renderNotice(target: HTMLElement, message: string): void {
  const doc = target.ownerDocument;
  clear(target);
  const note = doc.createElement("p");
  note.className = "notice";
  note.textContent = message;
  target.appendChild(note);
}
