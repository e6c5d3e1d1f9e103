/** Thin fetch wrapper around the readings JSON API. */

import { ApiError, Diagnosis, FieldError, ReadingSubmission } from "./types.js";

async function fieldErrors(response: Response): Promise<FieldError[]> {
  try {
    const body = await response.json();
    if (body && Array.isArray(body.errors)) {
      return body.errors as FieldError[];
    }
  } catch {
    // non-JSON error body; fall through to a bare status error
  }
  return [];
}

async function unwrap<T>(response: Response): Promise<T> {
  if (!response.ok) {
    throw new ApiError(response.status, await fieldErrors(response));
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  /** POST one reading; resolves to the server's diagnosis. */
  async submitReading(body: ReadingSubmission): Promise<Diagnosis> {
    const response = await fetch(`${this.baseUrl}/api/v1/readings`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return unwrap<Diagnosis>(response);
  }

  /** Newest stored reading, or null while the store is empty. */
  async lastReading(): Promise<Diagnosis | null> {
    const response = await fetch(`${this.baseUrl}/api/v1/readings/last`);
    if (response.status === 404) {
      return null;
    }
    return unwrap<Diagnosis>(response);
  }

  /** One animal's readings, optionally within an inclusive ISO date window. */
  async animalHistory(
    animalId: number,
    window: { from?: string; to?: string } = {},
  ): Promise<Diagnosis[]> {
    const query = new URLSearchParams();
    if (window.from) query.set("from", window.from);
    if (window.to) query.set("to", window.to);
    const suffix = query.size > 0 ? `?${query.toString()}` : "";
    const response = await fetch(
      `${this.baseUrl}/api/v1/animals/${animalId}/readings${suffix}`,
    );
    return unwrap<Diagnosis[]>(response);
  }
}
