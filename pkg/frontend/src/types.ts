/** Wire types of the readings JSON API. The client renders these values
 * verbatim; all classification happens on the server. */

export interface ReadingSubmission {
  animal_id: number;
  date: string; // ISO YYYY-MM-DD
  teats: [number, number, number, number];
  cup_test: boolean;
}

export interface ReferenceRange {
  status: string;
  range: string;
}

export interface Diagnosis {
  record_id: number;
  animal_id: number;
  date: string;
  teats: number[];
  cup_test: boolean;
  status_legacy: string;
  status_worst_teat: string;
  reference_ranges: ReferenceRange[];
}

export interface FieldError {
  field: string;
  message: string;
}

/** Non-2xx API response, carrying the server's field errors when present. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly errors: FieldError[],
  ) {
    super(
      errors.length > 0
        ? errors.map((e) => `${e.field}: ${e.message}`).join("; ")
        : `request failed with status ${status}`,
    );
    this.name = "ApiError";
  }
}
