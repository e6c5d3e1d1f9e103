/** Client-side form hints.
 *
 * These are advisory only: the form always submits and the server's
 * validation is authoritative. The range below is the thermometer's
 * working range, repeated here purely to warn about likely typos.
 */

export const THERMOMETER_RANGE: readonly [number, number] = [32.0, 42.9];

/** Parse a temperature field; null when not a finite number. */
export function parseTeatInput(text: string): number | null {
  if (text.trim() === "") {
    return null;
  }
  const value = Number(text);
  return Number.isFinite(value) ? value : null;
}

/** Advisory warning for a suspicious reading; never blocks submission. */
export function thermometerHint(value: number): string | null {
  const [low, high] = THERMOMETER_RANGE;
  if (value < low || value > high) {
    return `outside the thermometer range ${low}–${high} °C; the server will decide`;
  }
  return null;
}
