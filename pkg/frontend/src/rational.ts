/** Exact rationals on the client: parsing, formatting, comparison.
 *
 * The client never does objective arithmetic (optima come from the API);
 * these helpers only parse user input for the penalty factor and format
 * API rationals for display.
 */
import type { Rational } from "./types.js";

/** Slider stops; anything else is entered as custom p/q text. */
export const LAMBDA_GRID: Rational[] = [
  { num: 0, den: 1 },
  { num: 1, den: 4 },
  { num: 1, den: 2 },
  { num: 3, den: 4 },
  { num: 1, den: 1 },
];

function gcd(a: number, b: number): number {
  while (b !== 0) {
    [a, b] = [b, a % b];
  }
  return a;
}

/** Parse "p/q" or integer text into a non-negative rational in lowest terms. */
export function parseRational(text: string): Rational | null {
  const parts = text.trim().split("/");
  if (parts.length > 2) return null;
  const num = Number(parts[0]);
  const den = parts.length === 2 ? Number(parts[1]) : 1;
  if (!Number.isInteger(num) || !Number.isInteger(den)) return null;
  if (parts.some((p) => p.trim() === "")) return null;
  if (num < 0 || den < 1) return null;
  const g = gcd(num, den) || 1;
  return { num: num / g, den: den / g };
}

export function formatRational(r: Rational): string {
  return r.den === 1 ? String(r.num) : `${r.num}/${r.den}`;
}

export function rationalToNumber(r: Rational): number {
  return r.num / r.den;
}

export function rationalsEqual(a: Rational, b: Rational): boolean {
  return a.num * b.den === b.num * a.den;
}

/** Index of the grid stop equal to r, or -1 when r is a custom value. */
export function gridIndexOf(r: Rational): number {
  return LAMBDA_GRID.findIndex((stop) => rationalsEqual(stop, r));
}
