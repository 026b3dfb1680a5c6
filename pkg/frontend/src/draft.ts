/** The editable hand draft and its client-side validation.
 *
 * Validation mirrors the server's instance rules (non-empty names,
 * non-negative integer attributes, lambda num >= 0 / den >= 1,
 * non-negative pool) so invalid drafts never produce a request.
 */
import { parseRational } from "./rational.js";
import type { CardWire, InstanceWire, Rational } from "./types.js";

export interface DraftRow {
  name: string;
  attack: string;
  pitch_cost: string;
  pitch_resource: string;
  defense: string;
}

export interface HandDraft {
  rows: DraftRow[];
  lambdaText: string;
  initialResources: string;
}

export type AttributeField = "attack" | "pitch_cost" | "pitch_resource" | "defense";
export const ATTRIBUTE_FIELDS: AttributeField[] = [
  "attack", "pitch_cost", "pitch_resource", "defense",
];

export type RowErrors = Partial<Record<"name" | AttributeField, string>>;

export interface DraftValidation {
  ok: boolean;
  instance?: InstanceWire;
  lambda?: Rational;
  rowErrors: RowErrors[];
  lambdaError?: string;
  poolError?: string;
}

export function emptyRow(): DraftRow {
  return { name: "", attack: "0", pitch_cost: "0", pitch_resource: "0", defense: "0" };
}

export function rowFromCard(card: CardWire): DraftRow {
  return {
    name: card.name,
    attack: String(card.attack),
    pitch_cost: String(card.pitch_cost),
    pitch_resource: String(card.pitch_resource),
    defense: String(card.defense),
  };
}

export function newDraft(): HandDraft {
  return { rows: [], lambdaText: "0", initialResources: "0" };
}

function parseAttribute(text: string): number | null {
  if (text.trim() === "") return null;
  const value = Number(text);
  if (!Number.isInteger(value) || value < 0) return null;
  return value;
}

export function validateDraft(draft: HandDraft): DraftValidation {
  const rowErrors: RowErrors[] = [];
  const cards: CardWire[] = [];
  let ok = true;

  for (const row of draft.rows) {
    const errors: RowErrors = {};
    if (row.name.trim() === "") {
      errors.name = "name must be non-empty";
    }
    const values: Partial<Record<AttributeField, number>> = {};
    for (const field of ATTRIBUTE_FIELDS) {
      const value = parseAttribute(row[field]);
      if (value === null) {
        errors[field] = "must be an integer ≥ 0";
      } else {
        values[field] = value;
      }
    }
    rowErrors.push(errors);
    if (Object.keys(errors).length > 0) {
      ok = false;
    } else {
      cards.push({
        name: row.name.trim(),
        attack: values.attack!,
        pitch_cost: values.pitch_cost!,
        pitch_resource: values.pitch_resource!,
        defense: values.defense!,
      });
    }
  }

  const lambda = parseRational(draft.lambdaText);
  let lambdaError: string | undefined;
  if (lambda === null) {
    lambdaError = "penalty factor must be p/q with p ≥ 0, q ≥ 1";
    ok = false;
  }

  const pool = parseAttribute(draft.initialResources);
  let poolError: string | undefined;
  if (pool === null) {
    poolError = "pool must be an integer ≥ 0";
    ok = false;
  }

  if (!ok) {
    return { ok, rowErrors, lambdaError, poolError };
  }
  return {
    ok,
    rowErrors,
    lambda: lambda!,
    instance: { cards, lambda: lambda!, initial_resources: pool! },
  };
}
