import { describe, expect, it } from "vitest";

import { emptyRow, newDraft, rowFromCard, validateDraft } from "../src/draft.js";

function draftWithRow(overrides: Partial<ReturnType<typeof emptyRow>> = {}) {
  const draft = newDraft();
  draft.rows.push({ ...emptyRow(), name: "c1", ...overrides });
  return draft;
}

describe("validateDraft", () => {
  it("accepts a valid draft and builds the instance payload", () => {
    const draft = draftWithRow({ attack: "4", pitch_cost: "2",
                                 pitch_resource: "1", defense: "2" });
    draft.lambdaText = "1/2";
    draft.initialResources = "3";
    const result = validateDraft(draft);
    expect(result.ok).toBe(true);
    expect(result.instance).toEqual({
      cards: [{ name: "c1", attack: 4, pitch_cost: 2, pitch_resource: 1, defense: 2 }],
      lambda: { num: 1, den: 2 },
      initial_resources: 3,
    });
  });

  it("accepts an empty hand", () => {
    const result = validateDraft(newDraft());
    expect(result.ok).toBe(true);
    expect(result.instance!.cards).toEqual([]);
  });

  it("rejects negative attributes with a row-level error", () => {
    const result = validateDraft(draftWithRow({ attack: "-1" }));
    expect(result.ok).toBe(false);
    expect(result.rowErrors[0].attack).toMatch(/integer/);
    expect(result.instance).toBeUndefined();
  });

  it("rejects non-integer attributes", () => {
    for (const bad of ["1.5", "x", ""]) {
      const result = validateDraft(draftWithRow({ defense: bad }));
      expect(result.ok, bad).toBe(false);
      expect(result.rowErrors[0].defense).toBeDefined();
    }
  });

  it("rejects blank names", () => {
    const result = validateDraft(draftWithRow({ name: "  " }));
    expect(result.ok).toBe(false);
    expect(result.rowErrors[0].name).toMatch(/non-empty/);
  });

  it("rejects invalid penalty factors", () => {
    const draft = draftWithRow();
    draft.lambdaText = "1/0";
    const result = validateDraft(draft);
    expect(result.ok).toBe(false);
    expect(result.lambdaError).toBeDefined();
  });

  it("rejects a negative pool", () => {
    const draft = draftWithRow();
    draft.initialResources = "-2";
    const result = validateDraft(draft);
    expect(result.ok).toBe(false);
    expect(result.poolError).toBeDefined();
  });
});

describe("rowFromCard", () => {
  it("stringifies catalog attributes for editing", () => {
    const row = rowFromCard({ name: "Energy Potion", attack: 0, pitch_cost: 0,
                              pitch_resource: 4, defense: 0 });
    expect(row).toEqual({ name: "Energy Potion", attack: "0", pitch_cost: "0",
                          pitch_resource: "4", defense: "0" });
  });
});
