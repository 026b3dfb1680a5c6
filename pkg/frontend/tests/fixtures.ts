/** Shared fixtures: the 3-card worked example and the exact bodies the
 * solver service returns for it (captured from a live run). */
import type { InstanceWire, SolutionWire, SweepWire } from "../src/types.js";

export const THREE_CARD_INSTANCE: InstanceWire = {
  cards: [
    { name: "c1", attack: 4, pitch_cost: 2, pitch_resource: 1, defense: 2 },
    { name: "c2", attack: 0, pitch_cost: 0, pitch_resource: 3, defense: 1 },
    { name: "c3", attack: 3, pitch_cost: 1, pitch_resource: 2, defense: 3 },
  ],
  lambda: { num: 0, den: 1 },
  initial_resources: 0,
};

export const THREE_CARD_SOLUTION: SolutionWire = {
  assignment: ["attack", "pitch", "attack"],
  objective: { num: 7, den: 1 },
  totals: {
    attack_total: 7,
    pitch_cost_total: 3,
    resources_generated: 3,
    defense_retained: 0,
    defense_lost: 6,
  },
  solver_name: "dp",
};

export const THREE_CARD_SWEEP: SweepWire = {
  points: [
    { lambda: { num: 0, den: 1 }, objective: { num: 7, den: 1 },
      totals: { attack_total: 7, pitch_cost_total: 3, resources_generated: 3,
                defense_retained: 0, defense_lost: 6 },
      assignment: ["attack", "pitch", "attack"] },
    { lambda: { num: 1, den: 4 }, objective: { num: 11, den: 2 },
      totals: { attack_total: 7, pitch_cost_total: 3, resources_generated: 3,
                defense_retained: 0, defense_lost: 6 },
      assignment: ["attack", "pitch", "attack"] },
    { lambda: { num: 1, den: 2 }, objective: { num: 4, den: 1 },
      totals: { attack_total: 7, pitch_cost_total: 3, resources_generated: 3,
                defense_retained: 0, defense_lost: 6 },
      assignment: ["attack", "pitch", "attack"] },
    { lambda: { num: 3, den: 4 }, objective: { num: 5, den: 2 },
      totals: { attack_total: 7, pitch_cost_total: 3, resources_generated: 3,
                defense_retained: 0, defense_lost: 6 },
      assignment: ["attack", "pitch", "attack"] },
    { lambda: { num: 1, den: 1 }, objective: { num: 1, den: 1 },
      totals: { attack_total: 4, pitch_cost_total: 2, resources_generated: 3,
                defense_retained: 3, defense_lost: 3 },
      assignment: ["attack", "pitch", "defend"] },
  ],
};

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
