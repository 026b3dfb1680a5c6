/** View models: everything the panels display, built verbatim from API
 * payloads. No optimum, objective, or total is ever computed here; the
 * client only reformats what the server returned (the one exception is
 * pairing each role with the card name the user submitted).
 */
import { formatRational, rationalToNumber } from "./rational.js";
import type { InstanceWire, RoleWire, SolutionWire, SweepPointWire } from "./types.js";

export interface BadgeView {
  cardName: string;
  role: RoleWire;
  label: string; // "Attack" | "Pitch" | "Defend"
}

export interface SolutionView {
  zExact: string;    // exact p/q straight from the API
  zDecimal: string;  // decimal approximation, display-only
  badges: BadgeView[];
  emptyHandMessage: string | null;
  totalsRows: Array<[string, number]>;
  solverName: string;
}

const ROLE_LABELS: Record<RoleWire, string> = {
  attack: "Attack",
  pitch: "Pitch",
  defend: "Defend",
};

export function roleLabel(role: RoleWire): string {
  return ROLE_LABELS[role];
}

export function solutionView(instance: InstanceWire,
                             solution: SolutionWire): SolutionView {
  const badges = solution.assignment.map((role, i) => ({
    cardName: instance.cards[i]?.name ?? `card ${i + 1}`,
    role,
    label: ROLE_LABELS[role],
  }));
  const totals = solution.totals;
  return {
    zExact: formatRational(solution.objective),
    zDecimal: rationalToNumber(solution.objective).toLocaleString("en-US", {
      maximumFractionDigits: 4,
    }),
    badges,
    emptyHandMessage: badges.length === 0 ? "Z = 0, keep nothing" : null,
    totalsRows: [
      ["attack total", totals.attack_total],
      ["pitch cost", totals.pitch_cost_total],
      ["resources generated", totals.resources_generated],
      ["defense retained", totals.defense_retained],
      ["defense lost", totals.defense_lost],
    ],
    solverName: solution.solver_name,
  };
}

export interface SweepRowView {
  lambdaText: string;
  zExact: string;
  attackTotal: number;
  defenseRetained: number;
  isCurrent: boolean;
}

export function sweepRowView(point: SweepPointWire, isCurrent: boolean): SweepRowView {
  return {
    lambdaText: formatRational(point.lambda),
    zExact: formatRational(point.objective),
    attackTotal: point.totals.attack_total,
    defenseRetained: point.totals.defense_retained,
    isCurrent,
  };
}
