/** Wire types for the /api/v1 JSON API. Rationals are always {num, den}. */

export interface Rational {
  num: number;
  den: number;
}

export interface CardWire {
  name: string;
  attack: number;
  pitch_cost: number;
  pitch_resource: number;
  defense: number;
}

export interface InstanceWire {
  cards: CardWire[];
  lambda: Rational;
  initial_resources: number;
}

export type RoleWire = "attack" | "pitch" | "defend";

export interface TotalsWire {
  attack_total: number;
  pitch_cost_total: number;
  resources_generated: number;
  defense_retained: number;
  defense_lost: number;
}

export interface SolutionWire {
  assignment: RoleWire[];
  objective: Rational;
  totals: TotalsWire;
  solver_name: string;
}

export interface SweepPointWire {
  lambda: Rational;
  objective: Rational;
  totals: TotalsWire;
  assignment: RoleWire[];
}

export interface SweepWire {
  points: SweepPointWire[];
}

export interface ApiErrorBody {
  error: string;
  detail: string;
}
