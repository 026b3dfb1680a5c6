/** Geometry for the sweep trade-off chart.
 *
 * One dot per sweep point at (defense retained, attack total), both taken
 * straight from the API totals; the dot for the draft's current factor is
 * highlighted. Pure functions so the layout and hit-testing are testable
 * without a DOM.
 */
import { rationalsEqual } from "./rational.js";
import type { Rational, SweepPointWire } from "./types.js";

export interface ChartLayout {
  width: number;
  height: number;
  margin: number;
}

export interface ChartDot {
  index: number;      // into the sweep points array
  x: number;          // pixel coords
  y: number;
  defenseRetained: number;
  attackTotal: number;
  isCurrent: boolean;
}

export const DEFAULT_LAYOUT: ChartLayout = { width: 420, height: 260, margin: 36 };

function scale(value: number, lo: number, hi: number,
               pixelLo: number, pixelHi: number): number {
  if (hi === lo) {
    return (pixelLo + pixelHi) / 2;
  }
  return pixelLo + ((value - lo) / (hi - lo)) * (pixelHi - pixelLo);
}

export function chartDots(points: SweepPointWire[], currentLambda: Rational,
                          layout: ChartLayout = DEFAULT_LAYOUT): ChartDot[] {
  if (points.length === 0) return [];
  const xs = points.map((p) => p.totals.defense_retained);
  const ys = points.map((p) => p.totals.attack_total);
  const [xLo, xHi] = [Math.min(...xs), Math.max(...xs)];
  const [yLo, yHi] = [Math.min(...ys), Math.max(...ys)];
  const { width, height, margin } = layout;
  return points.map((point, index) => ({
    index,
    x: scale(point.totals.defense_retained, xLo, xHi, margin, width - margin),
    // pixel y grows downward; attack grows upward
    y: scale(point.totals.attack_total, yLo, yHi, height - margin, margin),
    defenseRetained: point.totals.defense_retained,
    attackTotal: point.totals.attack_total,
    isCurrent: rationalsEqual(point.lambda, currentLambda),
  }));
}

/** Index of the nearest dot within `radius` pixels, or -1. */
export function hitTest(dots: ChartDot[], x: number, y: number,
                        radius = 14): number {
  let best = -1;
  let bestDistance = radius * radius;
  for (const dot of dots) {
    const d2 = (dot.x - x) ** 2 + (dot.y - y) ** 2;
    if (d2 <= bestDistance) {
      best = dot.index;
      bestDistance = d2;
    }
  }
  return best;
}
