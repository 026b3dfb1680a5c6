/** Solve-panel state: one in-flight request, stale responses discarded.
 *
 * Every submission gets a sequence number; a response is applied only if
 * no newer submission has started since (superseded drafts lose the
 * race by design). Submitting also aborts the previous in-flight
 * request, keeping at most one outstanding solve per panel. The last
 * applied result is retained side-by-side as "previous" for comparison.
 */
import { ApiClient, ApiError, NetworkError } from "./api.js";
import type { InstanceWire, SolutionWire } from "./types.js";

export interface PanelResult {
  seq: number;
  instance: InstanceWire;
  solution: SolutionWire;
}

export type SubmitOutcome =
  | { kind: "applied"; result: PanelResult }
  | { kind: "stale"; seq: number }
  | { kind: "api-error"; error: ApiError }
  | { kind: "network-error"; error: NetworkError };

export class SolvePanel {
  current: PanelResult | null = null;
  previous: PanelResult | null = null;

  private seq = 0;
  private controller: AbortController | null = null;

  constructor(private readonly api: ApiClient) {}

  get lastSubmittedSeq(): number {
    return this.seq;
  }

  async submit(instance: InstanceWire): Promise<SubmitOutcome> {
    const mySeq = ++this.seq;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;

    let solution: SolutionWire;
    try {
      solution = await this.api.solve(instance, controller.signal);
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") {
        return { kind: "stale", seq: mySeq };
      }
      if (mySeq !== this.seq) {
        return { kind: "stale", seq: mySeq };
      }
      if (error instanceof ApiError) {
        return { kind: "api-error", error };
      }
      if (error instanceof NetworkError) {
        return { kind: "network-error", error };
      }
      throw error;
    }

    if (mySeq !== this.seq) {
      return { kind: "stale", seq: mySeq };
    }
    return { kind: "applied", result: this.apply(mySeq, instance, solution) };
  }

  /** Load an already-solved result (e.g. a clicked sweep point) as current. */
  loadResult(instance: InstanceWire, solution: SolutionWire): PanelResult {
    return this.apply(++this.seq, instance, solution);
  }

  private apply(seq: number, instance: InstanceWire,
                solution: SolutionWire): PanelResult {
    if (this.current !== null) {
      this.previous = this.current;
    }
    this.current = { seq, instance, solution };
    return this.current;
  }
}
