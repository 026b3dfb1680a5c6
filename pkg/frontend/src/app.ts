/** DOM wiring for the turn advisor.
 *
 * The app builds its UI inside a root element so tests can mount it in
 * jsdom with a mocked fetch. Nothing here computes an optimum: panels
 * render view models that pass API payloads through verbatim.
 */
import { ApiClient, ApiError, NetworkError } from "./api.js";
import { chartDots, DEFAULT_LAYOUT, hitTest } from "./chart.js";
import {
  ATTRIBUTE_FIELDS, emptyRow, HandDraft, newDraft, rowFromCard, validateDraft,
} from "./draft.js";
import { SolvePanel } from "./panel.js";
import {
  formatRational, gridIndexOf, LAMBDA_GRID, parseRational,
} from "./rational.js";
import type { InstanceWire, Rational, SolutionWire, SweepWire } from "./types.js";
import { solutionView, sweepRowView } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";

interface SweepState {
  instance: InstanceWire;
  sweep: SweepWire;
}

export class App {
  readonly draft: HandDraft = newDraft();
  readonly panel: SolvePanel;

  private sweepState: SweepState | null = null;
  private sweepSeq = 0;
  private sweepController: AbortController | null = null;
  private lastAction: (() => void) | null = null;

  private readonly handBody: HTMLTableSectionElement;
  private readonly lambdaSlider: HTMLInputElement;
  private readonly lambdaCustom: HTMLInputElement;
  private readonly lambdaShown: HTMLElement;
  private readonly poolInput: HTMLInputElement;
  private readonly banner: HTMLElement;
  private readonly formErrors: HTMLElement;
  private readonly currentBox: HTMLElement;
  private readonly previousBox: HTMLElement;
  private readonly sweepBox: HTMLElement;
  private readonly catalogResults: HTMLElement;
  private readonly catalogQuery: HTMLInputElement;

  constructor(private readonly root: HTMLElement,
              private readonly api: ApiClient) {
    this.panel = new SolvePanel(api);
    root.innerHTML = `
      <section class="editor">
        <h2>Hand</h2>
        <table class="hand">
          <thead><tr><th>card</th><th>attack</th><th>cost</th>
            <th>resource</th><th>defense</th><th></th></tr></thead>
          <tbody data-testid="hand-body"></tbody>
        </table>
        <div class="hand-actions">
          <button type="button" data-testid="add-row">Add card</button>
          <input data-testid="catalog-query" placeholder="search catalog...">
          <button type="button" data-testid="catalog-search">Search</button>
        </div>
        <div class="catalog-results" data-testid="catalog-results"></div>
        <div class="factor">
          <label>penalty factor
            <input type="range" min="0" max="4" step="1" value="0"
                   data-testid="lambda-slider">
          </label>
          <input size="6" value="0" data-testid="lambda-custom" title="custom p/q">
          <span class="factor-shown" data-testid="lambda-shown">0</span>
        </div>
        <label class="pool">starting resources
          <input size="4" value="0" data-testid="pool-input">
        </label>
        <div class="submit-row">
          <button type="button" data-testid="solve-btn">Solve</button>
          <button type="button" data-testid="sweep-btn">Sweep</button>
        </div>
        <div class="form-errors" data-testid="form-errors"></div>
        <div class="banner" data-testid="banner" hidden></div>
      </section>
      <section class="results">
        <div class="result-box" data-testid="current-result"></div>
        <div class="result-box previous" data-testid="previous-result"></div>
      </section>
      <section class="sweep" data-testid="sweep-view"></section>
    `;
    this.handBody = this.query("hand-body");
    this.lambdaSlider = this.query("lambda-slider");
    this.lambdaCustom = this.query("lambda-custom");
    this.lambdaShown = this.query("lambda-shown");
    this.poolInput = this.query("pool-input");
    this.banner = this.query("banner");
    this.formErrors = this.query("form-errors");
    this.currentBox = this.query("current-result");
    this.previousBox = this.query("previous-result");
    this.sweepBox = this.query("sweep-view");
    this.catalogResults = this.query("catalog-results");
    this.catalogQuery = this.query("catalog-query");

    this.query<HTMLButtonElement>("add-row").onclick = () => {
      this.draft.rows.push(emptyRow());
      this.renderHand();
    };
    this.query<HTMLButtonElement>("catalog-search").onclick = () => {
      void this.searchCatalog();
    };
    this.lambdaSlider.oninput = () => {
      const stop = LAMBDA_GRID[Number(this.lambdaSlider.value)];
      this.setLambda(formatRational(stop));
    };
    this.lambdaCustom.oninput = () => {
      this.setLambda(this.lambdaCustom.value, { fromCustomField: true });
    };
    this.poolInput.oninput = () => {
      this.draft.initialResources = this.poolInput.value;
    };
    this.query<HTMLButtonElement>("solve-btn").onclick = () => {
      void this.submitSolve();
    };
    this.query<HTMLButtonElement>("sweep-btn").onclick = () => {
      void this.submitSweep();
    };
    this.renderHand();
  }

  private query<T extends HTMLElement = HTMLElement>(testId: string): T {
    const el = this.root.querySelector(`[data-testid="${testId}"]`);
    if (!el) throw new Error(`missing element ${testId}`);
    return el as T;
  }

  private setLambda(text: string, opts: { fromCustomField?: boolean } = {}): void {
    this.draft.lambdaText = text;
    if (!opts.fromCustomField) {
      this.lambdaCustom.value = text;
    }
    const parsed = parseRational(text);
    if (parsed) {
      const index = gridIndexOf(parsed);
      if (index >= 0) this.lambdaSlider.value = String(index);
      this.lambdaShown.textContent = formatRational(parsed);
    } else {
      this.lambdaShown.textContent = "?";
    }
  }

  private renderHand(rowErrors: ReturnType<typeof validateDraft>["rowErrors"] = []): void {
    this.handBody.innerHTML = "";
    this.draft.rows.forEach((row, index) => {
      const tr = document.createElement("tr");
      tr.dataset.testid = `hand-row-${index}`;
      const errors = rowErrors[index] ?? {};

      const nameCell = document.createElement("td");
      const nameInput = document.createElement("input");
      nameInput.value = row.name;
      nameInput.dataset.testid = `row-${index}-name`;
      nameInput.oninput = () => { row.name = nameInput.value; };
      nameCell.appendChild(nameInput);
      nameCell.appendChild(this.inlineError(errors.name));
      tr.appendChild(nameCell);

      for (const field of ATTRIBUTE_FIELDS) {
        const cell = document.createElement("td");
        const input = document.createElement("input");
        input.size = 3;
        input.value = row[field];
        input.dataset.testid = `row-${index}-${field}`;
        input.oninput = () => { row[field] = input.value; };
        cell.appendChild(input);
        cell.appendChild(this.inlineError(errors[field]));
        tr.appendChild(cell);
      }

      const removeCell = document.createElement("td");
      const removeBtn = document.createElement("button");
      removeBtn.type = "button";
      removeBtn.textContent = "×";
      removeBtn.dataset.testid = `row-${index}-remove`;
      removeBtn.onclick = () => {
        this.draft.rows.splice(index, 1);
        this.renderHand();
      };
      removeCell.appendChild(removeBtn);
      tr.appendChild(removeCell);

      this.handBody.appendChild(tr);
    });
  }

  private inlineError(message: string | undefined): HTMLElement {
    const span = document.createElement("span");
    span.className = "field-error";
    span.dataset.testid = "field-error";
    if (message) span.textContent = message;
    else span.hidden = true;
    return span;
  }

  private async searchCatalog(): Promise<void> {
    this.catalogResults.innerHTML = "";
    let cards;
    try {
      cards = await this.api.cards(this.catalogQuery.value);
    } catch (error) {
      this.showBanner(`catalog lookup failed: ${(error as Error).message}`,
                      () => void this.searchCatalog());
      return;
    }
    if (cards.length === 0) {
      this.catalogResults.textContent = "no matches";
      return;
    }
    for (const card of cards) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "catalog-card";
      button.dataset.testid = "catalog-card";
      button.textContent = `${card.name} (a${card.attack} t${card.pitch_cost} `
        + `r${card.pitch_resource} d${card.defense})`;
      button.onclick = () => {
        this.draft.rows.push(rowFromCard(card));
        this.renderHand();
      };
      this.catalogResults.appendChild(button);
    }
  }

  private validated(): InstanceWire | null {
    const validation = validateDraft(this.draft);
    this.renderHand(validation.rowErrors);
    this.formErrors.textContent =
      [validation.lambdaError, validation.poolError].filter(Boolean).join("; ");
    return validation.ok ? validation.instance! : null;
  }

  async submitSolve(): Promise<void> {
    const instance = this.validated();
    if (!instance) return;
    this.hideBanner();
    const outcome = await this.panel.submit(instance);
    switch (outcome.kind) {
      case "applied":
        this.renderResults();
        break;
      case "stale":
        break;
      case "api-error":
        this.showApiError(outcome.error);
        break;
      case "network-error":
        this.showBanner(`network failure: ${outcome.error.message}`,
                        () => void this.submitSolve());
        break;
    }
  }

  async submitSweep(): Promise<void> {
    const instance = this.validated();
    if (!instance) return;
    this.hideBanner();
    const lambdas: Rational[] = [...LAMBDA_GRID];
    if (gridIndexOf(instance.lambda) < 0) {
      lambdas.push(instance.lambda);
    }
    const mySeq = ++this.sweepSeq;
    this.sweepController?.abort();
    const controller = new AbortController();
    this.sweepController = controller;
    let sweep: SweepWire;
    try {
      sweep = await this.api.sweep(instance, lambdas, controller.signal);
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") return;
      if (mySeq !== this.sweepSeq) return;
      if (error instanceof ApiError) {
        this.showApiError(error);
      } else if (error instanceof NetworkError) {
        this.showBanner(`network failure: ${error.message}`,
                        () => void this.submitSweep());
      } else {
        throw error;
      }
      return;
    }
    if (mySeq !== this.sweepSeq) return;
    this.sweepState = { instance, sweep };
    this.renderSweep();
  }

  private showApiError(error: ApiError): void {
    // a validation detail like "instance.cards[2].attack: ..." lands on
    // the matching row input; anything else goes to the form-error line
    const match = /instance\.cards\[(\d+)\]\.(\w+): (.*)/.exec(error.body.detail);
    if (match) {
      const rowErrors = this.draft.rows.map(() => ({}));
      const index = Number(match[1]);
      if (index < rowErrors.length) {
        (rowErrors[index] as Record<string, string>)[match[2]] = match[3];
        this.renderHand(rowErrors);
        return;
      }
    }
    this.formErrors.textContent = error.body.detail;
  }

  private showBanner(message: string, retry: () => void): void {
    this.lastAction = retry;
    this.banner.hidden = false;
    this.banner.innerHTML = "";
    this.banner.appendChild(document.createTextNode(message + " "));
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = "Retry";
    button.dataset.testid = "retry-btn";
    button.onclick = () => {
      this.hideBanner();
      this.lastAction?.();
    };
    this.banner.appendChild(button);
  }

  private hideBanner(): void {
    this.banner.hidden = true;
    this.banner.innerHTML = "";
  }

  private renderResults(): void {
    this.renderResultBox(this.currentBox, "Current recommendation",
                         this.panel.current);
    this.renderResultBox(this.previousBox, "Previous (for comparison)",
                         this.panel.previous);
  }

  private renderResultBox(box: HTMLElement, title: string,
                          result: { instance: InstanceWire; solution: SolutionWire } | null): void {
    box.innerHTML = "";
    if (!result) return;
    const view = solutionView(result.instance, result.solution);

    const heading = document.createElement("h3");
    heading.textContent = title;
    box.appendChild(heading);

    const z = document.createElement("p");
    z.className = "objective";
    const zExact = document.createElement("strong");
    zExact.dataset.testid = "z-exact";
    zExact.textContent = `Z = ${view.zExact}`;
    z.appendChild(zExact);
    const zDec = document.createElement("span");
    zDec.dataset.testid = "z-decimal";
    zDec.textContent = ` (≈ ${view.zDecimal})`;
    z.appendChild(zDec);
    z.appendChild(document.createTextNode(`  [${view.solverName}]`));
    box.appendChild(z);

    if (view.emptyHandMessage) {
      const empty = document.createElement("p");
      empty.dataset.testid = "empty-hand";
      empty.textContent = view.emptyHandMessage;
      box.appendChild(empty);
    }

    const list = document.createElement("ul");
    list.className = "badges";
    for (const badge of view.badges) {
      const item = document.createElement("li");
      const name = document.createElement("span");
      name.textContent = badge.cardName + " ";
      item.appendChild(name);
      const pill = document.createElement("span");
      pill.className = `badge role-${badge.role}`;
      pill.dataset.testid = "role-badge";
      pill.textContent = badge.label;
      item.appendChild(pill);
      list.appendChild(item);
    }
    box.appendChild(list);

    const totals = document.createElement("dl");
    totals.className = "totals";
    for (const [label, value] of view.totalsRows) {
      const dt = document.createElement("dt");
      dt.textContent = label;
      const dd = document.createElement("dd");
      dd.dataset.testid = `total-${label.replaceAll(" ", "-")}`;
      dd.textContent = String(value);
      totals.appendChild(dt);
      totals.appendChild(dd);
    }
    box.appendChild(totals);
  }

  private renderSweep(): void {
    this.sweepBox.innerHTML = "";
    if (!this.sweepState) return;
    const { instance, sweep } = this.sweepState;
    const currentLambda = parseRational(this.draft.lambdaText) ?? instance.lambda;

    const heading = document.createElement("h2");
    heading.textContent = "Trade-off: attack vs defense kept";
    this.sweepBox.appendChild(heading);

    const dots = chartDots(sweep.points, currentLambda);
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("width", String(DEFAULT_LAYOUT.width));
    svg.setAttribute("height", String(DEFAULT_LAYOUT.height));
    svg.dataset.testid = "sweep-chart";
    for (const dot of dots) {
      const point = sweep.points[dot.index];
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(dot.x));
      circle.setAttribute("cy", String(dot.y));
      circle.setAttribute("r", dot.isCurrent ? "9" : "6");
      circle.setAttribute("class", dot.isCurrent ? "dot current" : "dot");
      circle.dataset.testid = `sweep-dot-${dot.index}`;
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `factor ${sweepRowView(point, dot.isCurrent).lambdaText}: `
        + `attack ${dot.attackTotal}, kept ${dot.defenseRetained}`;
      circle.appendChild(title);
      circle.addEventListener("click", () => this.loadSweepPoint(dot.index));
      svg.appendChild(circle);
    }
    svg.addEventListener("click", (event) => {
      const target = event.target as Element;
      if (target.tagName === "circle") return; // handled on the dot
      const rect = svg.getBoundingClientRect();
      const index = hitTest(dots, event.clientX - rect.left, event.clientY - rect.top);
      if (index >= 0) this.loadSweepPoint(index);
    });
    this.sweepBox.appendChild(svg);

    const table = document.createElement("table");
    table.className = "sweep-rows";
    const head = document.createElement("tr");
    head.innerHTML = "<th>factor</th><th>Z</th><th>attack</th><th>kept</th><th></th>";
    table.appendChild(head);
    sweep.points.forEach((point, index) => {
      const view = sweepRowView(point, dots[index].isCurrent);
      const tr = document.createElement("tr");
      if (view.isCurrent) tr.className = "current";
      tr.dataset.testid = `sweep-row-${index}`;
      tr.innerHTML = `<td>${view.lambdaText}</td><td>${view.zExact}</td>`
        + `<td>${view.attackTotal}</td><td>${view.defenseRetained}</td>`;
      const cell = document.createElement("td");
      const load = document.createElement("button");
      load.type = "button";
      load.textContent = "load";
      load.dataset.testid = `sweep-load-${index}`;
      load.onclick = () => this.loadSweepPoint(index);
      cell.appendChild(load);
      tr.appendChild(cell);
      table.appendChild(tr);
    });
    this.sweepBox.appendChild(table);
  }

  loadSweepPoint(index: number): void {
    if (!this.sweepState) return;
    const { instance, sweep } = this.sweepState;
    const point = sweep.points[index];
    if (!point) return;
    const solution: SolutionWire = {
      assignment: point.assignment,
      objective: point.objective,
      totals: point.totals,
      solver_name: "sweep",
    };
    this.panel.loadResult({ ...instance, lambda: point.lambda }, solution);
    this.renderResults();
  }
}

export function initApp(root: HTMLElement, api: ApiClient): App {
  return new App(root, api);
}
