// DOM wiring: every state transition is driven by a fresh server response
// (no optimistic updates), and in-flight review posts disable their controls.

import { ApiClient } from "./api.js";
import type { Queue, QueueItem, Report, ReportEntry } from "./types.js";
import { banner, highlight, scorePercent, sortedRows } from "./view.js";

const DEFAULT_TAU = 0.5;

export class App {
  private report: Report | null = null;
  private queue: Queue | null = null;
  private tau = DEFAULT_TAU;
  private selected: string | null = null;
  private inFlight = new Set<string>();

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly reviewer = "analyst",
  ) {}

  async start(): Promise<void> {
    this.renderSkeleton();
    await this.loadReport();
  }

  async loadReport(): Promise<void> {
    try {
      this.report = await this.api.report();
      this.queue = await this.api.queue(this.tau);
    } catch (err) {
      this.renderError(err instanceof Error ? err.message : String(err));
      return;
    }
    this.render();
  }

  async adjustTau(value: number): Promise<void> {
    this.tau = value;
    try {
      this.queue = await this.api.queue(value);
    } catch (err) {
      this.renderError(err instanceof Error ? err.message : String(err));
      return;
    }
    this.renderQueue();
    this.renderTauLabel();
  }

  async triage(item: QueueItem, decision: "accept" | "reject"): Promise<void> {
    const key = `${item.requirement_id}:${item.statement_id}`;
    if (this.inFlight.has(key)) return;
    this.inFlight.add(key);
    this.renderQueue();
    try {
      await this.api.review(item.requirement_id, item.statement_id, decision, this.reviewer);
    } catch (err) {
      this.inFlight.delete(key);
      this.renderQueue();
      this.showItemError(key, err instanceof Error ? err.message : String(err));
      return;
    }
    this.inFlight.delete(key);
    // confirmed by the server: refresh verdict and queue from it
    try {
      const verdict = await this.api.verdict();
      if (this.report) this.report = { ...this.report, verdict: verdict.verdict };
      this.queue = await this.api.queue(this.tau);
    } catch (err) {
      this.renderError(err instanceof Error ? err.message : String(err));
      return;
    }
    this.renderBanner();
    this.renderQueue();
  }

  // --- rendering ------------------------------------------------------------

  private el<K extends keyof HTMLElementTagNameMap>(tag: K, cls?: string, text?: string): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (cls) node.className = cls;
    if (text !== undefined) node.textContent = text;
    return node;
  }

  private renderSkeleton(): void {
    this.root.innerHTML = "";
    const header = this.el("header");
    header.appendChild(this.el("h1", "", "DPA compliance review"));
    header.appendChild(this.el("div", "banner", "loading…")).id = "banner";
    this.root.appendChild(header);

    const main = this.el("main");
    const left = this.el("section", "panel");
    left.id = "report-panel";
    left.appendChild(this.el("h2", "", "Requirements"));
    const table = this.el("table");
    table.id = "report-table";
    left.appendChild(table);
    main.appendChild(left);

    const right = this.el("section", "panel");
    right.id = "side-panel";
    const detail = this.el("div");
    detail.id = "detail";
    right.appendChild(this.el("h2", "", "Detail"));
    right.appendChild(detail);

    right.appendChild(this.el("h2", "", "Review queue"));
    const tauRow = this.el("div", "tau-row");
    const slider = this.el("input") as HTMLInputElement;
    slider.type = "range";
    slider.id = "tau";
    slider.min = "0";
    slider.max = "1";
    slider.step = "0.05";
    slider.value = String(this.tau);
    slider.addEventListener("input", () => void this.adjustTau(parseFloat(slider.value)));
    tauRow.appendChild(slider);
    tauRow.appendChild(this.el("span", "tau-label")).id = "tau-label";
    right.appendChild(tauRow);
    const queue = this.el("div");
    queue.id = "queue";
    right.appendChild(queue);
    main.appendChild(right);
    this.root.appendChild(main);
    this.renderTauLabel();
  }

  private renderError(message: string): void {
    const node = this.root.querySelector("#banner");
    if (!node) return;
    node.className = "banner banner-error";
    node.textContent = `error: ${message}`;
    const retry = this.el("button", "retry", "retry");
    retry.id = "retry";
    retry.addEventListener("click", () => void this.loadReport());
    node.appendChild(retry);
  }

  private render(): void {
    this.renderBanner();
    this.renderTable();
    this.renderQueue();
    this.renderDetail();
    this.renderTauLabel();
  }

  private renderBanner(): void {
    const node = this.root.querySelector("#banner");
    if (!node || !this.report) return;
    const state = banner(this.report.verdict);
    node.className = `banner banner-${state.kind}`;
    node.textContent = state.label;
  }

  private renderTauLabel(): void {
    const node = this.root.querySelector("#tau-label");
    if (!node) return;
    const count = this.queue ? this.queue.items.length : 0;
    node.textContent = `τ = ${this.tau.toFixed(2)} — ${count} statement${count === 1 ? "" : "s"} to review`;
  }

  private renderTable(): void {
    const table = this.root.querySelector("#report-table");
    if (!table || !this.report) return;
    table.innerHTML = "";
    const head = this.el("tr");
    for (const title of ["ID", "Code", "Cat", "Mandatory", "Status", "Score"]) {
      head.appendChild(this.el("th", "", title));
    }
    table.appendChild(head);
    for (const entry of sortedRows(this.report)) {
      const row = this.el("tr", `row status-${entry.status}${entry.mandatory ? " mandatory" : ""}`);
      row.setAttribute("data-id", entry.id);
      row.appendChild(this.el("td", "", entry.id));
      row.appendChild(this.el("td", "", entry.code));
      row.appendChild(this.el("td", "", entry.category));
      row.appendChild(this.el("td", "badge", entry.mandatory ? "mandatory" : "optional"));
      row.appendChild(this.el("td", `chip chip-${entry.status}`, entry.status));
      const scoreCell = this.el("td", "score-cell");
      const bar = this.el("div", "score-bar");
      const fill = this.el("div", "score-fill");
      fill.style.width = `${scorePercent(entry.score)}%`;
      bar.appendChild(fill);
      scoreCell.appendChild(bar);
      scoreCell.appendChild(this.el("span", "score-num", entry.score.toFixed(2)));
      row.appendChild(scoreCell);
      row.addEventListener("click", () => {
        this.selected = entry.id;
        this.renderDetail();
      });
      table.appendChild(row);
    }
  }

  private renderDetail(): void {
    const node = this.root.querySelector("#detail");
    if (!node || !this.report) return;
    node.innerHTML = "";
    const entry: ReportEntry | undefined = this.report.entries.find((e) => e.id === this.selected);
    if (!entry) {
      node.appendChild(this.el("p", "hint", "select a requirement"));
      return;
    }
    node.appendChild(this.el("h3", "", `${entry.id} (${entry.code})`));
    if (entry.evidence) {
      const quote = this.el("blockquote");
      for (const chunk of highlight(entry.evidence.text)) {
        const span = this.el("span", chunk.role ? `role role-${chunk.role}` : "", chunk.text);
        if (chunk.role) span.title = chunk.role;
        quote.appendChild(span);
      }
      node.appendChild(quote);
      node.appendChild(this.el("p", "hint", `evidence: ${entry.evidence.statement_id}`));
    } else {
      node.appendChild(this.el("p", "hint", "no evidence statement"));
    }
    if (entry.missing_roles.length) {
      node.appendChild(this.el("p", "missing", `missing roles: ${entry.missing_roles.join(", ")}`));
    }
    for (const rec of entry.recommendations) {
      node.appendChild(this.el("p", "recommendation", rec));
    }
  }

  private renderQueue(): void {
    const node = this.root.querySelector("#queue");
    if (!node) return;
    node.innerHTML = "";
    if (!this.queue || this.queue.items.length === 0) {
      node.appendChild(this.el("p", "hint", "queue is empty"));
      return;
    }
    for (const item of this.queue.items) {
      const key = `${item.requirement_id}:${item.statement_id}`;
      const card = this.el("div", `queue-item decision-${item.decision ?? "pending"}`);
      card.setAttribute("data-key", key);
      card.appendChild(this.el("strong", "", `${item.requirement_id} — score ${item.score.toFixed(2)}`));
      card.appendChild(this.el("p", "stmt", item.text));
      if (item.decision && item.decision !== "pending") {
        card.appendChild(this.el("span", "decided", item.decision));
      } else {
        for (const decision of ["accept", "reject"] as const) {
          const button = this.el("button", decision, decision);
          button.disabled = this.inFlight.has(key);
          button.addEventListener("click", () => void this.triage(item, decision));
          card.appendChild(button);
        }
      }
      const error = this.el("span", "item-error");
      error.setAttribute("data-error-for", key);
      card.appendChild(error);
      node.appendChild(card);
    }
    this.renderTauLabel();
  }

  private showItemError(key: string, message: string): void {
    const node = this.root.querySelector(`[data-error-for="${key}"]`);
    if (node) node.textContent = message;
  }
}
