import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import type { Queue, Report, ReportEntry, Verdict } from "../src/types.js";
import { banner, highlight, sortedRows } from "../src/view.js";

// --- mocked backend ----------------------------------------------------------

function makeReport(verdict: Verdict = "compliant"): Report {
  const entries: ReportEntry[] = [];
  for (let i = 1; i <= 45; i++) {
    const mandatory = i <= 26;
    // R8 is the low-confidence mandatory requirement under review
    const satisfied = i !== 4; // R4 violated (optional-looking but mandatory? keep i=4 violated)
    entries.push({
      id: `R${i}`,
      code: `C${i}`,
      category: i <= 9 ? "MD" : "PO",
      mandatory,
      status: satisfied ? "satisfied" : "violated",
      score: satisfied ? (i === 8 ? 0.4 : 0.9) : 0,
      evidence: satisfied ? { statement_id: `s${i}`, text: `statement ${i}` } : null,
      missing_roles: i === 8 ? ["constraint"] : [],
      recommendations: i === 8 ? ["Missing: constraint — expected content like 'x'"] : [],
      gdpr_refs: [],
    });
  }
  return {
    document_id: "doc",
    verdict,
    generated_at: "t",
    warnings: [],
    entries,
  };
}

interface MockState {
  report: Report;
  rejected: Set<string>;
  calls: string[];
  failReview?: boolean;
  reviewDelay?: Promise<void>;
}

function currentVerdict(state: MockState): Verdict {
  const mandatoryViolated = state.report.entries.some(
    (e) => e.mandatory && (e.status === "violated" || (e.evidence && state.rejected.has(`${e.id}:${e.evidence.statement_id}`))),
  );
  return mandatoryViolated ? "not_compliant" : state.report.verdict;
}

function queueFor(state: MockState, tau: number): Queue {
  const items = state.report.entries
    .filter((e) => e.status === "satisfied" && e.evidence && e.score > 0 && e.score <= tau)
    .filter((e) => !state.rejected.has(`${e.id}:${e.evidence!.statement_id}`))
    .map((e) => ({
      requirement_id: e.id,
      statement_id: e.evidence!.statement_id,
      text: e.evidence!.text,
      score: e.score,
      missing_roles: e.missing_roles,
      decision: "pending" as const,
    }));
  return { tau_review: tau, items };
}

function mockFetch(state: MockState) {
  return async (input: string, init?: RequestInit): Promise<Response> => {
    state.calls.push(`${init?.method ?? "GET"} ${input}`);
    const json = (body: unknown, status = 200) =>
      new Response(JSON.stringify(body), { status, headers: { "Content-Type": "application/json" } });
    if (input.startsWith("/api/report")) return json(state.report);
    if (input.startsWith("/api/queue")) {
      const tau = parseFloat(new URLSearchParams(input.split("?")[1] ?? "").get("tau") ?? "0.5");
      return json(queueFor(state, tau));
    }
    if (input.startsWith("/api/review")) {
      if (state.reviewDelay) await state.reviewDelay;
      if (state.failReview) return json({ detail: "unknown requirement id" }, 400);
      const body = JSON.parse(String(init?.body));
      if (!state.report.entries.some((e) => e.id === body.req)) return json({ detail: `unknown requirement id '${body.req}'` }, 400);
      if (body.decision === "reject") state.rejected.add(`${body.req}:${body.stmt}`);
      return json({ ok: true, verdict: currentVerdict(state) });
    }
    if (input.startsWith("/api/verdict")) {
      return json({
        document_id: "doc",
        verdict: currentVerdict(state),
        warnings: [],
        satisfied: 0,
        violated: 0,
        audited: state.rejected.size,
      });
    }
    return json({ detail: "not found" }, 404);
  };
}

async function mount(state: MockState): Promise<App> {
  document.body.innerHTML = '<div id="app"></div>';
  const app = new App(document.getElementById("app")!, new ApiClient(mockFetch(state)), "tester");
  await app.start();
  return app;
}

function fullyCompliantState(): MockState {
  const report = makeReport("compliant");
  for (const entry of report.entries) {
    if (entry.status === "violated") {
      entry.status = "satisfied";
      entry.score = 0.9;
      entry.evidence = { statement_id: `s${entry.id}`, text: `statement ${entry.id}` };
    }
  }
  return { report, rejected: new Set(), calls: [] };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

// --- load_report ---------------------------------------------------------------

describe("report loading", () => {
  it("renders one row per entry (45)", async () => {
    await mount(fullyCompliantState());
    expect(document.querySelectorAll("#report-table tr.row")).toHaveLength(45);
  });

  it("sorts mandatory violations first", async () => {
    const state = fullyCompliantState();
    state.report.entries[11].status = "violated"; // R12, mandatory
    state.report.entries[11].score = 0;
    await mount(state);
    const firstRow = document.querySelector("#report-table tr.row");
    expect(firstRow?.getAttribute("data-id")).toBe("R12");
  });

  it("shows an amber banner for indeterminate verdicts", async () => {
    const state = fullyCompliantState();
    state.report.verdict = "indeterminate";
    await mount(state);
    const node = document.getElementById("banner")!;
    expect(node.className).toContain("banner-warn");
    expect(node.textContent).toBe("INDETERMINATE");
  });

  it("shows an error banner with a retry control when the API is unreachable", async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const failing = async () => {
      throw new Error("connection refused");
    };
    const app = new App(document.getElementById("app")!, new ApiClient(failing), "tester");
    await app.start();
    const node = document.getElementById("banner")!;
    expect(node.className).toContain("banner-error");
    expect(document.getElementById("retry")).not.toBeNull();
  });
});

// --- tau slider -------------------------------------------------------------------

describe("queue threshold", () => {
  it("defaults to 0.5 on first load", async () => {
    const state = fullyCompliantState();
    await mount(state);
    expect(state.calls).toContain("GET /api/queue?tau=0.5");
    const slider = document.getElementById("tau") as HTMLInputElement;
    expect(slider.value).toBe("0.5");
  });

  it("empties the queue at tau = 0", async () => {
    const state = fullyCompliantState();
    const app = await mount(state);
    await app.adjustTau(0);
    expect(document.querySelectorAll(".queue-item")).toHaveLength(0);
    expect(document.querySelector("#queue .hint")?.textContent).toBe("queue is empty");
  });

  it("lists every satisfied requirement at tau = 1", async () => {
    const state = fullyCompliantState();
    const app = await mount(state);
    await app.adjustTau(1);
    const satisfied = state.report.entries.filter((e) => e.status === "satisfied").length;
    expect(document.querySelectorAll(".queue-item")).toHaveLength(satisfied);
    expect(document.getElementById("tau-label")?.textContent).toContain(`${satisfied} statements`);
  });
});

// --- triage -----------------------------------------------------------------------

describe("triage", () => {
  it("rejecting the sole evidence of a mandatory requirement flips the banner", async () => {
    const state = fullyCompliantState();
    const app = await mount(state);
    expect(document.getElementById("banner")?.textContent).toBe("COMPLIANT");

    const item = queueFor(state, 0.5).items.find((i) => i.requirement_id === "R8")!;
    await app.triage(item, "reject");

    const node = document.getElementById("banner")!;
    expect(node.textContent).toBe("NOT COMPLIANT");
    expect(node.className).toContain("banner-bad");
    expect(state.calls.filter((c) => c.startsWith("POST /api/review"))).toHaveLength(1);
  });

  it("accepting marks the item without changing the verdict", async () => {
    const state = fullyCompliantState();
    const app = await mount(state);
    const item = queueFor(state, 0.5).items.find((i) => i.requirement_id === "R8")!;
    await app.triage(item, "accept");
    expect(document.getElementById("banner")?.textContent).toBe("COMPLIANT");
    expect(state.calls.filter((c) => c.startsWith("POST /api/review"))).toHaveLength(1);
  });

  it("double submission is blocked while a post is in flight", async () => {
    const state = fullyCompliantState();
    let release: () => void = () => undefined;
    state.reviewDelay = new Promise((resolve) => {
      release = resolve;
    });
    const app = await mount(state);
    const item = queueFor(state, 0.5).items.find((i) => i.requirement_id === "R8")!;
    const first = app.triage(item, "reject");
    const second = app.triage(item, "reject");
    release();
    await Promise.all([first, second]);
    expect(state.calls.filter((c) => c.startsWith("POST /api/review"))).toHaveLength(1);
  });

  it("a 400 from the server renders an inline item error", async () => {
    const state = fullyCompliantState();
    state.failReview = true;
    const app = await mount(state);
    const item = queueFor(state, 0.5).items.find((i) => i.requirement_id === "R8")!;
    await app.triage(item, "reject");
    const error = document.querySelector('[data-error-for="R8:s8"]');
    expect(error?.textContent).toContain("unknown requirement");
    expect(document.getElementById("banner")?.textContent).toBe("COMPLIANT");
  });
});

// --- pure view helpers ----------------------------------------------------------------

describe("view helpers", () => {
  it("maps verdicts to banner states", () => {
    expect(banner("compliant")).toEqual({ label: "COMPLIANT", kind: "ok" });
    expect(banner("not_compliant")).toEqual({ label: "NOT COMPLIANT", kind: "bad" });
    expect(banner("indeterminate")).toEqual({ label: "INDETERMINATE", kind: "warn" });
  });

  it("keeps row count stable under sorting", () => {
    const report = makeReport();
    expect(sortedRows(report)).toHaveLength(report.entries.length);
  });

  it("highlights role spans when present and degrades to plain text", () => {
    const spans = { actor: [[0, 3]] as Array<[number, number]> };
    expect(highlight("the processor", spans)).toEqual([
      { text: "the", role: "actor" },
      { text: " processor", role: null },
    ]);
    expect(highlight("plain text")).toEqual([{ text: "plain text", role: null }]);
  });
});
