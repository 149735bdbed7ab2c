// Pure projections of API payloads into view state; no DOM, no fetch.

import type { Report, ReportEntry, RoleSpans, Verdict } from "./types.js";

export interface BannerState {
  label: string;
  kind: "ok" | "bad" | "warn";
}

export function banner(verdict: Verdict): BannerState {
  switch (verdict) {
    case "compliant":
      return { label: "COMPLIANT", kind: "ok" };
    case "not_compliant":
      return { label: "NOT COMPLIANT", kind: "bad" };
    case "indeterminate":
      return { label: "INDETERMINATE", kind: "warn" };
  }
}

const STATUS_ORDER: Record<string, number> = { violated: 0, satisfied: 1, skipped: 2 };

/** Table rows: mandatory violations first, then by requirement number. */
export function sortedRows(report: Report): ReportEntry[] {
  const num = (id: string) => parseInt(id.slice(1), 10);
  return [...report.entries].sort((a, b) => {
    const aKey = a.mandatory && a.status === "violated" ? 0 : 1;
    const bKey = b.mandatory && b.status === "violated" ? 0 : 1;
    if (aKey !== bKey) return aKey - bKey;
    const byStatus = (STATUS_ORDER[a.status] ?? 3) - (STATUS_ORDER[b.status] ?? 3);
    if (aKey === 1 && byStatus !== 0) return byStatus;
    return num(a.id) - num(b.id);
  });
}

export interface TextChunk {
  text: string;
  role: string | null;
}

/** Evidence text split into role-highlighted chunks; spans are optional
 * (frame debug dumps) and the text degrades to a single plain chunk. */
export function highlight(text: string, spans?: RoleSpans): TextChunk[] {
  if (!spans) return [{ text, role: null }];
  const marks: Array<{ start: number; end: number; role: string }> = [];
  for (const [role, ranges] of Object.entries(spans)) {
    for (const [start, end] of ranges) {
      if (start >= 0 && end <= text.length && start < end) marks.push({ start, end, role });
    }
  }
  marks.sort((a, b) => a.start - b.start || b.end - a.end);
  const chunks: TextChunk[] = [];
  let cursor = 0;
  for (const mark of marks) {
    if (mark.start < cursor) continue; // overlapping span: keep the first
    if (mark.start > cursor) chunks.push({ text: text.slice(cursor, mark.start), role: null });
    chunks.push({ text: text.slice(mark.start, mark.end), role: mark.role });
    cursor = mark.end;
  }
  if (cursor < text.length) chunks.push({ text: text.slice(cursor), role: null });
  return chunks.length ? chunks : [{ text, role: null }];
}

export function scorePercent(score: number): number {
  return Math.round(Math.min(Math.max(score, 0), 1) * 100);
}
