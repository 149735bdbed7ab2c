export type Verdict = "compliant" | "not_compliant" | "indeterminate";
export type Status = "satisfied" | "violated" | "skipped";
export type Decision = "pending" | "accept" | "reject";

export interface Evidence {
  statement_id: string;
  text: string;
}

export interface ReportEntry {
  id: string;
  code: string;
  category: string;
  mandatory: boolean;
  status: Status;
  score: number;
  evidence: Evidence | null;
  missing_roles: string[];
  recommendations: string[];
  gdpr_refs: string[];
}

export interface Report {
  document_id: string;
  verdict: Verdict;
  generated_at: string;
  warnings: string[];
  entries: ReportEntry[];
}

export interface QueueItem {
  requirement_id: string;
  statement_id: string;
  text: string;
  score: number;
  missing_roles: string[];
  decision?: Decision;
}

export interface Queue {
  tau_review: number;
  items: QueueItem[];
}

export interface VerdictInfo {
  document_id: string;
  verdict: Verdict;
  warnings: string[];
  satisfied: number;
  violated: number;
  audited: number;
}

/** Optional frame debug dump: role -> character spans within the statement text. */
export interface RoleSpans {
  [role: string]: Array<[number, number]>;
}
