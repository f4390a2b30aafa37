// Ranking diffs for what-if exploration: which alternatives moved between
// the saved solve and the transient what-if solve.

const GROUP_SEPARATOR = /\s[≻⪰]\s/; // ≻ or ⪰
const TIE_SEPARATOR = /\s≡\s/; // ≡

export interface ParsedOrder {
  linear: boolean;
  groups: string[][];
}

export function parseOrder(order: string): ParsedOrder {
  if (order.includes(";") || order.includes("≷")) {
    return { linear: false, groups: [] };
  }
  const groups = order
    .split(GROUP_SEPARATOR)
    .map((part) => part.split(TIE_SEPARATOR).map((s) => s.trim()));
  return { linear: true, groups };
}

export type Movement = "up" | "down" | "same";

export interface RankDelta {
  label: string;
  before: number;
  after: number;
  movement: Movement;
}

/** Per-alternative group movement, or null when either order is not linear. */
export function diffOrders(before: string, after: string): RankDelta[] | null {
  const a = parseOrder(before);
  const b = parseOrder(after);
  if (!a.linear || !b.linear) return null;
  const position = (parsed: ParsedOrder): Map<string, number> => {
    const map = new Map<string, number>();
    parsed.groups.forEach((group, index) =>
      group.forEach((label) => map.set(label, index)),
    );
    return map;
  };
  const beforePos = position(a);
  const afterPos = position(b);
  const labels = [...beforePos.keys()].filter((label) => afterPos.has(label));
  return labels.map((label) => {
    const from = beforePos.get(label)!;
    const to = afterPos.get(label)!;
    return {
      label,
      before: from,
      after: to,
      movement: to < from ? "up" : to > from ? "down" : "same",
    };
  });
}

export function describeDelta(delta: RankDelta): string {
  if (delta.movement === "same") return `${delta.label}: unchanged`;
  const arrow = delta.movement === "up" ? "↑" : "↓";
  return `${delta.label}: ${arrow} group ${delta.before + 1} → ${delta.after + 1}`;
}
