// Pure transform: comparison payload -> tornado viewmodel. The numbers
// pass through verbatim; only the renderer applies display formatting.

import { emotionColor } from "./colors.js";
import type { ComparisonPayload } from "./types.js";

export interface TornadoOverlay {
  side: "A" | "B";
  length: number; // equals the payload delta
}

export interface TornadoVmRow {
  emotion: string;
  left: number; // side A score
  right: number; // side B score
  overlay: TornadoOverlay | null; // null when scores are equal
  color: string;
}

export interface TornadoViewModel {
  labelA: string;
  labelB: string;
  axis: string;
  rows: TornadoVmRow[];
}

export function buildTornadoViewModel(payload: ComparisonPayload): TornadoViewModel {
  const rows = payload.rows.map((row): TornadoVmRow => {
    const overlay: TornadoOverlay | null =
      row.higher_side === "none"
        ? null
        : { side: row.higher_side, length: row.delta };
    return {
      emotion: row.emotion,
      left: row.score_a,
      right: row.score_b,
      overlay,
      color: emotionColor(row.emotion),
    };
  });
  return {
    labelA: payload.key_a.value,
    labelB: payload.key_b.value,
    axis: payload.key_a.axis,
    rows,
  };
}
