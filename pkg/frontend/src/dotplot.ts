// Pure transform: aggregate rows -> dot-plot viewmodel. No fetching, no DOM.

import { EMOTIONS, emotionColor } from "./colors.js";
import { DEFAULT_POLARITY_COLORS } from "./colors.js";
import type { AggregateRow } from "./types.js";

export interface BarSegment {
  polarity: "negative" | "neutral" | "positive";
  count: number;
  fraction: number; // of the row's own bar length
  color: string;
}

export interface Dot {
  emotion: string;
  x: number; // the emotion mean, untransformed, in [0, 1]
  color: string;
  contributingCount: number;
}

export interface DotPlotRow {
  label: string;
  total: number;
  maxTotal: number; // shared scale so bar lengths are comparable across rows
  segments: BarSegment[];
  dots: Dot[];
}

export interface DotPlotViewModel {
  empty: boolean;
  rows: DotPlotRow[];
}

const POLARITY_ORDER = ["negative", "neutral", "positive"] as const;

export function buildDotPlotViewModel(
  payload: readonly AggregateRow[],
  polarityColors: Record<string, string> = DEFAULT_POLARITY_COLORS,
): DotPlotViewModel {
  if (payload.length === 0) {
    return { empty: true, rows: [] };
  }
  const maxTotal = Math.max(...payload.map((r) => r.tweet_count));
  const rows = payload.map((row): DotPlotRow => {
    const total = row.tweet_count;
    const segments = POLARITY_ORDER.map((polarity): BarSegment => {
      const count = row.polarity_counts[polarity];
      return {
        polarity,
        count,
        fraction: total > 0 ? count / total : 0,
        color: polarityColors[polarity] ?? "#444444",
      };
    });
    const dots = EMOTIONS.map((emotion): Dot => {
      const stat = row.emotion_means[emotion];
      return {
        emotion,
        x: stat ? stat.mean : 0,
        color: emotionColor(emotion),
        contributingCount: stat ? stat.contributing_count : 0,
      };
    });
    return { label: row.key, total, maxTotal, segments, dots };
  });
  return { empty: false, rows };
}
