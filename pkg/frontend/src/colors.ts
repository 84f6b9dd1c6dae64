// Fixed, injective emotion palette (Okabe-Ito based, colorblind-safe).
// Identical across views and sessions; the legend always shows it.

export const EMOTIONS = [
  "anger",
  "fear",
  "anticipation",
  "trust",
  "surprise",
  "sadness",
  "joy",
  "disgust",
] as const;

export type Emotion = (typeof EMOTIONS)[number];

export const EMOTION_COLORS: Record<Emotion, string> = {
  anger: "#d55e00",
  fear: "#882255",
  anticipation: "#e69f00",
  trust: "#009e73",
  surprise: "#56b4e9",
  sadness: "#0072b2",
  joy: "#999933",
  disgust: "#cc79a7",
};

// Fallback when /api/meta is not loaded yet; meta wins once fetched.
export const DEFAULT_POLARITY_COLORS: Record<string, string> = {
  negative: "#d62728",
  neutral: "#1f77b4",
  positive: "#2ca02c",
};

export function emotionColor(emotion: string): string {
  return EMOTION_COLORS[emotion as Emotion] ?? "#444444";
}
