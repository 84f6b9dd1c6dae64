// Payload shapes of the four read-only API endpoints.

export interface PolarityCounts {
  negative: number;
  neutral: number;
  positive: number;
}

export interface EmotionMean {
  mean: number;
  contributing_count: number;
}

export interface AggregateRow {
  axis: string;
  key: string;
  tweet_count: number;
  polarity_counts: PolarityCounts;
  emotion_means: Record<string, EmotionMean>;
}

export interface GroupKeyPayload {
  axis: string;
  value: string;
}

export type HigherSide = "A" | "B" | "none";

export interface TornadoRowPayload {
  emotion: string;
  score_a: number;
  score_b: number;
  delta: number;
  higher_side: HigherSide;
}

export interface ComparisonPayload {
  key_a: GroupKeyPayload;
  key_b: GroupKeyPayload;
  rows: TornadoRowPayload[];
}

export interface MetaPayload {
  tweet_count: number;
  rejected_count: number;
  date_min: string | null;
  date_max: string | null;
  states_present: string[];
  emotions: string[];
  positive_feelings: string[];
  negative_feelings: string[];
  polarity_colors: Record<string, string>;
  version: string;
}

export interface TweetPayload {
  id: string;
  text: string;
  created_at: string;
  state: string;
  lang: string;
  compound: number;
  polarity: string;
  confidence: number;
  emotions: Record<string, number>;
  category: string;
}

export interface TweetPage {
  axis: string;
  value: string;
  total: number;
  limit: number;
  offset: number;
  tweets: TweetPayload[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
}
