// Filter panel state and its mapping onto /api/aggregate query params.

export interface FilterState {
  states: string[];
  emotion: string | null;
  scoreMin: number; // inclusive slider bounds
  scoreMax: number;
  from: string | null; // ISO timestamps
  to: string | null;
}

export function emptyFilters(): FilterState {
  return { states: [], emotion: null, scoreMin: 0, scoreMax: 1, from: null, to: null };
}

export function filterParams(f: FilterState): Record<string, string> {
  const params: Record<string, string> = {};
  if (f.states.length > 0) params.states = [...f.states].sort().join(",");
  if (f.emotion) {
    params.emotion = f.emotion;
    params.min = String(f.scoreMin);
    params.max = String(f.scoreMax);
  }
  if (f.from) params.from = f.from;
  if (f.to) params.to = f.to;
  return params;
}
