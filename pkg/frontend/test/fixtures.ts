// Recorded API payloads from a deterministic demo store (synth n=300 seed=7).
// Regenerate with scripts/record_fixtures.py at the repo root.

export const meta = {
  "date_max": "2021-05-31T22:08:55Z",
  "date_min": "2021-01-01T07:51:09Z",
  "emotions": [
    "anger",
    "fear",
    "anticipation",
    "trust",
    "surprise",
    "sadness",
    "joy",
    "disgust"
  ],
  "negative_feelings": [
    "anger",
    "fear",
    "sadness",
    "disgust"
  ],
  "polarity_colors": {
    "negative": "#d62728",
    "neutral": "#1f77b4",
    "positive": "#2ca02c"
  },
  "positive_feelings": [
    "anticipation",
    "trust",
    "surprise",
    "joy"
  ],
  "rejected_count": 0,
  "states_present": [
    "AK",
    "AL",
    "AR",
    "AZ",
    "CA",
    "CO",
    "CT",
    "DC",
    "DE",
    "FL",
    "GA",
    "HI",
    "IA",
    "ID",
    "IL",
    "IN",
    "KS",
    "KY",
    "LA",
    "MA",
    "MD",
    "ME",
    "MI",
    "MN",
    "MO",
    "MS",
    "MT",
    "NC",
    "ND",
    "NH",
    "NJ",
    "NM",
    "NV",
    "NY",
    "OH",
    "OK",
    "OR",
    "PA",
    "RI",
    "SC",
    "SD",
    "TN",
    "TX",
    "UT",
    "VA",
    "VT",
    "WA",
    "WI",
    "WV",
    "WY"
  ],
  "tweet_count": 300,
  "version": "0.1.0"
} as const;

export const aggregateStates = [
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 2,
        "mean": 0.325
      },
      "anticipation": {
        "contributing_count": 3,
        "mean": 0.5888888888888889
      },
      "disgust": {
        "contributing_count": 2,
        "mean": 0.425
      },
      "fear": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "joy": {
        "contributing_count": 4,
        "mean": 0.43333333333333335
      },
      "sadness": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 3,
        "mean": 0.5
      }
    },
    "key": "CA",
    "polarity_counts": {
      "negative": 2,
      "neutral": 0,
      "positive": 5
    },
    "tweet_count": 7
  },
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 1,
        "mean": 0.4
      },
      "anticipation": {
        "contributing_count": 1,
        "mean": 0.3333333333333333
      },
      "disgust": {
        "contributing_count": 1,
        "mean": 0.6
      },
      "fear": {
        "contributing_count": 2,
        "mean": 0.5416666666666666
      },
      "joy": {
        "contributing_count": 2,
        "mean": 0.26666666666666666
      },
      "sadness": {
        "contributing_count": 2,
        "mean": 0.8333333333333333
      },
      "surprise": {
        "contributing_count": 1,
        "mean": 0.6
      },
      "trust": {
        "contributing_count": 3,
        "mean": 0.5111111111111111
      }
    },
    "key": "FL",
    "polarity_counts": {
      "negative": 5,
      "neutral": 1,
      "positive": 2
    },
    "tweet_count": 8
  },
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "anticipation": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "disgust": {
        "contributing_count": 1,
        "mean": 0.75
      },
      "fear": {
        "contributing_count": 1,
        "mean": 1.0
      },
      "joy": {
        "contributing_count": 1,
        "mean": 1.0
      },
      "sadness": {
        "contributing_count": 1,
        "mean": 1.0
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 2,
        "mean": 1.0
      }
    },
    "key": "NY",
    "polarity_counts": {
      "negative": 3,
      "neutral": 0,
      "positive": 3
    },
    "tweet_count": 6
  },
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "anticipation": {
        "contributing_count": 1,
        "mean": 0.6
      },
      "disgust": {
        "contributing_count": 1,
        "mean": 0.75
      },
      "fear": {
        "contributing_count": 1,
        "mean": 1.0
      },
      "joy": {
        "contributing_count": 2,
        "mean": 0.34285714285714286
      },
      "sadness": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 1,
        "mean": 0.42857142857142855
      }
    },
    "key": "OH",
    "polarity_counts": {
      "negative": 2,
      "neutral": 1,
      "positive": 2
    },
    "tweet_count": 5
  },
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "anticipation": {
        "contributing_count": 1,
        "mean": 0.5
      },
      "disgust": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "fear": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "joy": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "sadness": {
        "contributing_count": 1,
        "mean": 1.0
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 0,
        "mean": 0.0
      }
    },
    "key": "TX",
    "polarity_counts": {
      "negative": 2,
      "neutral": 1,
      "positive": 0
    },
    "tweet_count": 3
  },
  {
    "axis": "state",
    "emotion_means": {
      "anger": {
        "contributing_count": 2,
        "mean": 0.45
      },
      "anticipation": {
        "contributing_count": 1,
        "mean": 0.8333333333333334
      },
      "disgust": {
        "contributing_count": 2,
        "mean": 0.425
      },
      "fear": {
        "contributing_count": 1,
        "mean": 0.125
      },
      "joy": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "sadness": {
        "contributing_count": 2,
        "mean": 0.5625
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 2,
        "mean": 0.5833333333333334
      }
    },
    "key": "WA",
    "polarity_counts": {
      "negative": 3,
      "neutral": 2,
      "positive": 1
    },
    "tweet_count": 6
  }
] as const;

export const aggregateCaMonths = [
  {
    "axis": "month",
    "emotion_means": {
      "anger": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "anticipation": {
        "contributing_count": 1,
        "mean": 0.6666666666666666
      },
      "disgust": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "fear": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "joy": {
        "contributing_count": 2,
        "mean": 0.41666666666666663
      },
      "sadness": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 2,
        "mean": 0.25
      }
    },
    "key": "2021-04",
    "polarity_counts": {
      "negative": 0,
      "neutral": 0,
      "positive": 2
    },
    "tweet_count": 2
  },
  {
    "axis": "month",
    "emotion_means": {
      "anger": {
        "contributing_count": 2,
        "mean": 0.325
      },
      "anticipation": {
        "contributing_count": 2,
        "mean": 0.55
      },
      "disgust": {
        "contributing_count": 2,
        "mean": 0.425
      },
      "fear": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "joy": {
        "contributing_count": 2,
        "mean": 0.45
      },
      "sadness": {
        "contributing_count": 1,
        "mean": 0.25
      },
      "surprise": {
        "contributing_count": 0,
        "mean": 0.0
      },
      "trust": {
        "contributing_count": 1,
        "mean": 1.0
      }
    },
    "key": "2021-05",
    "polarity_counts": {
      "negative": 2,
      "neutral": 0,
      "positive": 3
    },
    "tweet_count": 5
  }
] as const;

export const compareCaNy = {
  "key_a": {
    "axis": "state",
    "value": "CA"
  },
  "key_b": {
    "axis": "state",
    "value": "NY"
  },
  "rows": [
    {
      "delta": 0.07500000000000001,
      "emotion": "anger",
      "higher_side": "A",
      "score_a": 0.325,
      "score_b": 0.25
    },
    {
      "delta": 0.75,
      "emotion": "fear",
      "higher_side": "B",
      "score_a": 0.25,
      "score_b": 1.0
    },
    {
      "delta": 0.5888888888888889,
      "emotion": "anticipation",
      "higher_side": "A",
      "score_a": 0.5888888888888889,
      "score_b": 0.0
    },
    {
      "delta": 0.5,
      "emotion": "trust",
      "higher_side": "B",
      "score_a": 0.5,
      "score_b": 1.0
    },
    {
      "delta": 0.0,
      "emotion": "surprise",
      "higher_side": "none",
      "score_a": 0.0,
      "score_b": 0.0
    },
    {
      "delta": 0.75,
      "emotion": "sadness",
      "higher_side": "B",
      "score_a": 0.25,
      "score_b": 1.0
    },
    {
      "delta": 0.5666666666666667,
      "emotion": "joy",
      "higher_side": "B",
      "score_a": 0.43333333333333335,
      "score_b": 1.0
    },
    {
      "delta": 0.325,
      "emotion": "disgust",
      "higher_side": "B",
      "score_a": 0.425,
      "score_b": 0.75
    }
  ]
} as const;

export const tweetsCa = {
  "axis": "state",
  "limit": 3,
  "offset": 0,
  "total": 7,
  "tweets": [
    {
      "category": "positive",
      "compound": 0.9081213751352623,
      "confidence": 0.9081213751352623,
      "created_at": "2021-04-01T02:37:57Z",
      "emotions": {
        "anger": 0.0,
        "anticipation": 0.0,
        "disgust": 0.0,
        "fear": 0.0,
        "joy": 0.6666666666666666,
        "sadness": 0.0,
        "surprise": 0.0,
        "trust": 0.3333333333333333
      },
      "id": "synth-000094",
      "lang": "en",
      "polarity": "positive",
      "state": "CA",
      "text": "Celebrating with friends tonight, feeling blessed and joyful"
    },
    {
      "category": "positive",
      "compound": 0.44043357076016854,
      "confidence": 0.44043357076016854,
      "created_at": "2021-04-25T09:45:44Z",
      "emotions": {
        "anger": 0.0,
        "anticipation": 0.6666666666666666,
        "disgust": 0.0,
        "fear": 0.0,
        "joy": 0.16666666666666666,
        "sadness": 0.0,
        "surprise": 0.0,
        "trust": 0.16666666666666666
      },
      "id": "synth-000068",
      "lang": "en",
      "polarity": "positive",
      "state": "CA",
      "text": "Ready and waiting, hope is on the horizon #staysafe https://health.example/update"
    },
    {
      "category": "positive",
      "compound": -0.27550889442028703,
      "confidence": 0.27550889442028703,
      "created_at": "2021-05-09T23:10:25Z",
      "emotions": {
        "anger": 0.0,
        "anticipation": 0.5,
        "disgust": 0.0,
        "fear": 0.0,
        "joy": 0.5,
        "sadness": 0.0,
        "surprise": 0.0,
        "trust": 0.0
      },
      "id": "synth-000008",
      "lang": "en",
      "polarity": "negative",
      "state": "CA",
      "text": "Hardly any progress, barely moving #covid19"
    }
  ],
  "value": "CA"
} as const;

