"""Tweet emotion comparison engine.

Scores tweets for sentiment polarity and eight emotions from bundled
lexica, aggregates them by US state or time bucket, and serves comparison
payloads over HTTP for the dashboard UI.
"""

__version__ = "0.1.0"
