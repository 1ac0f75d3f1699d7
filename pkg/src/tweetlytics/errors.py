"""Exception hierarchy shared across the engine."""


class TweetlyticsError(Exception):
    """Base class for all engine errors."""


class SchemaError(TweetlyticsError):
    """Input CSV is missing a mapped column."""


class LexiconError(TweetlyticsError):
    """Sentiment lexicon file is malformed."""


class TrainingError(TweetlyticsError):
    """Classifier training preconditions violated (empty class, empty vocab)."""


class SplitError(TweetlyticsError):
    """Not enough documents of some class to build the requested split."""


class SeriesError(TweetlyticsError):
    """Time series cannot be built (fewer than two distinct dates)."""


class ConfigError(TweetlyticsError):
    """Run configuration is invalid (bad key, missing path, bad value)."""


class DataError(TweetlyticsError):
    """A pipeline stage is missing its input data."""
