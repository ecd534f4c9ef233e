"""Shared exception types. The CLI maps these onto process exit codes:
usage/config -> 1, data/checkpoint -> 2, numeric abort -> 3.
"""


class StorygenError(Exception):
    """Base class for all library errors."""


class ShapeError(StorygenError, ValueError):
    """Tensor or layer shape mismatch."""


class BoundsError(StorygenError, IndexError):
    """Token id or embedding position out of range."""


class LengthError(StorygenError, ValueError):
    """Sequence longer than the model's maximum positions."""


class UsageError(StorygenError):
    """API or CLI misuse (bad arguments, backward without a forward, ...)."""


class ConfigError(UsageError):
    """Invalid or inconsistent configuration value."""


class DataError(StorygenError):
    """Corpus or file problem (missing file, misaligned splits, ...)."""


class CheckpointError(DataError):
    """Unreadable checkpoint or one that does not match its manifest."""


class NumericError(StorygenError):
    """Non-finite value where training must abort rather than continue."""
