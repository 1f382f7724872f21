"""Word-list selection, sentence re-chaining and dataset tooling for small ASR corpora."""

from ._core import (
    AudioClip,
    DataError,
    Error,
    Lexicon,
    Manifest,
    ServiceError,
    SplitAssignment,
    UsageError,
    WordInventory,
    __version__,
    audit_leakage,
    biphones,
    brute_force_max_coverage,
    concat,
    corpus_rate,
    coverage_report,
    edit_rate,
    gbc_select,
    normalize_for_scoring,
    plan_random,
    plan_sentence,
    pwps_select,
    read_wav,
    split,
    write_wav,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
