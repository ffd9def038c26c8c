"""
Default values for engine bounds, cache format and CLI behaviour.
Environment variables (read through python-dotenv at the entry point)
override the ones marked below.
"""

# ─────────────────────────────────────────────────────────
# ENVIRONMENT
# ─────────────────────────────────────────────────────────

ENV_CACHE_DIR = "DESSIN_CACHE_DIR"
ENV_JOBS = "DESSIN_JOBS"
ENV_LOG_LEVEL = "DESSIN_LOG_LEVEL"


# ─────────────────────────────────────────────────────────
# ENGINE BOUNDS
# ─────────────────────────────────────────────────────────

ENGINE_DEFAULTS = {
    # brute-force permutation enumeration refuses degrees above this
    "oracle_max_degree": 6,
    # character tables are only built up to this degree
    "char_table_max_degree": 12,
    # default truncation for series-valued commands
    "truncation": 4,
    # default arity r
    "arity": 2,
}


# ─────────────────────────────────────────────────────────
# CHARACTER TABLE CACHE
# ─────────────────────────────────────────────────────────

CACHE_DEFAULTS = {
    "format": 1,
    "file_pattern": "chars_d{d}.jsonl",
}


# ─────────────────────────────────────────────────────────
# FITTING
# ─────────────────────────────────────────────────────────

FIT_DEFAULTS = {
    "holdout": 2,
    "nmax_one_point": 10,
    "nmax_two_point": 8,
    # extra degrees tried above the genus-motivated guess
    "degree_slack": 4,
}


# ─────────────────────────────────────────────────────────
# VERIFY SUITES (sizes used by `verify all`)
# ─────────────────────────────────────────────────────────

VERIFY_DEFAULTS = {
    "burnside": {"d": 4},
    "cutjoin": {"r": 2, "degree": 5},
    "zhou": {"r": 2, "max_weight": 5},
    "appendix": {"max_size": 6},
    "characters": {"d": 6},
    "acoeffs": {"r": 5},
}
