"""
Configuration settings for the divisibility verification lab.
"""

import os
from dotenv import load_dotenv
import logging.config
from typing import Dict, Any, Optional

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


def available_cpus() -> int:
    """CPUs this process may run on; honours affinity masks where supported."""
    if hasattr(os, "sched_getaffinity"):
        return len(os.sched_getaffinity(0)) or 1
    return os.cpu_count() or 1


def _env_jobs() -> int:
    raw = os.getenv("DELANNOY_LAB_JOBS")
    if raw is None or not raw.strip():
        return available_cpus()
    try:
        jobs = int(raw)
    except ValueError:
        jobs = 0
    if jobs < 1:
        logger.warning(f"Ignoring DELANNOY_LAB_JOBS={raw!r}: expected a positive integer")
        return available_cpus()
    return jobs


# Sweep Configuration
# Ranges are inclusive (lo, hi) pairs. They double as the acceptance ranges
# used by `--ci` and as defaults for any range option left out on the CLI.
SWEEP_CONFIG = {
    "default_format": "jsonl",
    "fail_fast": False,
    "theorem_ranges": {
        "n": (1, 25),
        "h": (1, 3),
        "m": (1, 3),
        "a": (1, 3),
    },
    "lemma_ranges": {
        "2.3": {"l": (0, 8), "u": (0, 8), "k_max": (40, 40)},
        "3.1": {"l": (0, 8), "u": (0, 8), "k_max": (40, 40)},
        "2.4": {"n": (1, 30), "l": (1, 30)},
        "2.5": {"l": (1, 12), "a": (1, 4)},
        "2.6": {"M": (1, 2), "n": (1, 6), "I": (0, 24), "l": (1, 24)},
        "pfaff": {"x": (0, 8), "y": (0, 8), "a": (0, 6), "b": (0, 6)},
        "3.4": {"n": (1, 40), "b": (0, 20)},
        "3.5": {"J": (1, 64)},
        "3.6": {"M": (1, 2), "n": (1, 4), "I": (1, 15), "l": (0, 30), "h": (1, 2)},
        "3.7": {"M": (1, 2), "n": (1, 4), "I": (0, 16), "e": (0, 32), "h": (1, 2)},
        "quotients": {"l": (1, 10), "a": (1, 3), "u": (0, 3), "n": (1, 15)},
        "w-pair": {"n": (1, 40), "b": (1, 20)},
        "k-expansion": {"l": (0, 8), "a": (0, 4), "k_max": (30, 30)},
        "reduction": {"m": (1, 4), "top": (3, 3), "h": (1, 3), "k_max": (15, 15)},
        "path": {"n": (1, 5), "h": (1, 2), "m": (1, 3), "a": (1, 2)},
    },
}

# Reduction table settings
REDUCTION_CONFIG = {
    # Index tuples are stored sorted; permutation invariance makes this lossless.
    "sort_index_keys": True,
}

# Output Settings
OUTPUT_CONFIG = {
    "csv_columns": ["check", "params", "modulus", "pass", "witness", "partial"],
    "json_separators": (",", ":"),
    "pretty_title": "Verification report",
}

# Logging Configuration
LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
        },
        "rich": {
            "format": "%(message)s"
        }
    },
    "handlers": {
        "console": {
            "class": "rich.logging.RichHandler",
            "formatter": "rich",
            "console": "ext://src.utils.err_console",
            "rich_tracebacks": True,
            "show_path": False,
        },
    },
    "loggers": {
        "": {
            "handlers": ["console"],
            "level": os.getenv("LOG_LEVEL", "INFO"),
            "propagate": True
        }
    }
}

# Performance Settings
PERFORMANCE = {
    "max_workers": _env_jobs(),
    "chunk_size": 16,
}

# Convenience aliases
MAX_WORKERS = PERFORMANCE["max_workers"]
CHUNK_SIZE = PERFORMANCE["chunk_size"]
DEFAULT_FORMAT = SWEEP_CONFIG["default_format"]
THEOREM_RANGES = SWEEP_CONFIG["theorem_ranges"]
LEMMA_RANGES = SWEEP_CONFIG["lemma_ranges"]


def configure_logging(level: Optional[str] = None) -> None:
    """Apply LOGGING_CONFIG, optionally forcing the root level."""
    settings = dict(LOGGING_CONFIG)
    settings["handlers"] = dict(LOGGING_CONFIG["handlers"])
    settings["loggers"] = {"": dict(LOGGING_CONFIG["loggers"][""])}
    log_file = os.getenv("LOG_FILE")
    if log_file:
        settings["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "filename": log_file,
            "formatter": "standard",
        }
        settings["loggers"][""]["handlers"] = ["console", "file"]
    if level:
        settings["loggers"][""]["level"] = level
    logging.config.dictConfig(settings)
