import logging
import re
from pathlib import Path
from typing import Any, Dict, Tuple, Union

import yaml
from jsonschema import ValidationError, validate
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from src.exact_math import DomainError

logger = logging.getLogger(__name__)

# Diagnostics, logs and progress go to stderr; stdout carries reports only.
err_console = Console(stderr=True)

Range = Tuple[int, int]

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")

PRESET_SCHEMA = {
    "type": "object",
    "properties": {
        "lemma": {"$ref": "#/definitions/ranges"},
        "verify": {"$ref": "#/definitions/ranges"},
        "probe": {"$ref": "#/definitions/ranges"},
    },
    "additionalProperties": {"$ref": "#/definitions/ranges"},
    "definitions": {
        "ranges": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {"type": "integer"},
                    {"type": "string", "pattern": r"^\s*-?\d+\s*(\.\.\s*-?\d+\s*)?$"},
                    {"type": "array", "items": {"type": "integer"},
                     "minItems": 2, "maxItems": 2},
                ]
            },
        }
    },
}


def parse_range(text: Union[str, int]) -> Range:
    """Parse ``lo..hi`` (inclusive) or a single integer into (lo, hi)."""
    if isinstance(text, int):
        return text, text
    match = _RANGE_RE.match(str(text))
    if not match:
        raise DomainError(f"malformed range {text!r}, expected lo..hi")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise DomainError(f"empty range {text!r}")
    return lo, hi


def normalize_range(value: Any) -> Range:
    if isinstance(value, (list, tuple)):
        lo, hi = value
        if lo > hi:
            raise DomainError(f"empty range {list(value)}")
        return int(lo), int(hi)
    return parse_range(value)


def load_preset(path: Union[str, Path]) -> Dict[str, Dict[str, Range]]:
    """
    Load a YAML preset of parameter ranges.

    The document maps a section (``lemma``, ``verify``, ``probe`` or a check
    id) to ``name: range`` entries.

    Returns:
        Section name -> parameter name -> (lo, hi).
    """
    path = Path(path)
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        validate(instance=data, schema=PRESET_SCHEMA)
    except (OSError, yaml.YAMLError, ValidationError) as e:
        logger.error(f"Error loading preset {path}: {str(e)}")
        raise DomainError(f"invalid preset {path}: {str(e)}")
    return {section: {name: normalize_range(value) for name, value in entries.items()}
            for section, entries in data.items()}


def create_progress() -> Progress:
    """Create a progress bar instance on the stderr console."""
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
        console=err_console,
        transient=True,
    )
