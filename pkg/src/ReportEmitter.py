"""
Conversion of check results into flat records and their emission as JSONL,
CSV or a rich table.
"""

import csv
import json
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, TextIO

from jsonschema import ValidationError, validate
from rich.console import Console
from rich.table import Table

from config import OUTPUT_CONFIG
from src.TheoremChecker import DivisibilityReport
from src.identities import CheckResult

logger = logging.getLogger(__name__)


@dataclass
class ReportRecord:
    """One emitted line: integers that may grow large are decimal strings."""
    check: str
    params: Dict[str, Any]
    modulus: Optional[str]
    passed: bool
    witness: Optional[Dict[str, Any]]
    detail: Optional[str] = None
    partial: Optional[Dict[str, bool]] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportRecord":
        data = dict(data)
        data["passed"] = data.pop("pass")
        return cls(**data)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["pass"] = data.pop("passed")
        for optional in ("detail", "partial"):
            if data[optional] is None:
                del data[optional]
        return data


def _stringify(value: Any) -> Any:
    """Integers become decimal strings; bools, strings and None pass through."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return str(value)


def _flag_text(flags: Optional[Dict[str, bool]], sep: str) -> str:
    if not flags:
        return ""
    return sep.join(f"{k}={'true' if v else 'false'}" for k, v in flags.items())


def to_record(result: Any) -> Dict[str, Any]:
    """Flatten a CheckResult or DivisibilityReport into a record dict."""
    if isinstance(result, DivisibilityReport):
        params = result.spec.to_params()
        if result.check == "5.3":
            params.pop("a", None)
        witness = None
        if result.witness is not None:
            index, value = result.witness
            witness = {"index": index, "value": str(value)}
        record = ReportRecord(
            check=result.check,
            params=params,
            modulus=str(result.modulus),
            passed=result.passed,
            witness=witness,
            detail=result.detail,
            partial=dict(result.partial) or None,
        )
    elif isinstance(result, CheckResult):
        record = ReportRecord(
            check=result.check,
            params=dict(result.params),
            modulus=None,
            passed=result.passed,
            witness=_stringify(result.witness),
            detail=result.detail,
        )
    else:
        raise TypeError(f"cannot build a record from {type(result).__name__}")
    return record.to_dict()


class ReportEmitter:
    """Writes validated records in one of the supported formats."""

    RECORD_SCHEMA = {
        "type": "object",
        "properties": {
            "check": {"type": "string"},
            "params": {
                "type": "object",
                "additionalProperties": {"type": ["integer", "string"]},
            },
            "modulus": {"type": ["string", "null"], "pattern": "^[0-9]+$"},
            "pass": {"type": "boolean"},
            "witness": {
                "type": ["object", "null"],
                "additionalProperties": {
                    "type": ["integer", "string", "array"],
                },
            },
            "detail": {"type": "string"},
            "partial": {
                "type": "object",
                "additionalProperties": {"type": "boolean"},
            },
        },
        "required": ["check", "params", "modulus", "pass", "witness"],
        "additionalProperties": False,
    }

    FORMATS = ("jsonl", "csv", "pretty")

    def __init__(self, fmt: str, stream: TextIO, title: Optional[str] = None):
        if fmt not in self.FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.stream = stream
        self.title = title or OUTPUT_CONFIG["pretty_title"]
        self.count = 0
        self.failures = 0
        self._rows: List[Dict[str, Any]] = []
        self._csv: Optional[csv.DictWriter] = None

    def __enter__(self) -> "ReportEmitter":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()

    def emit(self, record: Dict[str, Any]) -> None:
        try:
            validate(instance=record, schema=self.RECORD_SCHEMA)
        except ValidationError as e:
            logger.error(f"Invalid report record: {str(e.message)}")
            raise
        self.count += 1
        if not record["pass"]:
            self.failures += 1
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(record, separators=OUTPUT_CONFIG["json_separators"]) + "\n")
        elif self.fmt == "csv":
            self._write_csv(record)
        else:
            self._rows.append(record)

    def _write_csv(self, record: Dict[str, Any]) -> None:
        if self._csv is None:
            self._csv = csv.DictWriter(self.stream, fieldnames=OUTPUT_CONFIG["csv_columns"],
                                       lineterminator="\n")
            self._csv.writeheader()
        witness = record["witness"]
        self._csv.writerow({
            "check": record["check"],
            "params": ";".join(f"{k}={v}" for k, v in record["params"].items()),
            "modulus": record["modulus"] or "",
            "pass": "true" if record["pass"] else "false",
            "witness": "" if witness is None else ";".join(
                f"{k}={v}" for k, v in witness.items()),
            "partial": _flag_text(record.get("partial"), ";"),
        })

    def close(self) -> None:
        if self.fmt != "pretty" or not self._rows:
            self.stream.flush()
            return
        table = Table(title=self.title)
        for column in OUTPUT_CONFIG["csv_columns"]:
            table.add_column(column)
        for record in self._rows:
            witness = record["witness"]
            table.add_row(
                record["check"],
                " ".join(f"{k}={v}" for k, v in record["params"].items()),
                record["modulus"] or "-",
                "[green]pass[/green]" if record["pass"] else "[red]FAIL[/red]",
                "-" if witness is None else " ".join(f"{k}={v}" for k, v in witness.items()),
                _flag_text(record.get("partial"), " ") or "-",
            )
        Console(file=self.stream, width=160).print(table)
        self._rows.clear()
        self.stream.flush()
