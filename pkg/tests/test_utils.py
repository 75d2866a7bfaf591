import logging
from pathlib import Path

import pytest
from rich.progress import Progress

from config import _env_jobs, available_cpus
from src.exact_math import DomainError
from src.utils import create_progress, load_preset, normalize_range, parse_range

PRESET = Path(__file__).resolve().parent.parent / "presets" / "acceptance.yaml"


@pytest.mark.parametrize("text, expected", [
    ("1..5", (1, 5)),
    (" 2 .. 7 ", (2, 7)),
    ("3", (3, 3)),
    (4, (4, 4)),
    ("-2..0", (-2, 0)),
])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["5..1", "a..b", "1..", "1-3", ""])
def test_parse_range_rejects(text):
    with pytest.raises(DomainError):
        parse_range(text)


def test_normalize_range():
    assert normalize_range([1, 3]) == (1, 3)
    assert normalize_range("2..4") == (2, 4)
    with pytest.raises(DomainError):
        normalize_range([3, 1])


def test_load_acceptance_preset():
    sections = load_preset(PRESET)
    assert sections["verify"] == {"n": (1, 25), "h": (1, 3), "m": (1, 3), "a": (1, 3)}
    assert sections["3.5"] == {"J": (1, 64)}


def test_load_preset_rejects_bad_values(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("verify:\n  n: one..two\n")
    with pytest.raises(DomainError):
        load_preset(path)


def test_load_preset_missing_file(tmp_path):
    with pytest.raises(DomainError):
        load_preset(tmp_path / "missing.yaml")


def test_empty_preset(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_preset(path) == {}


def test_create_progress():
    progress = create_progress()
    assert isinstance(progress, Progress)


def test_env_jobs_override(monkeypatch):
    monkeypatch.setenv("DELANNOY_LAB_JOBS", "3")
    assert _env_jobs() == 3


@pytest.mark.parametrize("raw", ["0", "-2", "abc"])
def test_env_jobs_invalid_warns(monkeypatch, caplog, raw):
    monkeypatch.setenv("DELANNOY_LAB_JOBS", raw)
    with caplog.at_level(logging.WARNING, logger="config"):
        assert _env_jobs() == available_cpus()
    assert "DELANNOY_LAB_JOBS" in caplog.text


def test_env_jobs_default(monkeypatch):
    monkeypatch.delenv("DELANNOY_LAB_JOBS", raising=False)
    assert _env_jobs() == available_cpus() >= 1
