import csv
import io
import json

import pytest
from jsonschema import ValidationError

from src.ReportEmitter import ReportEmitter, ReportRecord, to_record
from src.TheoremChecker import (
    SumSpec,
    check_delannoy_sum,
    check_power_sum_conjecture,
    check_theorem,
    probe_spec,
)
from src.identities import CheckResult, verify_diagonal_a_parity
from src.sequences import FamilyId


@pytest.fixture
def passing():
    return to_record(check_delannoy_sum(SumSpec(FamilyId.D, 2)))


@pytest.fixture
def failing():
    return to_record(probe_spec("2.1", SumSpec(FamilyId.D, 2)))


class TestToRecord:
    def test_divisibility_report(self, passing):
        assert passing == {
            "check": "2.1",
            "params": {"family": "D", "n": 2, "h": 1, "m": 1, "a": 1, "eps": 1},
            "modulus": "12",
            "pass": True,
            "witness": None,
            "partial": {"n": True, "n+1": True, "n+2": True},
        }

    def test_witness_value_is_string(self, failing):
        assert failing["pass"] is False
        assert failing["modulus"] == "24"
        assert failing["witness"] == {"index": 0, "value": "36"}
        assert failing["detail"] == "stated modulus 12"

    def test_failing_record_carries_factor_breakdown(self, failing):
        assert failing["partial"] == {"n": True, "n+1": True, "n+2": True}
        ReportEmitter("jsonl", io.StringIO()).emit(failing)
        record = to_record(probe_spec("2.1", SumSpec(FamilyId.D, 5, 1, 1, 1, -1)))
        assert set(record["partial"]) == {"n", "n+1", "n+2"}

    def test_lower_sum_has_no_breakdown(self):
        record = to_record(check_theorem("cg", SumSpec(FamilyId.D, 3)))
        assert "partial" not in record

    def test_conjecture_drops_a(self):
        record = to_record(check_power_sum_conjecture(FamilyId.D, 2, 1, 1))
        assert "a" not in record["params"]

    def test_check_result(self):
        record = to_record(CheckResult("pfaff", {"x": 1}, False, {"lhs": 2, "rhs": 3}))
        assert record["modulus"] is None
        assert record["witness"] == {"lhs": "2", "rhs": "3"}
        record = to_record(verify_diagonal_a_parity(3))
        assert record["pass"] is True and record["witness"] is None

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            to_record(object())

    def test_record_round_trip(self, failing):
        assert ReportRecord.from_dict(failing).to_dict() == failing


class TestEmitter:
    def test_jsonl(self, passing, failing):
        stream = io.StringIO()
        with ReportEmitter("jsonl", stream) as emitter:
            emitter.emit(passing)
            emitter.emit(failing)
        lines = stream.getvalue().splitlines()
        assert [json.loads(line) for line in lines] == [passing, failing]
        assert emitter.count == 2 and emitter.failures == 1

    def test_csv(self, passing, failing):
        stream = io.StringIO()
        with ReportEmitter("csv", stream) as emitter:
            emitter.emit(passing)
            emitter.emit(failing)
        rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
        assert list(rows[0]) == ["check", "params", "modulus", "pass", "witness", "partial"]
        assert rows[0]["params"] == "family=D;n=2;h=1;m=1;a=1;eps=1"
        assert rows[0]["pass"] == "true" and rows[0]["witness"] == ""
        assert rows[1]["witness"] == "index=0;value=36"
        assert rows[1]["partial"] == "n=true;n+1=true;n+2=true"

    def test_pretty(self, passing, failing):
        stream = io.StringIO()
        with ReportEmitter("pretty", stream, title="Sweep") as emitter:
            emitter.emit(passing)
            emitter.emit(failing)
            assert stream.getvalue() == ""
        text = stream.getvalue()
        assert "Sweep" in text and "FAIL" in text and "index=0 value=36" in text
        assert "n+2=true" in text

    def test_rejects_bad_record(self, passing):
        bad = dict(passing, modulus=12)
        with pytest.raises(ValidationError):
            ReportEmitter("jsonl", io.StringIO()).emit(bad)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            ReportEmitter("xml", io.StringIO())
