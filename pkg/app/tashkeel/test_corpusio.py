"""
corpusio.py 모듈의 단위 테스트
파일 읽기 규칙(CRLF, 마지막 줄바꿈, UTF-8), JSONL 검증, 리포트 출력 형식을 검증합니다.
"""

import json
import tempfile
import unittest
from pathlib import Path

from app.core.exceptions import (
    DuplicateIdException,
    InvalidUtf8Exception,
    LineCountMismatchException,
    MalformedRecordException,
    MalformedReportException,
)
from app.schemas.report import AsrReport, ConditionLabel, DiacritizerReport
from app.schemas.run_config import CaseEnding, ReportFormat
from app.tashkeel.corpusio import (
    emit_report,
    emit_table,
    format_ratio,
    load_corpus,
    load_jsonl,
    load_parallel,
    load_report_json,
    read_lines,
    split_lines,
)
from app.tashkeel.metrics import evaluate_asr, evaluate_diacritizer
from app.tashkeel.orthography import normalize, parse

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    return [parse(normalize(line)) for line in read_lines(FIXTURES / name)]


def sample_asr_report(**overrides) -> AsrReport:
    values = dict(
        condition_label=ConditionLabel.UD,
        wer_plain=0.25, cer_plain=0.1, wer_diac=0.5, cer_diac=0.2,
        coverage_hyp=0.0, coverage_ref=0.9,
        precision_with_case=None, precision_without_case=None,
        records=1, ref_words=4,
    )
    values.update(overrides)
    return AsrReport(**values)


class TempDirTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name: str, data: bytes) -> Path:
        path = self.tmp / name
        path.write_bytes(data)
        return path


class TestReadLines(TempDirTestCase):
    """줄 단위 읽기 테스트"""

    def test_split_lines(self):
        """마지막 줄바꿈은 있어도 없어도 같은 결과"""
        self.assertEqual(split_lines("a\nb\n"), ["a", "b"])
        self.assertEqual(split_lines("a\nb"), ["a", "b"])
        self.assertEqual(split_lines(""), [])
        self.assertEqual(split_lines("\n"), [""])

    def test_crlf(self):
        path = self.write("crlf.txt", "كتب\r\nعلم\r\n".encode("utf-8"))
        self.assertEqual(read_lines(path), ["كتب", "علم"])

    def test_text_kept_verbatim(self):
        """읽을 때는 정규화하지 않음"""
        path = self.write("raw.txt", "  كـتب  \n".encode("utf-8"))
        self.assertEqual(read_lines(path), ["  كـتب  "])

    def test_invalid_utf8_reports_line(self):
        path = self.write("bad.txt", b"ok\nok\n\xff\n")
        with self.assertRaises(InvalidUtf8Exception) as ctx:
            read_lines(path)
        self.assertEqual(ctx.exception.details["line"], 3)

    def test_load_corpus_ids(self):
        path = self.write("corpus.txt", "كتب\nعلم\n".encode("utf-8"))
        records = load_corpus(path)
        self.assertEqual([r.id for r in records], ["1", "2"])
        self.assertIsNone(records[0].hyp)


class TestLoadParallel(TempDirTestCase):
    """병렬 파일 읽기 테스트"""

    def test_records(self):
        ref = self.write("ref.txt", "كَتَبَ\nعَلِمَ\n".encode("utf-8"))
        hyp = self.write("hyp.txt", "كتب\nعلم".encode("utf-8"))
        records = load_parallel(ref, hyp)
        self.assertEqual([r.id for r in records], ["1", "2"])
        self.assertEqual(records[1].hyp, "علم")

    def test_empty_hypothesis_line_kept(self):
        """가설의 빈 줄도 레코드"""
        records = load_parallel(FIXTURES / "mini_ref.txt", FIXTURES / "mini_hyp.txt")
        self.assertEqual(len(records), 20)
        self.assertEqual(records[14].hyp, "")

    def test_line_count_mismatch(self):
        ref = self.write("ref.txt", b"a\nb\nc\n")
        hyp = self.write("hyp.txt", b"a\nb\n")
        with self.assertRaises(LineCountMismatchException) as ctx:
            load_parallel(ref, hyp)
        self.assertEqual(ctx.exception.details, {"ref_lines": 3, "hyp_lines": 2})
        self.assertEqual(ctx.exception.exit_code, 2)


class TestLoadJsonl(TempDirTestCase):
    """JSONL 읽기 테스트"""

    def jsonl(self, *lines: str) -> Path:
        return self.write("corpus.jsonl", ("\n".join(lines) + "\n").encode("utf-8"))

    def test_records_and_blank_lines(self):
        path = self.jsonl(
            json.dumps({"id": "u1", "ref": "عَلِمَ", "hyp": "علم"}, ensure_ascii=False),
            "",
            json.dumps({"id": "u2", "ref": "كتب"}),
        )
        records = load_jsonl(path)
        self.assertEqual([r.id for r in records], ["u1", "u2"])
        self.assertIsNone(records[1].hyp)

    def test_invalid_json(self):
        with self.assertRaises(MalformedRecordException) as ctx:
            load_jsonl(self.jsonl('{"id": "u1", "ref": "x"}', "{not json"))
        self.assertEqual(ctx.exception.details["line"], 2)

    def test_not_an_object(self):
        with self.assertRaises(MalformedRecordException):
            load_jsonl(self.jsonl('["u1", "x"]'))

    def test_missing_or_wrong_type_fields(self):
        with self.assertRaises(MalformedRecordException):
            load_jsonl(self.jsonl('{"id": "u1"}'))
        with self.assertRaises(MalformedRecordException):
            load_jsonl(self.jsonl('{"id": 1, "ref": "x"}'))
        with self.assertRaises(MalformedRecordException):
            load_jsonl(self.jsonl('{"id": "u1", "ref": "x", "hyp": 3}'))

    def test_duplicate_id(self):
        with self.assertRaises(DuplicateIdException) as ctx:
            load_jsonl(self.jsonl('{"id": "u1", "ref": "x"}', '{"id": "u1", "ref": "y"}'))
        self.assertEqual(ctx.exception.details["line"], 2)


class TestEmitReport(unittest.TestCase):
    """리포트 출력 테스트"""

    @classmethod
    def setUpClass(cls):
        cls.refs = load_fixture("mini_ref.txt")
        cls.hyps = load_fixture("mini_hyp.txt")
        cls.report = evaluate_asr(cls.refs, cls.hyps, ConditionLabel.MD)

    def test_format_ratio(self):
        self.assertEqual(format_ratio(0.15625), "15.62%")
        self.assertEqual(format_ratio(1.0106), "101.06%")
        self.assertEqual(format_ratio(None), "—")

    def test_markdown_golden(self):
        """미니 코퍼스 markdown 표 = 골든 파일"""
        self.assertEqual(emit_report(self.report), (FIXTURES / "asr_mini.md").read_bytes())

    def test_identity_golden(self):
        report = evaluate_asr(self.refs, self.refs, ConditionLabel.MD)
        self.assertEqual(emit_report(report), (FIXTURES / "asr_identity.md").read_bytes())

    def test_diacritizer_golden(self):
        report = evaluate_diacritizer(self.refs, load_fixture("mini_restored.txt"), model_label="lexicon")
        self.assertEqual(emit_report(report), (FIXTURES / "diacritizer_mini.md").read_bytes())

    def test_absent_cells(self):
        """정의되지 않은 precision은 '—'"""
        text = emit_report(sample_asr_report()).decode("utf-8")
        row = text.splitlines()[2]
        self.assertEqual(row, "| UD | 25.00% | 10.00% | 50.00% | 20.00% | 0.00% | — | — |")

    def test_case_ending_drops_column(self):
        text = emit_report(self.report, case_ending=CaseEnding.WITHOUT).decode("utf-8")
        header = text.splitlines()[0]
        self.assertIn("Precision w.o. case", header)
        self.assertNotIn("Precision w. case", header)

    def test_diacritics_only_table(self):
        text = emit_report(self.report, diacritics_only=True).decode("utf-8")
        self.assertEqual(
            text.splitlines()[:3],
            [
                "| Condition | Coverage | Precision w. case | Precision w.o. case |",
                "| --- | ---: | ---: | ---: |",
                "| MD | 94.51% | 90.28% | 93.88% |",
            ],
        )

    def test_tsv(self):
        lines = emit_report(self.report, ReportFormat.TSV).decode("utf-8").split("\n")
        self.assertEqual(
            lines[0].split("\t"),
            ["condition", "wer_plain", "cer_plain", "wer_diac", "cer_diac", "coverage_hyp",
             "precision_with_case", "precision_without_case", "coverage_ref"],
        )
        self.assertEqual(lines[1].split("\t")[0], "MD")
        self.assertEqual(lines[1].split("\t")[-1], "96.81%")
        self.assertEqual(lines[2], "")

    def test_json_round_trip(self):
        """json 출력은 다시 읽으면 같은 리포트"""
        data = emit_report(self.report, ReportFormat.JSON)
        self.assertEqual(load_report_json(data), self.report)
        payload = json.loads(data)
        self.assertEqual(
            sorted(payload),
            ["condition", "counts", "kind", "metrics", "pipeline", "toolkit_version"],
        )
        self.assertEqual(payload["counts"]["matched_words"], 28)

    def test_json_round_trip_diacritizer(self):
        report = DiacritizerReport(model_label="m", coverage=None, der_with_case=None, der_without_case=None)
        self.assertEqual(load_report_json(emit_report(report, ReportFormat.JSON)), report)

    def test_json_stable_bytes(self):
        first = emit_report(self.report, ReportFormat.JSON)
        self.assertEqual(first, emit_report(self.report, ReportFormat.JSON))
        self.assertTrue(first.endswith(b"\n"))

    def test_malformed_report(self):
        for data in (b"{", b"[]", b'{"kind": "other", "metrics": {}, "counts": {}}', b'{"kind": "asr"}'):
            with self.assertRaises(MalformedReportException, msg=data):
                load_report_json(data)

    def test_table_of_several_reports(self):
        """여러 시스템은 한 표에 한 행씩"""
        other = sample_asr_report(pipeline_tag="UD+lexicon")
        text = emit_table([self.report, other]).decode("utf-8")
        rows = text.splitlines()
        self.assertTrue(rows[2].startswith("| MD |"))
        self.assertTrue(rows[3].startswith("| UD+lexicon |"))
        payload = json.loads(emit_table([self.report, other], ReportFormat.JSON))
        self.assertEqual([item["pipeline"] for item in payload], [None, "UD+lexicon"])

    def test_mixed_report_kinds_rejected(self):
        with self.assertRaises(ValueError):
            emit_table([self.report, DiacritizerReport()])


if __name__ == "__main__":
    unittest.main()
