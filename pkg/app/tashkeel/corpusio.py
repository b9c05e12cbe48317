# ============================================
# app/tashkeel/corpusio.py - 코퍼스 입출력 / 리포트 출력
# ============================================
# 병렬 텍스트 파일과 JSONL 코퍼스를 읽고, 평가 리포트를
# json / markdown / tsv 로 출력합니다.
#
# [입력 규칙]
# - UTF-8 (잘못된 바이트는 InvalidUtf8Exception)
# - 줄 끝은 LF 또는 CRLF, 마지막 줄바꿈은 있어도 없어도 됨
# - 읽은 텍스트는 정규화하지 않고 그대로 보관
# ============================================

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from app import __version__
from app.core.exceptions import (
    DuplicateIdException,
    InvalidUtf8Exception,
    LineCountMismatchException,
    MalformedRecordException,
    MalformedReportException,
)
from app.schemas.record import EvalRecord
from app.schemas.report import AsrReport, DiacritizerReport
from app.schemas.run_config import CaseEnding, ReportFormat

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
Report = Union[AsrReport, DiacritizerReport]

ABSENT = "—"


# ============================================
# 읽기
# ============================================

def decode_utf8(data: bytes, source: str) -> str:
    """
    UTF-8로 디코딩합니다.

    Raises:
        InvalidUtf8Exception: 잘못된 바이트가 있는 줄 번호와 함께
    """
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[:exc.start].count(b"\n") + 1
        raise InvalidUtf8Exception(source, line) from exc


def split_lines(text: str) -> List[str]:
    """LF/CRLF 모두 허용, 마지막 줄바꿈 뒤의 빈 줄은 레코드로 치지 않음"""
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


def read_lines(path: PathLike) -> List[str]:
    """파일을 줄 단위로 읽습니다 (내용은 변경하지 않음)."""
    path = Path(path)
    return split_lines(decode_utf8(path.read_bytes(), str(path)))


def records_from_lines(lines: Sequence[str]) -> List[EvalRecord]:
    """줄 번호(1부터)를 ID로 하는 참조 전용 레코드"""
    return [EvalRecord(id=str(number), ref=line) for number, line in enumerate(lines, start=1)]


def load_corpus(path: PathLike) -> List[EvalRecord]:
    """한 줄에 문장 하나인 텍스트 파일을 참조 전용 레코드로 읽습니다."""
    records = records_from_lines(read_lines(path))
    logger.info(f"📂 코퍼스 로드: {path} ({len(records)}줄)")
    return records


def load_parallel(ref_path: PathLike, hyp_path: PathLike) -> List[EvalRecord]:
    """
    참조/가설 병렬 텍스트 파일을 레코드로 묶습니다.

    Args:
        ref_path: 참조 파일 (한 줄에 발화 하나)
        hyp_path: 가설 파일 (참조와 같은 줄 수)

    Returns:
        List[EvalRecord]: id는 1부터 시작하는 줄 번호

    Raises:
        LineCountMismatchException: 두 파일의 줄 수가 다름
        InvalidUtf8Exception: UTF-8이 아닌 파일
    """
    ref_lines = read_lines(ref_path)
    hyp_lines = read_lines(hyp_path)
    if len(ref_lines) != len(hyp_lines):
        raise LineCountMismatchException(len(ref_lines), len(hyp_lines))

    records = [
        EvalRecord(id=str(number), ref=ref, hyp=hyp)
        for number, (ref, hyp) in enumerate(zip(ref_lines, hyp_lines), start=1)
    ]
    logger.info(f"📂 병렬 코퍼스 로드: {len(records)}개 레코드")
    return records


def load_jsonl(path: PathLike) -> List[EvalRecord]:
    """
    JSONL 코퍼스를 읽습니다. 빈 줄은 건너뜁니다.

    각 줄은 문자열 필드 id, ref 와 선택 필드 hyp 를 가진 객체입니다.

    Raises:
        MalformedRecordException: JSON 오류, 객체가 아님, 필드 누락/타입 오류
        DuplicateIdException: 같은 id가 두 번 나옴
    """
    records: List[EvalRecord] = []
    seen: Dict[str, int] = {}
    for number, line in enumerate(read_lines(path), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecordException(number, f"JSON 파싱 실패 ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise MalformedRecordException(number, "JSON 객체가 아닙니다")
        try:
            record = EvalRecord.model_validate(obj)
        except ValidationError as exc:
            fields = ", ".join(".".join(str(p) for p in err["loc"]) for err in exc.errors())
            raise MalformedRecordException(number, f"필드 오류: {fields}") from exc
        if record.id in seen:
            raise DuplicateIdException(record.id, number)
        seen[record.id] = number
        records.append(record)

    logger.info(f"📂 JSONL 코퍼스 로드: {path} ({len(records)}개 레코드)")
    return records


# ============================================
# 리포트 json
# ============================================

def report_to_dict(report: Report) -> Dict[str, Any]:
    """키가 고정된 json 리포트 객체"""
    fields = report.model_dump(mode="json")
    return {
        "kind": report.KIND,
        "condition": report.condition,
        "pipeline": getattr(report, "pipeline_tag", None),
        "metrics": {name: fields[name] for name in report.METRIC_FIELDS},
        "counts": {name: fields[name] for name in report.COUNT_FIELDS},
        "toolkit_version": __version__,
    }


def _dump_json(payload: Any) -> bytes:
    return (json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def report_from_dict(payload: Dict[str, Any]) -> Report:
    """report_to_dict의 역연산"""
    try:
        kind = payload["kind"]
        values = dict(payload["metrics"])
        values.update(payload["counts"])
        if kind == AsrReport.KIND:
            return AsrReport(
                condition_label=payload["condition"],
                pipeline_tag=payload.get("pipeline"),
                **values
            )
        if kind == DiacritizerReport.KIND:
            return DiacritizerReport(model_label=payload["condition"], **values)
    except (KeyError, TypeError, ValueError) as exc:
        # pydantic ValidationError도 ValueError 하위 클래스
        raise MalformedReportException(str(exc)) from exc
    raise MalformedReportException(f"알 수 없는 리포트 종류: {kind}")


def load_report_json(data: Union[bytes, str]) -> Report:
    """
    emit_report(..., json)으로 만든 바이트에서 리포트를 다시 읽습니다.

    Raises:
        MalformedReportException: JSON 오류 또는 스키마 불일치
    """
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        payload = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedReportException(str(exc)) from exc
    if not isinstance(payload, dict):
        raise MalformedReportException("최상위가 JSON 객체가 아닙니다")
    return report_from_dict(payload)


# ============================================
# 표 (markdown / tsv)
# ============================================

def format_ratio(value: Optional[float]) -> str:
    """비율을 소수 둘째 자리 백분율로, 정의되지 않은 값은 '—'"""
    if value is None:
        return ABSENT
    return f"{value * 100:.2f}%"


# (표 머리글, tsv 필드명, 리포트 속성, 어미 구분)
Column = Tuple[str, str, str, Optional[CaseEnding]]

ASR_COLUMNS: Tuple[Column, ...] = (
    ("WER w.o. diacritics", "wer_plain", "wer_plain", None),
    ("CER w.o. diacritics", "cer_plain", "cer_plain", None),
    ("WER w. diacritics", "wer_diac", "wer_diac", None),
    ("CER w. diacritics", "cer_diac", "cer_diac", None),
    ("Coverage", "coverage_hyp", "coverage_hyp", None),
    ("Precision w. case", "precision_with_case", "precision_with_case", CaseEnding.WITH),
    ("Precision w.o. case", "precision_without_case", "precision_without_case", CaseEnding.WITHOUT),
)
DIACRITICS_ONLY_COLUMNS: Tuple[Column, ...] = ASR_COLUMNS[4:]
DIACRITIZER_COLUMNS: Tuple[Column, ...] = (
    ("Coverage", "coverage", "coverage", None),
    ("DER w. case", "der_with_case", "der_with_case", CaseEnding.WITH),
    ("DER w.o. case", "der_without_case", "der_without_case", CaseEnding.WITHOUT),
)


def _select_columns(
    reports: Sequence[Report],
    case_ending: CaseEnding,
    diacritics_only: bool
) -> Tuple[str, str, List[Column]]:
    if all(isinstance(r, DiacritizerReport) for r in reports):
        label_header, label_field, columns = "Model", "model", DIACRITIZER_COLUMNS
    elif all(isinstance(r, AsrReport) for r in reports):
        label_header, label_field = "Condition", "condition"
        columns = DIACRITICS_ONLY_COLUMNS if diacritics_only else ASR_COLUMNS
    else:
        raise ValueError("ASR 리포트와 복원기 리포트를 한 표에 섞을 수 없습니다")

    selected = [
        column for column in columns
        if column[3] is None or case_ending is CaseEnding.BOTH or column[3] is case_ending
    ]
    return label_header, label_field, selected


def _markdown(reports: Sequence[Report], case_ending: CaseEnding, diacritics_only: bool) -> str:
    label_header, _, columns = _select_columns(reports, case_ending, diacritics_only)
    headers = [label_header] + [column[0] for column in columns]
    lines = [
        "| " + " | ".join(headers) + " |",
        "| --- | " + " | ".join("---:" for _ in columns) + " |",
    ]
    for report in reports:
        cells = [report.display_label] + [format_ratio(getattr(report, column[2])) for column in columns]
        lines.append("| " + " | ".join(cells) + " |")

    if isinstance(reports[0], AsrReport):
        lines.append("")
        lines.append(f"Reference coverage: {format_ratio(reports[0].coverage_ref)}")
    return "\n".join(lines) + "\n"


def _tsv(reports: Sequence[Report], case_ending: CaseEnding, diacritics_only: bool) -> str:
    _, label_field, columns = _select_columns(reports, case_ending, diacritics_only)
    headers = [label_field] + [column[1] for column in columns]
    is_asr = isinstance(reports[0], AsrReport)
    if is_asr:
        headers.append("coverage_ref")

    lines = ["\t".join(headers)]
    for report in reports:
        cells = [report.display_label] + [format_ratio(getattr(report, column[2])) for column in columns]
        if is_asr:
            cells.append(format_ratio(report.coverage_ref))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def emit_table(
    reports: Sequence[Report],
    report_format: ReportFormat = ReportFormat.MARKDOWN,
    case_ending: CaseEnding = CaseEnding.BOTH,
    diacritics_only: bool = False
) -> bytes:
    """
    여러 리포트를 한 표로 출력합니다 (시스템마다 한 행).

    json 형식이면 리포트 객체들의 배열을 출력합니다.
    참조 커버리지 줄은 첫 번째 리포트 값을 씁니다.
    """
    if not reports:
        raise ValueError("출력할 리포트가 없습니다")

    report_format = ReportFormat(report_format)
    case_ending = CaseEnding(case_ending)
    if report_format is ReportFormat.JSON:
        if len(reports) == 1:
            return _dump_json(report_to_dict(reports[0]))
        return _dump_json([report_to_dict(report) for report in reports])
    if report_format is ReportFormat.TSV:
        return _tsv(reports, case_ending, diacritics_only).encode("utf-8")
    return _markdown(reports, case_ending, diacritics_only).encode("utf-8")


def emit_report(
    report: Report,
    report_format: ReportFormat = ReportFormat.MARKDOWN,
    case_ending: CaseEnding = CaseEnding.BOTH,
    diacritics_only: bool = False
) -> bytes:
    """
    리포트 하나를 출력합니다.

    - json: 키 정렬, 전체 정밀도 (load_report_json으로 다시 읽을 수 있음)
    - markdown: ASR 표 / 디아크리틱 전용 표 / 복원기 표
    - tsv: 필드명 머리글 한 줄 + 값 한 줄
    """
    return emit_table([report], report_format, case_ending, diacritics_only)
