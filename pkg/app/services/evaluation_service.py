# ============================================
# app/services/evaluation_service.py - 평가 서비스
# ============================================
# 엔진(app.tashkeel)의 순수 함수들을 코퍼스 단위 작업으로 조합합니다.
# - 파싱 정책(strict/lenient)과 레코드 ID가 붙은 에러
# - 레코드별 병렬 처리 (ProcessPoolExecutor) 후 레코드 순서대로 합산
# - UD+lexicon / AD:lexicon 파이프라인
# CLI와 HTTP API가 모두 이 서비스를 사용합니다.
# ============================================

import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from app.core.exceptions import (
    DuplicateIdException,
    EmptyCorpusException,
    MalformedRecordException,
    NoArabicLettersException,
    TashkeelEvalException,
)
from app.schemas.evaluation import CorpusStats
from app.schemas.record import EvalRecord
from app.schemas.report import AsrReport, ConditionLabel, DiacritizerReport
from app.tashkeel.metrics import (
    DiacritizerTally,
    RecordTally,
    diacritizer_report_from_tally,
    report_from_tally,
    sum_tallies,
    tally_diacritizer_record,
    tally_record,
)
from app.tashkeel.orthography import (
    CoverageMode,
    ParsePolicy,
    SentenceForm,
    counts,
    normalize,
    parse,
    render,
    strip,
)
from app.tashkeel.restorer import LexiconModel, restore, train

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class PipelineMode(str, Enum):
    """
    lexicon 복원기 파이프라인

    - UD: 가설의 디아크리틱을 지우고 복원한 뒤 평가 (UD+lexicon)
    - AD: 참조의 디아크리틱을 지우고 복원한 뒤 평가 (AD:lexicon)
    """
    UD = "UD"
    AD = "AD"


PIPELINE_TAGS = {
    PipelineMode.UD: "UD+lexicon",
    PipelineMode.AD: "AD:lexicon",
}


# ============================================
# 레코드 단위 작업 (워커 프로세스에서 실행되므로 모듈 최상위 함수)
# ============================================

def parse_record_text(
    text: str,
    record_id: str,
    policy: ParsePolicy,
    reference: bool = False
) -> SentenceForm:
    """
    레코드 텍스트 하나를 정규화 후 파싱합니다.

    Args:
        text: 원본 텍스트
        record_id: 에러 메시지에 붙일 레코드 ID
        policy: 파싱 정책
        reference: 참조 텍스트면 빈 문장을 검사

    Raises:
        TashkeelEvalException: 파싱 오류 (레코드 ID 포함)
        MalformedRecordException: strict 모드에서 정규화 후 빈 참조
    """
    try:
        sentence = parse(normalize(text), policy)
    except TashkeelEvalException as exc:
        raise exc.with_record(record_id)

    if reference and not sentence.words:
        if policy is ParsePolicy.STRICT:
            raise MalformedRecordException(record_id, "정규화 후 참조가 비어 있습니다")
        logger.warning(f"⚠️ 레코드 {record_id}: 빈 참조를 그대로 평가합니다")
    return sentence


def _check_unique_ids(records: Sequence[EvalRecord]) -> None:
    """레코드 ID는 코퍼스 안에서 유일해야 함 (위치는 1부터)"""
    seen = set()
    for position, record in enumerate(records, start=1):
        if record.id in seen:
            raise DuplicateIdException(record.id, position)
        seen.add(record.id)


def _require_hyp(record: EvalRecord) -> str:
    if record.hyp is None:
        raise MalformedRecordException(record.id, "hyp 필드가 없습니다")
    return record.hyp


def _asr_task(task: Tuple[str, str, str, ParsePolicy, CoverageMode]) -> RecordTally:
    record_id, ref_text, hyp_text, policy, coverage_mode = task
    ref = parse_record_text(ref_text, record_id, policy, reference=True)
    hyp = parse_record_text(hyp_text, record_id, policy)
    tally = tally_record(ref, hyp, coverage_mode)
    logger.debug(f"레코드 {record_id}: {tally}")
    return tally


def _diacritizer_task(task: Tuple[str, str, str, ParsePolicy, CoverageMode]) -> DiacritizerTally:
    record_id, gold_text, predicted_text, policy, coverage_mode = task
    gold = parse_record_text(gold_text, record_id, policy, reference=True)
    predicted = parse_record_text(predicted_text, record_id, policy)
    try:
        return tally_diacritizer_record(gold, predicted, coverage_mode)
    except TashkeelEvalException as exc:
        raise exc.with_record(record_id)


def _parse_task(task: Tuple[str, str, ParsePolicy]) -> SentenceForm:
    record_id, text, policy = task
    return parse_record_text(text, record_id, policy)


# ============================================
# 서비스
# ============================================

class EvaluationService:
    """
    평가 서비스 클래스

    [신입 개발자를 위한 설명]
    - parse_policy: strict면 잘못된 디아크리틱 배치가 있는 레코드에서 중단
    - coverage_mode: 커버리지 분자 계산 방식
    - jobs: 1보다 크면 레코드를 여러 프로세스에서 나눠 처리
      (결과는 레코드 순서대로 정수 합산하므로 jobs와 무관하게 항상 같음)
    """

    def __init__(
        self,
        parse_policy: ParsePolicy = ParsePolicy.STRICT,
        coverage_mode: CoverageMode = CoverageMode.MARKS,
        jobs: int = 1
    ):
        self.parse_policy = ParsePolicy(parse_policy)
        self.coverage_mode = CoverageMode(coverage_mode)
        self.jobs = max(1, jobs)

    def _map(self, worker: Callable[[T], R], tasks: Sequence[T]) -> List[R]:
        """작업을 순서대로 처리합니다 (jobs > 1이면 프로세스 풀 사용, 결과 순서 유지)."""
        if self.jobs <= 1 or len(tasks) < 2:
            return [worker(task) for task in tasks]

        max_workers = min(self.jobs, len(tasks))
        chunksize = max(1, len(tasks) // (max_workers * 4))
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(worker, tasks, chunksize=chunksize))

    # ============================================
    # 텍스트 처리
    # ============================================

    def parse_text(self, text: str, record_id: str = "1") -> SentenceForm:
        return parse_record_text(text, record_id, self.parse_policy)

    def parse_lines(self, lines: Sequence[str]) -> List[SentenceForm]:
        tasks = [(str(number), line, self.parse_policy) for number, line in enumerate(lines, start=1)]
        return self._map(_parse_task, tasks)

    def strip_lines(self, lines: Sequence[str]) -> List[str]:
        """각 줄을 정규화 → 파싱 → 디아크리틱 제거 → 렌더링합니다."""
        return [render(strip(sentence)) for sentence in self.parse_lines(lines)]

    def stats(self, lines: Sequence[str]) -> CorpusStats:
        """
        코퍼스 통계 (문자 수, 부호 수, 부호 붙은 문자 수, 단어 수, 커버리지)

        Raises:
            NoArabicLettersException: 아랍 문자가 하나도 없음 (빈 파일 포함)
        """
        letters = marks = marked_letters = words = 0
        for sentence in self.parse_lines(lines):
            sentence_letters, sentence_marks = counts(sentence, CoverageMode.MARKS)
            _, sentence_marked = counts(sentence, CoverageMode.MARKED_LETTERS)
            letters += sentence_letters
            marks += sentence_marks
            marked_letters += sentence_marked
            words += len(sentence.words)

        if letters == 0:
            raise NoArabicLettersException()

        numerator = marked_letters if self.coverage_mode is CoverageMode.MARKED_LETTERS else marks
        return CorpusStats(
            letters=letters,
            marks=marks,
            marked_letters=marked_letters,
            words=words,
            coverage=numerator / letters,
        )

    # ============================================
    # 평가
    # ============================================

    def evaluate_asr_records(
        self,
        records: Sequence[EvalRecord],
        condition_label: ConditionLabel = ConditionLabel.OTHER,
        pipeline_tag: Optional[str] = None
    ) -> AsrReport:
        """
        ASR 평가 (레코드마다 ref/hyp 필수)

        Returns:
            AsrReport: 레코드별 집계를 순서대로 합산한 리포트

        Raises:
            DuplicateIdException: 같은 ID의 레코드가 둘 이상
        """
        _check_unique_ids(records)
        tasks = [
            (record.id, record.ref, _require_hyp(record), self.parse_policy, self.coverage_mode)
            for record in records
        ]
        total = sum_tallies(self._map(_asr_task, tasks), RecordTally())
        report = report_from_tally(total, ConditionLabel(condition_label), pipeline_tag)
        logger.info(
            f"📊 ASR 평가 완료 ({report.display_label}): {total.records}개 레코드, "
            f"WER {report.wer_plain:.4f}/{report.wer_diac:.4f}"
        )
        return report

    def evaluate_diacritizer_records(
        self,
        records: Sequence[EvalRecord],
        model_label: str = "predicted"
    ) -> DiacritizerReport:
        """디아크리틱 복원기 평가 (ref=정답, hyp=예측)"""
        _check_unique_ids(records)
        tasks = [
            (record.id, record.ref, _require_hyp(record), self.parse_policy, self.coverage_mode)
            for record in records
        ]
        total = sum_tallies(self._map(_diacritizer_task, tasks), DiacritizerTally())
        report = diacritizer_report_from_tally(total, model_label)
        logger.info(f"📊 복원기 평가 완료 ({model_label}): {total.records}개 레코드")
        return report

    def compare(self, labeled_records: Sequence[Tuple[str, Sequence[EvalRecord]]]) -> List[AsrReport]:
        """
        여러 시스템을 같은 참조로 평가해 표 한 개 분량의 리포트를 만듭니다.

        라벨이 UD/MD/AD면 학습 조건으로, 그 밖이면 파이프라인 태그로 씁니다.
        """
        reports = []
        for label, records in labeled_records:
            if label in {c.value for c in ConditionLabel} and label != ConditionLabel.OTHER.value:
                reports.append(self.evaluate_asr_records(records, ConditionLabel(label)))
            else:
                reports.append(self.evaluate_asr_records(records, ConditionLabel.OTHER, label))
        return reports

    # ============================================
    # lexicon 복원기
    # ============================================

    def train_lexicon(self, lines: Sequence[str]) -> LexiconModel:
        """
        디아크리틱 코퍼스(한 줄에 문장 하나)로 lexicon을 학습합니다.

        Raises:
            EmptyCorpusException: 줄이 하나도 없음
        """
        if not lines:
            raise EmptyCorpusException()
        return train(self.parse_lines(lines))

    def restore_lines(self, model: LexiconModel, lines: Sequence[str]) -> List[str]:
        """각 줄을 복원합니다 (줄 수와 기본 문자는 그대로)."""
        return [render(restore(model, sentence)) for sentence in self.parse_lines(lines)]

    def _restore_text(self, model: LexiconModel, text: str, record_id: str) -> str:
        sentence = parse_record_text(text, record_id, self.parse_policy)
        return render(restore(model, strip(sentence)))

    def run_pipeline(
        self,
        records: Sequence[EvalRecord],
        model: LexiconModel,
        mode: PipelineMode = PipelineMode.UD
    ) -> AsrReport:
        """
        lexicon 파이프라인 평가

        - UD: 가설을 strip → restore 한 뒤 참조와 비교
        - AD: 참조를 strip → restore 한 뒤 가설과 비교
        """
        mode = PipelineMode(mode)
        prepared = []
        for record in records:
            hyp = _require_hyp(record)
            if mode is PipelineMode.UD:
                prepared.append(record.model_copy(update={"hyp": self._restore_text(model, hyp, record.id)}))
            else:
                prepared.append(record.model_copy(update={"ref": self._restore_text(model, record.ref, record.id)}))

        return self.evaluate_asr_records(
            prepared,
            condition_label=ConditionLabel(mode.value),
            pipeline_tag=PIPELINE_TAGS[mode],
        )
