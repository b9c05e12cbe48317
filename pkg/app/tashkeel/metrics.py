# ============================================
# app/tashkeel/metrics.py - 평가 지표
# ============================================
# ASR 전사와 텍스트 디아크리틱 복원 결과를 평가하는 지표들입니다.
#
# [지표 요약]
# - WER / CER: 디아크리틱 무시(plain) / 포함(diac) 두 가지
# - coverage: 디아크리틱 수 / 아랍 문자 수
# - precision: 일치 단어 쌍에서 양쪽 모두 부호가 있는 위치만 비교
# - DER: 정답에 부호가 있는 위치를 세고, 예측이 비어 있어도 오류
#
# 코퍼스 단위 값은 레코드별 정수 집계(RecordTally)를 순서대로 더한 뒤
# 마지막에 한 번만 나눕니다 (micro average). 그래서 병렬/직렬 결과가 같습니다.
# ============================================

import logging
from dataclasses import dataclass, fields
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple

from app.core.exceptions import (
    BaseTextMismatchException,
    EmptyReferenceException,
    InvariantViolationException,
    NoArabicLettersException,
    RecordCountMismatchException,
)
from app.schemas.report import AsrReport, ConditionLabel, DiacritizerReport
from app.tashkeel.alignment import MatchedWordPair, edit_distance, matched_pairs
from app.tashkeel.orthography import (
    CoverageMode,
    MarkCluster,
    SentenceForm,
    WordForm,
    counts,
    letter_positions,
    render,
    strip,
)

logger = logging.getLogger(__name__)


def ratio(numerator: int, denominator: int) -> Optional[float]:
    """분모가 0이면 None (정의되지 않음), 아니면 numerator / denominator"""
    if denominator == 0:
        return None
    return numerator / denominator


def _check_paired(refs: Sequence, hyps: Sequence) -> None:
    if len(refs) != len(hyps):
        raise RecordCountMismatchException(len(refs), len(hyps))


def _tokens(sentence: SentenceForm, with_diacritics: bool) -> List[str]:
    if with_diacritics:
        return [word.render() for word in sentence.words]
    return [word.key for word in sentence.words]


def _chars(sentence: SentenceForm, with_diacritics: bool) -> str:
    return render(sentence) if with_diacritics else render(strip(sentence))


# ============================================
# 레코드별 집계
# ============================================

@dataclass(frozen=True)
class RecordTally:
    """
    레코드 하나(또는 여러 레코드 합계)의 정수 분자/분모

    + 연산으로 합칩니다. 비율은 합계에서만 계산합니다.
    """
    records: int = 0
    ref_words: int = 0
    word_edits_plain: int = 0
    word_edits_diac: int = 0
    ref_chars_plain: int = 0
    ref_chars_diac: int = 0
    char_edits_plain: int = 0
    char_edits_diac: int = 0
    ref_letters: int = 0
    ref_marks: int = 0
    hyp_letters: int = 0
    hyp_marks: int = 0
    matched_words: int = 0
    correct_with_case: int = 0
    compared_with_case: int = 0
    correct_without_case: int = 0
    compared_without_case: int = 0

    def __add__(self, other: "RecordTally") -> "RecordTally":
        return RecordTally(**{
            f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)
        })


@dataclass(frozen=True)
class DiacritizerTally:
    """디아크리틱 복원기 평가용 레코드 집계"""
    records: int = 0
    letters: int = 0
    marks: int = 0
    errors_with_case: int = 0
    counted_with_case: int = 0
    errors_without_case: int = 0
    counted_without_case: int = 0

    def __add__(self, other: "DiacritizerTally") -> "DiacritizerTally":
        return DiacritizerTally(**{
            f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)
        })


def sum_tallies(tallies: Iterable, start):
    """레코드 순서대로 왼쪽부터 더합니다."""
    return reduce(lambda total, tally: total + tally, tallies, start)


# ============================================
# 오류율
# ============================================

def wer(refs: Sequence[SentenceForm], hyps: Sequence[SentenceForm], with_diacritics: bool) -> float:
    """
    단어 오류율 (코퍼스 전체 편집 비용 합 / 참조 단어 수 합)

    Raises:
        RecordCountMismatchException: 참조/가설 개수가 다름
        EmptyReferenceException: 참조 단어가 하나도 없음
    """
    _check_paired(refs, hyps)
    edits = sum(
        edit_distance(_tokens(ref, with_diacritics), _tokens(hyp, with_diacritics))
        for ref, hyp in zip(refs, hyps)
    )
    total = sum(len(ref.words) for ref in refs)
    if total == 0:
        raise EmptyReferenceException("단어")
    return edits / total


def cer(refs: Sequence[SentenceForm], hyps: Sequence[SentenceForm], with_diacritics: bool) -> float:
    """
    문자 오류율

    렌더링한 문장(단어 사이 공백 하나 포함)을 코드포인트 단위로 비교합니다.
    with_diacritics가 False면 양쪽 모두 디아크리틱을 제거한 뒤 비교합니다.
    """
    _check_paired(refs, hyps)
    edits = 0
    total = 0
    for ref, hyp in zip(refs, hyps):
        ref_chars = _chars(ref, with_diacritics)
        edits += edit_distance(ref_chars, _chars(hyp, with_diacritics))
        total += len(ref_chars)
    if total == 0:
        raise EmptyReferenceException("문자")
    return edits / total


def coverage(corpus: Sequence[SentenceForm], mode: CoverageMode = CoverageMode.MARKS) -> float:
    """
    디아크리틱 커버리지 = 부호 수 합 / 아랍 문자 수 합

    marks 모드에서는 샤다+모음 문자가 2로 세어지므로 1을 넘을 수 있습니다.

    Raises:
        NoArabicLettersException: 아랍 문자가 하나도 없음
    """
    letters = 0
    marks = 0
    for sentence in corpus:
        sentence_letters, sentence_marks = counts(sentence, mode)
        letters += sentence_letters
        marks += sentence_marks
    if letters == 0:
        raise NoArabicLettersException()
    return marks / letters


# ============================================
# precision / DER
# ============================================

def _pair_positions(
    ref_word: WordForm,
    hyp_word: WordForm,
    include_case_ending: bool
) -> List[Tuple[MarkCluster, MarkCluster]]:
    ref_clusters = ref_word.clusters
    hyp_clusters = hyp_word.clusters
    return [
        (ref_clusters[index], hyp_clusters[index])
        for index in letter_positions(ref_word, include_case_ending)
    ]


def precision_counts(pairs: Iterable[MatchedWordPair], include_case_ending: bool) -> Tuple[int, int]:
    """
    (일치 위치 수, 비교 위치 수)

    양쪽 묶음이 모두 비어 있지 않은 위치만 비교합니다.
    한쪽이라도 비어 있으면 그 위치는 버립니다.
    """
    correct = 0
    compared = 0
    for pair in pairs:
        if not pair.is_consistent():
            raise InvariantViolationException(pair.ref_word.render(), pair.hyp_word.render())
        for ref_cluster, hyp_cluster in _pair_positions(pair.ref_word, pair.hyp_word, include_case_ending):
            if not ref_cluster or not hyp_cluster:
                continue
            compared += 1
            if ref_cluster == hyp_cluster:
                correct += 1
    return correct, compared


def precision(pairs: Iterable[MatchedWordPair], include_case_ending: bool) -> Tuple[Optional[float], int]:
    """
    일치 단어 쌍의 디아크리틱 정밀도

    Returns:
        (precision, compared): 비교 위치가 0이면 precision은 None
    """
    correct, compared = precision_counts(pairs, include_case_ending)
    return ratio(correct, compared), compared


def _check_same_base(gold: SentenceForm, predicted: SentenceForm) -> None:
    if [w.key for w in gold.words] != [w.key for w in predicted.words]:
        raise BaseTextMismatchException(render(strip(gold)), render(strip(predicted)))


def der_counts(gold: SentenceForm, predicted: SentenceForm, include_case_ending: bool) -> Tuple[int, int]:
    """
    (오류 위치 수, 센 위치 수)

    정답 묶음이 비어 있지 않은 위치를 셉니다.
    예측 묶음이 비어 있거나 정답과 다르면 오류입니다.
    """
    _check_same_base(gold, predicted)
    errors = 0
    counted = 0
    for gold_word, predicted_word in zip(gold.words, predicted.words):
        for gold_cluster, predicted_cluster in _pair_positions(gold_word, predicted_word, include_case_ending):
            if not gold_cluster:
                continue
            counted += 1
            if gold_cluster != predicted_cluster:
                errors += 1
    return errors, counted


def der(gold: SentenceForm, predicted: SentenceForm, include_case_ending: bool) -> Optional[float]:
    """
    디아크리틱 오류율 (정답에 부호가 하나도 없으면 None)

    Raises:
        BaseTextMismatchException: 디아크리틱 제거 후 문자열이 다름
    """
    errors, counted = der_counts(gold, predicted, include_case_ending)
    return ratio(errors, counted)


# ============================================
# 리포트
# ============================================

def tally_record(
    ref: SentenceForm,
    hyp: SentenceForm,
    coverage_mode: CoverageMode = CoverageMode.MARKS
) -> RecordTally:
    """참조/가설 문장 한 쌍의 모든 분자/분모를 계산합니다."""
    ref_plain = _chars(ref, False)
    ref_diac = _chars(ref, True)
    ref_letters, ref_marks = counts(ref, coverage_mode)
    hyp_letters, hyp_marks = counts(hyp, coverage_mode)
    pairs = matched_pairs(ref, hyp)
    correct_with, compared_with = precision_counts(pairs, True)
    correct_without, compared_without = precision_counts(pairs, False)

    return RecordTally(
        records=1,
        ref_words=len(ref.words),
        word_edits_plain=edit_distance(_tokens(ref, False), _tokens(hyp, False)),
        word_edits_diac=edit_distance(_tokens(ref, True), _tokens(hyp, True)),
        ref_chars_plain=len(ref_plain),
        ref_chars_diac=len(ref_diac),
        char_edits_plain=edit_distance(ref_plain, _chars(hyp, False)),
        char_edits_diac=edit_distance(ref_diac, _chars(hyp, True)),
        ref_letters=ref_letters,
        ref_marks=ref_marks,
        hyp_letters=hyp_letters,
        hyp_marks=hyp_marks,
        matched_words=len(pairs),
        correct_with_case=correct_with,
        compared_with_case=compared_with,
        correct_without_case=correct_without,
        compared_without_case=compared_without,
    )


def report_from_tally(
    total: RecordTally,
    condition_label: ConditionLabel = ConditionLabel.OTHER,
    pipeline_tag: Optional[str] = None
) -> AsrReport:
    """
    합산된 집계로 AsrReport를 만듭니다.

    Raises:
        EmptyReferenceException: 참조 단어가 하나도 없음
    """
    if total.ref_words == 0:
        raise EmptyReferenceException("단어")

    return AsrReport(
        condition_label=condition_label,
        pipeline_tag=pipeline_tag,
        wer_plain=total.word_edits_plain / total.ref_words,
        cer_plain=total.char_edits_plain / total.ref_chars_plain,
        wer_diac=total.word_edits_diac / total.ref_words,
        cer_diac=total.char_edits_diac / total.ref_chars_diac,
        coverage_hyp=ratio(total.hyp_marks, total.hyp_letters),
        coverage_ref=ratio(total.ref_marks, total.ref_letters),
        precision_with_case=ratio(total.correct_with_case, total.compared_with_case),
        precision_without_case=ratio(total.correct_without_case, total.compared_without_case),
        compared_positions_with_case=total.compared_with_case,
        compared_positions_without_case=total.compared_without_case,
        correct_positions_with_case=total.correct_with_case,
        correct_positions_without_case=total.correct_without_case,
        records=total.records,
        ref_words=total.ref_words,
        ref_chars_plain=total.ref_chars_plain,
        ref_chars_diac=total.ref_chars_diac,
        word_edits_plain=total.word_edits_plain,
        word_edits_diac=total.word_edits_diac,
        char_edits_plain=total.char_edits_plain,
        char_edits_diac=total.char_edits_diac,
        ref_letters=total.ref_letters,
        ref_marks=total.ref_marks,
        hyp_letters=total.hyp_letters,
        hyp_marks=total.hyp_marks,
        matched_words=total.matched_words,
    )


def evaluate_asr(
    refs: Sequence[SentenceForm],
    hyps: Sequence[SentenceForm],
    condition_label: ConditionLabel = ConditionLabel.OTHER,
    pipeline_tag: Optional[str] = None,
    coverage_mode: CoverageMode = CoverageMode.MARKS
) -> AsrReport:
    """
    ASR 평가 표의 한 행을 계산합니다.

    Args:
        refs: 참조 문장들
        hyps: 가설 문장들 (refs와 같은 개수, 같은 순서)
        condition_label: 학습 조건 (UD/MD/AD/other)
        pipeline_tag: 파이프라인 표시 이름
        coverage_mode: 커버리지 분자 계산 방식

    Returns:
        AsrReport: 오류율, 커버리지, 정밀도와 모든 개수
    """
    _check_paired(refs, hyps)
    total = sum_tallies(
        (tally_record(ref, hyp, coverage_mode) for ref, hyp in zip(refs, hyps)),
        RecordTally(),
    )
    report = report_from_tally(total, ConditionLabel(condition_label), pipeline_tag)
    logger.info(f"📊 ASR 평가 완료: {total.records}개 레코드, 일치 단어 {total.matched_words}개")
    return report


def tally_diacritizer_record(
    gold: SentenceForm,
    predicted: SentenceForm,
    coverage_mode: CoverageMode = CoverageMode.MARKS
) -> DiacritizerTally:
    errors_with, counted_with = der_counts(gold, predicted, True)
    errors_without, counted_without = der_counts(gold, predicted, False)
    letters, marks = counts(predicted, coverage_mode)
    return DiacritizerTally(
        records=1,
        letters=letters,
        marks=marks,
        errors_with_case=errors_with,
        counted_with_case=counted_with,
        errors_without_case=errors_without,
        counted_without_case=counted_without,
    )


def diacritizer_report_from_tally(total: DiacritizerTally, model_label: str = "predicted") -> DiacritizerReport:
    return DiacritizerReport(
        model_label=model_label,
        coverage=ratio(total.marks, total.letters),
        der_with_case=ratio(total.errors_with_case, total.counted_with_case),
        der_without_case=ratio(total.errors_without_case, total.counted_without_case),
        counted_positions=total.counted_with_case,
        counted_positions_without_case=total.counted_without_case,
        errors_with_case=total.errors_with_case,
        errors_without_case=total.errors_without_case,
        records=total.records,
        letters=total.letters,
        marks=total.marks,
    )


def evaluate_diacritizer(
    gold: Sequence[SentenceForm],
    predicted: Sequence[SentenceForm],
    model_label: str = "predicted",
    coverage_mode: CoverageMode = CoverageMode.MARKS
) -> DiacritizerReport:
    """
    텍스트 디아크리틱 복원기 평가 (예측 커버리지 + 어미 포함/제외 DER)

    Raises:
        RecordCountMismatchException: 정답/예측 개수가 다름
        BaseTextMismatchException: 어떤 레코드의 기본 문자열이 다름
    """
    _check_paired(gold, predicted)
    total = sum_tallies(
        (tally_diacritizer_record(g, p, coverage_mode) for g, p in zip(gold, predicted)),
        DiacritizerTally(),
    )
    return diacritizer_report_from_tally(total, model_label)
