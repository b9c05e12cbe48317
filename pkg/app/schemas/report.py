# ============================================
# app/schemas/report.py - 평가 리포트 스키마
# ============================================
# ASR 평가 한 행(AsrReport)과 텍스트 디아크리틱 복원기 평가 한 행
# (DiacritizerReport)을 정의합니다.
# 비율(ratio)은 0~1 사이 실수이고, 분모가 0이라 정의되지 않는 값은 None 입니다.
# ============================================

from enum import Enum
from typing import ClassVar, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class ConditionLabel(str, Enum):
    """
    학습 전사(transcript) 조건

    - UD: 디아크리틱 없는 전사로 학습
    - MD: 수작업 디아크리틱 전사로 학습
    - AD: 자동 디아크리틱 전사로 학습
    - other: 그 밖의 시스템
    """
    UD = "UD"
    MD = "MD"
    AD = "AD"
    OTHER = "other"


class AsrReport(BaseModel):
    """
    ASR 시스템 한 개의 평가 결과

    [신입 개발자를 위한 팁]
    - *_plain: 디아크리틱을 무시한 오류율, *_diac: 디아크리틱 포함 오류율
    - precision은 양쪽 모두 부호가 있는 위치만 비교합니다 (비교 위치가 0이면 None)
    - 개수(count) 필드는 비율을 다시 계산하거나 여러 리포트를 검증할 때 씁니다
    """
    condition_label: ConditionLabel = Field(ConditionLabel.OTHER, description="학습 조건")
    pipeline_tag: Optional[str] = Field(None, description="파이프라인 표시 이름 (예: UD+lexicon)")

    # 오류율
    wer_plain: float = Field(..., ge=0, description="디아크리틱 제외 WER")
    cer_plain: float = Field(..., ge=0, description="디아크리틱 제외 CER")
    wer_diac: float = Field(..., ge=0, description="디아크리틱 포함 WER")
    cer_diac: float = Field(..., ge=0, description="디아크리틱 포함 CER")

    # 커버리지 / 정밀도
    coverage_hyp: Optional[float] = Field(None, ge=0, description="가설 디아크리틱 커버리지")
    coverage_ref: Optional[float] = Field(None, ge=0, description="참조 디아크리틱 커버리지")
    precision_with_case: Optional[float] = Field(None, ge=0, le=1)
    precision_without_case: Optional[float] = Field(None, ge=0, le=1)

    # 개수
    compared_positions_with_case: int = Field(0, ge=0)
    compared_positions_without_case: int = Field(0, ge=0)
    correct_positions_with_case: int = Field(0, ge=0)
    correct_positions_without_case: int = Field(0, ge=0)
    records: int = Field(0, ge=0)
    ref_words: int = Field(0, ge=0)
    ref_chars_plain: int = Field(0, ge=0)
    ref_chars_diac: int = Field(0, ge=0)
    word_edits_plain: int = Field(0, ge=0)
    word_edits_diac: int = Field(0, ge=0)
    char_edits_plain: int = Field(0, ge=0)
    char_edits_diac: int = Field(0, ge=0)
    ref_letters: int = Field(0, ge=0)
    ref_marks: int = Field(0, ge=0)
    hyp_letters: int = Field(0, ge=0)
    hyp_marks: int = Field(0, ge=0)
    matched_words: int = Field(0, ge=0)

    KIND: ClassVar[str] = "asr"
    METRIC_FIELDS: ClassVar[Tuple[str, ...]] = (
        "wer_plain", "cer_plain", "wer_diac", "cer_diac",
        "coverage_hyp", "coverage_ref",
        "precision_with_case", "precision_without_case",
    )
    COUNT_FIELDS: ClassVar[Tuple[str, ...]] = (
        "records", "ref_words", "ref_chars_plain", "ref_chars_diac",
        "word_edits_plain", "word_edits_diac", "char_edits_plain", "char_edits_diac",
        "ref_letters", "ref_marks", "hyp_letters", "hyp_marks", "matched_words",
        "compared_positions_with_case", "compared_positions_without_case",
        "correct_positions_with_case", "correct_positions_without_case",
    )

    @model_validator(mode="after")
    def check_precision_presence(self):
        for flag in ("with_case", "without_case"):
            value = getattr(self, f"precision_{flag}")
            compared = getattr(self, f"compared_positions_{flag}")
            if (value is None) != (compared == 0):
                raise ValueError(f"precision_{flag}는 비교 위치가 0일 때만 비어 있어야 합니다")
        return self

    @property
    def display_label(self) -> str:
        """표에 표시할 이름 (파이프라인 태그 우선)"""
        return self.pipeline_tag or self.condition_label.value

    @property
    def condition(self) -> str:
        return self.condition_label.value


class DiacritizerReport(BaseModel):
    """
    텍스트 디아크리틱 복원기 한 개의 평가 결과

    DER은 정답(gold)에 부호가 있는 위치만 세고, 예측이 비어 있으면 오류로 봅니다.
    """
    model_label: str = Field("predicted", description="모델 표시 이름")
    coverage: Optional[float] = Field(None, ge=0, description="예측 디아크리틱 커버리지")
    der_with_case: Optional[float] = Field(None, ge=0, le=1)
    der_without_case: Optional[float] = Field(None, ge=0, le=1)

    counted_positions: int = Field(0, ge=0, description="어미 포함 DER 분모")
    counted_positions_without_case: int = Field(0, ge=0)
    errors_with_case: int = Field(0, ge=0)
    errors_without_case: int = Field(0, ge=0)
    records: int = Field(0, ge=0)
    letters: int = Field(0, ge=0)
    marks: int = Field(0, ge=0)

    KIND: ClassVar[str] = "diacritizer"
    METRIC_FIELDS: ClassVar[Tuple[str, ...]] = ("coverage", "der_with_case", "der_without_case")
    COUNT_FIELDS: ClassVar[Tuple[str, ...]] = (
        "records", "letters", "marks",
        "counted_positions", "counted_positions_without_case",
        "errors_with_case", "errors_without_case",
    )

    @property
    def display_label(self) -> str:
        return self.model_label

    @property
    def condition(self) -> str:
        return self.model_label
