# ============================================
# app/schemas/evaluation.py - 평가 API 요청/응답 스키마
# ============================================

from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.record import EvalRecord
from app.schemas.report import ConditionLabel
from app.tashkeel.orthography import CoverageMode


# ============================================
# 요청 스키마
# ============================================

class TextRequest(BaseModel):
    """텍스트 한 덩어리 (여러 줄 가능)"""
    text: str = Field(..., description="아랍어 텍스트 (줄 단위로 처리)")
    strict: bool = Field(True, description="strict 파싱 여부")

    class Config:
        json_schema_extra = {
            "example": {
                "text": "عَلِمَ الوَلَدُ",
                "strict": True
            }
        }


class StatsRequest(TextRequest):
    coverage_mode: CoverageMode = Field(CoverageMode.MARKS, description="커버리지 계산 방식")


class AsrEvaluationRequest(BaseModel):
    """ASR 평가 요청"""
    records: List[EvalRecord] = Field(..., min_length=1, description="평가 레코드 (hyp 필수)")
    condition: ConditionLabel = Field(ConditionLabel.OTHER, description="학습 조건")
    tag: Optional[str] = Field(None, description="파이프라인 표시 이름")
    strict: bool = True
    coverage_mode: CoverageMode = CoverageMode.MARKS


class DiacritizerEvaluationRequest(BaseModel):
    """디아크리틱 복원기 평가 요청 (ref=정답, hyp=예측)"""
    records: List[EvalRecord] = Field(..., min_length=1)
    label: str = Field("predicted", description="모델 표시 이름")
    strict: bool = True
    coverage_mode: CoverageMode = CoverageMode.MARKS


# ============================================
# 응답 스키마
# ============================================

class TextResponse(BaseModel):
    lines: List[str] = Field(..., description="처리된 줄들")


class CorpusStats(BaseModel):
    """코퍼스 통계"""
    letters: int
    marks: int
    marked_letters: int
    words: int
    coverage: float
