# ============================================
# app/schemas/record.py - 평가 레코드 스키마
# ============================================
# 병렬 텍스트 파일의 한 줄, 또는 JSONL 파일의 한 객체에 해당합니다.
# 텍스트는 읽은 그대로 보관하고, 정규화는 평가 단계에서 명시적으로 합니다.
# ============================================

from typing import Optional

from pydantic import BaseModel, Field, StrictStr


class EvalRecord(BaseModel):
    """
    평가 레코드

    - id: 코퍼스 안에서 유일 (병렬 텍스트 파일이면 1부터 시작하는 줄 번호)
    - ref: 참조(정답) 텍스트
    - hyp: 가설(예측) 텍스트, 학습용 입력이면 없음
    """
    id: StrictStr = Field(..., description="레코드 ID")
    ref: StrictStr = Field(..., description="참조 텍스트")
    hyp: Optional[StrictStr] = Field(None, description="가설 텍스트")

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {
                "id": "u1",
                "ref": "عَلِمَ",
                "hyp": "علم"
            }
        }
