# ============================================
# app/schemas/common.py - 공통 응답 스키마
# ============================================
# 평가 API의 성공/에러 응답 형식입니다.
# ============================================

from typing import Any, Dict, Generic, Optional, TypeVar

from pydantic import BaseModel, Field


# 제네릭 타입 변수 (리포트, 통계, 텍스트 등 다양한 data)
DataType = TypeVar("DataType")


class BaseResponse(BaseModel, Generic[DataType]):
    """
    API 응답 기본 형식

    [응답 형식]
    {
        "success": true,
        "data": { ... },
        "message": "성공 메시지"
    }

    [신입 개발자를 위한 팁]
    - Generic[DataType]: BaseResponse[AsrReport]처럼 data 타입을 지정
    """
    success: bool = True
    data: Optional[DataType] = None
    message: Optional[str] = None


class ErrorBody(BaseModel):
    code: str = Field(..., description="에러 식별자 (예: LEADING_DIACRITIC)")
    message: str
    details: Optional[Dict[str, Any]] = None


class ErrorResponse(BaseModel):
    """
    에러 응답 형식 (TashkeelEvalException.to_dict()와 같은 모양)

    [응답 형식]
    {
        "success": false,
        "error": {"code": "ERROR_CODE", "message": "에러 메시지", "details": { ... }}
    }
    """
    success: bool = False
    error: ErrorBody
