# ============================================
# app/api/v1/evaluation.py - 평가 API 라우터
# ============================================
# CLI와 같은 평가 기능을 HTTP로 제공합니다.
# 입력은 JSON 본문, 출력은 BaseResponse 형식입니다.
# ============================================

import logging

from fastapi import APIRouter, Depends, status

from app.api.deps import build_service, get_lexicon_model
from app.schemas.common import BaseResponse, ErrorResponse
from app.schemas.evaluation import (
    AsrEvaluationRequest,
    CorpusStats,
    DiacritizerEvaluationRequest,
    StatsRequest,
    TextRequest,
    TextResponse,
)
from app.schemas.report import AsrReport, DiacritizerReport
from app.tashkeel.corpusio import split_lines
from app.tashkeel.restorer import LexiconModel

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/evaluation",
    tags=["Evaluation"],
    responses={422: {"model": ErrorResponse, "description": "입력 데이터 오류"}}
)


@router.post(
    "/strip",
    response_model=BaseResponse[TextResponse],
    status_code=status.HTTP_200_OK,
    summary="디아크리틱 제거"
)
def strip_text(request: TextRequest):
    """
    줄마다 정규화 → 파싱 → 디아크리틱 제거 결과를 반환합니다.

    strict 모드에서 잘못된 디아크리틱 배치가 있으면 422 에러입니다.
    """
    service = build_service(request.strict)
    lines = service.strip_lines(split_lines(request.text))
    return BaseResponse(data=TextResponse(lines=lines))


@router.post(
    "/stats",
    response_model=BaseResponse[CorpusStats],
    summary="디아크리틱 커버리지 통계"
)
def corpus_stats(request: StatsRequest):
    """문자 수, 부호 수, 단어 수와 커버리지를 반환합니다."""
    service = build_service(request.strict, request.coverage_mode)
    return BaseResponse(data=service.stats(split_lines(request.text)))


@router.post(
    "/asr",
    response_model=BaseResponse[AsrReport],
    summary="ASR 전사 평가"
)
def evaluate_asr(request: AsrEvaluationRequest):
    """
    참조/가설 레코드로 WER, CER, 커버리지, precision을 계산합니다.

    [요청 예시]
    {
        "records": [{"id": "1", "ref": "عَلِمَ", "hyp": "عَلِمُ"}],
        "condition": "MD"
    }
    """
    service = build_service(request.strict, request.coverage_mode)
    report = service.evaluate_asr_records(request.records, request.condition, request.tag)
    return BaseResponse(data=report, message=f"{len(request.records)}개 레코드 평가 완료")


@router.post(
    "/diacritizer",
    response_model=BaseResponse[DiacritizerReport],
    summary="텍스트 디아크리틱 복원기 평가"
)
def evaluate_diacritizer(request: DiacritizerEvaluationRequest):
    """정답(ref)과 예측(hyp)으로 커버리지와 DER을 계산합니다."""
    service = build_service(request.strict, request.coverage_mode)
    report = service.evaluate_diacritizer_records(request.records, request.label)
    return BaseResponse(data=report, message=f"{len(request.records)}개 레코드 평가 완료")


@router.post(
    "/restore",
    response_model=BaseResponse[TextResponse],
    responses={503: {"model": ErrorResponse, "description": "lexicon 모델 미설정"}},
    summary="lexicon 모델로 디아크리틱 복원"
)
def restore_text(
    request: TextRequest,
    model: LexiconModel = Depends(get_lexicon_model)
):
    """
    서버에 설정된 lexicon 모델(LEXICON_MODEL_PATH)로 줄마다 복원합니다.

    모델이 설정되지 않았으면 503 에러입니다.
    """
    service = build_service(request.strict)
    lines = service.restore_lines(model, split_lines(request.text))
    return BaseResponse(data=TextResponse(lines=lines))
