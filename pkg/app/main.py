# ============================================
# app/main.py - FastAPI 애플리케이션 시작점
# ============================================
# 평가 서버(HTTP)의 진입점(Entry Point)입니다.
# 명령줄 도구는 app/cli.py (python -m app) 를 사용합니다.
# ============================================

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app import __version__
from app.api.v1.router import api_router
from app.config import settings
from app.core.exceptions import TashkeelEvalException
from app.core.log_config import configure_logging

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    애플리케이션 생명주기 관리

    [신입 개발자를 위한 팁]
    - yield 전: 서버 시작 시 실행되는 코드 (로그 설정)
    - yield 후: 서버 종료 시 실행되는 코드
    """
    configure_logging(settings.TASHKEEL_EVAL_LOG)
    logger.info(f"🚀 타시킬 평가 서버를 시작합니다 (환경: {settings.ENVIRONMENT})")
    if settings.LEXICON_MODEL_PATH:
        logger.info(f"lexicon 모델 경로: {settings.LEXICON_MODEL_PATH}")

    yield

    logger.info("타시킬 평가 서버를 종료합니다")


# ============================================
# FastAPI 애플리케이션 인스턴스 생성
# ============================================
app = FastAPI(
    title="타시킬 평가 API",
    description="""
    ## 아랍어 디아크리틱 인식 평가

    ### 주요 기능
    - **strip / stats**: 디아크리틱 제거와 커버리지 통계
    - **asr**: 디아크리틱 포함/제외 WER·CER, 커버리지, 일치 단어 precision
    - **diacritizer**: 텍스트 복원기 커버리지와 DER
    - **restore**: lexicon 다수결 복원
    """,
    version=__version__,
    lifespan=lifespan,
    debug=settings.DEBUG,
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url=f"{settings.API_V1_PREFIX}/openapi.json"
)


# ============================================
# CORS 설정
# ============================================
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins_list,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ============================================
# 예외 처리
# ============================================
# 모든 커스텀 예외를 일관된 에러 응답으로 변환합니다.
# {"success": false, "error": {"code", "message", "details"}}
# ============================================
@app.exception_handler(TashkeelEvalException)
async def tashkeel_exception_handler(request: Request, exc: TashkeelEvalException):
    logger.warning(f"❌ [{exc.error_code}] {request.url.path}: {exc.message}")
    return JSONResponse(status_code=exc.status_code, content=exc.to_dict())


app.include_router(api_router, prefix=settings.API_V1_PREFIX)


@app.get("/", tags=["Health Check"])
async def root():
    """서버 상태 확인 엔드포인트"""
    return {
        "status": "ok",
        "message": "타시킬 평가 API 서버가 실행 중입니다",
        "version": __version__,
        "docs": "/docs"
    }


@app.get("/health", tags=["Health Check"])
async def health_check():
    """
    상세 헬스체크 엔드포인트

    lexicon 모델 설정 여부도 함께 반환합니다.
    """
    return {
        "status": "healthy",
        "environment": settings.ENVIRONMENT,
        "debug": settings.DEBUG,
        "lexicon_configured": bool(settings.LEXICON_MODEL_PATH)
    }


# ============================================
# 직접 실행 시 (python -m app.main)
# ============================================
if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host="0.0.0.0",
        port=8000,
        reload=True,
        reload_excludes=["venv/*"]
    )
