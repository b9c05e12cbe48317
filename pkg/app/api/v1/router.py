# ============================================
# app/api/v1/router.py - API v1 메인 라우터
# ============================================
# 모든 API v1 라우터를 통합하는 메인 라우터입니다.
# main.py에서 settings.API_V1_PREFIX 아래에 등록합니다.
# ============================================

from fastapi import APIRouter

from app.api.v1.evaluation import router as evaluation_router


api_router = APIRouter()

# 평가 관련 API (디아크리틱 제거, 통계, ASR/복원기 평가, 복원)
# 최종 URL: /api/v1/evaluation/...
api_router.include_router(evaluation_router)
