# ============================================
# app/api/__init__.py
# ============================================

"""
평가 서버 API 모듈

FastAPI 라우터와 의존성(deps)을 제공합니다.
"""
