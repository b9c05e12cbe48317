# ============================================
# app/api/v1/__init__.py
# ============================================

"""
API v1 모듈

평가 라우터(/evaluation)를 포함합니다.
"""
