# ============================================
# app/core/__init__.py
# ============================================
# 핵심 기능 패키지 초기화
# ============================================

"""
핵심 기능 모듈

예외 처리, 로깅 설정 등 CLI와 평가 서버 전체에서 사용되는 핵심 기능을 제공합니다.
"""
