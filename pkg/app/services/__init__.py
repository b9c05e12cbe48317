# ============================================
# app/services/__init__.py
# ============================================
# 평가 서비스 패키지 초기화
# ============================================

"""
서비스 모듈

엔진(app.tashkeel)의 순수 함수들을 코퍼스 단위 평가 작업으로 조합합니다.

[신입 개발자를 위한 팁]
- 서비스 레이어는 CLI/API(입출력)와 엔진(계산) 사이에서 작업 흐름을 처리합니다.
- CLI와 API는 입력을 읽고 결과를 출력하는 일만 하고, 실제 평가는 서비스에서 처리합니다.

[아키텍처 흐름]
입력 → CLI 또는 API → EvaluationService → app.tashkeel 엔진 → 리포트
"""

from app.services.evaluation_service import EvaluationService, PipelineMode


__all__ = [
    "EvaluationService",
    "PipelineMode",
]
