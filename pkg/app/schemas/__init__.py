# ============================================
# app/schemas/__init__.py
# ============================================
# Pydantic 스키마 패키지 초기화
# ============================================

"""
Pydantic 스키마 모듈

평가 리포트, 평가 레코드, CLI 실행 설정, API 요청/응답의 형식을 정의합니다.

[신입 개발자를 위한 팁]
- 스키마(Schema): 데이터의 형식/구조를 정의하는 것
- Pydantic: Python에서 데이터 검증을 쉽게 해주는 라이브러리
- 리포트 json 직렬화와 FastAPI 응답 모두 이 스키마를 사용합니다
"""
