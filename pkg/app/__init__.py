# ============================================
# app/__init__.py
# ============================================
# 이 파일은 app 폴더를 Python 패키지로 만들어줍니다.
# ============================================

"""
타시킬 평가 도구 (Tashkeel Eval)

아랍어 ASR 및 텍스트 디아크리틱 복원 시스템의 디아크리틱 인식 품질을 평가합니다.
"""

__version__ = "1.0.0"
__author__ = "Tashkeel Eval Team"
