# ============================================
# app/api/deps.py - API 의존성
# ============================================
# FastAPI의 Dependency Injection에서 사용하는 공통 의존성을 정의합니다.
# ============================================

import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

from app.config import settings
from app.core.exceptions import ServiceUnavailableException
from app.tashkeel.orthography import CoverageMode, ParsePolicy
from app.tashkeel.restorer import LexiconModel, load
from app.services.evaluation_service import EvaluationService

logger = logging.getLogger(__name__)


@lru_cache()
def _load_lexicon(path: str) -> LexiconModel:
    return load(Path(path).read_bytes())


def get_lexicon_model() -> LexiconModel:
    """
    LEXICON_MODEL_PATH에 설정된 lexicon 모델을 반환하는 의존성 함수

    한 번 읽은 모델은 캐시됩니다.

    [신입 개발자를 위한 팁]
    - 테스트에서는 app.dependency_overrides[get_lexicon_model]로 바꿔 끼울 수 있습니다

    Raises:
        ServiceUnavailableException: 모델 경로가 설정되지 않았거나 파일이 없음
    """
    path: Optional[str] = settings.LEXICON_MODEL_PATH
    if not path:
        raise ServiceUnavailableException("LEXICON_MODEL_PATH가 설정되지 않았습니다")
    if not Path(path).is_file():
        raise ServiceUnavailableException(f"lexicon 모델 파일이 없습니다: {path}")
    return _load_lexicon(path)


def build_service(strict: bool, coverage_mode: CoverageMode = CoverageMode.MARKS) -> EvaluationService:
    """요청 옵션으로 평가 서비스를 만듭니다 (API 요청은 항상 단일 프로세스)."""
    policy = ParsePolicy.STRICT if strict else ParsePolicy.LENIENT
    return EvaluationService(parse_policy=policy, coverage_mode=coverage_mode, jobs=1)
