# ============================================
# app/core/log_config.py - 로깅 설정
# ============================================
# 표준 출력(stdout)은 리포트와 변환된 텍스트 전용이므로
# 로그는 항상 표준 에러(stderr)로 보냅니다.
# ============================================

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"

_VALID_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


def resolve_level(name: str) -> int:
    """
    로그 레벨 이름을 logging 상수로 변환합니다.

    알 수 없는 이름이면 WARNING을 사용합니다.
    """
    normalized = (name or "").strip().upper()
    if normalized not in _VALID_LEVELS:
        return logging.WARNING
    return getattr(logging, normalized)


def configure_logging(level_name: str) -> int:
    """
    app 패키지 로거에 stderr 핸들러를 한 번만 설치합니다.

    Args:
        level_name: TASHKEEL_EVAL_LOG 값 (예: "INFO")

    Returns:
        int: 적용된 로그 레벨
    """
    level = resolve_level(level_name)
    root = logging.getLogger("app")
    root.setLevel(level)

    if not any(getattr(h, "_tashkeel_eval", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._tashkeel_eval = True
        root.addHandler(handler)
        root.propagate = False

    return level
