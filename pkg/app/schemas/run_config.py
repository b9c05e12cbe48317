# ============================================
# app/schemas/run_config.py - CLI 실행 설정
# ============================================

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from app.core.exceptions import UsageException
from app.tashkeel.orthography import CoverageMode, ParsePolicy


class CaseEnding(str, Enum):
    """precision/DER을 어미 포함(with), 제외(without), 둘 다(both) 중 무엇으로 보여줄지"""
    WITH = "with"
    WITHOUT = "without"
    BOTH = "both"


class ReportFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "markdown"
    TSV = "tsv"


class RunConfig(BaseModel):
    """
    CLI 한 번 실행의 설정

    CLI 플래그 > 환경 변수(.env) > 기본값 순으로 채워집니다.
    입력 경로는 작업 시작 전에 validate_paths()로 확인합니다.
    """
    subcommand: str
    input_paths: List[Path] = Field(default_factory=list)
    output_path: Optional[Path] = None
    parse_policy: ParsePolicy = ParsePolicy.STRICT
    coverage_mode: CoverageMode = CoverageMode.MARKS
    case_ending: CaseEnding = CaseEnding.BOTH
    report_format: ReportFormat = ReportFormat.MARKDOWN
    jobs: int = Field(1, ge=1, description="워커 프로세스 수")

    def validate_paths(self) -> None:
        """
        입력 경로가 모두 존재하는 파일인지 확인합니다.

        Raises:
            UsageException: 존재하지 않거나 파일이 아닌 경로
        """
        for path in self.input_paths:
            if not path.is_file():
                raise UsageException(f"입력 파일을 찾을 수 없습니다: {path}")
