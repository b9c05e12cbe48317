# ============================================
# app/core/exceptions.py - 커스텀 예외 클래스
# ============================================
# 평가 도구 전체에서 사용하는 커스텀 예외들을 정의합니다.
# 같은 예외가 CLI에서는 종료 코드로, 평가 서버에서는 HTTP 에러 응답으로 변환됩니다.
# ============================================

from typing import Any, Dict, Optional, Union


def _restore_exception(cls, state: Dict[str, Any]) -> "TashkeelEvalException":
    exc = cls.__new__(cls)
    Exception.__init__(exc, state.get("message"))
    exc.__dict__.update(state)
    return exc


class TashkeelEvalException(Exception):
    """
    타시킬 평가 기본 예외 클래스

    모든 커스텀 예외의 부모 클래스입니다.

    [신입 개발자를 위한 팁]
    - error_code: 변하지 않는 에러 식별자 (테스트와 클라이언트가 이 값으로 분기)
    - message: 사람이 읽는 에러 메시지
    - status_code: 평가 서버에서 사용할 HTTP 상태 코드
    - exit_code: CLI 종료 코드 (0 성공, 1 사용법 오류, 2 데이터 오류)
    """
    def __init__(
        self,
        error_code: str,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        status_code: int = 422,
        exit_code: int = 2
    ):
        super().__init__(message)
        self.error_code = error_code
        self.message = message
        self.details = dict(details) if details else {}
        self.status_code = status_code
        self.exit_code = exit_code

    def __reduce__(self):
        # 워커 프로세스 간 전달: 하위 클래스 생성자 인자와 무관하게 복원
        return (_restore_exception, (self.__class__, dict(self.__dict__)))

    def with_record(self, record_id: str) -> "TashkeelEvalException":
        """
        에러가 발생한 레코드 ID(줄 번호 등)를 메시지와 details에 붙입니다.

        같은 예외 객체를 반환하므로 `except` 블록 안에서 `raise exc.with_record(rid)` 형태로 사용합니다.
        """
        if "record_id" not in self.details:
            self.details["record_id"] = record_id
            self.message = f"레코드 {record_id}: {self.message}"
            self.args = (self.message,)
        return self

    def to_dict(self) -> Dict[str, Any]:
        """일관된 에러 응답 형식 (평가 서버용)"""
        error: Dict[str, Any] = {
            "code": self.error_code,
            "message": self.message,
        }
        if self.details:
            error["details"] = self.details
        return {"success": False, "error": error}


# ============================================
# 표기(orthography) 관련 예외
# ============================================

class LeadingDiacriticException(TashkeelEvalException):
    """
    앞에 아랍 문자가 없는 디아크리틱 (strict 모드)
    """
    def __init__(self, word: str, position: int):
        super().__init__(
            error_code="LEADING_DIACRITIC",
            message=f"단어 '{word}'의 {position}번째 코드포인트 앞에 기준 문자가 없습니다",
            details={"word": word, "position": position}
        )


class IllegalClusterException(TashkeelEvalException):
    """
    한 문자에 모음 부호가 두 개 이상이거나 샤다가 두 개 이상인 경우 (strict 모드)
    """
    def __init__(self, word: str, position: int):
        super().__init__(
            error_code="ILLEGAL_CLUSTER",
            message=f"단어 '{word}'의 {position}번째 문자에 허용되지 않는 부호 조합이 있습니다",
            details={"word": word, "position": position}
        )


class EmptyWordException(TashkeelEvalException):
    """빈 단어에는 어미 위치가 없음"""
    def __init__(self):
        super().__init__(
            error_code="EMPTY_WORD",
            message="빈 단어는 어미를 분리할 수 없습니다"
        )


# ============================================
# 지표(metrics) 관련 예외
# ============================================

class EmptyReferenceException(TashkeelEvalException):
    """참조(reference) 단어/문자 수가 0인 경우"""
    def __init__(self, unit: str = "단어"):
        super().__init__(
            error_code="EMPTY_REFERENCE",
            message=f"참조 {unit} 수가 0이라 오류율을 계산할 수 없습니다",
            details={"unit": unit}
        )


class NoArabicLettersException(TashkeelEvalException):
    """아랍 문자가 하나도 없어 커버리지를 계산할 수 없음"""
    def __init__(self):
        super().__init__(
            error_code="NO_ARABIC_LETTERS",
            message="아랍 문자가 없어 디아크리틱 커버리지를 계산할 수 없습니다"
        )


class InvariantViolationException(TashkeelEvalException):
    """일치 단어 쌍의 기본 문자가 서로 다름"""
    def __init__(self, ref_word: str, hyp_word: str):
        super().__init__(
            error_code="INVARIANT_VIOLATION",
            message=f"일치 단어 쌍의 기본 문자가 다릅니다: '{ref_word}' / '{hyp_word}'",
            details={"ref_word": ref_word, "hyp_word": hyp_word}
        )


class BaseTextMismatchException(TashkeelEvalException):
    """디아크리틱 복원 평가에서 정답과 예측의 기본 문자열이 다름"""
    def __init__(self, gold: str, predicted: str):
        super().__init__(
            error_code="BASE_TEXT_MISMATCH",
            message="정답과 예측의 기본 문자열(디아크리틱 제거 후)이 다릅니다",
            details={"gold": gold, "predicted": predicted}
        )


class RecordCountMismatchException(TashkeelEvalException):
    """참조/가설 레코드 수 불일치"""
    def __init__(self, ref_count: int, hyp_count: int):
        super().__init__(
            error_code="RECORD_COUNT_MISMATCH",
            message=f"참조 {ref_count}개, 가설 {hyp_count}개로 레코드 수가 다릅니다",
            details={"ref_count": ref_count, "hyp_count": hyp_count}
        )


# ============================================
# 복원기(restorer) 관련 예외
# ============================================

class EmptyCorpusException(TashkeelEvalException):
    """학습 코퍼스가 비어 있음"""
    def __init__(self):
        super().__init__(
            error_code="EMPTY_CORPUS",
            message="학습 코퍼스가 비어 있습니다"
        )


class MalformedModelFileException(TashkeelEvalException):
    """lexicon 모델 파일 형식 오류"""
    def __init__(self, reason: str, line: Optional[int] = None):
        details: Dict[str, Any] = {"reason": reason}
        if line is not None:
            details["line"] = line
        where = f" ({line}번째 줄)" if line is not None else ""
        super().__init__(
            error_code="MALFORMED_MODEL_FILE",
            message=f"모델 파일 형식이 올바르지 않습니다{where}: {reason}",
            details=details
        )


# ============================================
# 코퍼스 입출력 관련 예외
# ============================================

class LineCountMismatchException(TashkeelEvalException):
    """병렬 텍스트 파일의 줄 수가 다름"""
    def __init__(self, ref_lines: int, hyp_lines: int):
        super().__init__(
            error_code="LINE_COUNT_MISMATCH",
            message=f"참조 파일 {ref_lines}줄, 가설 파일 {hyp_lines}줄로 줄 수가 다릅니다",
            details={"ref_lines": ref_lines, "hyp_lines": hyp_lines}
        )


class InvalidUtf8Exception(TashkeelEvalException):
    """UTF-8로 디코딩할 수 없는 입력"""
    def __init__(self, path: str, line: Optional[int] = None):
        details: Dict[str, Any] = {"path": path}
        if line is not None:
            details["line"] = line
        where = f" {line}번째 줄" if line is not None else ""
        super().__init__(
            error_code="INVALID_UTF8",
            message=f"'{path}'{where}이(가) 올바른 UTF-8이 아닙니다",
            details=details
        )


class MalformedRecordException(TashkeelEvalException):
    """JSONL 레코드 형식 오류 또는 빈 참조"""
    def __init__(self, line: Union[int, str], reason: str):
        super().__init__(
            error_code="MALFORMED_RECORD",
            message=f"{line}번째 레코드가 올바르지 않습니다: {reason}",
            details={"line": line, "reason": reason}
        )


class DuplicateIdException(TashkeelEvalException):
    """레코드 ID 중복"""
    def __init__(self, record_id: str, line: int):
        super().__init__(
            error_code="DUPLICATE_ID",
            message=f"{line}번째 줄의 레코드 ID '{record_id}'가 중복되었습니다",
            details={"record_id": record_id, "line": line}
        )


class MalformedReportException(TashkeelEvalException):
    """json 리포트를 다시 읽을 수 없음"""
    def __init__(self, reason: str):
        super().__init__(
            error_code="MALFORMED_REPORT",
            message=f"리포트 json 형식이 올바르지 않습니다: {reason}",
            details={"reason": reason}
        )


# ============================================
# 사용법 / 서비스 관련 예외
# ============================================

class UsageException(TashkeelEvalException):
    """
    잘못된 CLI 인자 또는 존재하지 않는 입력 경로 (종료 코드 1)
    """
    def __init__(self, message: str = "잘못된 사용법입니다"):
        super().__init__(
            error_code="USAGE_ERROR",
            message=message,
            status_code=400,
            exit_code=1
        )


class ServiceUnavailableException(TashkeelEvalException):
    """
    서비스 이용 불가 예외 (503)

    평가 서버에 lexicon 모델이 설정되지 않았을 때 사용
    """
    def __init__(self, message: str = "서비스를 일시적으로 이용할 수 없습니다"):
        super().__init__(
            error_code="SERVICE_UNAVAILABLE",
            message=message,
            status_code=503
        )
