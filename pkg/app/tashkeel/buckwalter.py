"""
Buckwalter 음역 변환

테스트 픽스처와 디버깅 출력을 ASCII로 읽기 쉽게 다루기 위한 일대일 문자 매핑입니다.
매핑에 없는 문자(공백, 숫자, 라틴 문자 등)는 그대로 통과합니다.
"""

_UNICODE = (
    "آؤئبتجگخذزشضظغـق"
    "لنويٌَِْٰپچءأإڤا"
    "ةثحدرسصطعفكمهىًٍ"
    "ُّٱ"
)
_BUCKWALTER = "|&}btjGx*z$DZg_qlnwyNaio`PJ'><VApvHdrsSTEfkmhYFKu~{"

_TO_ARABIC = {ord(b): a for a, b in zip(_UNICODE, _BUCKWALTER)}
_FROM_ARABIC = {ord(a): b for a, b in zip(_UNICODE, _BUCKWALTER)}


def to_arabic(text: str) -> str:
    """Buckwalter 문자열을 아랍 문자로 변환합니다."""
    return text.translate(_TO_ARABIC)


def from_arabic(text: str) -> str:
    """아랍 문자열을 Buckwalter로 변환합니다."""
    return text.translate(_FROM_ARABIC)
