"""
아랍어 표기 처리

텍스트를 정규화하고, 기본 문자(base letter)와 디아크리틱 묶음(mark cluster)으로
분해(parse)하고, 다시 문자열로 렌더링하거나 디아크리틱을 제거(strip)합니다.

디아크리틱은 U+064B..U+0652 의 8개 부호만 인정합니다.
- 겹자음 부호(gemination): 샤다
- 모음 부호(vocalic): 탄윈 3개, 짧은 모음 3개, 수쿤
한 문자에는 샤다 최대 1개와 모음 부호 최대 1개가 붙을 수 있고,
정규 순서는 "샤다 먼저, 그 다음 모음 부호" 입니다.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from pyarabic import araby

from app.core.exceptions import (
    EmptyWordException,
    IllegalClusterException,
    LeadingDiacriticException,
)

logger = logging.getLogger(__name__)


class DiacriticMark(str, Enum):
    """인정하는 8개 디아크리틱 (각각 코드포인트 하나에 대응)"""
    FATHATAN = araby.FATHATAN
    DAMMATAN = araby.DAMMATAN
    KASRATAN = araby.KASRATAN
    FATHA = araby.FATHA
    DAMMA = araby.DAMMA
    KASRA = araby.KASRA
    SHADDA = araby.SHADDA
    SUKUN = araby.SUKUN

    @property
    def is_gemination(self) -> bool:
        return self is DiacriticMark.SHADDA

    @property
    def is_vocalic(self) -> bool:
        return self is not DiacriticMark.SHADDA


class ParsePolicy(str, Enum):
    """
    파싱 정책

    - strict: 잘못된 디아크리틱 배치가 있으면 레코드를 거부
    - lenient: 잘못된 부호를 버리거나 고치고 경고 로그를 남김
    """
    STRICT = "strict"
    LENIENT = "lenient"


class CoverageMode(str, Enum):
    """
    커버리지 분자 계산 방식

    - marks: 부호 개수 그대로 (샤다+모음 = 2)
    - marked-letters: 부호가 하나라도 붙은 문자 수
    """
    MARKS = "marks"
    MARKED_LETTERS = "marked-letters"


TATWEEL = araby.TATWEEL

_DIACRITIC_CHARS = frozenset(mark.value for mark in DiacriticMark)
_FIRST_LETTER = "ء"
_LAST_LETTER = "ي"

_WS_RE = re.compile(r"\s+")
_MARK_RUN_RE = re.compile("[ً-ْ]+")


def is_diacritic(ch: str) -> bool:
    """8개 디아크리틱 코드포인트 중 하나인지 확인합니다."""
    return ch in _DIACRITIC_CHARS


def is_arabic_letter(ch: str) -> bool:
    """U+0621..U+064A 범위의 아랍 문자인지 확인합니다 (타트윌 제외)."""
    return _FIRST_LETTER <= ch <= _LAST_LETTER and ch != TATWEEL


def _canonical_key(ch: str) -> Tuple[int, int]:
    # 샤다 먼저, 그 다음 코드포인트 순
    return (0 if ch == DiacriticMark.SHADDA.value else 1, ord(ch))


# ============================================
# 도메인 타입
# ============================================

@dataclass(frozen=True)
class MarkCluster:
    """한 문자에 붙은 디아크리틱 묶음 (정규 순서, 비어 있을 수 있음)"""
    marks: Tuple[DiacriticMark, ...] = ()

    def __post_init__(self):
        if list(self.marks) != sorted(self.marks, key=lambda m: _canonical_key(m.value)):
            raise ValueError(f"정규 순서가 아닌 부호 묶음입니다: {self.marks}")
        if sum(1 for m in self.marks if m.is_gemination) > 1:
            raise ValueError("샤다는 한 문자에 하나만 붙을 수 있습니다")
        if sum(1 for m in self.marks if m.is_vocalic) > 1:
            raise ValueError("모음 부호는 한 문자에 하나만 붙을 수 있습니다")

    def __len__(self) -> int:
        return len(self.marks)

    def render(self) -> str:
        return "".join(mark.value for mark in self.marks)

    @classmethod
    def of(cls, marks: Iterable[DiacriticMark]) -> "MarkCluster":
        """임의 순서의 적법한 부호들을 정규 순서로 정렬해 묶음을 만듭니다."""
        unique = {DiacriticMark(m) for m in marks}
        return cls(tuple(sorted(unique, key=lambda m: _canonical_key(m.value))))


EMPTY_CLUSTER = MarkCluster()


@dataclass(frozen=True)
class GraphemeUnit:
    """
    기본 코드포인트 하나와 그 디아크리틱 묶음

    base가 아랍 문자가 아니면(숫자, 라틴 문자, 구두점 등) 비알파벳 단위이고
    묶음은 항상 비어 있습니다.
    """
    base: str
    cluster: MarkCluster = EMPTY_CLUSTER

    @property
    def is_letter(self) -> bool:
        return is_arabic_letter(self.base)

    def render(self) -> str:
        return self.base + self.cluster.render()


@dataclass(frozen=True)
class WordForm:
    """공백 없는 단어 하나. 마지막 단위의 묶음이 어미(case ending) 위치입니다."""
    graphemes: Tuple[GraphemeUnit, ...]

    @property
    def clusters(self) -> Tuple[MarkCluster, ...]:
        return tuple(g.cluster for g in self.graphemes)

    @property
    def key(self) -> str:
        """디아크리틱을 제거한 렌더링 (lexicon 키, 일치 단어 비교에 사용)"""
        return "".join(g.base for g in self.graphemes)

    def render(self) -> str:
        return "".join(g.render() for g in self.graphemes)


@dataclass(frozen=True)
class SentenceForm:
    """공백으로 토큰화한 단어들의 나열"""
    words: Tuple[WordForm, ...] = ()

    def __len__(self) -> int:
        return len(self.words)


# ============================================
# 연산
# ============================================

def _canonical_run(run: str) -> str:
    unique = list(dict.fromkeys(run))
    vowels = [ch for ch in unique if ch != DiacriticMark.SHADDA.value]
    if len(vowels) > 1:
        # 모음이 둘 이상이면 샤다만 앞으로, 모음은 입력 순서 유지
        return "".join(ch for ch in unique if ch == DiacriticMark.SHADDA.value) + "".join(vowels)
    return "".join(sorted(unique, key=_canonical_key))


def normalize(raw: str) -> str:
    """
    입력 텍스트를 정규화합니다 (전함수, 예외 없음).

    - 타트윌(U+0640) 제거
    - 연속 공백을 공백 하나로, 앞뒤 공백 제거
    - 한 문자에 붙은 디아크리틱들을 정규 순서로 정렬하고 같은 종류의 중복은 하나로
      (모음이 둘 이상인 묶음은 샤다만 앞으로 옮기고 모음은 입력 순서 그대로)

    그 밖의 코드포인트는 그대로 통과합니다 (호환 정규화 없음).

    Examples:
        >>> normalize("  a\\t b ")
        'a b'
    """
    text = raw.replace(TATWEEL, "")
    text = _WS_RE.sub(" ", text).strip()
    return _MARK_RUN_RE.sub(lambda match: _canonical_run(match.group(0)), text)


def _build_cluster(
    word: str,
    position: int,
    raw_marks: Sequence[str],
    policy: ParsePolicy
) -> MarkCluster:
    kept: List[DiacriticMark] = []
    illegal = False
    for ch in raw_marks:
        mark = DiacriticMark(ch)
        if mark in kept:
            continue
        # 같은 분류(겹자음/모음)의 부호가 이미 있으면 처음 본 것만 남김
        if any(existing.is_gemination == mark.is_gemination for existing in kept):
            illegal = True
            continue
        kept.append(mark)

    if illegal:
        if policy is ParsePolicy.STRICT:
            raise IllegalClusterException(word, position)
        logger.warning(f"⚠️ 허용되지 않는 부호 조합을 보정했습니다: '{word}' ({position}번째 문자)")

    return MarkCluster.of(kept)


def parse_word(token: str, policy: ParsePolicy = ParsePolicy.STRICT) -> Optional[WordForm]:
    """
    공백 없는 토큰 하나를 WordForm으로 분해합니다.

    lenient 모드에서 고아 디아크리틱만으로 이루어진 토큰은 None을 반환합니다.
    """
    units: List[Tuple[str, List[str]]] = []
    for position, ch in enumerate(token):
        if is_diacritic(ch):
            # 디아크리틱은 바로 앞의 아랍 문자(와 그 묶음)에만 붙음
            if not units or not is_arabic_letter(units[-1][0]):
                if policy is ParsePolicy.STRICT:
                    raise LeadingDiacriticException(token, position)
                logger.warning(f"⚠️ 기준 문자 없는 디아크리틱을 버렸습니다: '{token}' ({position}번째)")
                continue
            units[-1][1].append(ch)
        else:
            units.append((ch, []))

    if not units:
        return None

    return WordForm(tuple(
        GraphemeUnit(base, _build_cluster(token, index, marks, policy) if marks else EMPTY_CLUSTER)
        for index, (base, marks) in enumerate(units)
    ))


def parse(normalized: str, policy: ParsePolicy = ParsePolicy.STRICT) -> SentenceForm:
    """
    정규화된 텍스트를 SentenceForm으로 분해합니다.

    Args:
        normalized: normalize()를 거친 텍스트
        policy: strict면 잘못된 부호 배치에서 예외, lenient면 보정 후 경고

    Returns:
        SentenceForm: 공백 단위 단어들

    Raises:
        LeadingDiacriticException: 앞에 아랍 문자가 없는 디아크리틱 (strict)
        IllegalClusterException: 한 문자에 모음 부호가 둘 이상 (strict)
    """
    words = []
    for token in normalized.split():
        word = parse_word(token, policy)
        if word is not None:
            words.append(word)
    return SentenceForm(tuple(words))


def render_word(word: WordForm) -> str:
    return word.render()


def render(sentence: SentenceForm) -> str:
    """parse의 역연산. 단어는 공백 하나로 연결합니다."""
    return " ".join(word.render() for word in sentence.words)


def strip_word(word: WordForm) -> WordForm:
    return WordForm(tuple(GraphemeUnit(g.base) for g in word.graphemes))


def strip(sentence: SentenceForm) -> SentenceForm:
    """모든 묶음을 비웁니다. 기본 문자와 단어 경계는 그대로입니다."""
    return SentenceForm(tuple(strip_word(word) for word in sentence.words))


def word_key(word: WordForm) -> str:
    return word.key


def counts(sentence: SentenceForm, mode: CoverageMode = CoverageMode.MARKS) -> Tuple[int, int]:
    """
    아랍 문자 수와 디아크리틱 수를 셉니다.

    Args:
        sentence: 문장
        mode: marks면 부호 개수 그대로, marked-letters면 부호가 붙은 문자 수

    Returns:
        (letters, marks): 커버리지의 분모와 분자
    """
    letters = 0
    numerator = 0
    for word in sentence.words:
        for grapheme in word.graphemes:
            if not grapheme.is_letter:
                continue
            letters += 1
            if mode is CoverageMode.MARKED_LETTERS:
                numerator += 1 if len(grapheme.cluster) else 0
            else:
                numerator += len(grapheme.cluster)
    return letters, numerator


def case_split(word: WordForm) -> Tuple[Tuple[MarkCluster, ...], MarkCluster]:
    """
    단어의 묶음을 본문(마지막을 제외한 전부)과 어미(마지막 단위)로 나눕니다.

    Raises:
        EmptyWordException: 빈 단어
    """
    if not word.graphemes:
        raise EmptyWordException()
    clusters = word.clusters
    return clusters[:-1], clusters[-1]


def letter_positions(word: WordForm, include_case_ending: bool = True) -> List[int]:
    """
    단어 안의 아랍 문자 위치(인덱스) 목록

    include_case_ending이 False면 마지막 아랍 문자 위치를 뺍니다.
    한 글자 단어는 이 경우 아무 위치도 남지 않습니다.
    """
    positions = [index for index, g in enumerate(word.graphemes) if g.is_letter]
    if not include_case_ending and positions:
        positions.pop()
    return positions


def canonical_cluster(marks: Iterable[DiacriticMark]) -> MarkCluster:
    """적법한 부호들을 정규 순서의 MarkCluster로 만듭니다 (MarkCluster.of의 함수형 별칭)."""
    return MarkCluster.of(marks)
