# ============================================
# app/tashkeel/restorer.py - lexicon 기반 디아크리틱 복원기
# ============================================
# 디아크리틱을 제거한 단어(키)마다 학습 코퍼스에서 관찰된 디아크리틱 형태와
# 빈도를 모아두고, 복원할 때는 가장 많이 나온 형태(다수결)로 바꿉니다.
#
# [모델 파일 형식]
#   tashkeel-lexicon v1
#   <키>\t<디아크리틱 형태>\t<빈도>
#   ...
# 키의 코드포인트 순서, 같은 키 안에서는 순위(빈도 내림차순, 형태 코드포인트 순) 순입니다.
# ============================================

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from app.core.exceptions import (
    EmptyCorpusException,
    MalformedModelFileException,
    TashkeelEvalException,
)
from app.tashkeel.orthography import (
    ParsePolicy,
    SentenceForm,
    WordForm,
    normalize,
    parse_word,
)

logger = logging.getLogger(__name__)

MODEL_HEADER = "tashkeel-lexicon v1"

FormCounts = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class TrainingStats:
    """학습 통계 (record_count는 파일에서 읽은 모델이면 None)"""
    record_count: Optional[int]
    unique_forms: int
    ambiguity_rate: float


def _rank(forms: Mapping[str, int]) -> FormCounts:
    # 빈도 내림차순, 같으면 코드포인트 순
    return tuple(sorted(forms.items(), key=lambda item: (-item[1], item[0])))


def _stats(entries: Mapping[str, FormCounts], record_count: Optional[int]) -> TrainingStats:
    ambiguous = sum(1 for forms in entries.values() if len(forms) >= 2)
    unique = len(entries)
    return TrainingStats(
        record_count=record_count,
        unique_forms=unique,
        ambiguity_rate=ambiguous / unique if unique else 0.0,
    )


@dataclass(frozen=True)
class LexiconModel:
    """
    키(디아크리틱 제거 형태) → [(디아크리틱 형태, 빈도), ...] 매핑

    동등 비교는 entries만 봅니다 (training_stats는 파일 형식에 없음).
    """
    entries: Dict[str, FormCounts]
    training_stats: TrainingStats = field(compare=False)

    def __post_init__(self):
        top_forms = {}
        for key, forms in self.entries.items():
            word = parse_word(forms[0][0], ParsePolicy.LENIENT)
            top_forms[key] = word
        object.__setattr__(self, "_top_forms", top_forms)

    def __len__(self) -> int:
        return len(self.entries)

    def top_form(self, key: str) -> Optional[WordForm]:
        """키의 1순위 형태 (모르는 키면 None)"""
        return self._top_forms.get(key)

    def forms(self, key: str) -> FormCounts:
        return self.entries.get(key, ())


def tally(corpus: Iterable[SentenceForm]) -> Counter:
    """코퍼스의 (키, 디아크리틱 형태) 출현 횟수를 셉니다."""
    counter: Counter = Counter()
    for sentence in corpus:
        for word in sentence.words:
            counter[(word.key, word.render())] += 1
    return counter


def merge(*tallies: Counter) -> Counter:
    """여러 tally를 합칩니다 (교환/결합 법칙 성립)."""
    merged: Counter = Counter()
    for partial in tallies:
        merged.update(partial)
    return merged


def build_model(counter: Counter, record_count: Optional[int] = None) -> LexiconModel:
    """집계된 빈도로 모델을 만듭니다."""
    grouped: Dict[str, Dict[str, int]] = {}
    for (key, form), count in counter.items():
        grouped.setdefault(key, {})[form] = count
    entries = {key: _rank(grouped[key]) for key in sorted(grouped)}
    return LexiconModel(entries=entries, training_stats=_stats(entries, record_count))


def train(corpus: Sequence[SentenceForm]) -> LexiconModel:
    """
    디아크리틱이 있는 코퍼스로 lexicon을 학습합니다.

    Args:
        corpus: 디아크리틱이 붙은 문장들

    Returns:
        LexiconModel: 입력 순서와 무관하게 같은 모델

    Raises:
        EmptyCorpusException: 코퍼스가 비어 있음
    """
    if not corpus:
        raise EmptyCorpusException()

    model = build_model(tally(corpus), record_count=len(corpus))
    stats = model.training_stats
    logger.info(
        f"🧠 lexicon 학습 완료: 레코드 {stats.record_count}개, "
        f"키 {stats.unique_forms}개, 중의성 비율 {stats.ambiguity_rate:.4f}"
    )
    return model


def restore(model: LexiconModel, sentence: SentenceForm) -> SentenceForm:
    """
    각 단어를 키의 1순위 형태로 바꿉니다.

    모델에 없는 단어는 그대로 둡니다. 기본 문자는 절대 바뀌지 않습니다.
    """
    words = []
    for word in sentence.words:
        top = model.top_form(word.key)
        words.append(top if top is not None else word)
    return SentenceForm(tuple(words))


def save(model: LexiconModel) -> bytes:
    """모델을 파일 형식(UTF-8)으로 직렬화합니다."""
    lines = [MODEL_HEADER]
    for key in sorted(model.entries):
        for form, count in model.entries[key]:
            lines.append(f"{key}\t{form}\t{count}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def load(data: bytes) -> LexiconModel:
    """
    save()로 만든 바이트에서 모델을 읽습니다.

    Raises:
        MalformedModelFileException: UTF-8 오류, 헤더 불일치, 열 개수 오류,
            빈도 형식 오류, 키와 맞지 않는 형태, 중복 항목
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise MalformedModelFileException("UTF-8로 디코딩할 수 없습니다")

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [line[:-1] if line.endswith("\r") else line for line in lines]

    if not lines or lines[0] != MODEL_HEADER:
        raise MalformedModelFileException(f"첫 줄이 '{MODEL_HEADER}'가 아닙니다", line=1)

    grouped: Dict[str, Dict[str, int]] = {}
    for number, line in enumerate(lines[1:], start=2):
        columns = line.split("\t")
        if len(columns) != 3:
            raise MalformedModelFileException(f"열이 3개가 아니라 {len(columns)}개입니다", line=number)
        key, form, raw_count = columns
        if not (raw_count.isascii() and raw_count.isdigit()) or int(raw_count) < 1:
            raise MalformedModelFileException(f"빈도 '{raw_count}'가 1 이상의 정수가 아닙니다", line=number)
        if not form or normalize(form) != form or " " in form:
            raise MalformedModelFileException("정규화된 단어 형태가 아닙니다", line=number)
        try:
            word = parse_word(form, ParsePolicy.STRICT)
        except TashkeelEvalException as exc:
            raise MalformedModelFileException(f"형태 '{form}'를 분해할 수 없습니다: {exc.message}", line=number) from exc
        if word is None or word.key != key:
            raise MalformedModelFileException(f"형태 '{form}'가 키 '{key}'와 맞지 않습니다", line=number)
        forms = grouped.setdefault(key, {})
        if form in forms:
            raise MalformedModelFileException(f"중복 항목 '{form}'", line=number)
        forms[form] = int(raw_count)

    entries = {key: _rank(grouped[key]) for key in sorted(grouped)}
    model = LexiconModel(entries=entries, training_stats=_stats(entries, None))
    logger.info(f"📂 lexicon 모델 로드: 키 {len(model)}개")
    return model
