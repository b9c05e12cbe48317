# ============================================
# app/tashkeel/alignment.py - 편집 거리 / 정렬
# ============================================
# 참조(ref)와 가설(hyp) 시퀀스 사이의 최소 편집 정렬을 계산합니다.
# - edit_distance: 비용만 필요할 때 (rapidfuzz)
# - align: 편집 연산 경로까지 필요할 때 (numpy DP 행렬 + 역추적)
# - matched_pairs: 디아크리틱 제거 후 일치한 단어 쌍
# ============================================

import logging
import operator
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, TypeVar

import numpy as np
from rapidfuzz.distance import Levenshtein

from app.tashkeel.orthography import SentenceForm, WordForm

logger = logging.getLogger(__name__)

T = TypeVar("T")


class EditKind(str, Enum):
    """편집 연산 종류 (역추적 시 이 순서대로 우선)"""
    MATCH = "match"
    SUBSTITUTE = "substitute"
    DELETE = "delete"
    INSERT = "insert"


@dataclass(frozen=True)
class EditOp:
    """
    편집 연산 하나

    - MATCH / SUBSTITUTE: ref_index, hyp_index 둘 다 있음
    - DELETE: ref_index만 (참조에만 있는 원소)
    - INSERT: hyp_index만 (가설에만 있는 원소)
    """
    kind: EditKind
    ref_index: Optional[int] = None
    hyp_index: Optional[int] = None

    def __post_init__(self):
        needs_ref = self.kind is not EditKind.INSERT
        needs_hyp = self.kind is not EditKind.DELETE
        if (self.ref_index is not None) != needs_ref or (self.hyp_index is not None) != needs_hyp:
            raise ValueError(f"{self.kind.value} 연산의 인덱스가 올바르지 않습니다")

    @property
    def cost(self) -> int:
        return 0 if self.kind is EditKind.MATCH else 1


class AlignmentCounts(NamedTuple):
    matches: int
    substitutions: int
    deletions: int
    insertions: int


@dataclass(frozen=True)
class AlignmentPath:
    """편집 연산 나열과 총 비용 (= 일치가 아닌 연산 수)"""
    ops: Tuple[EditOp, ...]
    cost: int

    def counts(self) -> AlignmentCounts:
        kinds = [op.kind for op in self.ops]
        return AlignmentCounts(
            matches=kinds.count(EditKind.MATCH),
            substitutions=kinds.count(EditKind.SUBSTITUTE),
            deletions=kinds.count(EditKind.DELETE),
            insertions=kinds.count(EditKind.INSERT),
        )


def edit_distance(a: Sequence[T], b: Sequence[T]) -> int:
    """
    삽입/삭제/치환 비용 1인 Levenshtein 거리

    문자열이면 코드포인트 단위, 토큰 리스트면 토큰 단위로 비교합니다.
    """
    return Levenshtein.distance(a, b)


def align(
    a: Sequence[T],
    b: Sequence[T],
    equal: Callable[[T, T], bool] = operator.eq
) -> AlignmentPath:
    """
    최소 비용 편집 정렬

    Args:
        a: 참조 시퀀스
        b: 가설 시퀀스
        equal: 원소 일치 판정 함수

    Returns:
        AlignmentPath: 각 DP 칸에서 Match > Substitute > Delete > Insert 순으로
        우선한 유일한 최소 비용 경로

    [신입 개발자를 위한 팁]
    - cost[i, j] = a[:i]와 b[:j] 사이의 최소 편집 비용
    - 역추적은 (n, m)에서 (0, 0)으로 거슬러 올라가며 위 우선순위로 한 칸씩 고릅니다
    - 같은 입력이면 항상 같은 경로가 나옵니다 (결정적)
    """
    n, m = len(a), len(b)
    cost = np.zeros((n + 1, m + 1), dtype=np.int32)
    cost[:, 0] = np.arange(n + 1)
    cost[0, :] = np.arange(m + 1)
    same = np.zeros((n + 1, m + 1), dtype=bool)

    for i in range(1, n + 1):
        prev = cost[i - 1].tolist()
        row = [i] + [0] * m
        for j in range(1, m + 1):
            eq = bool(equal(a[i - 1], b[j - 1]))
            same[i, j] = eq
            row[j] = min(
                prev[j - 1] + (0 if eq else 1),
                prev[j] + 1,
                row[j - 1] + 1,
            )
        cost[i] = row

    ops: List[EditOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        here = int(cost[i, j])
        if i > 0 and j > 0 and same[i, j] and here == cost[i - 1, j - 1]:
            ops.append(EditOp(EditKind.MATCH, i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and not same[i, j] and here == cost[i - 1, j - 1] + 1:
            ops.append(EditOp(EditKind.SUBSTITUTE, i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and here == cost[i - 1, j] + 1:
            ops.append(EditOp(EditKind.DELETE, ref_index=i - 1))
            i -= 1
        else:
            ops.append(EditOp(EditKind.INSERT, hyp_index=j - 1))
            j -= 1

    ops.reverse()
    return AlignmentPath(ops=tuple(ops), cost=int(cost[n, m]))


@dataclass(frozen=True)
class MatchedWordPair:
    """디아크리틱 제거 후 같은 단어로 정렬된 (참조, 가설) 단어 쌍"""
    ref_word: WordForm
    hyp_word: WordForm

    def is_consistent(self) -> bool:
        return self.ref_word.key == self.hyp_word.key


def matched_pairs(ref: SentenceForm, hyp: SentenceForm) -> List[MatchedWordPair]:
    """
    디아크리틱을 제거한 단어열끼리 정렬해 MATCH 연산의 단어 쌍만 모읍니다.

    쌍의 디아크리틱은 원래 (제거 전) 형태를 유지합니다.
    """
    path = align([w.key for w in ref.words], [w.key for w in hyp.words])
    return [
        MatchedWordPair(ref.words[op.ref_index], hyp.words[op.hyp_index])
        for op in path.ops
        if op.kind is EditKind.MATCH
    ]
