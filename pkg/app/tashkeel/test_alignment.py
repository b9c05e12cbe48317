"""
alignment.py 모듈의 단위 테스트
편집 거리, 정렬 경로, 일치 단어 쌍을 검증합니다.
"""

import itertools
import random
import unittest
from functools import lru_cache

from app.tashkeel.alignment import (
    EditKind,
    EditOp,
    align,
    edit_distance,
    matched_pairs,
)
from app.tashkeel.buckwalter import to_arabic as A
from app.tashkeel.orthography import parse


def brute_force_distance(a: str, b: str) -> int:
    """모든 편집 스크립트에 대한 재귀 최소값 (작은 입력 전용 오라클)"""

    @lru_cache(maxsize=None)
    def solve(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        return min(
            solve(i + 1, j + 1) + (a[i] != b[j]),
            solve(i + 1, j) + 1,
            solve(i, j + 1) + 1,
        )

    return solve(0, 0)


def all_strings(alphabet: str, max_length: int):
    for length in range(max_length + 1):
        for chars in itertools.product(alphabet, repeat=length):
            yield "".join(chars)


class TestEditDistance(unittest.TestCase):
    """편집 거리 테스트"""

    def test_examples(self):
        """기본 예시"""
        self.assertEqual(edit_distance("kitten", "sitting"), 3)
        self.assertEqual(edit_distance("", "abc"), 3)
        self.assertEqual(edit_distance("abc", ""), 3)
        self.assertEqual(edit_distance("", ""), 0)

    def test_token_sequences(self):
        """토큰 리스트는 토큰 단위로 비교"""
        self.assertEqual(edit_distance(["a", "bc", "d"], ["a", "bd", "d"]), 1)
        self.assertEqual(edit_distance(["ab"], ["a", "b"]), 2)

    def test_matches_brute_force(self):
        """두 글자 알파벳, 길이 4 이하 모든 쌍에서 오라클과 같음"""
        strings = list(all_strings("ab", 4))
        for a in strings:
            for b in strings:
                expected = brute_force_distance(a, b)
                self.assertEqual(edit_distance(a, b), expected, f"{a!r} / {b!r}")
                self.assertEqual(align(a, b).cost, expected, f"{a!r} / {b!r}")

    def test_align_cost_matches_random_arabic_words(self):
        """무작위 아랍어 단어 500쌍에서 align 비용 = 오라클 = edit_distance"""
        rng = random.Random(3)
        alphabet = A("ktbdrsEalimu~")
        for _ in range(500):
            a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            expected = brute_force_distance(a, b)
            self.assertEqual(align(a, b).cost, expected, f"{a!r} / {b!r}")
            self.assertEqual(edit_distance(a, b), expected)

    def test_metric_properties(self):
        """대칭성, 삼각 부등식, 상/하한"""
        rng = random.Random(5)
        for _ in range(300):
            a, b, c = ("".join(rng.choice("abc") for _ in range(rng.randint(0, 6))) for _ in range(3))
            d = edit_distance(a, b)
            self.assertEqual(d, edit_distance(b, a))
            self.assertLessEqual(edit_distance(a, c), d + edit_distance(b, c))
            self.assertGreaterEqual(d, abs(len(a) - len(b)))
            self.assertLessEqual(d, max(len(a), len(b)))
            self.assertEqual(d == 0, a == b)


class TestAlign(unittest.TestCase):
    """정렬 경로 테스트"""

    def test_identical(self):
        """같은 시퀀스는 모두 MATCH"""
        path = align("abc", "abc")
        self.assertEqual(path.cost, 0)
        self.assertEqual([op.kind for op in path.ops], [EditKind.MATCH] * 3)

    def test_empty_sides(self):
        """한쪽이 비면 전부 삽입 또는 삭제"""
        self.assertEqual([op.kind for op in align("", "ab").ops], [EditKind.INSERT] * 2)
        self.assertEqual([op.kind for op in align("ab", "").ops], [EditKind.DELETE] * 2)
        self.assertEqual(align("", "").ops, ())

    def test_substitution_preferred_over_delete_insert(self):
        """치환 하나가 삭제+삽입보다 우선"""
        path = align("a", "b")
        self.assertEqual(path.ops, (EditOp(EditKind.SUBSTITUTE, 0, 0),))

    def test_tie_break_prefers_delete_over_insert(self):
        """ab / ba: 같은 비용 경로 중 정해진 하나"""
        path = align("ab", "ba")
        self.assertEqual(path.cost, 2)
        self.assertEqual(
            path.ops,
            (EditOp(EditKind.SUBSTITUTE, 0, 0), EditOp(EditKind.SUBSTITUTE, 1, 1)),
        )

    def test_single_substitution(self):
        path = align(["a", "b", "c"], ["a", "x", "c"])
        self.assertEqual(path.cost, 1)
        self.assertEqual([op.kind for op in path.ops], [EditKind.MATCH, EditKind.SUBSTITUTE, EditKind.MATCH])

    def test_coarser_equality_never_costs_more(self):
        """더 많은 쌍을 같다고 보는 비교 기준이면 비용은 같거나 작음"""
        rng = random.Random(21)
        coarse = lambda x, y: x.lower() == y.lower()
        for _ in range(300):
            a = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 6)))
            b = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 6)))
            self.assertLessEqual(align(a, b, equal=coarse).cost, align(a, b).cost)

    def test_deletion_in_middle(self):
        path = align("abc", "ac")
        self.assertEqual(
            path.ops,
            (
                EditOp(EditKind.MATCH, 0, 0),
                EditOp(EditKind.DELETE, ref_index=1),
                EditOp(EditKind.MATCH, 2, 1),
            ),
        )

    def test_counts_sum_to_lengths(self):
        """경로의 연산 수가 두 길이와 맞음"""
        rng = random.Random(9)
        for _ in range(200):
            a = "".join(rng.choice("abc") for _ in range(rng.randint(0, 7)))
            b = "".join(rng.choice("abc") for _ in range(rng.randint(0, 7)))
            path = align(a, b)
            c = path.counts()
            self.assertEqual(c.matches + c.substitutions + c.deletions, len(a))
            self.assertEqual(c.matches + c.substitutions + c.insertions, len(b))
            self.assertEqual(c.substitutions + c.deletions + c.insertions, path.cost)
            self.assertEqual(sum(op.cost for op in path.ops), path.cost)

    def test_deterministic(self):
        """같은 입력은 항상 같은 경로"""
        self.assertEqual(align("abcab", "bcaab"), align("abcab", "bcaab"))

    def test_custom_equality(self):
        """equal 함수로 비교 기준을 바꿀 수 있음"""
        path = align("AB", "ab", equal=lambda x, y: x.lower() == y.lower())
        self.assertEqual(path.cost, 0)

    def test_invalid_edit_op(self):
        with self.assertRaises(ValueError):
            EditOp(EditKind.DELETE, 0, 0)
        with self.assertRaises(ValueError):
            EditOp(EditKind.MATCH, ref_index=0)


class TestMatchedPairs(unittest.TestCase):
    """일치 단어 쌍 테스트"""

    def test_diacritics_ignored_for_matching(self):
        """부호가 달라도 기본 문자가 같으면 일치"""
        ref = parse(A("kataba Ealiy~N"))
        hyp = parse(A("kutiba Ealiy~N"))
        pairs = matched_pairs(ref, hyp)
        self.assertEqual(len(pairs), 2)
        self.assertEqual(pairs[0].ref_word.render(), A("kataba"))
        self.assertEqual(pairs[0].hyp_word.render(), A("kutiba"))
        self.assertTrue(all(pair.is_consistent() for pair in pairs))

    def test_inserted_word_skipped(self):
        """삽입된 단어는 쌍이 아님"""
        ref = parse(A("*ahaba walad"))
        hyp = parse(A("*ahaba Al walad"))
        pairs = matched_pairs(ref, hyp)
        self.assertEqual([pair.hyp_word.key for pair in pairs], [A("*hb"), A("wld")])

    def test_no_common_words(self):
        self.assertEqual(matched_pairs(parse(A("ktb")), parse(A("drs"))), [])

    def test_empty_hypothesis(self):
        self.assertEqual(matched_pairs(parse(A("ktb drs")), parse("")), [])


if __name__ == "__main__":
    unittest.main()
