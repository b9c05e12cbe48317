"""
orthography.py 모듈의 단위 테스트
정규화, 분해, 렌더링, 디아크리틱 제거, 개수 세기를 검증합니다.
아랍어 문자열은 읽기 쉽도록 Buckwalter 음역으로 적고 to_arabic으로 변환합니다.
"""

import itertools
import random
import unittest

from app.core.exceptions import (
    EmptyWordException,
    IllegalClusterException,
    LeadingDiacriticException,
)
from app.tashkeel.buckwalter import from_arabic, to_arabic as A
from app.tashkeel.orthography import (
    EMPTY_CLUSTER,
    CoverageMode,
    DiacriticMark,
    MarkCluster,
    ParsePolicy,
    WordForm,
    canonical_cluster,
    case_split,
    counts,
    is_arabic_letter,
    is_diacritic,
    letter_positions,
    normalize,
    parse,
    render,
    strip,
)

LETTERS = "bdEfhklmnqrstwy"
VOCALIC = "FNKauio"


def random_sentence(rng: random.Random) -> str:
    """정규화된 무작위 문장 (Buckwalter)"""
    words = []
    for _ in range(rng.randint(0, 5)):
        units = []
        for _ in range(rng.randint(1, 6)):
            if rng.random() < 0.1:
                units.append(rng.choice("0123.,"))
                continue
            unit = rng.choice(LETTERS)
            if rng.random() < 0.2:
                unit += "~"
            if rng.random() < 0.6:
                unit += rng.choice(VOCALIC)
            units.append(unit)
        words.append("".join(units))
    return " ".join(words)


class TestNormalize(unittest.TestCase):
    """정규화 테스트"""

    def test_canonical_word_unchanged(self):
        """이미 정규 순서인 단어는 그대로"""
        self.assertEqual(normalize(A("Ealima")), A("Ealima"))

    def test_shadda_moves_first(self):
        """(파트하, 샤다) → (샤다, 파트하)"""
        self.assertEqual(normalize(A("da~")), A("d~a"))

    def test_whitespace_collapse(self):
        """연속 공백 정리"""
        self.assertEqual(normalize("  a\t b "), "a b")

    def test_tatweel_removed(self):
        """타트윌 제거"""
        self.assertEqual(normalize(A("E_ali_ma")), A("Ealima"))

    def test_duplicate_marks_deduplicated(self):
        """같은 부호 중복 제거"""
        self.assertEqual(normalize(A("kaata")), A("kata"))

    def test_permutations_of_legal_cluster(self):
        """적법한 묶음의 모든 순열은 같은 결과"""
        for vowel in VOCALIC:
            results = {normalize(A("b" + "".join(p))) for p in itertools.permutations("~" + vowel)}
            self.assertEqual(results, {A("b~" + vowel)})

    def test_idempotent_on_fuzzed_text(self):
        """정규화 두 번 = 한 번"""
        rng = random.Random(7)
        for _ in range(300):
            raw = A(random_sentence(rng)).replace(" ", rng.choice(["  ", "\t", " \n "]))
            once = normalize(raw)
            self.assertEqual(normalize(once), once)

    def test_other_codepoints_pass_through(self):
        """라틴 문자, 숫자, 단검 알리프는 그대로"""
        text = "abc 123 " + A("h`*A")
        self.assertEqual(normalize(text), text)


class TestParse(unittest.TestCase):
    """분해 테스트"""

    def test_three_graphemes(self):
        """عَلِمَ → 3개 단위"""
        sentence = parse(A("Ealima"))
        self.assertEqual(len(sentence.words), 1)
        word = sentence.words[0]
        self.assertEqual([g.base for g in word.graphemes], [A("E"), A("l"), A("m")])
        self.assertEqual(
            [g.cluster.marks for g in word.graphemes],
            [(DiacriticMark.FATHA,), (DiacriticMark.KASRA,), (DiacriticMark.FATHA,)],
        )

    def test_non_arabic_passthrough(self):
        """abc → 비알파벳 단위 3개, 아랍 문자 0개"""
        word = parse("abc").words[0]
        self.assertEqual(len(word.graphemes), 3)
        self.assertFalse(any(g.is_letter for g in word.graphemes))
        self.assertEqual(counts(parse("abc")), (0, 0))

    def test_lone_diacritic_strict(self):
        """기준 문자 없는 탄윈 → strict 에러"""
        with self.assertRaises(LeadingDiacriticException) as ctx:
            parse(normalize(" " + A("F")))
        self.assertEqual(ctx.exception.error_code, "LEADING_DIACRITIC")
        self.assertEqual(ctx.exception.details["position"], 0)

    def test_lone_diacritic_lenient(self):
        """lenient 모드는 고아 부호를 버림"""
        with self.assertLogs("app.tashkeel.orthography", level="WARNING"):
            sentence = parse(normalize(A("F Ealima")), ParsePolicy.LENIENT)
        self.assertEqual(render(sentence), A("Ealima"))

    def test_diacritic_after_digit(self):
        """숫자 뒤의 부호도 기준 문자 없음"""
        with self.assertRaises(LeadingDiacriticException):
            parse("1" + A("a"))

    def test_illegal_cluster_strict(self):
        """한 문자에 모음 부호 두 개 → strict 에러"""
        with self.assertRaises(IllegalClusterException):
            parse(normalize(A("kai")))

    def test_illegal_cluster_lenient_keeps_first(self):
        """lenient 모드는 처음 본 모음 부호만 남김"""
        with self.assertLogs("app.tashkeel.orthography", level="WARNING"):
            sentence = parse(A("kia"), ParsePolicy.LENIENT)
        self.assertEqual(render(sentence), A("ki"))

    def test_normalize_keeps_first_vowel_for_lenient(self):
        """정규화를 거쳐도 lenient 파싱은 처음 입력된 모음을 남김"""
        self.assertEqual(normalize(A("kua")), A("kua"))
        self.assertEqual(normalize(A("kau~")), A("k~au"))
        with self.assertLogs("app.tashkeel.orthography", level="WARNING"):
            sentence = parse(normalize(A("kua")), ParsePolicy.LENIENT)
        self.assertEqual(render(sentence), A("ku"))
        with self.assertLogs("app.tashkeel.orthography", level="WARNING"):
            sentence = parse(normalize(A("kau~")), ParsePolicy.LENIENT)
        self.assertEqual(render(sentence), A("k~a"))

    def test_shadda_with_vowel_is_legal(self):
        """샤다 + 모음은 적법"""
        word = parse(A("d~a")).words[0]
        self.assertEqual(word.graphemes[0].cluster.marks, (DiacriticMark.SHADDA, DiacriticMark.FATHA))


class TestRenderAndStrip(unittest.TestCase):
    """렌더링 / 디아크리틱 제거 테스트"""

    def test_round_trip(self):
        """render(parse(x)) = x"""
        self.assertEqual(render(parse(A("Ealima"))), A("Ealima"))

    def test_empty_sentence(self):
        """빈 문장"""
        self.assertEqual(render(parse("")), "")
        self.assertEqual(render(strip(parse(""))), "")

    def test_round_trip_fuzzed(self):
        """무작위 정규화 문장 1000개 왕복"""
        rng = random.Random(2024)
        for _ in range(1000):
            text = A(random_sentence(rng))
            self.assertEqual(render(parse(text)), text, from_arabic(text))

    def test_strip_word(self):
        """عَلِمَ → علم"""
        self.assertEqual(render(strip(parse(A("Ealima")))), A("Elm"))

    def test_strip_idempotent_and_shape_preserving(self):
        """strip은 멱등이고 단어/단위 수를 보존"""
        rng = random.Random(11)
        for _ in range(200):
            sentence = parse(A(random_sentence(rng)))
            stripped = strip(sentence)
            self.assertEqual(strip(stripped), stripped)
            self.assertEqual(len(stripped.words), len(sentence.words))
            for before, after in zip(sentence.words, stripped.words):
                self.assertEqual(len(before.graphemes), len(after.graphemes))
            self.assertEqual(counts(stripped)[1], 0)


class TestCounts(unittest.TestCase):
    """개수 세기 테스트"""

    def test_diacritized_word(self):
        self.assertEqual(counts(parse(A("Ealima"))), (3, 3))

    def test_stripped_word(self):
        self.assertEqual(counts(parse(A("Elm"))), (3, 0))

    def test_shadda_counts_twice(self):
        """샤다+파트하 한 문자 → 부호 2개"""
        self.assertEqual(counts(parse(A("d~a"))), (1, 2))

    def test_marked_letters_mode(self):
        """marked-letters 모드는 부호 붙은 문자 수"""
        self.assertEqual(counts(parse(A("d~ar")), CoverageMode.MARKED_LETTERS), (2, 1))

    def test_dagger_alif_not_counted(self):
        """단검 알리프는 문자도 부호도 아님"""
        self.assertEqual(counts(parse(A("h`*A"))), (3, 0))


class TestCaseSplit(unittest.TestCase):
    """어미 분리 테스트"""

    def test_three_letter_word(self):
        body, ending = case_split(parse(A("Ealima")).words[0])
        self.assertEqual(body, (MarkCluster((DiacriticMark.FATHA,)), MarkCluster((DiacriticMark.KASRA,))))
        self.assertEqual(ending, MarkCluster((DiacriticMark.FATHA,)))

    def test_single_letter_word(self):
        body, ending = case_split(parse(A("bi")).words[0])
        self.assertEqual(body, ())
        self.assertEqual(ending, MarkCluster((DiacriticMark.KASRA,)))

    def test_undiacritized_word(self):
        body, ending = case_split(parse(A("ktb")).words[0])
        self.assertEqual(body, (EMPTY_CLUSTER, EMPTY_CLUSTER))
        self.assertEqual(ending, EMPTY_CLUSTER)

    def test_concatenation_reproduces_clusters(self):
        word = parse(A("dar~asa")).words[0]
        body, ending = case_split(word)
        self.assertEqual(body + (ending,), word.clusters)

    def test_empty_word(self):
        with self.assertRaises(EmptyWordException):
            case_split(WordForm(()))

    def test_letter_positions_without_case(self):
        """어미 제외 시 마지막 아랍 문자 위치를 뺌"""
        word = parse(A("ktb,")).words[0]
        self.assertEqual(letter_positions(word), [0, 1, 2])
        self.assertEqual(letter_positions(word, include_case_ending=False), [0, 1])


class TestHelpers(unittest.TestCase):
    """보조 함수 테스트"""

    def test_classification(self):
        self.assertTrue(is_diacritic(A("~")))
        self.assertFalse(is_diacritic(A("`")))
        self.assertTrue(is_arabic_letter(A("y")))
        self.assertFalse(is_arabic_letter(A("_")))
        self.assertFalse(is_arabic_letter(A("{")))

    def test_canonical_cluster(self):
        cluster = canonical_cluster([DiacriticMark.FATHA, DiacriticMark.SHADDA])
        self.assertEqual(cluster.render(), A("~a"))

    def test_cluster_rejects_non_canonical_order(self):
        with self.assertRaises(ValueError):
            MarkCluster((DiacriticMark.FATHA, DiacriticMark.SHADDA))

    def test_buckwalter_round_trip(self):
        self.assertEqual(from_arabic(A("Ealima qalamN")), "Ealima qalamN")
        self.assertEqual(A("123 ,."), "123 ,.", "매핑 없는 문자는 그대로")


if __name__ == "__main__":
    unittest.main()
