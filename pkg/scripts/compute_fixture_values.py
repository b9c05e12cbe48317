"""
미니 코퍼스 픽스처 값 재계산 스크립트

app 패키지를 전혀 import하지 않고, 가장 단순한 방식(전체 DP 표, 문자열 비교)으로
app/tashkeel/fixtures/ 의 미니 코퍼스 평가 값을 다시 계산해 출력합니다.
테스트에 적힌 기대값이 바뀌어야 할 때 이 스크립트 결과와 대조합니다.

사용법:
    python scripts/compute_fixture_values.py
"""
from collections import Counter
from pathlib import Path

FIXTURES = Path(__file__).parent.parent / "app" / "tashkeel" / "fixtures"

MARKS = {chr(cp) for cp in range(0x064B, 0x0653)}
SHADDA = "ّ"


def read(name):
    return (FIXTURES / name).read_text(encoding="utf-8").split("\n")[:-1]


def key(word):
    return "".join(ch for ch in word if ch not in MARKS)


def clusters(word):
    result = []
    for ch in word:
        if ch in MARKS:
            result[-1] += ch
        else:
            result.append("")
    return ["".join(sorted(c, key=lambda m: (m != SHADDA, m))) for c in result]


def cost_table(a, b):
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        table[i][0] = i
    for j in range(len(b) + 1):
        table[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            table[i][j] = min(
                table[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
            )
    return table


def distance(a, b):
    return cost_table(a, b)[len(a)][len(b)]


def matched(a, b):
    table = cost_table(a, b)
    i, j = len(a), len(b)
    pairs = []
    while i > 0 or j > 0:
        here = table[i][j]
        if i and j and a[i - 1] == b[j - 1] and here == table[i - 1][j - 1]:
            pairs.append((i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i and j and a[i - 1] != b[j - 1] and here == table[i - 1][j - 1] + 1:
            i, j = i - 1, j - 1
        elif i and here == table[i - 1][j] + 1:
            i -= 1
        else:
            j -= 1
    return pairs[::-1]


def asr_values(refs, hyps):
    t = Counter()
    for ref, hyp in zip(refs, hyps):
        rw, hw = ref.split(), hyp.split()
        rk, hk = [key(w) for w in rw], [key(w) for w in hw]
        t["records"] += 1
        t["ref_words"] += len(rw)
        t["word_edits_diac"] += distance(rw, hw)
        t["word_edits_plain"] += distance(rk, hk)
        t["char_edits_diac"] += distance(" ".join(rw), " ".join(hw))
        t["char_edits_plain"] += distance(" ".join(rk), " ".join(hk))
        t["ref_chars_diac"] += len(" ".join(rw))
        t["ref_chars_plain"] += len(" ".join(rk))
        for side, words in (("ref", rw), ("hyp", hw)):
            for w in words:
                cs = clusters(w)
                t[f"{side}_letters"] += len(cs)
                t[f"{side}_marks"] += sum(len(c) for c in cs)
        for ri, hi in matched(rk, hk):
            t["matched_words"] += 1
            rc, hc = clusters(rw[ri]), clusters(hw[hi])
            for pos, (x, y) in enumerate(zip(rc, hc)):
                if x and y:
                    t["compared_with_case"] += 1
                    t["correct_with_case"] += x == y
                    if pos < len(rc) - 1:
                        t["compared_without_case"] += 1
                        t["correct_without_case"] += x == y
    return t


def report(name, t):
    print(f"== {name}")
    for field in sorted(t):
        print(f"  {field}: {t[field]}")
    print(f"  wer_plain {t['word_edits_plain'] / t['ref_words']:.6f}")
    print(f"  wer_diac {t['word_edits_diac'] / t['ref_words']:.6f}")
    print(f"  cer_plain {t['char_edits_plain'] / t['ref_chars_plain']:.6f}")
    print(f"  cer_diac {t['char_edits_diac'] / t['ref_chars_diac']:.6f}")


def lexicon(lines):
    counts = Counter((key(w), w) for line in lines for w in line.split())
    top = {}
    for (k, form), n in sorted(counts.items(), key=lambda item: (item[0][0], -item[1], item[0][1])):
        top.setdefault(k, form)
    return counts, top


def main():
    refs, hyps = read("mini_ref.txt"), read("mini_hyp.txt")
    report("mini ref vs hyp", asr_values(refs, hyps))
    report("identity", asr_values(refs, refs))

    counts, top = lexicon(refs)
    print("== lexicon")
    for (k, form), n in sorted(counts.items(), key=lambda item: (item[0][0], -item[1], item[0][1])):
        print(f"  {k}\t{form}\t{n}")

    def restored(line):
        return " ".join(top.get(key(w), key(w)) for w in line.split())

    report("pipeline UD", asr_values(refs, [restored(h) for h in hyps]))

    gold_errors = Counter()
    for gold_line in refs:
        for word in gold_line.split():
            gc, pc = clusters(word), clusters(restored(word))
            for pos, (g, p) in enumerate(zip(gc, pc)):
                gold_errors["pred_marks"] += len(p)
                gold_errors["pred_letters"] += 1
                if g:
                    gold_errors["counted_with_case"] += 1
                    gold_errors["errors_with_case"] += g != p
                    if pos < len(gc) - 1:
                        gold_errors["counted_without_case"] += 1
                        gold_errors["errors_without_case"] += g != p
    print("== diacritizer (gold = ref, predicted = restore(strip(ref)))")
    for field in sorted(gold_errors):
        print(f"  {field}: {gold_errors[field]}")


if __name__ == "__main__":
    main()
