import logging
import random

import pytest
from sklearn.metrics import cohen_kappa_score

from hexscan.evaluate import (
    REJECTED_LABEL,
    AgreementTable,
    Annotation,
    AnnotationFormatError,
    ConfusionCounts,
    compare_annotations,
    compare_records,
    compute_accuracy,
    compute_kappa,
    compute_prf,
    confusion,
    evaluate,
    kappa_from,
    parse_annotations,
)

HEADER = "id\tstatus\tvariant\tmarks\tsyllables\tstage\tnotes"


def ann(i, variant):
    return Annotation(str(i), "ok" if variant else "rejected", variant)


class TestPRF:
    def test_examples(self):
        r = compute_prf(ConfusionCounts(2, 1, 0))
        assert r.precision == pytest.approx(2 / 3) and r.recall == 1.0 and r.f_measure == pytest.approx(0.8)
        assert compute_prf(ConfusionCounts(5, 0, 0)) == (1.0, 1.0, 1.0) or compute_prf(ConfusionCounts(5, 0, 0)).f_measure == 1.0

    def test_degenerate(self):
        r = compute_prf(ConfusionCounts(0, 3, 2))
        assert r.precision == 0 and r.recall == 0 and r.f_measure is None

    def test_empty_is_undefined(self):
        r = compute_prf(ConfusionCounts())
        assert r.precision is None and r.recall is None and r.f_measure is None

    def test_negative_counts(self):
        with pytest.raises(ValueError):
            ConfusionCounts(-1, 0, 0)


class TestKappa:
    def test_arithmetic(self):
        assert kappa_from(0.9, 0.5) == pytest.approx(0.8)
        assert kappa_from(0.0, 0.5) == pytest.approx(-1.0)
        assert kappa_from(1.0, 1.0) is None

    def test_self(self):
        labels = ["00", "10", "--", "10"]
        assert compute_kappa(AgreementTable(tuple(zip(labels, labels)))) == 1.0

    def test_matches_sklearn(self):
        rng = random.Random(3)
        a = [rng.choice(["00", "10", "11", "--"]) for _ in range(300)]
        b = [x if rng.random() < 0.7 else rng.choice(["00", "10", "11", "--"]) for x in a]
        assert compute_kappa(AgreementTable(tuple(zip(a, b)))) == pytest.approx(cohen_kappa_score(a, b))

    def test_single_label_is_undefined(self):
        assert compute_kappa(AgreementTable((("00", "00"),) * 3)) is None


class TestAccuracy:
    def test_identical(self):
        g = [("a", "b"), ("c",)]
        assert compute_accuracy(g, g, "verse") == 1.0
        assert compute_accuracy(g, g, "syllable") == 1.0

    def test_one_wrong_syllable(self):
        gold = [tuple("abcdefghij"), tuple("klmnopqrst")]
        pred = [gold[0], tuple("klmnopqrsX")]
        assert compute_accuracy(pred, gold, "verse") == 0.5
        assert compute_accuracy(pred, gold, "syllable") == pytest.approx(0.95)

    def test_empty_prediction(self):
        assert compute_accuracy([], [("a",)], "syllable") == 0.0
        assert compute_accuracy([], [("a",)], "verse") == 0.0

    def test_length_mismatch_scores_zero(self):
        assert compute_accuracy([("a", "b", "c")], [("a", "b")], "syllable") == 0.0

    def test_granularity(self):
        with pytest.raises(ValueError):
            compute_accuracy([], [], "word")


class TestConfusion:
    def test_cases(self):
        gold = [ann(1, "00"), ann(2, "10"), ann(3, "11"), ann(4, "")]
        pred = [ann(1, "00"), ann(2, "11"), ann(3, ""), ann(4, "50")]
        assert confusion(pred, gold) == ConfusionCounts(tp=1, fp=2, fn=1)


class TestParse:
    def test_roundtrip(self):
        rows = parse_annotations([HEADER, "a\tok\t12\t-**\tx|y\tlocal\t", "b\trejected\t\t\t\trecovery\treason=invalid"])
        assert [r.label for r in rows] == ["12", REJECTED_LABEL]

    def test_missing_header(self):
        with pytest.raises(AnnotationFormatError):
            parse_annotations(["a\tok\t12"])

    def test_bad_line_number(self):
        with pytest.raises(AnnotationFormatError) as err:
            parse_annotations([HEADER, "a\tok\t12", "b\tmaybe\t"], source="f.tsv")
        assert err.value.lineno == 3

    def test_bad_variant(self):
        with pytest.raises(AnnotationFormatError):
            parse_annotations([HEADER, "a\tok\t7"])


class TestCompare:
    def test_self(self, tmp_path):
        p = tmp_path / "a.tsv"
        p.write_text("\n".join([HEADER, "1\tok\t12", "2\trejected\t", "3\tok\t00"]) + "\n", encoding="utf-8")
        rep = compare_annotations(p, p)
        assert rep.kappa == 1.0 and rep.diffs == []

    def test_disjoint(self, caplog):
        with caplog.at_level(logging.WARNING):
            rep = compare_records([ann(1, "00")], [ann(2, "00")])
        assert rep.table.n == 0 and rep.kappa is None
        assert "share no verse id" in caplog.text
        assert rep.only_a == ["1"] and rep.only_b == ["2"]

    def test_scan_vs_rejection(self):
        # toy table: verse 1 agrees, verse 2 is scansion vs rejection
        a = [ann(1, "00"), ann(2, "10")]
        b = [ann(1, "00"), ann(2, "")]
        rep = compare_records(a, b)
        assert rep.diffs == [("2", "10", REJECTED_LABEL)]
        assert rep.table.observed == 0.5
        assert rep.table.expected == pytest.approx(0.25)
        assert compare_records(a, b, include_rejections=False).table.n == 1


class TestEvaluate:
    def test_report(self):
        gold = [Annotation("1", "ok", "00", syllables="a|b"), Annotation("2", "ok", "10", syllables="c|d")]
        pred = [Annotation("1", "ok", "00", syllables="a|b")]
        rep = evaluate(pred, gold)
        assert (rep.counts.tp, rep.counts.fn) == (1, 1)
        assert rep.verse_accuracy == 0.5 and rep.missing == ["2"]
        assert "recall\t0.5000" in rep.text()
