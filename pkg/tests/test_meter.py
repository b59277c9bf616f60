from collections import Counter
from itertools import combinations

import pytest

from hexscan.meter import (
    FootPattern,
    ScansionMark,
    all_variants,
    contradictions,
    get_variant,
    parse_marks,
    plausibility_check,
    required_spondees,
    variant_for_spondees,
    variants_with_length,
)


class TestCatalog:
    def test_extremes(self):
        v50, v00 = get_variant("50"), get_variant("00")
        assert v50.syllable_count == 12 and v50.spondee_feet == {1, 2, 3, 4, 5}
        assert v00.syllable_count == 17 and not v00.spondee_feet
        assert v00.feet[-1] is FootPattern.FINAL

    def test_multiplicities(self):
        counts = Counter(v.syllable_count for v in all_variants())
        assert [counts[n] for n in range(12, 18)] == [1, 5, 10, 10, 5, 1]

    def test_thirteen_syllables(self):
        assert [v.index for v in variants_with_length(13)] == ["40", "41", "42", "43", "44"]

    def test_lexicographic_rank(self):
        for k in range(6):
            for rank, feet in enumerate(combinations(range(1, 6), k)):
                assert variant_for_spondees(feet).index == f"{k}{rank}"

    @pytest.mark.parametrize("n, k", [(13, 4), (12, 5), (17, 0), (15, 2)])
    def test_required_spondees(self, n, k):
        assert required_spondees(n) == k

    def test_foot_spans(self):
        assert get_variant("12").foot_spans() == [(1, 3), (4, 6), (7, 8), (9, 11), (12, 14), (15, 16)]


class TestPlausibility:
    def test_known_schemes(self):
        assert plausibility_check(parse_marks("-**-**-**-**-**-X")).index == "00"
        assert plausibility_check(parse_marks("-----------X")).index == "50"

    def test_too_short(self):
        assert plausibility_check(parse_marks("-" * 10 + "X")) is None

    def test_not_a_scheme(self):
        assert plausibility_check(parse_marks("-*---------X")) is None

    def test_unknown_rejected(self):
        with pytest.raises(ValueError):
            plausibility_check(parse_marks("?----------X"))

    def test_final_syllable_free(self):
        for last in "-*X":
            assert plausibility_check(parse_marks("-" * 11 + last)).index == "50"

    def test_known_contradiction(self):
        marks = parse_marks("-**-**-**-**-**-X")
        known = parse_marks("??-??????????????")
        assert plausibility_check(marks, known) is None
        assert contradictions(marks, known) == [3]

    def test_marks_are_str_enum(self):
        assert ScansionMark.LONG == "-" and str(ScansionMark.ANCEPS) == "X"
