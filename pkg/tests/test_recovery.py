from hexscan.greek_text import normalize
from hexscan.meter import ScansionMark
from hexscan.recovery import apply_synizesis, reanalyze_by_vowels, synizesis_candidates, vowel_units
from hexscan.syllabifier import syllabify

L = ScansionMark.LONG


class TestReanalysis:
    def test_unit_count_ignores_consonant_split(self):
        v = normalize("Μῆνιν ἄειδε θεὰ Πηληϊάδεω Ἀχιλῆος")
        assert len(reanalyze_by_vowels(v)) == len(syllabify(v))

    def test_all_eta(self):
        assert reanalyze_by_vowels(normalize("η " * 12)).marks == (L,) * 12

    def test_trema_vowel_is_own_unit(self):
        units = vowel_units(normalize("Πηληϊάδεω"))
        assert [u.nucleus for u in units] == ["η", "η", "ι", "α", "ε", "ω"]

    def test_position_uses_following_consonants(self):
        marks = reanalyze_by_vowels(normalize("ασ τε")).marks
        assert marks == (L, ScansionMark.UNKNOWN)


class TestSynizesis:
    def test_listing_candidates(self):
        v = normalize("Μῆνιν ἄειδε θεὰ Πηληϊάδεω Ἀχιλῆος")
        # ε+α in θεα (6,7) and ε+ω in δεω (12,13); α+ει and ι+α pairs do not qualify
        assert synizesis_candidates(v) == [6, 12]

    def test_right_to_left(self):
        v = normalize("Μῆνιν ἄειδε θεὰ Πηληϊάδεω Ἀχιλῆος")
        attempts = apply_synizesis(v)
        assert [a.merged_positions for a in attempts] == [(12, 13), (6, 7)]
        first = attempts[0].result
        assert len(first) == 16 and first.marks[11] is L

    def test_left_to_right(self):
        v = normalize("Μῆνιν ἄειδε θεὰ Πηληϊάδεω Ἀχιλῆος")
        assert [a.merged_positions[0] for a in apply_synizesis(v, right_to_left=False)] == [6, 12]

    def test_trema_blocks(self):
        assert synizesis_candidates(normalize("θεϊ")) == []
        assert synizesis_candidates(normalize("θεϊ θεω")) == [3]

    def test_word_boundary_blocks(self):
        assert synizesis_candidates(normalize("δε ω")) == []

    def test_nothing_to_fuse(self):
        assert apply_synizesis(normalize("τα κο λη")) == []
