import json

import pytest

from hexscan.datasets import load_gold
from hexscan.meter import ScansionMark, parse_marks, plausibility_check
from hexscan.pipeline import format_structured, format_tsv, parse_line, scan_corpus, scan_verse

LISTING = "Μῆνιν ἄειδε θεὰ Πηληϊάδεω Ἀχιλῆος"


class TestScanVerse:
    def test_all_long_twelve(self):
        rec = scan_verse("ω " * 12)
        assert (rec.status, rec.variant, rec.stage) == ("ok", "50", "local")

    def test_sparse_verse_goes_global(self):
        rec = scan_verse("ἀρνύμενος ἥν τε ψυχὴν καὶ νόστον ἑταίρων.")
        assert (rec.status, rec.variant, rec.stage) == ("ok", "36", "global")

    def test_fragment_rejected(self):
        rec = scan_verse("μῆνιν ἄειδε θεὰ")
        assert rec.status == "rejected" and rec.marks == "" and rec.variant == ""

    def test_unprocessable(self):
        rec = scan_verse("μῆνιν 3")
        assert rec.status == "unprocessable" and "position 6" in rec.notes

    def test_listing_needs_synizesis(self):
        rec = scan_verse(LISTING)
        assert rec.stage == "recovery" and "synizesis" in rec.notes
        assert "δεω" in rec.syllables.split("|")

    def test_local_mode_rejects_partial(self):
        assert scan_verse("ἀρνύμενος ἥν τε ψυχὴν καὶ νόστον ἑταίρων.", mode="local").status == "rejected"

    def test_global_mode_skips_recovery(self):
        assert scan_verse(LISTING, mode="global").status == "rejected"

    def test_strict_blocks_corrected_fallback(self):
        from hexscan.config import DEFAULT_CONFIG

        text = "ἄνδρα μοι ἔννεπε, μοῦσα, πολύτροπον, ὃς μάλα πολλὰ"
        assert "corrected" in scan_verse(text).notes
        assert scan_verse(text, DEFAULT_CONFIG.with_strict()).status == "rejected"

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            scan_verse(LISTING, mode="partial")

    def test_ok_records_are_plausible(self):
        for g in load_gold():
            rec = scan_verse(g.text)
            marks = parse_marks(rec.marks)
            assert 12 <= len(marks) <= 17 and marks[-1] is ScansionMark.ANCEPS
            assert plausibility_check(marks).index == rec.variant


class TestCorpus:
    def test_empty(self):
        records, summary = scan_corpus([])
        assert records == [] and summary["verses"] == 0 and summary["status"]["ok"] == 0

    def test_ids_and_blank_lines(self):
        records, summary = scan_corpus(["a\t" + LISTING, "", "   ", LISTING])
        assert [r.id for r in records] == ["a", "4"]
        assert records[0].marks == records[1].marks
        assert summary["stage"]["recovery"] == 2

    def test_bad_line_is_isolated(self):
        records, summary = scan_corpus(["abc", LISTING])
        assert [r.status for r in records] == ["unprocessable", "ok"]
        assert summary["status"] == {"ok": 1, "rejected": 0, "unprocessable": 1}

    def test_dactyl_table(self):
        _, summary = scan_corpus([LISTING])
        assert summary["dactyl_count_by_foot"] == {"1": 1, "2": 1, "3": 0, "4": 1, "5": 1}

    def test_parse_line(self):
        assert parse_line("x\ty\tz\n", 3) == ("x", "y\tz")
        assert parse_line("\n", 1) is None

    def test_formats(self):
        records, _ = scan_corpus([LISTING])
        tsv = format_tsv(records).splitlines()
        assert tsv[0] == "id\tstatus\tvariant\tmarks\tsyllables\tstage\tnotes"
        assert tsv[1].split("\t")[:3] == ["1", "ok", "12"]
        row = json.loads(format_structured(records))
        assert row["variant"] == "12" and set(row) == set(tsv[0].split("\t"))
