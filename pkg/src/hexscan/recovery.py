"""Fallback analyses for verses the main path could not scan."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .greek_text import APOSTROPHE, SPACE, VOWELS, NormalizedVerse
from .local_search import PartialAnnotation
from .meter import ScansionMark
from .prosody import DEFAULT_RULES, RuleConfig, is_long
from .syllabifier import EmptyVerseError, Syllable

DEFAULT_SYNIZESIS_PAIRS = frozenset({"εω", "εα", "εο", "εοι"})
DEFAULT_SYNIZESIS_FIRST = frozenset({"ε"})

# trema vowels are masked as upper case so that no diphthong alternative matches them
_MASK = {v: v.upper() for v in VOWELS}


def _nucleus_pattern(diphthongs) -> re.Pattern:
    alts = sorted(diphthongs, key=len, reverse=True) + sorted(VOWELS) + sorted(_MASK.values())
    return re.compile("|".join(re.escape(a) for a in alts))


@dataclass(frozen=True)
class Unit:
    """A vowel-level unit: one nucleus with the consonants that follow it."""

    start: int
    end: int
    nucleus: str
    followed_by: str
    word_final: bool
    syllable: Syllable


@dataclass(frozen=True)
class RecoveryAttempt:
    strategy: str  # vowel_reanalysis | synizesis
    merged_positions: tuple[int, ...]
    result: PartialAnnotation


def vowel_units(verse: NormalizedVerse, rules: RuleConfig = DEFAULT_RULES) -> list[Unit]:
    masked = "".join(
        _MASK[c] if verse.trema_flags[i] and c in _MASK else c for i, c in enumerate(verse.chars)
    )
    matches = list(_nucleus_pattern(rules.diphthongs).finditer(masked))
    if not matches:
        raise EmptyVerseError(f"no vowel in {verse.original!r}")
    units = []
    for k, m in enumerate(matches):
        nxt = matches[k + 1].start() if k + 1 < len(matches) else len(masked)
        gap = verse.chars[m.end() : nxt]
        cons = "".join(c for c in gap if c not in (SPACE, APOSTROPHE))
        word_final = k + 1 == len(matches) or SPACE in gap or APOSTROPHE in gap
        nucleus = verse.chars[m.start() : m.end()]
        syl = Syllable(
            onset="",
            nucleus=nucleus,
            coda="",
            index=k + 1,
            circumflexed=any(verse.circumflex_flags[m.start() : m.end()]),
            word_final=word_final,
            followed_by=cons,
            subscript=any(verse.subscript_flags[m.start() : m.end()]),
        )
        units.append(Unit(m.start(), m.end(), nucleus, cons, word_final, syl))
    return units


def reanalyze_by_vowels(verse: NormalizedVerse, rules: RuleConfig = DEFAULT_RULES) -> PartialAnnotation:
    """Length marks per vowel unit, ignoring any earlier syllabification."""
    units = vowel_units(verse, rules)
    marks = tuple(ScansionMark.LONG if is_long(u.syllable, rules) else ScansionMark.UNKNOWN for u in units)
    return PartialAnnotation(marks)


def synizesis_candidates(
    verse: NormalizedVerse,
    rules: RuleConfig = DEFAULT_RULES,
    pairs=DEFAULT_SYNIZESIS_PAIRS,
    first_vowels=DEFAULT_SYNIZESIS_FIRST,
) -> list[int]:
    """1-based indices ``i`` of units that may fuse with unit ``i + 1``."""
    units = vowel_units(verse, rules)
    out = []
    for k in range(len(units) - 1):
        a, b = units[k], units[k + 1]
        if a.end != b.start:  # consonant or word boundary in between
            continue
        if verse.trema_flags[b.start]:
            continue
        if a.nucleus in first_vowels or a.nucleus + b.nucleus in pairs:
            out.append(k + 1)
    return out


def apply_synizesis(
    verse: NormalizedVerse,
    partial: PartialAnnotation | None = None,
    rules: RuleConfig = DEFAULT_RULES,
    pairs=DEFAULT_SYNIZESIS_PAIRS,
    first_vowels=DEFAULT_SYNIZESIS_FIRST,
    right_to_left: bool = True,
) -> list[RecoveryAttempt]:
    """One candidate analysis per fusable vowel pair, each with a single fusion.

    ``partial`` is the vowel-level annotation to fuse; it is recomputed when
    omitted. The fused unit is always marked long.
    """
    if partial is None:
        partial = reanalyze_by_vowels(verse, rules)
    candidates = synizesis_candidates(verse, rules, pairs, first_vowels)
    if right_to_left:
        candidates = candidates[::-1]
    attempts = []
    for i in candidates:
        marks = partial.marks[: i - 1] + (ScansionMark.LONG,) + partial.marks[i + 1 :]
        attempts.append(RecoveryAttempt("synizesis", (i, i + 1), PartialAnnotation(marks)))
    return attempts
