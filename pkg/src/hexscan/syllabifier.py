"""Syllable segmentation of normalized verses.

Nuclei are found greedily left to right (a vowel, or a vowel plus the next
vowel when the pair is an inventory diphthong without a trema). Consonants
between two nuclei of the same phonological word are split so that a single
consonant opens the next syllable, a muta cum liquida pair opens it as a
whole, and otherwise the first consonant closes the preceding syllable.

An elided word is joined to the following word: ``δ' ἄρ`` behaves like
``δαρ`` for splitting purposes. A plain space is a hard boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .greek_text import (
    APOSTROPHE,
    DIPHTHONGS,
    LIQUIDS,
    SPACE,
    NormalizedVerse,
    detect_diphthong,
    is_mute,
    is_vowel,
)


class EmptyVerseError(ValueError):
    """The verse has no vowel and therefore no syllable."""


@dataclass(frozen=True)
class Syllable:
    onset: str
    nucleus: str
    coda: str
    index: int
    circumflexed: bool = False
    word_final: bool = False
    followed_by: str = ""
    subscript: bool = False

    @property
    def text(self) -> str:
        return self.onset + self.nucleus + self.coda

    def __str__(self):
        return self.text


def find_nuclei(verse: NormalizedVerse, diphthongs=DIPHTHONGS) -> list[tuple[int, int]]:
    """Character spans ``(start, end)`` of every syllable nucleus."""
    chars = verse.chars
    spans = []
    i = 0
    while i < len(chars):
        if not is_vowel(chars[i]):
            i += 1
            continue
        if (
            i + 1 < len(chars)
            and is_vowel(chars[i + 1])
            and detect_diphthong(chars[i], chars[i + 1], verse.trema_flags[i + 1], diphthongs)
        ):
            spans.append((i, i + 2))
            i += 2
        else:
            spans.append((i, i + 1))
            i += 1
    return spans


def split_cluster(consonants: str) -> int:
    """How many consonants of an intervocalic cluster close the preceding syllable."""
    n = len(consonants)
    if n <= 1:
        return 0
    if n == 2 and is_mute(consonants[0]) and consonants[1] in LIQUIDS:
        return 0
    return 1


def _split_run(run: str) -> tuple[str, str]:
    """Split the material between two nuclei into (coda, onset) consonants."""
    # a space not preceded by an apostrophe is a hard word boundary
    hard = None
    for k, ch in enumerate(run):
        if ch == SPACE and (k == 0 or run[k - 1] != APOSTROPHE):
            hard = k
            break
    if hard is not None:
        coda = _consonants(run[:hard])
        onset = _consonants(run[hard:])
        return coda, onset
    cons = _consonants(run)
    k = split_cluster(cons)
    return cons[:k], cons[k:]


def _consonants(s: str) -> str:
    return "".join(ch for ch in s if ch not in (SPACE, APOSTROPHE))


def syllabify(verse: NormalizedVerse, diphthongs=DIPHTHONGS) -> list[Syllable]:
    spans = find_nuclei(verse, diphthongs)
    if not spans:
        raise EmptyVerseError(f"no vowel in {verse.original!r}")
    chars = verse.chars
    n = len(spans)
    onsets = [""] * n
    codas = [""] * n
    onsets[0] = _consonants(chars[: spans[0][0]])
    codas[-1] = _consonants(chars[spans[-1][1]:])
    for k in range(n - 1):
        coda, onset = _split_run(chars[spans[k][1] : spans[k + 1][0]])
        codas[k] = coda
        onsets[k + 1] = onset

    syllables = []
    for k, (start, end) in enumerate(spans):
        after = chars[end : spans[k + 1][0]] if k + 1 < n else chars[end:]
        syllables.append(
            Syllable(
                onset=onsets[k],
                nucleus=chars[start:end],
                coda=codas[k],
                index=k + 1,
                circumflexed=any(verse.circumflex_flags[start:end]),
                word_final=k + 1 == n or SPACE in after or APOSTROPHE in after,
                followed_by=_consonants(after),
                subscript=any(verse.subscript_flags[start:end]),
            )
        )
    return syllables


def render_syllables(syllables) -> str:
    return "|".join(s.text for s in syllables)
