"""Normalization of polytonic Greek and phonological character classes."""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass

VOWELS = frozenset("αεηιουω")
TENUES = frozenset("πτκ")
MEDIAE = frozenset("βδγ")
ASPIRATAE = frozenset("φθχ")
MUTES = TENUES | MEDIAE | ASPIRATAE
LIQUIDS = frozenset("λρμν")
DOUBLE_CONSONANTS = frozenset("ζξψ")
OTHER_CONSONANTS = frozenset("σ")
CONSONANTS = MUTES | LIQUIDS | DOUBLE_CONSONANTS | OTHER_CONSONANTS
APOSTROPHE = "'"
SPACE = " "
ALPHABET = VOWELS | CONSONANTS | {APOSTROPHE, SPACE}

DIPHTHONGS = frozenset({"αι", "ει", "οι", "υι", "αυ", "ευ", "ου", "ηυ", "ωυ"})

_CIRCUMFLEX = "\u0342"
_TREMA = "\u0308"
_IOTA_SUBSCRIPT = "\u0345"
# acute, grave, smooth/rough breathing, koronis, macron, breve, tone-mark variants
_STRIPPED_MARKS = frozenset("\u0301\u0300\u0313\u0314\u0343\u0304\u0306\u0340\u0341")
_APOSTROPHES = frozenset("'\u2019\u02bc\u1fbd\u1fbf")
_SPACING_SUBSCRIPTS = frozenset("\u1fbe\u037a")
_LETTER_VARIANTS = {"ς": "σ", "ϲ": "σ", "ϐ": "β", "ϑ": "θ", "ϕ": "φ", "ϰ": "κ", "ϱ": "ρ"}


class CharClass(enum.Enum):
    VOWEL = "vowel"
    MUTE_TENUIS = "mute_tenuis"
    MUTE_VOICED = "mute_voiced"
    MUTE_ASPIRATED = "mute_aspirated"
    LIQUID = "liquid"
    DOUBLE_CONSONANT = "double_consonant"
    OTHER_CONSONANT = "other_consonant"
    APOSTROPHE = "apostrophe"
    SPACE = "space"


class UnprocessableVerseError(ValueError):
    """Raised when a verse contains characters that cannot be normalized."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"position {position}: unexpected character {char!r} (U+{ord(char):04X})")


class UnknownCharacterError(ValueError):
    def __init__(self, char: str):
        self.char = char
        super().__init__(f"character {char!r} is not in the normalized alphabet")


@dataclass(frozen=True)
class NormalizedVerse:
    """Lower-cased base characters with circumflex and trema kept as flags.

    ``subscript_flags`` records iota subscripts, which are otherwise stripped;
    only the optional long-alpha rule looks at them.
    """

    original: str
    chars: str
    circumflex_flags: tuple[bool, ...]
    trema_flags: tuple[bool, ...]
    subscript_flags: tuple[bool, ...] = ()

    def __post_init__(self):
        if not self.subscript_flags:
            object.__setattr__(self, "subscript_flags", (False,) * len(self.chars))
        n = len(self.chars)
        if not (len(self.circumflex_flags) == len(self.trema_flags) == len(self.subscript_flags) == n):
            raise ValueError("flag sequences must match chars in length")

    def __len__(self):
        return len(self.chars)

    def text(self) -> str:
        """Render the verse back to text, re-attaching the informative marks."""
        out = []
        for ch, circ, trema, sub in zip(
            self.chars, self.circumflex_flags, self.trema_flags, self.subscript_flags
        ):
            out.append(ch)
            if trema:
                out.append(_TREMA)
            if circ:
                out.append(_CIRCUMFLEX)
            if sub:
                out.append(_IOTA_SUBSCRIPT)
        return unicodedata.normalize("NFC", "".join(out))


def _is_greek_letter(ch: str) -> bool:
    return "\u0370" <= ch <= "\u03ff" or "\u1f00" <= ch <= "\u1fff"


def normalize(raw: str) -> NormalizedVerse:
    """Normalize one verse of polytonic Greek.

    Casing is folded, final sigma becomes σ, acute/grave accents, breathings
    and iota subscripts are dropped. Circumflex and trema survive as flags on
    the vowel that carries them. Elision marks become ``'``; other punctuation
    is removed and whitespace collapsed.

    Raises UnprocessableVerseError for letters or digits outside Greek.
    """
    decomposed = unicodedata.normalize("NFD", raw)
    chars: list[str] = []
    circ: list[bool] = []
    trema: list[bool] = []
    sub: list[bool] = []
    # position in the NFC string, for error reports readable by the user
    nfc_positions = _nfd_to_nfc_positions(raw, decomposed)

    def push(ch: str):
        if ch == SPACE and (not chars or chars[-1] == SPACE):
            return
        chars.append(ch)
        circ.append(False)
        trema.append(False)
        sub.append(False)

    for i, ch in enumerate(decomposed):
        cat = unicodedata.category(ch)
        if ch in _APOSTROPHES:
            if chars and chars[-1] == SPACE:
                chars.pop(), circ.pop(), trema.pop(), sub.pop()
            push(APOSTROPHE)
            continue
        if cat == "Mn":
            if ch in _STRIPPED_MARKS:
                continue
            if not chars or chars[-1] not in VOWELS:
                if ch in (_CIRCUMFLEX, _TREMA, _IOTA_SUBSCRIPT):
                    continue
                raise UnprocessableVerseError(nfc_positions[i], ch)
            if ch == _CIRCUMFLEX:
                circ[-1] = True
            elif ch == _TREMA:
                trema[-1] = True
            elif ch == _IOTA_SUBSCRIPT:
                sub[-1] = True
            continue
        if ch.isspace():
            push(SPACE)
            continue
        if ch in _SPACING_SUBSCRIPTS:
            if chars and chars[-1] in VOWELS:
                sub[-1] = True
            continue
        if cat[0] in "PS":
            continue
        if _is_greek_letter(ch):
            low = ch.lower()
            low = _LETTER_VARIANTS.get(low, low)
            if low in VOWELS or low in CONSONANTS:
                push(low)
                continue
        raise UnprocessableVerseError(nfc_positions[i], ch)

    while chars and chars[-1] == SPACE:
        chars.pop(), circ.pop(), trema.pop(), sub.pop()
    if chars and chars[0] == SPACE:
        del chars[0], circ[0], trema[0], sub[0]
    return NormalizedVerse(
        original=unicodedata.normalize("NFC", raw),
        chars="".join(chars),
        circumflex_flags=tuple(circ),
        trema_flags=tuple(trema),
        subscript_flags=tuple(sub),
    )


def _nfd_to_nfc_positions(raw: str, decomposed: str) -> list[int]:
    positions = []
    for i, ch in enumerate(unicodedata.normalize("NFC", raw)):
        positions.extend([i] * len(unicodedata.normalize("NFD", ch)))
    # decomposition of the whole string and per character agree in length
    positions.extend([len(positions)] * (len(decomposed) - len(positions)))
    return positions


_CLASS_TABLE: dict[str, CharClass] = {}
_CLASS_TABLE.update({c: CharClass.VOWEL for c in VOWELS})
_CLASS_TABLE.update({c: CharClass.MUTE_TENUIS for c in TENUES})
_CLASS_TABLE.update({c: CharClass.MUTE_VOICED for c in MEDIAE})
_CLASS_TABLE.update({c: CharClass.MUTE_ASPIRATED for c in ASPIRATAE})
_CLASS_TABLE.update({c: CharClass.LIQUID for c in LIQUIDS})
_CLASS_TABLE.update({c: CharClass.DOUBLE_CONSONANT for c in DOUBLE_CONSONANTS})
_CLASS_TABLE.update({c: CharClass.OTHER_CONSONANT for c in OTHER_CONSONANTS})
_CLASS_TABLE[APOSTROPHE] = CharClass.APOSTROPHE
_CLASS_TABLE[SPACE] = CharClass.SPACE


def classify_char(c: str) -> CharClass:
    try:
        return _CLASS_TABLE[c]
    except KeyError:
        raise UnknownCharacterError(c) from None


def is_vowel(c: str) -> bool:
    return c in VOWELS


def is_consonant(c: str) -> bool:
    return c in CONSONANTS


def is_mute(c: str) -> bool:
    return c in MUTES


def detect_diphthong(v1: str, v2: str, trema_on_v2: bool, inventory=DIPHTHONGS) -> bool:
    """True iff ``v1 v2`` is an inventory diphthong not broken up by a trema."""
    if trema_on_v2:
        return False
    return v1 + v2 in inventory
