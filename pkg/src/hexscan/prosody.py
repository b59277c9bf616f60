"""Local length rules.

Five predicates over a syllable and its following consonant context,
combined into a single "safely long" verdict::

    circumflex or long vowel or long diphthong or (position and not muta cum liquida)

A negative verdict means the length is unknown, never that it is short.
"""

from __future__ import annotations

from dataclasses import dataclass

from .greek_text import DIPHTHONGS, DOUBLE_CONSONANTS, LIQUIDS, is_consonant, is_mute
from .syllabifier import Syllable

RULE_IDS = ("R_zf", "R_nl1", "R_nl2", "R_pl", "R_ml")

LONG_VOWELS = frozenset("ηω")


@dataclass(frozen=True)
class RuleConfig:
    diphthongs: frozenset = DIPHTHONGS
    # "cancel": muta cum liquida blocks positional length; "lengthen": it does not
    muta_cum_liquida: str = "cancel"
    long_subscript_alpha: bool = False

    def __post_init__(self):
        if self.muta_cum_liquida not in ("cancel", "lengthen"):
            raise ValueError(f"muta_cum_liquida must be 'cancel' or 'lengthen', got {self.muta_cum_liquida!r}")


DEFAULT_RULES = RuleConfig()


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: str
    fired: bool


def rule_circumflex(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    return s.circumflexed


def rule_nature_vowel(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    if len(s.nucleus) != 1:
        return False
    if s.nucleus in LONG_VOWELS:
        return True
    return cfg.long_subscript_alpha and s.nucleus == "α" and s.subscript


def rule_nature_diphthong(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    return len(s.nucleus) == 2 and s.nucleus in cfg.diphthongs


def rule_position(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    f = s.followed_by
    if f[:1] and f[0] in DOUBLE_CONSONANTS:
        return True
    return len(f) >= 2 and is_consonant(f[0]) and is_consonant(f[1])


def rule_muta_cum_liquida(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    f = s.followed_by
    return len(f) >= 2 and is_mute(f[0]) and f[1] in LIQUIDS


def combine(zf: bool, nl1: bool, nl2: bool, pl: bool, ml: bool) -> bool:
    return zf or nl1 or nl2 or (pl and not ml)


def rule_verdicts(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> tuple[RuleVerdict, ...]:
    fired = (
        rule_circumflex(s, cfg),
        rule_nature_vowel(s, cfg),
        rule_nature_diphthong(s, cfg),
        rule_position(s, cfg),
        rule_muta_cum_liquida(s, cfg),
    )
    return tuple(RuleVerdict(rid, f) for rid, f in zip(RULE_IDS, fired))


def is_long(s: Syllable, cfg: RuleConfig = DEFAULT_RULES) -> bool:
    zf, nl1, nl2, pl, ml = (v.fired for v in rule_verdicts(s, cfg))
    if cfg.muta_cum_liquida == "lengthen":
        ml = False
    return combine(zf, nl1, nl2, pl, ml)
