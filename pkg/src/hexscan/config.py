"""Pipeline configuration.

The config file is plain ``key = value`` text; ``#`` starts a comment.
Unknown keys are an error. Every key is optional::

    dactyl_costs = 0.45, 0.65, 0.55, 0.60, 0.10
    spondee_costs = 0.55, 0.35, 0.45, 0.40, 0.90
    correction_penalty = 5.0
    strict = false
    search_order = 2, 3, 4, 1, 5
    diphthongs = αι, ει, οι, υι, αυ, ευ, ου, ηυ, ωυ
    muta_cum_liquida = cancel        # or: lengthen
    long_subscript_alpha = false
    synizesis_pairs = εω, εα, εο, εοι
    synizesis_first_vowels = ε
    synizesis_order = right_to_left  # or: left_to_right
    kappa_rejections = include       # or: exclude
"""

from __future__ import annotations

import configparser
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from .fst import WeightConfig, WeightConfigError
from .greek_text import VOWELS
from .local_search import DEFAULT_SEARCH_ORDER
from .prosody import RuleConfig
from .recovery import DEFAULT_SYNIZESIS_FIRST, DEFAULT_SYNIZESIS_PAIRS

_SECTION = "hexscan"

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"config key {key!r}: {message}")


@dataclass(frozen=True)
class ScanConfig:
    weights: WeightConfig = field(default_factory=WeightConfig)
    rules: RuleConfig = field(default_factory=RuleConfig)
    search_order: tuple[int, ...] = DEFAULT_SEARCH_ORDER
    synizesis_pairs: frozenset = DEFAULT_SYNIZESIS_PAIRS
    synizesis_first_vowels: frozenset = DEFAULT_SYNIZESIS_FIRST
    synizesis_right_to_left: bool = True
    kappa_include_rejections: bool = True

    def with_strict(self, strict: bool = True) -> ScanConfig:
        return replace(self, weights=replace(self.weights, strict=strict))


DEFAULT_CONFIG = ScanConfig()


def _floats(key, value, n=None):
    try:
        out = tuple(float(x) for x in value.split(","))
    except ValueError:
        raise ConfigError(key, f"expected comma-separated numbers, got {value!r}") from None
    if n is not None and len(out) != n:
        raise ConfigError(key, f"expected {n} values, got {len(out)}")
    return out


def _bool(key, value):
    v = value.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ConfigError(key, f"expected a boolean, got {value!r}")


def _choice(key, value, options):
    v = value.strip()
    if v not in options:
        raise ConfigError(key, f"expected one of {', '.join(options)}, got {value!r}")
    return v


def _greek_list(key, value):
    items = frozenset(x.strip() for x in value.split(",") if x.strip())
    if not items or any(not set(x) <= VOWELS for x in items):
        raise ConfigError(key, f"expected comma-separated vowel sequences, got {value!r}")
    return items


def parse_config(text: str) -> ScanConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(f"[{_SECTION}]\n" + text)
    except configparser.Error as exc:
        raise ConfigError("<file>", str(exc)) from None
    raw = dict(parser[_SECTION])

    weights = {}
    rules = {}
    top = {}
    for key, value in raw.items():
        if key == "dactyl_costs":
            weights["dactyl_costs"] = _floats(key, value, 5)
        elif key == "spondee_costs":
            weights["spondee_costs"] = _floats(key, value, 5)
        elif key == "correction_penalty":
            weights["correction_penalty"] = _floats(key, value, 1)[0]
        elif key == "strict":
            weights["strict"] = _bool(key, value)
        elif key == "search_order":
            try:
                order = tuple(int(x) for x in value.split(","))
            except ValueError:
                raise ConfigError(key, f"expected comma-separated feet, got {value!r}") from None
            if sorted(order) != [1, 2, 3, 4, 5]:
                raise ConfigError(key, "must be a permutation of 1, 2, 3, 4, 5")
            top["search_order"] = order
        elif key == "diphthongs":
            d = _greek_list(key, value)
            if any(len(x) != 2 for x in d):
                raise ConfigError(key, "diphthongs are pairs of vowels")
            rules["diphthongs"] = d
        elif key == "muta_cum_liquida":
            rules["muta_cum_liquida"] = _choice(key, value, ("cancel", "lengthen"))
        elif key == "long_subscript_alpha":
            rules["long_subscript_alpha"] = _bool(key, value)
        elif key == "synizesis_pairs":
            top["synizesis_pairs"] = _greek_list(key, value)
        elif key == "synizesis_first_vowels":
            top["synizesis_first_vowels"] = _greek_list(key, value)
        elif key == "synizesis_order":
            top["synizesis_right_to_left"] = _choice(key, value, ("right_to_left", "left_to_right")) == "right_to_left"
        elif key == "kappa_rejections":
            top["kappa_include_rejections"] = _choice(key, value, ("include", "exclude")) == "include"
        else:
            raise ConfigError(key, "unknown key")

    if "dactyl_costs" in weights and "spondee_costs" not in weights:
        weights["spondee_costs"] = tuple(1.0 - c for c in weights["dactyl_costs"])
    try:
        wcfg = WeightConfig(**weights)
    except WeightConfigError as exc:
        key = "correction_penalty" if "correction_penalty" in str(exc) else "dactyl_costs"
        raise ConfigError(key, str(exc)) from None
    return ScanConfig(weights=wcfg, rules=RuleConfig(**rules), **top)


def load_config(path=None) -> ScanConfig:
    """Read a config file; a missing path or file yields the defaults."""
    if path is None:
        return DEFAULT_CONFIG
    p = Path(path)
    if not p.exists():
        logger.warning("config file %s not found, using defaults", p)
        return DEFAULT_CONFIG
    return parse_config(p.read_text(encoding="utf-8"))

