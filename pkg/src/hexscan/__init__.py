"""Automatic scansion of Greek dactylic hexameter."""

from .config import DEFAULT_CONFIG, ConfigError, ScanConfig, load_config, parse_config
from .estimator import HexameterScanner, Syllabifier, check_verses
from .fst import WeightConfig, build_transducer, complete_scansion
from .greek_text import NormalizedVerse, UnprocessableVerseError, normalize
from .meter import ScansionMark, Variant, all_variants, get_variant, plausibility_check
from .pipeline import VerseRecord, scan_corpus, scan_verse
from .prosody import RuleConfig, is_long
from .syllabifier import Syllable, syllabify

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "ConfigError",
    "HexameterScanner",
    "NormalizedVerse",
    "RuleConfig",
    "ScanConfig",
    "ScansionMark",
    "Syllabifier",
    "Syllable",
    "UnprocessableVerseError",
    "Variant",
    "VerseRecord",
    "WeightConfig",
    "all_variants",
    "build_transducer",
    "check_verses",
    "complete_scansion",
    "get_variant",
    "is_long",
    "load_config",
    "normalize",
    "parse_config",
    "plausibility_check",
    "scan_corpus",
    "scan_verse",
    "syllabify",
]
