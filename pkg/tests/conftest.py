import random

import pytest

from hexscan.greek_text import normalize
from hexscan.syllabifier import syllabify

# open CV syllables; no two vowels ever touch, so nothing can fuse
CV_SYLLABLES = ["τα", "κο", "λη", "μω", "νυ", "πι", "δε", "βα", "γο", "ρε", "σο", "φι", "θυ", "χα"]


def syl(text):
    return syllabify(normalize(text))


def cv_verse(n_syllables, rng, word_max=3):
    """Space-separated words built from ``n_syllables`` CV syllables."""
    words = []
    left = n_syllables
    while left:
        k = min(left, rng.randint(1, word_max))
        words.append("".join(rng.choice(CV_SYLLABLES) for _ in range(k)))
        left -= k
    return " ".join(words)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
