"""The hexameter catalog.

A variant is fixed by the set of feet among 1-5 that are spondees. Its
two-digit index is ``<number of spondees><rank>`` where rank enumerates the
spondee position sets of that size in lexicographic order, so ``10`` has its
spondee in foot 1 and ``14`` in foot 5. The last foot is always long + anceps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class ScansionMark(str, enum.Enum):
    LONG = "-"
    SHORT = "*"
    UNKNOWN = "?"
    ANCEPS = "X"

    def __str__(self):
        return self.value


class FootPattern(enum.Enum):
    DACTYL = (ScansionMark.LONG, ScansionMark.SHORT, ScansionMark.SHORT)
    SPONDEE = (ScansionMark.LONG, ScansionMark.LONG)
    FINAL = (ScansionMark.LONG, ScansionMark.ANCEPS)

    @property
    def marks(self) -> tuple[ScansionMark, ...]:
        return self.value

    def __len__(self):
        return len(self.value)


class NotAHexameterError(ValueError):
    pass


MIN_SYLLABLES = 12
MAX_SYLLABLES = 17


@dataclass(frozen=True)
class Variant:
    index: str
    feet: tuple[FootPattern, ...]

    @property
    def syllable_count(self) -> int:
        return sum(len(f) for f in self.feet)

    @property
    def spondee_feet(self) -> frozenset[int]:
        return frozenset(i + 1 for i, f in enumerate(self.feet[:5]) if f is FootPattern.SPONDEE)

    @property
    def marks(self) -> tuple[ScansionMark, ...]:
        return tuple(m for f in self.feet for m in f.marks)

    def foot_spans(self) -> list[tuple[int, int]]:
        """1-based inclusive syllable ranges of the six feet."""
        spans, start = [], 1
        for f in self.feet:
            spans.append((start, start + len(f) - 1))
            start += len(f)
        return spans

    def render(self) -> str:
        return render(self.marks)

    def __str__(self):
        return self.index


def render(marks) -> str:
    return "".join(ScansionMark(m).value for m in marks)


def parse_marks(text: str) -> tuple[ScansionMark, ...]:
    return tuple(ScansionMark(c) for c in text)


@lru_cache(maxsize=None)
def all_variants() -> tuple[Variant, ...]:
    variants = []
    for k in range(6):
        for rank, spondees in enumerate(combinations(range(1, 6), k)):
            feet = tuple(
                FootPattern.SPONDEE if f in spondees else FootPattern.DACTYL for f in range(1, 6)
            ) + (FootPattern.FINAL,)
            variants.append(Variant(index=f"{k}{rank}", feet=feet))
    return tuple(variants)


@lru_cache(maxsize=None)
def variants_by_index() -> dict[str, Variant]:
    return {v.index: v for v in all_variants()}


@lru_cache(maxsize=None)
def variants_with_length(n: int) -> tuple[Variant, ...]:
    return tuple(v for v in all_variants() if v.syllable_count == n)


def get_variant(index: str) -> Variant:
    return variants_by_index()[index]


def variant_for_spondees(spondee_feet) -> Variant:
    feet = tuple(FootPattern.SPONDEE if f in spondee_feet else FootPattern.DACTYL for f in range(1, 6))
    for v in all_variants():
        if v.feet[:5] == feet:
            return v
    raise ValueError(f"invalid spondee feet {spondee_feet!r}")


def required_spondees(syllable_count: int) -> int:
    if not MIN_SYLLABLES <= syllable_count <= MAX_SYLLABLES:
        raise NotAHexameterError(f"{syllable_count} syllables cannot form a hexameter")
    return MAX_SYLLABLES - syllable_count


@lru_cache(maxsize=None)
def _body_lookup() -> dict[str, Variant]:
    # the final mark is free, so match on everything before it
    return {render(v.marks[:-1]): v for v in all_variants()}


def plausibility_check(marks, known=None) -> Variant | None:
    """Return the variant matching a fully determined mark sequence, else None.

    The last position is treated as anceps. When ``known`` (a sequence of
    marks, typically rule-derived) is given, the scheme must also agree with
    every determined mark in it outside the anceps position.
    """
    text = marks if isinstance(marks, str) else render(marks)
    if ScansionMark.UNKNOWN.value in text:
        raise ValueError("plausibility_check requires fully determined marks")
    if len(text) < MIN_SYLLABLES or len(text) > MAX_SYLLABLES:
        return None
    variant = _body_lookup().get(text[:-1])
    if variant is None:
        return None
    if known is not None:
        if contradictions(variant.marks, known):
            return None
    return variant


def contradictions(output, known) -> list[int]:
    """1-based positions where a determined mark in ``known`` disagrees with ``output``."""
    out = render(output) if not isinstance(output, str) else output
    ref = render(known) if not isinstance(known, str) else known
    if len(out) != len(ref):
        raise ValueError("mark sequences differ in length")
    bad = []
    for i, (o, k) in enumerate(zip(out, ref), start=1):
        if o == "X" or k in ("?", "X"):
            continue
        if o != k:
            bad.append(i)
    return bad
