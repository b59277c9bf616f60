"""Targeted spondee search driven by deterministic automata.

Verses of 13-16 syllables get a dedicated automaton that visits the feet in
``search_order`` looking for the number of spondees the syllable count
requires. Each search state runs a small procedure (scan the foot's window
for two adjacent safely-long syllables) whose outcome is the event fed to the
transition table. 12- and 17-syllable verses have a forced scheme; any other
count goes straight to failure.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .meter import (
    FootPattern,
    ScansionMark,
    Variant,
    required_spondees,
    variant_for_spondees,
    variants_with_length,
)
from .prosody import DEFAULT_RULES, RuleConfig, is_long
from .syllabifier import Syllable

DEFAULT_SEARCH_ORDER = (2, 3, 4, 1, 5)

FOUND = "found"
MISSING = "missing"
CONTRADICTION = "contradiction"
FORCED = "forced"
INVALID = "invalid"
EVENTS = frozenset({FOUND, MISSING, CONTRADICTION, FORCED, INVALID})

START = "start"
SUCCESS = "success"
FAILURE = "failure"


class ContradictionError(ValueError):
    """Confirmed spondees that no variant of the given length can hold."""


def _search_state(foot: int, found: int) -> str:
    return f"search[{foot}]/{found}"


def _parse_search_state(state: str) -> tuple[int, int]:
    foot, found = state[len("search[") :].split("]/")
    return int(foot), int(found)


@dataclass(frozen=True)
class SpondeeAutomaton:
    syllable_count: int
    target: int | None
    search_order: tuple[int, ...]
    states: frozenset[str]
    alphabet: frozenset[str]
    delta: Mapping[tuple[str, str], str]
    initial: str
    accepting: frozenset[str]

    def step(self, state: str, event: str) -> str:
        return self.delta[state, event]

    @property
    def is_search(self) -> bool:
        return self.target is not None


def _total(states, table):
    for q in states:
        for e in EVENTS:
            table.setdefault((q, e), q if q in (SUCCESS, FAILURE) else FAILURE)
    return table


def _build_search_automaton(n: int, order: tuple[int, ...]) -> SpondeeAutomaton:
    target = required_spondees(n)
    table: dict[tuple[str, str], str] = {}
    states = {SUCCESS, FAILURE}
    for i, foot in enumerate(order):
        for found in range(min(i, target - 1) + 1):
            q = _search_state(foot, found)
            states.add(q)
            last = i + 1 == len(order)
            if found + 1 == target:
                table[q, FOUND] = SUCCESS
            else:
                table[q, FOUND] = FAILURE if last else _search_state(order[i + 1], found + 1)
            table[q, MISSING] = FAILURE if last else _search_state(order[i + 1], found)
            table[q, CONTRADICTION] = FAILURE
    states = frozenset(states)
    return SpondeeAutomaton(
        syllable_count=n,
        target=target,
        search_order=order,
        states=states,
        alphabet=EVENTS,
        delta=_total(states, table),
        initial=_search_state(order[0], 0),
        accepting=frozenset({SUCCESS, FAILURE}),
    )


def _build_simple_automaton(n: int) -> SpondeeAutomaton:
    states = frozenset({START, SUCCESS, FAILURE})
    table = {(START, FORCED): SUCCESS, (START, INVALID): FAILURE}
    return SpondeeAutomaton(
        syllable_count=n,
        target=None,
        search_order=(),
        states=states,
        alphabet=EVENTS,
        delta=_total(states, table),
        initial=START,
        accepting=frozenset({SUCCESS, FAILURE}),
    )


@lru_cache(maxsize=None)
def select_automaton(syllable_count: int, search_order: tuple[int, ...] = DEFAULT_SEARCH_ORDER) -> SpondeeAutomaton:
    if sorted(search_order) != [1, 2, 3, 4, 5]:
        raise ValueError(f"search_order must be a permutation of feet 1-5, got {search_order!r}")
    if 13 <= syllable_count <= 16:
        return _build_search_automaton(syllable_count, tuple(search_order))
    return _build_simple_automaton(syllable_count)


def _normalize_confirmed(confirmed) -> dict[int, int | None]:
    if not confirmed:
        return {}
    if isinstance(confirmed, Mapping):
        return dict(confirmed)
    return {f: None for f in confirmed}


def consistent_variants(syllable_count: int, confirmed=None) -> list[Variant]:
    """Variants of the given length that have a spondee at every confirmed foot.

    ``confirmed`` is a set of feet or a mapping foot -> 1-based start syllable.
    """
    conf = _normalize_confirmed(confirmed)
    out = []
    for v in variants_with_length(syllable_count):
        spans = v.foot_spans()
        if all(
            v.feet[f - 1] is FootPattern.SPONDEE and (start is None or spans[f - 1][0] == start)
            for f, start in conf.items()
        ):
            out.append(v)
    return out


def foot_window(syllable_count: int, foot: int, confirmed=None) -> tuple[int, int]:
    """Smallest 1-based inclusive syllable range that can belong to ``foot``."""
    if not 1 <= foot <= 5:
        raise ValueError(f"foot must be in 1..5, got {foot}")
    conf = _normalize_confirmed(confirmed)
    if foot in conf:
        raise ValueError(f"foot {foot} is already confirmed")
    variants = consistent_variants(syllable_count, conf)
    if not variants:
        raise ContradictionError(f"no {syllable_count}-syllable variant has spondees at {sorted(conf)}")
    spans = [v.foot_spans()[foot - 1] for v in variants]
    return min(s for s, _ in spans), max(e for _, e in spans)


def _spondee_starts(syllable_count: int, foot: int, confirmed) -> set[int]:
    return {
        v.foot_spans()[foot - 1][0]
        for v in consistent_variants(syllable_count, confirmed)
        if v.feet[foot - 1] is FootPattern.SPONDEE
    }


@dataclass(frozen=True)
class FootSearch:
    found: int | None  # 1-based start of the spondee, if any
    longs: frozenset[int]


def search_spondee_in_foot(
    syllables: Sequence[Syllable],
    window: tuple[int, int],
    long_fn: Callable[[Syllable], bool] = is_long,
    allowed_starts=None,
) -> FootSearch:
    """Scan adjacent pairs of the window for two safely-long syllables.

    The leftmost qualifying pair wins. Every long seen along the way is
    reported so that it can seed the partial annotation.
    """
    lo, hi = window
    longs = set()
    status = {}
    for i in range(lo, hi + 1):
        status[i] = long_fn(syllables[i - 1])
        if status[i]:
            longs.add(i)
    for i in range(lo, hi):
        if status[i] and status[i + 1] and (allowed_starts is None or i in allowed_starts):
            return FootSearch(found=i, longs=frozenset(longs))
    return FootSearch(found=None, longs=frozenset(longs))


@dataclass(frozen=True)
class PartialAnnotation:
    marks: tuple[ScansionMark, ...]
    spondee_feet: frozenset[int] = frozenset()
    spondee_starts: tuple[tuple[int, int], ...] = ()

    def __len__(self):
        return len(self.marks)

    def render(self) -> str:
        return "".join(m.value for m in self.marks)


@dataclass(frozen=True)
class LocalSearchResult:
    annotation: PartialAnnotation
    outcome: str  # complete | partial | invalid | contradiction
    variant: Variant | None
    trace: tuple[str, ...] = field(default=())


def run_local_search(
    syllables: Sequence[Syllable],
    search_order: tuple[int, ...] = DEFAULT_SEARCH_ORDER,
    rules: RuleConfig = DEFAULT_RULES,
    automaton: SpondeeAutomaton | None = None,
) -> LocalSearchResult:
    n = len(syllables)
    automaton = automaton or select_automaton(n, tuple(search_order))
    state = automaton.initial
    trace = [state]

    if not automaton.is_search:
        if n in (12, 17):
            variant = variants_with_length(n)[0]
            state = automaton.step(state, FORCED)
            trace.append(state)
            ann = PartialAnnotation(variant.marks, variant.spondee_feet, _starts(variant))
            return LocalSearchResult(ann, "complete", variant, tuple(trace))
        state = automaton.step(state, INVALID)
        trace.append(state)
        ann = PartialAnnotation((ScansionMark.UNKNOWN,) * n)
        return LocalSearchResult(ann, "invalid", None, tuple(trace))

    cache: dict[int, bool] = {}

    def long_fn(s: Syllable) -> bool:
        if s.index not in cache:
            cache[s.index] = is_long(s, rules)
        return cache[s.index]

    confirmed: dict[int, int] = {}
    longs: set[int] = set()
    contradiction = False
    while state not in automaton.accepting:
        foot, _ = _parse_search_state(state)
        try:
            window = foot_window(n, foot, confirmed)
        except ContradictionError:
            contradiction = True
            state = automaton.step(state, CONTRADICTION)
            trace.append(state)
            break
        result = search_spondee_in_foot(
            syllables, window, long_fn, allowed_starts=_spondee_starts(n, foot, confirmed)
        )
        longs |= result.longs
        if result.found is not None:
            confirmed[foot] = result.found
            longs |= {result.found, result.found + 1}
            event = FOUND
        else:
            event = MISSING
        state = automaton.step(state, event)
        trace.append(state)

    if state == SUCCESS:
        variant = variant_for_spondees(set(confirmed))
        ann = PartialAnnotation(variant.marks, frozenset(confirmed), tuple(sorted(confirmed.items())))
        return LocalSearchResult(ann, "complete", variant, tuple(trace))

    marks = tuple(ScansionMark.LONG if i in longs else ScansionMark.UNKNOWN for i in range(1, n + 1))
    ann = PartialAnnotation(marks, frozenset(confirmed), tuple(sorted(confirmed.items())))
    if not contradiction and not _any_compatible(n, marks):
        contradiction = True
    return LocalSearchResult(ann, "contradiction" if contradiction else "partial", None, tuple(trace))


def _starts(variant: Variant) -> tuple[tuple[int, int], ...]:
    spans = variant.foot_spans()
    return tuple((f, spans[f - 1][0]) for f in sorted(variant.spondee_feet))


def _any_compatible(n: int, marks) -> bool:
    for v in variants_with_length(n):
        if all(k is not ScansionMark.LONG or o is not ScansionMark.SHORT for o, k in zip(v.marks, marks)):
            return True
    return False
