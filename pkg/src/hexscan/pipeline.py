"""Per-verse orchestration and corpus processing.

A verse goes through normalization, syllabification and the local spondee
search. A complete local result is accepted if it survives the plausibility
check (a valid scheme that keeps every rule-confirmed long syllable long);
a partial one goes to the transducer. Anything that fails is handed to
recovery: vowel-level reanalysis, then single synizesis fusions. Transducer
outputs that had to overrule a rule-confirmed long are only used as a last
resort, and never in favour of a clean synizesis analysis.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial

from .config import DEFAULT_CONFIG, ScanConfig
from .fst import Completion, WeightConfig, build_transducer, complete_scansion
from .greek_text import UnprocessableVerseError, normalize
from .local_search import run_local_search
from .meter import FootPattern, ScansionMark, get_variant, plausibility_check
from .prosody import is_long
from .recovery import apply_synizesis, reanalyze_by_vowels
from .syllabifier import EmptyVerseError, render_syllables, syllabify

MODES = ("local", "global", "complete")
COLUMNS = ("id", "status", "variant", "marks", "syllables", "stage", "notes")


@dataclass(frozen=True)
class VerseRecord:
    id: str
    raw: str
    status: str  # ok | rejected | unprocessable
    syllables: str = ""
    marks: str = ""
    variant: str = ""
    stage: str = ""  # local | global | recovery
    notes: str = ""
    trace: tuple[str, ...] = field(default=(), compare=False)

    def row(self) -> dict[str, str]:
        return {c: getattr(self, c) for c in COLUMNS}


@lru_cache(maxsize=16)
def get_transducer(weights: WeightConfig):
    return build_transducer(weights)


def _notes(**kv) -> str:
    return ";".join(f"{k}={v}" for k, v in kv.items() if v not in (None, "", ()))


def _positions(ps) -> str:
    return ",".join(str(p) for p in ps)


def _merge(segments: list[str], i: int) -> list[str]:
    return segments[: i - 1] + [segments[i - 1] + segments[i]] + segments[i + 1 :]


def scan_verse(raw: str, config: ScanConfig = DEFAULT_CONFIG, mode: str = "complete", verse_id: str = "") -> VerseRecord:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    try:
        verse = normalize(raw)
        syllables = syllabify(verse, config.rules.diphthongs)
    except (UnprocessableVerseError, EmptyVerseError) as exc:
        return VerseRecord(verse_id, raw, "unprocessable", notes=_notes(error=str(exc).replace("\t", " ")))

    rules = config.rules
    segments = [s.text for s in syllables]
    seg = render_syllables(syllables)
    rule_marks = tuple(ScansionMark.LONG if is_long(s, rules) else ScansionMark.UNKNOWN for s in syllables)
    local = run_local_search(syllables, config.search_order, rules)
    t = get_transducer(config.weights)

    def ok(comp_or_variant, stage, segmentation=seg, **notes):
        if isinstance(comp_or_variant, Completion):
            variant = comp_or_variant.variant
            if comp_or_variant.corrections:
                notes["corrected"] = _positions(comp_or_variant.corrections)
        else:
            variant = comp_or_variant
        return VerseRecord(
            verse_id, raw, "ok", segmentation, variant.render(), variant.index, stage, _notes(**notes), local.trace
        )

    def rejected(stage, **notes):
        return VerseRecord(verse_id, raw, "rejected", seg, "", "", stage, _notes(**notes), local.trace)

    # last-resort candidates: (completion, stage, segmentation, notes)
    fallbacks: list[tuple[Completion, str, str, dict]] = []
    stage = "local"
    if local.outcome == "complete":
        variant = plausibility_check(local.variant.marks, known=rule_marks)
        if variant is not None:
            return ok(variant, "local")
        reason = "implausible"
    elif local.outcome == "partial":
        if mode == "local":
            return rejected("local", reason="partial")
        stage = "global"
        comp = complete_scansion(t, local.annotation)
        if comp is not None and not comp.corrections:
            return ok(comp, "global")
        if comp is not None and mode == "global":
            return ok(comp, "global")
        if comp is not None:
            fallbacks.append((comp, "global", seg, {}))
        reason = "corrected" if comp is not None else "no_path"
    else:
        reason = local.outcome  # invalid length or contradiction

    if mode != "complete":
        return rejected(stage, reason=reason)

    reanalysis = reanalyze_by_vowels(verse, rules)
    unit_segments = segments if len(reanalysis) == len(segments) else None
    comp = complete_scansion(t, reanalysis)
    if comp is not None:
        if not comp.corrections:
            return ok(comp, "recovery", strategy="vowel_reanalysis")
        fallbacks.append((comp, "recovery", seg, {"strategy": "vowel_reanalysis"}))

    synizesis_fallbacks = []
    attempts = apply_synizesis(
        verse,
        reanalysis,
        rules,
        config.synizesis_pairs,
        config.synizesis_first_vowels,
        config.synizesis_right_to_left,
    )
    for attempt in attempts:
        comp = complete_scansion(t, attempt.result)
        if comp is None:
            continue
        i = attempt.merged_positions[0]
        segmentation = "|".join(_merge(unit_segments, i)) if unit_segments else ""
        notes = {"strategy": "synizesis", "merged": _positions(attempt.merged_positions)}
        if not comp.corrections:
            return ok(comp, "recovery", segmentation, **notes)
        synizesis_fallbacks.append((comp, "recovery", segmentation, notes))

    pool = fallbacks or synizesis_fallbacks
    if pool:
        comp, stage, segmentation, notes = min(pool, key=lambda c: c[0].cost)
        return ok(comp, stage, segmentation, **notes)
    return rejected("recovery", reason=reason)


def parse_line(line: str, lineno: int) -> tuple[str, str] | None:
    """Split an input line into (id, verse); blank lines yield None."""
    line = line.rstrip("\n").rstrip("\r")
    if not line.strip():
        return None
    if "\t" in line:
        vid, text = line.split("\t", 1)
        return vid.strip(), text
    return str(lineno), line


def _scan_item(item, config, mode):
    vid, text = item
    return scan_verse(text, config, mode, vid)


def scan_corpus(
    lines: Iterable[str],
    config: ScanConfig = DEFAULT_CONFIG,
    mode: str = "complete",
    workers: int = 1,
) -> tuple[list[VerseRecord], dict]:
    """Scan one verse per line, preserving input order."""
    items = [p for n, line in enumerate(lines, start=1) if (p := parse_line(line, n)) is not None]
    records = scan_items(items, config, mode, workers)
    return records, summarize(records)


def scan_items(
    items: Sequence[tuple[str, str]],
    config: ScanConfig = DEFAULT_CONFIG,
    mode: str = "complete",
    workers: int = 1,
) -> list[VerseRecord]:
    """Scan (id, verse) pairs, in parallel when ``workers`` > 1."""
    fn = partial(_scan_item, config=config, mode=mode)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * 4))))
    return [fn(item) for item in items]


def summarize(records: Sequence[VerseRecord]) -> dict:
    status = Counter(r.status for r in records)
    stage = Counter(r.stage for r in records if r.status == "ok")
    dactyls = [0] * 5
    ok = 0
    for r in records:
        if r.status != "ok":
            continue
        ok += 1
        for f, pattern in enumerate(get_variant(r.variant).feet[:5]):
            if pattern is FootPattern.DACTYL:
                dactyls[f] += 1
    return {
        "verses": len(records),
        "status": {k: status.get(k, 0) for k in ("ok", "rejected", "unprocessable")},
        "stage": {k: stage.get(k, 0) for k in ("local", "global", "recovery")},
        "dactyl_count_by_foot": {str(f + 1): dactyls[f] for f in range(5)},
        "dactyl_frequency_by_foot": {str(f + 1): (dactyls[f] / ok if ok else None) for f in range(5)},
    }


def format_tsv(records: Iterable[VerseRecord]) -> str:
    lines = ["\t".join(COLUMNS)]
    for r in records:
        lines.append("\t".join(getattr(r, c) for c in COLUMNS))
    return "\n".join(lines) + "\n"


def format_structured(records: Iterable[VerseRecord]) -> str:
    return "".join(json.dumps(r.row(), ensure_ascii=False) + "\n" for r in records)


def format_summary(summary: dict) -> str:
    lines = [f"verses\t{summary['verses']}"]
    lines += [f"status.{k}\t{v}" for k, v in summary["status"].items()]
    lines += [f"stage.{k}\t{v}" for k, v in summary["stage"].items()]
    for foot, n in summary["dactyl_count_by_foot"].items():
        freq = summary["dactyl_frequency_by_foot"][foot]
        lines.append(f"dactyl.foot{foot}\t{n}\t{'' if freq is None else f'{freq:.3f}'}")
    return "\n".join(lines) + "\n"


def record_from_dict(d: dict) -> VerseRecord:
    return VerseRecord(**{k: v for k, v in d.items() if k in VerseRecord.__dataclass_fields__})

