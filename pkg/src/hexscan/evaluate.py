"""Scoring scansion output against reference annotations.

Undefined metrics (zero denominators) are reported as ``None`` rather than 0.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

logger = logging.getLogger(__name__)

REJECTED_LABEL = "--"
RECORD_COLUMNS = ("id", "status", "variant", "marks", "syllables", "stage", "notes")


class AnnotationFormatError(ValueError):
    def __init__(self, path, lineno: int, message: str):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {message}")


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn) < 0:
            raise ValueError("counts must be non-negative")


@dataclass(frozen=True)
class PRF:
    precision: float | None
    recall: float | None
    f_measure: float | None


def compute_prf(c: ConfusionCounts) -> PRF:
    # rational arithmetic, rounded once at the end
    p = Fraction(c.tp, c.tp + c.fp) if c.tp + c.fp else None
    r = Fraction(c.tp, c.tp + c.fn) if c.tp + c.fn else None
    f = 2 * p * r / (p + r) if p is not None and r is not None and p + r else None
    return PRF(*(None if x is None else float(x) for x in (p, r, f)))


@dataclass(frozen=True)
class AgreementTable:
    pairs: tuple[tuple[str, str], ...]

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def observed(self) -> float | None:
        if not self.pairs:
            return None
        return sum(a == b for a, b in self.pairs) / self.n

    @property
    def expected(self) -> float | None:
        if not self.pairs:
            return None
        ca = Counter(a for a, _ in self.pairs)
        cb = Counter(b for _, b in self.pairs)
        return sum(ca[label] * cb[label] for label in ca) / (self.n * self.n)


def kappa_from(observed: float, expected: float) -> float | None:
    if expected >= 1:
        return None
    return (observed - expected) / (1 - expected)


def compute_kappa(t: AgreementTable) -> float | None:
    if not t.pairs:
        return None
    return kappa_from(t.observed, t.expected)


def compute_accuracy(pred: Sequence[Sequence[str]], gold: Sequence[Sequence[str]], granularity: str = "verse") -> float:
    """Share of exactly matching units between aligned annotations.

    At ``syllable`` granularity a verse whose unit count differs from the gold
    one scores zero for all of its gold units.
    """
    if granularity not in ("syllable", "verse"):
        raise ValueError(f"granularity must be 'syllable' or 'verse', got {granularity!r}")
    if len(pred) < len(gold):
        pred = list(pred) + [()] * (len(gold) - len(pred))
    if granularity == "verse":
        if not gold:
            return 0.0
        return sum(tuple(p) == tuple(g) for p, g in zip(pred, gold)) / len(gold)
    total = sum(len(g) for g in gold)
    if not total:
        return 0.0
    good = 0
    for p, g in zip(pred, gold):
        if len(p) != len(g):
            logger.debug("unit count mismatch: %d predicted vs %d gold", len(p), len(g))
            continue
        good += sum(a == b for a, b in zip(p, g))
    return good / total


@dataclass(frozen=True)
class Annotation:
    id: str
    status: str
    variant: str
    marks: str = ""
    syllables: str = ""
    stage: str = ""
    notes: str = ""
    text: str = ""

    @property
    def scanned(self) -> bool:
        return self.status == "ok" and bool(self.variant)

    @property
    def label(self) -> str:
        return self.variant if self.scanned else REJECTED_LABEL


def parse_annotations(lines: Iterable[str], source="<input>") -> list[Annotation]:
    """Parse the tab-separated record format (header row required)."""
    lines = list(lines)
    rows = []
    header = None
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n").rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = next(csv.reader(io.StringIO(line), delimiter="\t", quoting=csv.QUOTE_NONE))
        if header is None:
            header = fields
            missing = {"id", "status", "variant"} - set(header)
            if missing:
                raise AnnotationFormatError(source, lineno, f"header lacks columns {sorted(missing)}")
            continue
        if len(fields) > len(header) or len(fields) < 3:
            raise AnnotationFormatError(source, lineno, f"expected {len(header)} fields, got {len(fields)}")
        row = dict(zip(header, fields))
        status = row.get("status", "")
        if status not in ("ok", "rejected", "unprocessable"):
            raise AnnotationFormatError(source, lineno, f"unknown status {status!r}")
        variant = row.get("variant", "")
        if status == "ok" and not (len(variant) == 2 and variant.isdigit()):
            raise AnnotationFormatError(source, lineno, f"bad variant index {variant!r}")
        rows.append(
            Annotation(
                id=row["id"],
                status=status,
                variant=variant,
                marks=row.get("marks", ""),
                syllables=row.get("syllables", ""),
                stage=row.get("stage", ""),
                notes=row.get("notes", ""),
                text=row.get("text", ""),
            )
        )
    if header is None and lines:
        raise AnnotationFormatError(source, 1, "missing header row")
    return rows


def read_annotations(path) -> list[Annotation]:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return parse_annotations(fh, source=path)


def confusion(pred: Sequence[Annotation], gold: Sequence[Annotation]) -> ConfusionCounts:
    """Verse-level counts; a true positive needs the exact variant index."""
    by_id = {a.id: a for a in pred}
    tp = fp = fn = 0
    for g in gold:
        p = by_id.get(g.id)
        if p is not None and p.scanned:
            if g.scanned and p.variant == g.variant:
                tp += 1
            else:
                fp += 1
        elif g.scanned:
            fn += 1
    return ConfusionCounts(tp, fp, fn)


def _split(s: str) -> tuple[str, ...]:
    return tuple(s.split("|")) if s else ()


@dataclass
class EvaluationReport:
    counts: ConfusionCounts
    prf: PRF
    verse_accuracy: float | None
    syllable_accuracy: float | None
    n_verses: int
    missing: list[str] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "verses": self.n_verses,
            "tp": self.counts.tp,
            "fp": self.counts.fp,
            "fn": self.counts.fn,
            "precision": self.prf.precision,
            "recall": self.prf.recall,
            "f_measure": self.prf.f_measure,
            "syllabification_verse_accuracy": self.verse_accuracy,
            "syllabification_syllable_accuracy": self.syllable_accuracy,
            "missing_ids": self.missing,
        }

    def text(self) -> str:
        s = self.summary()
        lines = [f"verses\t{s['verses']}", f"tp\t{s['tp']}", f"fp\t{s['fp']}", f"fn\t{s['fn']}"]
        for key in ("precision", "recall", "f_measure", "syllabification_verse_accuracy", "syllabification_syllable_accuracy"):
            lines.append(f"{key}\t{_fmt(s[key])}")
        if self.missing:
            lines.append("missing\t" + ",".join(self.missing))
        return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    return "undefined" if x is None else f"{x:.4f}"


def evaluate(pred: Sequence[Annotation], gold: Sequence[Annotation]) -> EvaluationReport:
    by_id = {a.id: a for a in pred}
    counts = confusion(pred, gold)
    with_syl = [g for g in gold if g.syllables]
    verse_acc = syl_acc = None
    if with_syl:
        p_syl = [_split(by_id[g.id].syllables) if g.id in by_id else () for g in with_syl]
        g_syl = [_split(g.syllables) for g in with_syl]
        verse_acc = compute_accuracy(p_syl, g_syl, "verse")
        syl_acc = compute_accuracy(p_syl, g_syl, "syllable")
    missing = [g.id for g in gold if g.id not in by_id]
    return EvaluationReport(counts, compute_prf(counts), verse_acc, syl_acc, len(gold), missing)


@dataclass
class ComparisonReport:
    counts: ConfusionCounts
    prf: PRF
    table: AgreementTable
    kappa: float | None
    diffs: list[tuple[str, str, str]]
    only_a: list[str]
    only_b: list[str]

    def summary(self) -> dict:
        return {
            "shared": self.table.n,
            "observed_agreement": self.table.observed,
            "expected_agreement": self.table.expected,
            "kappa": self.kappa,
            "tp": self.counts.tp,
            "fp": self.counts.fp,
            "fn": self.counts.fn,
            "precision": self.prf.precision,
            "recall": self.prf.recall,
            "f_measure": self.prf.f_measure,
            "disagreements": [{"id": i, "a": a, "b": b} for i, a, b in self.diffs],
            "only_in_a": self.only_a,
            "only_in_b": self.only_b,
        }

    def text(self) -> str:
        s = self.summary()
        lines = [f"shared\t{s['shared']}"]
        for key in ("observed_agreement", "expected_agreement", "kappa", "precision", "recall", "f_measure"):
            lines.append(f"{key}\t{_fmt(s[key])}")
        lines.append(f"tp\t{s['tp']}\nfp\t{s['fp']}\nfn\t{s['fn']}")
        lines.append(f"disagreements\t{len(self.diffs)}")
        lines += [f"  {i}\t{a}\t{b}" for i, a, b in self.diffs]
        if self.only_a:
            lines.append("only_in_a\t" + ",".join(self.only_a))
        if self.only_b:
            lines.append("only_in_b\t" + ",".join(self.only_b))
        return "\n".join(lines) + "\n"


def compare_records(a: Sequence[Annotation], b: Sequence[Annotation], include_rejections: bool = True) -> ComparisonReport:
    """Agreement of annotation ``a`` with reference ``b``, matched by verse id."""
    a_by = {r.id: r for r in a}
    b_by = {r.id: r for r in b}
    shared = [i for i in a_by if i in b_by]
    pairs = []
    diffs = []
    for i in shared:
        la, lb = a_by[i].label, b_by[i].label
        if la != lb:
            diffs.append((i, la, lb))
        if not include_rejections and REJECTED_LABEL in (la, lb):
            continue
        pairs.append((la, lb))
    if not shared:
        logger.warning("the two annotations share no verse id")
    table = AgreementTable(tuple(pairs))
    counts = confusion([a_by[i] for i in shared], [b_by[i] for i in shared])
    return ComparisonReport(
        counts=counts,
        prf=compute_prf(counts),
        table=table,
        kappa=compute_kappa(table),
        diffs=diffs,
        only_a=[i for i in a_by if i not in b_by],
        only_b=[i for i in b_by if i not in a_by],
    )


def compare_annotations(file_a, file_b, include_rejections: bool = True) -> ComparisonReport:
    return compare_records(read_annotations(file_a), read_annotations(file_b), include_rejections)
