"""Weighted transducer completing partial scansions.

Input symbols are ``-`` (long), ``*`` (short) and ``?`` (unknown); output
symbols are ``-``, ``*`` and ``X`` (anceps). Each foot 1-5 is a small block::

    entry --(-)--> long --(-, spondee cost)--------------> next entry
                        \\--(*, dactyl cost)--> short --(*)--> next entry

and the final foot is ``entry --(-)--> q5 --(X)--> q6``. A determined input
mark may be mapped to the opposite output only by paying the correction
penalty; in strict mode such edges are left out. Costs combine by addition
and the cheapest accepting path wins (min-sum), ties going to the smaller
variant index.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .meter import MAX_SYLLABLES, MIN_SYLLABLES, ScansionMark, Variant, plausibility_check, render

L = ScansionMark.LONG
S = ScansionMark.SHORT
U = ScansionMark.UNKNOWN
A = ScansionMark.ANCEPS
INPUT_SYMBOLS = (L, S, U)

DEFAULT_DACTYL_COSTS = (0.45, 0.65, 0.55, 0.60, 0.10)
DEFAULT_SPONDEE_COSTS = (0.55, 0.35, 0.45, 0.40, 0.90)
DEFAULT_CORRECTION_PENALTY = 5.0


class WeightConfigError(ValueError):
    pass


@dataclass(frozen=True)
class WeightConfig:
    dactyl_costs: tuple[float, ...] = DEFAULT_DACTYL_COSTS
    spondee_costs: tuple[float, ...] = DEFAULT_SPONDEE_COSTS
    correction_penalty: float = DEFAULT_CORRECTION_PENALTY
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "dactyl_costs", tuple(float(c) for c in self.dactyl_costs))
        object.__setattr__(self, "spondee_costs", tuple(float(c) for c in self.spondee_costs))
        object.__setattr__(self, "correction_penalty", float(self.correction_penalty))
        self.validate()

    def validate(self):
        if len(self.dactyl_costs) != 5 or len(self.spondee_costs) != 5:
            raise WeightConfigError("dactyl_costs and spondee_costs need one value per foot 1-5")
        costs = self.dactyl_costs + self.spondee_costs
        if any(not math.isfinite(c) or c < 0 for c in costs + (self.correction_penalty,)):
            raise WeightConfigError("costs must be finite and non-negative")
        if self.correction_penalty <= max(costs):
            raise WeightConfigError(
                f"correction_penalty ({self.correction_penalty}) must exceed every foot cost ({max(costs)})"
            )

    def scaled(self, factor: float) -> WeightConfig:
        return WeightConfig(
            tuple(c * factor for c in self.dactyl_costs),
            tuple(c * factor for c in self.spondee_costs),
            self.correction_penalty * factor,
            self.strict,
        )


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    inp: ScansionMark
    out: ScansionMark
    weight: float


@dataclass(frozen=True)
class WeightedTransducer:
    states: tuple[str, ...]  # state names, position = state id
    initial: int
    final: frozenset[int]
    edges: tuple[Edge, ...]
    config: WeightConfig
    _arcs: dict = field(default=None, compare=False, repr=False)

    def arcs(self, state: int, symbol: ScansionMark) -> list[Edge]:
        return self._arcs.get((state, symbol), [])

    def dump(self) -> str:
        """Tab-separated edge list: from, to, input, output, weight."""
        lines = [
            f"{self.states[e.src]}\t{self.states[e.dst]}\t{e.inp.value}\t{e.out.value}\t{e.weight:g}"
            for e in self.edges
        ]
        lines += [f"{self.states[q]}" for q in sorted(self.final)]
        return "\n".join(lines) + "\n"


def _emit(edges, src, dst, out, cost, cfg):
    for inp in INPUT_SYMBOLS:
        contradicts = out is not A and inp is not U and inp is not out
        if contradicts and cfg.strict:
            continue
        edges.append(Edge(src, dst, inp, out, cost + (cfg.correction_penalty if contradicts else 0.0)))


def build_transducer(cfg: WeightConfig | None = None) -> WeightedTransducer:
    cfg = cfg or WeightConfig()
    cfg.validate()
    names = ["q0"]

    def new(name):
        names.append(name)
        return len(names) - 1

    edges: list[Edge] = []
    entry = 0
    for foot in range(1, 6):
        long_ = new(f"f{foot}.1")
        short = new(f"f{foot}.2d")
        nxt = new(f"f{foot + 1}.0")
        _emit(edges, entry, long_, L, 0.0, cfg)
        _emit(edges, long_, nxt, L, cfg.spondee_costs[foot - 1], cfg)
        _emit(edges, long_, short, S, cfg.dactyl_costs[foot - 1], cfg)
        _emit(edges, short, nxt, S, 0.0, cfg)
        entry = nxt
    q5 = new("q5")
    q6 = new("q6")
    _emit(edges, entry, q5, L, 0.0, cfg)
    _emit(edges, q5, q6, A, 0.0, cfg)

    arcs = defaultdict(list)
    for e in edges:
        arcs[e.src, e.inp].append(e)
    return WeightedTransducer(
        states=tuple(names),
        initial=0,
        final=frozenset({q6}),
        edges=tuple(edges),
        config=cfg,
        _arcs=dict(arcs),
    )


@dataclass(frozen=True)
class Completion:
    marks: tuple[ScansionMark, ...]
    variant: Variant
    cost: float
    corrections: tuple[int, ...]  # 1-based positions where the input was overridden

    def render(self) -> str:
        return render(self.marks)


def _as_marks(partial) -> tuple[ScansionMark, ...]:
    marks = getattr(partial, "marks", partial)
    if isinstance(marks, str):
        return tuple(ScansionMark(c) for c in marks)
    return tuple(ScansionMark(m) for m in marks)


def accepting_paths(t: WeightedTransducer, partial):
    """Every accepting path for the input as (cost, output marks)."""
    inp = _as_marks(partial)
    if not MIN_SYLLABLES <= len(inp) <= MAX_SYLLABLES:
        return []
    found = []
    stack = [(t.initial, 0, 0.0, ())]
    while stack:
        state, pos, cost, out = stack.pop()
        if pos == len(inp):
            if state in t.final:
                found.append((cost, out))
            continue
        for e in t.arcs(state, inp[pos]):
            stack.append((e.dst, pos + 1, cost + e.weight, out + (e.out,)))
    return found


def _ranked(t: WeightedTransducer, partial) -> list[Completion]:
    inp = _as_marks(partial)
    completions = []
    for cost, out in accepting_paths(t, inp):
        variant = plausibility_check(out)
        corrections = tuple(
            i for i, (o, k) in enumerate(zip(out, inp), start=1) if o is not A and k is not U and o is not k
        )
        completions.append(Completion(out, variant, cost, corrections))
    completions.sort(key=lambda c: c.cost)
    # group near-equal costs (float summation order) and order each group by index
    ranked: list[Completion] = []
    i = 0
    while i < len(completions):
        j = i + 1
        while j < len(completions) and math.isclose(
            completions[j].cost, completions[i].cost, rel_tol=1e-9, abs_tol=0.0
        ):
            j += 1
        ranked.extend(sorted(completions[i:j], key=lambda c: c.variant.index))
        i = j
    return ranked


def complete_scansion(t: WeightedTransducer, partial) -> Completion | None:
    """Cheapest full scansion for a partial annotation, or None if the verse is rejected."""
    ranked = _ranked(t, partial)
    return ranked[0] if ranked else None


def rank_completions(t: WeightedTransducer, partial, k: int) -> list[Completion]:
    if k < 1:
        raise ValueError("k must be at least 1")
    return _ranked(t, partial)[:k]
