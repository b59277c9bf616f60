import math
import random

import pytest

from hexscan.fst import WeightConfig, WeightConfigError, accepting_paths, build_transducer, complete_scansion, rank_completions
from hexscan.meter import parse_marks

from oracles import brute_force_completion


@pytest.fixture(scope="module")
def t():
    return build_transducer()


class TestWeightConfig:
    def test_penalty_must_dominate(self):
        with pytest.raises(WeightConfigError):
            WeightConfig(correction_penalty=0)

    def test_negative_cost(self):
        with pytest.raises(WeightConfigError):
            WeightConfig(dactyl_costs=(-1, 0, 0, 0, 0))

    def test_arity(self):
        with pytest.raises(WeightConfigError):
            WeightConfig(spondee_costs=(0.1, 0.2))


class TestTopology:
    def test_accepts_lengths_12_to_17(self, t):
        for n in range(8, 22):
            assert bool(accepting_paths(t, "?" * n)) is (12 <= n <= 17)

    def test_path_counts(self, t):
        counts = [len(accepting_paths(t, "?" * n)) for n in range(12, 18)]
        assert counts == [1, 5, 10, 10, 5, 1]

    def test_equal_weights_tie(self):
        flat = build_transducer(WeightConfig((0.5,) * 5, (0.5,) * 5, 5.0))
        costs = {c for c, _ in accepting_paths(flat, "?" * 14)}
        assert len(costs) == 1

    def test_dump(self, t):
        lines = t.dump().splitlines()
        assert lines[0].split("\t")[0] == "q0"
        assert lines[-1] == "q6"
        assert len(t.states) == 18


class TestCompletion:
    def test_forced_lengths(self, t):
        assert complete_scansion(t, "?" * 12).render() == "-----------X"
        assert complete_scansion(t, "?" * 17).render() == "-**-**-**-**-**-X"

    def test_fixed_longs_force_second_foot(self, t):
        partial = "???--?????????"
        got = complete_scansion(t, partial)
        assert 2 in got.variant.spondee_feet
        assert got.variant.index == brute_force_completion(partial, t.config)[1]

    def test_rejection(self, t):
        assert complete_scansion(t, "?" * 11) is None

    def test_strict_never_corrects(self):
        strict = build_transducer(WeightConfig(strict=True))
        assert complete_scansion(strict, "--" + "?" * 15) is None
        loose = complete_scansion(build_transducer(), "--" + "?" * 15)
        assert loose.variant.index == "00" and loose.corrections == (2,)

    def test_rank(self, t):
        assert len(rank_completions(t, "?" * 12, 3)) == 1
        ranked = rank_completions(t, "?" * 16, 10)
        assert sorted(c.variant.index for c in ranked) == ["10", "11", "12", "13", "14"]
        assert all(a.cost <= b.cost for a, b in zip(ranked, ranked[1:]))
        partial = parse_marks("??-???????????")
        assert rank_completions(t, partial, 1)[0] == complete_scansion(t, partial)

    def test_rank_k(self, t):
        with pytest.raises(ValueError):
            rank_completions(t, "?" * 12, 0)


def test_matches_brute_force_on_random_weights():
    rng = random.Random(7)
    for _ in range(100):
        d = tuple(round(rng.uniform(0, 1), 2) for _ in range(5))
        s = tuple(round(rng.uniform(0, 1), 2) for _ in range(5))
        cfg = WeightConfig(d, s, round(rng.uniform(1.01, 4), 2), strict=rng.random() < 0.3)
        t = build_transducer(cfg)
        partial = "".join(rng.choice("-*??") for _ in range(rng.randint(12, 17)))
        got = complete_scansion(t, partial)
        want = brute_force_completion(partial, cfg)
        if want is None:
            assert got is None
        else:
            assert got.variant.index == want[1]
            assert math.isclose(got.cost, float(want[0]), rel_tol=1e-9)
