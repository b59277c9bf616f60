"""Independent reference implementations used by the tests."""

from fractions import Fraction

from hexscan.meter import FootPattern, all_variants


def exact(x):
    # weights are written as short decimals; compare them as the decimals they denote
    return Fraction(repr(float(x)))


def brute_force_completion(marks, cfg):
    """Argmin over the 32 schemes: exact decimal cost, ties to the smaller index."""
    marks = "".join(getattr(m, "value", m) for m in marks)
    best = None
    for v in all_variants():
        if v.syllable_count != len(marks):
            continue
        cost = Fraction(0)
        for f, pattern in enumerate(v.feet[:5]):
            cost += exact(cfg.spondee_costs[f] if pattern is FootPattern.SPONDEE else cfg.dactyl_costs[f])
        out = v.render()
        wrong = sum(1 for o, k in zip(out, marks) if o != "X" and k != "?" and o != k)
        if wrong and cfg.strict:
            continue
        cost += wrong * exact(cfg.correction_penalty)
        key = (cost, v.index)
        if best is None or key < best:
            best = key
    return best  # (cost, index) or None


def direct_prf(tp, fp, fn):
    p = Fraction(tp, tp + fp) if tp + fp else None
    r = Fraction(tp, tp + fn) if tp + fn else None
    f = 2 * p * r / (p + r) if p is not None and r is not None and p + r else None
    return p, r, f
