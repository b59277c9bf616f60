"""scikit-learn style front end.

``HexameterScanner`` wraps the scanning pipeline as an estimator: ``fit``
validates the hyperparameters and builds the transducer, ``predict`` returns
variant indices ("" for verses without a scansion) and ``transform`` returns
mark strings. Nothing is learned from data; ``fit`` accepts ``y`` only for
API compatibility.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .config import DEFAULT_CONFIG, ScanConfig
from .evaluate import Annotation, compute_prf, confusion
from .fst import WeightConfig
from .greek_text import DIPHTHONGS, UnprocessableVerseError, normalize
from .local_search import DEFAULT_SEARCH_ORDER
from .pipeline import MODES, VerseRecord, get_transducer, scan_items
from .prosody import RuleConfig
from .recovery import DEFAULT_SYNIZESIS_FIRST, DEFAULT_SYNIZESIS_PAIRS
from .syllabifier import EmptyVerseError, render_syllables, syllabify


def check_verses(X) -> list[str]:
    """Coerce ``X`` to a flat list of verse strings.

    Accepts a string sequence, a 1-d array or a single-column 2-d array.
    A bare string is rejected since it is almost always a mistake.
    """
    if isinstance(X, str):
        raise TypeError("expected a sequence of verses, got a single string")
    arr = np.asarray(list(X) if not hasattr(X, "shape") else X, dtype=object)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected one column of verses, got shape {arr.shape}")
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence of verses, got {arr.ndim} dimensions")
    bad = [i for i, v in enumerate(arr) if not isinstance(v, str)]
    if bad:
        raise TypeError(f"verse {bad[0]} is {type(arr[bad[0]]).__name__}, not str")
    return [str(v) for v in arr]


class HexameterScanner(BaseEstimator):
    """Scan Greek hexameter verses.

    Parameters mirror the config file keys; ``mode`` selects how much of the
    pipeline runs (``local``, ``global`` or ``complete``) and ``n_jobs`` the
    number of worker processes used by ``scan``.
    """

    def __init__(
        self,
        dactyl_costs=DEFAULT_CONFIG.weights.dactyl_costs,
        spondee_costs=DEFAULT_CONFIG.weights.spondee_costs,
        correction_penalty=DEFAULT_CONFIG.weights.correction_penalty,
        strict=False,
        search_order=DEFAULT_SEARCH_ORDER,
        mode="complete",
        diphthongs=DIPHTHONGS,
        muta_cum_liquida="cancel",
        long_subscript_alpha=False,
        synizesis_pairs=DEFAULT_SYNIZESIS_PAIRS,
        synizesis_first_vowels=DEFAULT_SYNIZESIS_FIRST,
        n_jobs=1,
    ):
        self.dactyl_costs = dactyl_costs
        self.spondee_costs = spondee_costs
        self.correction_penalty = correction_penalty
        self.strict = strict
        self.search_order = search_order
        self.mode = mode
        self.diphthongs = diphthongs
        self.muta_cum_liquida = muta_cum_liquida
        self.long_subscript_alpha = long_subscript_alpha
        self.synizesis_pairs = synizesis_pairs
        self.synizesis_first_vowels = synizesis_first_vowels
        self.n_jobs = n_jobs

    @classmethod
    def from_config(cls, config: ScanConfig, **kwargs) -> HexameterScanner:
        params = dict(
            dactyl_costs=config.weights.dactyl_costs,
            spondee_costs=config.weights.spondee_costs,
            correction_penalty=config.weights.correction_penalty,
            strict=config.weights.strict,
            search_order=config.search_order,
            diphthongs=config.rules.diphthongs,
            muta_cum_liquida=config.rules.muta_cum_liquida,
            long_subscript_alpha=config.rules.long_subscript_alpha,
            synizesis_pairs=config.synizesis_pairs,
            synizesis_first_vowels=config.synizesis_first_vowels,
        )
        params.update(kwargs)
        return cls(**params)

    def _build_config(self) -> ScanConfig:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if int(self.n_jobs) < 1:
            raise ValueError(f"n_jobs must be positive, got {self.n_jobs!r}")
        order = tuple(int(f) for f in self.search_order)
        if sorted(order) != [1, 2, 3, 4, 5]:
            raise ValueError(f"search_order must be a permutation of 1-5, got {self.search_order!r}")
        weights = WeightConfig(
            tuple(self.dactyl_costs), tuple(self.spondee_costs), self.correction_penalty, bool(self.strict)
        )
        rules = RuleConfig(frozenset(self.diphthongs), self.muta_cum_liquida, bool(self.long_subscript_alpha))
        return ScanConfig(
            weights=weights,
            rules=rules,
            search_order=order,
            synizesis_pairs=frozenset(self.synizesis_pairs),
            synizesis_first_vowels=frozenset(self.synizesis_first_vowels),
        )

    def fit(self, X=None, y=None):
        self.config_ = self._build_config()
        self.transducer_ = get_transducer(self.config_.weights)
        if X is not None:
            self.n_features_in_ = 1
        return self

    def scan(self, X) -> list[VerseRecord]:
        check_is_fitted(self, "config_")
        verses = check_verses(X)
        items = [(str(i), v) for i, v in enumerate(verses, start=1)]
        return scan_items(items, self.config_, self.mode, int(self.n_jobs))

    def predict(self, X) -> np.ndarray:
        return np.array([r.variant for r in self.scan(X)], dtype=object)

    def transform(self, X) -> np.ndarray:
        return np.array([r.marks for r in self.scan(X)], dtype=object)

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X, y).predict(X)

    def score(self, X, y) -> float:
        """Verse-level F-measure against reference variant indices ("" = rejected)."""
        y = [str(v) if v is not None else "" for v in y]
        pred = self.predict(X)
        if len(y) != len(pred):
            raise ValueError(f"X has {len(pred)} verses but y has {len(y)} labels")
        p = [Annotation(str(i), "ok" if v else "rejected", v) for i, v in enumerate(pred)]
        g = [Annotation(str(i), "ok" if v else "rejected", v) for i, v in enumerate(y)]
        f = compute_prf(confusion(p, g)).f_measure
        return 0.0 if f is None else f


class Syllabifier(TransformerMixin, BaseEstimator):
    """Verses in, pipe-separated syllables out ("" for unusable input)."""

    def __init__(self, diphthongs=DIPHTHONGS):
        self.diphthongs = diphthongs

    def fit(self, X=None, y=None):
        self.diphthongs_ = frozenset(self.diphthongs)
        return self

    def _one(self, verse: str) -> str:
        try:
            return render_syllables(syllabify(normalize(verse), self.diphthongs_))
        except (UnprocessableVerseError, EmptyVerseError):
            return ""

    def transform(self, X: Iterable[str]) -> np.ndarray:
        check_is_fitted(self, "diphthongs_")
        return np.array([self._one(v) for v in check_verses(X)], dtype=object)
