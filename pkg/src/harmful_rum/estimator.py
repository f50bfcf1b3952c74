"""Estimator-style front end to detection, identification and degree."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .data import StochasticChoice, parse_probability, validate
from .degree import degree_of_self_punishment
from .exceptions import DataError, NotHarmful
from .forward import choice_prob_closed
from .identification import all_justifications, classify


def check_choice_data(X: Any, tolerance: Fraction | str | int = 0) -> StochasticChoice:
    """Coerce ``X`` to a validated :class:`StochasticChoice`.

    Accepts an existing dataset or the decoded JSON form
    ``{"items": [...], "menus": {...}}``.
    """
    if isinstance(X, StochasticChoice):
        return X
    if isinstance(X, Mapping):
        return validate(X, tolerance)
    raise DataError(f"cannot interpret {type(X).__name__} as a stochastic choice dataset")


class HarmfulRUM(BaseEstimator):
    """Fit a preference and distortion weights to a stochastic choice dataset.

    Parameters
    ----------
    tolerance : str or Fraction, default "0"
        Slack allowed on every equality. Nonzero values switch to tolerance
        mode, where identification is reported as candidates only.

    Attributes
    ----------
    n_items_ : int
    is_harmful_ : bool
    composing_orders_ : list of LinearOrder
    justifications_ : list of Justification
    preference_ : LinearOrder or None
        First composing order (the unique one when identification is unique).
    weights_ : HarmfulWeights or None
    identification_ : IdentificationClass
    degree_ : DegreeReport or None
    """

    def __init__(self, tolerance="0"):
        self.tolerance = tolerance

    def fit(self, X, y=None):
        tol = parse_probability(self.tolerance)
        if tol < 0:
            raise DataError("tolerance must be nonnegative")
        rho = check_choice_data(X, tol)
        self.data_ = rho
        self.n_items_ = rho.n
        self.justifications_ = all_justifications(rho, tol)
        self.composing_orders_ = [j.order for j in self.justifications_]
        self.is_harmful_ = bool(self.justifications_)
        self.identification_ = classify(rho, tol, self.justifications_)
        if self.is_harmful_:
            self.preference_ = self.justifications_[0].order
            self.weights_ = self.justifications_[0].weights
            self.degree_ = degree_of_self_punishment(rho, tol)
        else:
            self.preference_ = None
            self.weights_ = None
            self.degree_ = None
        return self

    def _check_harmful(self):
        check_is_fitted(self, "is_harmful_")
        if not self.is_harmful_:
            raise NotHarmful("the fitted dataset is not a harmful RUM")

    def predict_proba(self, menus: Iterable[Iterable[str] | str]) -> list[dict[str, Fraction]]:
        """Choice probabilities on each menu under the fitted justification."""
        self._check_harmful()
        ground = self.preference_.ground
        out = []
        for menu in menus:
            mask = ground.mask(menu)
            out.append({
                ground.items[i]: choice_prob_closed(self.preference_, self.weights_, mask, i)
                for i in range(ground.n) if mask >> i & 1
            })
        return out

    def predict(self, menus: Iterable[Iterable[str] | str]) -> list[str]:
        """Modal choice on each menu; ties go to the preferred item."""
        self._check_harmful()
        pref = self.preference_
        return [
            max(row, key=lambda x: (row[x], -pref.rank(x)))
            for row in self.predict_proba(menus)
        ]

    def score(self, X, y=None) -> float:
        """Negated largest absolute gap between ``X`` and the fitted model."""
        self._check_harmful()
        rho = check_choice_data(X, parse_probability(self.tolerance))
        if rho.ground != self.preference_.ground:
            raise DataError("dataset ground set differs from the fitted one")
        gap = Fraction(0)
        for mask in rho.masks():
            for i, p in rho._table[mask].items():
                q = choice_prob_closed(self.preference_, self.weights_, mask, i)
                gap = max(gap, abs(p - q))
        return -float(gap)
