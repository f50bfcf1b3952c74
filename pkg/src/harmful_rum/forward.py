"""Choice probabilities generated by a preference and weights on its distortions.

Two independent routes compute ``rho(x, A)`` for a pair ``(order, weights)``:
:func:`choice_prob_direct` sums the weights of the distortions that rank ``x``
first in ``A``; :func:`choice_prob_closed` evaluates the closed form in terms
of ranks alone. They must agree everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .data import StochasticChoice, parse_probability
from .exceptions import DataError
from .orders import GroundSet, LinearOrder, _bits, harmful_distortion

__all__ = [
    "HarmfulWeights",
    "GeneralLottery",
    "choice_prob_direct",
    "choice_prob_closed",
    "choice_prob_cases",
    "lemma_case",
    "simulate",
    "simulate_rum",
    "as_lottery",
]


@dataclass(frozen=True)
class HarmfulWeights:
    """Probability of each distortion index ``0..n-1``."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(parse_probability(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if not w:
            raise DataError("weight vector is empty")
        if any(x < 0 for x in w):
            raise DataError(f"negative weight in {[str(x) for x in w]}")
        if sum(w) != 1:
            raise DataError(f"weights sum to {sum(w)}, not 1")

    @classmethod
    def parse(cls, text: str) -> "HarmfulWeights":
        return cls(tuple(x.strip() for x in text.split(",")))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.weights)

    @cached_property
    def cumulative(self) -> tuple[Fraction, ...]:
        """``cumulative[k]`` is the total weight of indices ``0..k-1``."""
        out = [Fraction(0)]
        for x in self.weights:
            out.append(out[-1] + x)
        return tuple(out)

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.weights) if x > 0]

    def max_index(self) -> int:
        """Largest distortion index with positive weight."""
        return max(self.support())


def _weights(w: HarmfulWeights | Sequence, order: LinearOrder) -> HarmfulWeights:
    if not isinstance(w, HarmfulWeights):
        w = HarmfulWeights(tuple(w))
    if len(w) != order.n:
        raise DataError(f"expected {order.n} weights, got {len(w)}")
    return w


class GeneralLottery(dict):
    """A finite probability distribution over linear orders.

    Zero-weight entries are dropped so that equal distributions compare equal.
    """

    def __init__(self, weights: Mapping[LinearOrder, object] | Iterable = ()):
        super().__init__()
        items = weights.items() if isinstance(weights, Mapping) else weights
        ground = None
        for order, p in items:
            p = parse_probability(p)
            if p < 0:
                raise DataError(f"negative weight {p} on order {order}")
            if ground is None:
                ground = order.ground
            elif order.ground != ground:
                raise DataError("lottery mixes orders over different ground sets")
            if p:
                self[order] = self.get(order, Fraction(0)) + p
        if sum(self.values()) != 1:
            raise DataError(f"lottery weights sum to {sum(self.values())}, not 1")

    @property
    def ground(self) -> GroundSet:
        return next(iter(self)).ground


def _menu_and_item(order: LinearOrder, menu, x) -> tuple[int, int]:
    g = order.ground
    mask = menu if isinstance(menu, int) else g.mask(menu)
    xi = x if isinstance(x, int) else g.index(x)
    if not mask >> xi & 1:
        raise DataError(f"item {g.items[xi]!r} is not in menu {{{g.key(mask)}}}")
    return mask, xi


def choice_prob_direct(order: LinearOrder, w, menu, x) -> Fraction:
    """Total weight of the distortions under which ``x`` is best in ``menu``."""
    w = _weights(w, order)
    mask, xi = _menu_and_item(order, menu, x)
    r = order.ranking
    total = Fraction(0)
    for i, wi in enumerate(w.weights):
        if not wi:
            continue
        distorted = r[i:] + r[:i][::-1]
        if next(y for y in distorted if mask >> y & 1) == xi:
            total += wi
    return total


def _ranks(order: LinearOrder, mask: int, xi: int) -> tuple[int, int | None, bool]:
    """(j, g, lower_empty): rank of x, rank of the worst better menu item, and
    whether no menu item is worse than x."""
    pos = order.positions()
    j = pos[xi] + 1
    g = 0
    lower_empty = True
    for i in _bits(mask):
        r = pos[i] + 1
        if r < j:
            g = max(g, r)
        elif r > j:
            lower_empty = False
    return j, g or None, lower_empty


def choice_prob_closed(order: LinearOrder, w, menu, x) -> Fraction:
    """Rank-based closed form of :func:`choice_prob_direct`.

    With ``j`` the rank of ``x`` and ``g`` the rank of the worst menu item
    above it, ``x`` wins under distortions ``g..j-1`` (all of ``0..j-1`` when
    nothing in the menu beats it) and, if nothing in the menu is worse, under
    every distortion ``j..n-1``.
    """
    w = _weights(w, order)
    mask, xi = _menu_and_item(order, menu, x)
    j, g, lower_empty = _ranks(order, mask, xi)
    cum = w.cumulative
    value = cum[j]
    if g is not None:
        value -= cum[g]
    if lower_empty:
        value += cum[-1] - cum[j]
    return value


def lemma_case(order: LinearOrder, menu, x) -> int:
    """Which of the four upper/lower emptiness cases ``(menu, x)`` falls in.

    1: items above and none below; 2: items above and below;
    3: neither; 4: none above, items below.
    """
    mask, xi = _menu_and_item(order, menu, x)
    _, g, lower_empty = _ranks(order, mask, xi)
    if g is not None:
        return 1 if lower_empty else 2
    return 3 if lower_empty else 4


def choice_prob_cases(order: LinearOrder, w, menu, x) -> Fraction:
    """The closed form split by :func:`lemma_case`."""
    w = _weights(w, order)
    mask, xi = _menu_and_item(order, menu, x)
    j, g, _ = _ranks(order, mask, xi)
    case = lemma_case(order, mask, xi)
    before = sum(w.weights[:j], Fraction(0))
    if case == 1:
        return before - sum(w.weights[:g], Fraction(0)) + sum(w.weights[j:], Fraction(0))
    if case == 2:
        return before - sum(w.weights[:g], Fraction(0))
    if case == 3:
        return Fraction(1)
    return before


def simulate_rum(lottery: GeneralLottery | Mapping[LinearOrder, object]) -> StochasticChoice:
    """Choice probabilities of a lottery over orders, on every menu."""
    if not isinstance(lottery, GeneralLottery):
        lottery = GeneralLottery(lottery)
    ground = lottery.ground
    table: dict[int, dict[int, Fraction]] = {}
    for mask in range(1, 1 << ground.n):
        row = {i: Fraction(0) for i in _bits(mask)}
        for order, p in lottery.items():
            row[order.best_index(mask)] += p
        table[mask] = row
    return StochasticChoice(ground, table)


def as_lottery(order: LinearOrder, w) -> GeneralLottery:
    """Weights on distortions viewed as a lottery over linear orders."""
    w = _weights(w, order)
    return GeneralLottery(
        (harmful_distortion(order, i), w[i]) for i in range(order.n)
    )


def simulate(order: LinearOrder, w) -> StochasticChoice:
    """The dataset justified by ``(order, w)``."""
    return simulate_rum(as_lottery(order, w))
