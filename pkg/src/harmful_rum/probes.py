"""Where a dataset sits among other random utility classes.

* :func:`is_rum` decides exact RUM rationalizability by linear feasibility
  over all ``n!`` orders.
* :func:`correlation_bound` evaluates the correlation-bounds index of an
  order; a dataset is an irrational RUM iff every order scores at most 1.
* :func:`single_peaked_support` checks that every supported distortion of a
  justification is single peaked with respect to the preference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _simplex
from .data import StochasticChoice
from .exceptions import DataError, IdentificationMismatch, SizeGuardExceeded
from .forward import GeneralLottery, simulate_rum
from .identification import Justification
from .orders import LinearOrder, _bits, enumerate_orders, harmful_distortion, is_single_peaked

__all__ = [
    "RumFeasibility",
    "CorrelationIndex",
    "is_rum",
    "correlation_bound",
    "correlation_index",
    "single_peaked_support",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 5


@dataclass(frozen=True)
class RumFeasibility:
    feasible: bool
    witness: GeneralLottery | None = None


@dataclass(frozen=True)
class CorrelationIndex:
    values: dict[LinearOrder, Fraction]

    @property
    def maximum(self) -> Fraction:
        return max(self.values.values())

    @property
    def argmax(self) -> LinearOrder:
        return max(self.values, key=lambda o: (self.values[o], [-i for i in o.ranking]))


def is_rum(rho: StochasticChoice, max_n: int = DEFAULT_MAX_N) -> RumFeasibility:
    """Exact test for a lottery over linear orders reproducing ``rho``.

    One nonnegative variable per order, the simplex equation, and one
    equation per menu of size two or more and member of that menu.
    """
    if rho.n > max_n:
        raise SizeGuardExceeded(rho.n, max_n)
    orders = list(enumerate_orders(rho.ground))
    A: list[list[Fraction]] = [[Fraction(1)] * len(orders)]
    b: list[Fraction] = [Fraction(1)]
    for mask in rho.masks():
        if mask.bit_count() < 2:
            continue
        winners = [o.best_index(mask) for o in orders]
        for x in _bits(mask):
            A.append([Fraction(int(w == x)) for w in winners])
            b.append(rho.p(x, mask))
    x = _simplex.feasible_point(A, b)
    if x is None:
        return RumFeasibility(False)
    witness = GeneralLottery((o, p) for o, p in zip(orders, x) if p)
    if simulate_rum(witness) != rho:
        raise IdentificationMismatch("RUM witness does not reproduce the dataset")
    return RumFeasibility(True, witness)


def correlation_bound(rho: StochasticChoice, order: LinearOrder) -> Fraction:
    """Average probability that the order's best item is chosen.

    Taken over every menu of size two or more except the pair formed by the
    order's best and worst items, and divided by one less than the number of
    those menus.
    """
    if rho.n < 3:
        raise DataError("the correlation bound needs at least three items")
    excluded = 1 << order.ranking[0] | 1 << order.ranking[-1]
    menus = [m for m in rho.masks() if m.bit_count() >= 2 and m != excluded]
    total = sum((rho.p(order.best_index(m), m) for m in menus), Fraction(0))
    return total / (len(menus) - 1)


def correlation_index(rho: StochasticChoice) -> CorrelationIndex:
    return CorrelationIndex({o: correlation_bound(rho, o) for o in enumerate_orders(rho.ground)})


def single_peaked_support(justification: Justification) -> bool:
    order, w = justification.order, justification.weights
    return all(
        is_single_peaked(harmful_distortion(order, i), order)
        for i in range(order.n) if w[i] > 0
    )
