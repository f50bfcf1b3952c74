"""Recovering justifications and classifying how uniquely they are identified."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .data import StochasticChoice, parse_probability, support_set
from .detection import composing_orders
from .exceptions import IdentificationMismatch
from .forward import HarmfulWeights, as_lottery, simulate
from .orders import LinearOrder, star_order

__all__ = [
    "Justification",
    "IdentificationClass",
    "weights_from_data",
    "all_justifications",
    "classify",
    "theorem_class",
]


@dataclass(frozen=True)
class Justification:
    order: LinearOrder
    weights: HarmfulWeights

    def lottery(self):
        return as_lottery(self.order, self.weights)

    def max_index(self) -> int:
        return self.weights.max_index()


@dataclass(frozen=True)
class IdentificationClass:
    """``kind`` is one of ``Unique``, ``TwoStarPaired``, ``Degenerate``, ``NotHarmful``.

    ``rank`` is set for ``TwoStarPaired`` (the rank of the second supported
    item) and ``count`` carries the number of justifications. Tolerance mode
    never claims uniqueness and reports ``Candidates`` instead.
    """

    kind: Literal["Unique", "TwoStarPaired", "Degenerate", "NotHarmful", "Candidates"]
    count: int
    rank: int | None = None
    pair: tuple[LinearOrder, LinearOrder] | None = None

    def __str__(self) -> str:
        if self.kind == "TwoStarPaired":
            return f"TwoStarPaired(j={self.rank})"
        if self.kind == "Degenerate":
            return f"Degenerate(count={self.count})"
        return self.kind


def weights_from_data(rho: StochasticChoice, order: LinearOrder) -> HarmfulWeights:
    """Weight of distortion ``i`` is the grand-menu probability of rank ``i + 1``.

    In tolerance mode the grand row may not sum to exactly one; it is then
    renormalised so the result is still a distribution.
    """
    full = rho.ground.full_mask
    w = [rho.p(i, full) for i in order.ranking]
    total = sum(w, Fraction(0))
    if total != 1:
        w = [x / total for x in w]
    return HarmfulWeights(tuple(w))


def all_justifications(rho: StochasticChoice, tolerance: Fraction | str | int = 0,
                       verify: bool = True) -> list[Justification]:
    """Every ``(order, weights)`` pair reproducing ``rho``.

    In exact mode each pair is re-simulated and compared with ``rho``.
    """
    tol = parse_probability(tolerance)
    out = []
    for order in composing_orders(rho, tol):
        j = Justification(order, weights_from_data(rho, order))
        if verify and not tol and simulate(j.order, j.weights) != rho:
            raise IdentificationMismatch(
                f"order {order} composes the data but its weights do not reproduce it"
            )
        out.append(j)
    return out


def theorem_class(rho: StochasticChoice, order: LinearOrder | None,
                  tolerance: Fraction | str | int = 0) -> tuple[str, int | None]:
    """Identification kind read off the support size, given one composing order."""
    if order is None:
        return "NotHarmful", None
    support = support_set(rho, tolerance)
    if len(support) >= 3:
        return "Unique", None
    if len(support) == 1:
        return "Degenerate", None
    worst = order.item(order.n)
    if worst not in support:
        return "Unique", None
    (other,) = support - {worst}
    return "TwoStarPaired", order.rank(other)


def classify(rho: StochasticChoice, tolerance: Fraction | str | int = 0,
             justifications: list[Justification] | None = None) -> IdentificationClass:
    """Classify identification and cross-check against the justification count.

    Raises :class:`IdentificationMismatch` when the support-size rule and the
    enumerated justifications disagree.
    """
    if justifications is None:
        justifications = all_justifications(rho, tolerance)
    count = len(justifications)
    if parse_probability(tolerance) and count:
        return IdentificationClass("Candidates", count)
    first = justifications[0].order if justifications else None
    kind, rank = theorem_class(rho, first, tolerance)

    pair = None
    if kind == "TwoStarPaired":
        pair = (first, star_order(first, rank))
        orders = {j.order for j in justifications}
        if orders != set(pair):
            raise IdentificationMismatch(
                f"expected justifications {{{pair[0]}}} and {{{pair[1]}}}, "
                f"found {sorted(str(o) for o in orders)}"
            )
    expected = {"NotHarmful": count == 0, "Unique": count == 1,
                "TwoStarPaired": count == 2, "Degenerate": count >= rho.n}
    if not expected[kind]:
        raise IdentificationMismatch(
            f"identification rule says {kind} but {count} justifications were found"
        )
    return IdentificationClass(kind, count, rank, pair)
