"""Degree of self-punishment: the least possible top distortion index."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .data import StochasticChoice, parse_probability, support_set
from .detection import composing_orders
from .exceptions import NotHarmful
from .identification import weights_from_data
from .orders import LinearOrder

__all__ = [
    "DegreeReport",
    "has_jth_ordered_composition",
    "degree_of_self_punishment",
    "degree_by_definition",
]


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    witness_order: LinearOrder
    method_agreement: bool


def _last_positive_rank(rho: StochasticChoice, order: LinearOrder, tol: Fraction) -> int:
    full = rho.ground.full_mask
    return max(r for r, i in enumerate(order.ranking, start=1) if rho.p(i, full) > tol)


def has_jth_ordered_composition(rho: StochasticChoice, j: int,
                                tolerance: Fraction | str | int = 0,
                                orders: list[LinearOrder] | None = None) -> LinearOrder | None:
    """A composing order whose last positively chosen rank (from ``X``) is ``j``."""
    tol = parse_probability(tolerance)
    if orders is None:
        orders = composing_orders(rho, tol)
    for order in orders:
        if _last_positive_rank(rho, order, tol) == j:
            return order
    return None


def degree_by_definition(rho: StochasticChoice, orders: list[LinearOrder] | None = None) -> int:
    """Minimum over all justifications of their largest positively weighted index."""
    if orders is None:
        orders = composing_orders(rho)
    if not orders:
        raise NotHarmful("no linear order composes the dataset")
    return min(weights_from_data(rho, o).max_index() for o in orders)


def degree_of_self_punishment(rho: StochasticChoice,
                              tolerance: Fraction | str | int = 0,
                              check_all: bool = True) -> DegreeReport:
    """Degree of self-punishment with a cross-check.

    With a single item chosen from ``X`` the degree is 0. Otherwise it is
    ``j - 1`` for the unique ``j`` admitting a ``j``-th ordered composition;
    ``method_agreement`` records whether that matches the largest positively
    weighted index of the justifications (all of them when ``check_all``).
    """
    tol = parse_probability(tolerance)
    orders = composing_orders(rho, tol)
    if not orders:
        raise NotHarmful("no linear order composes the dataset")
    support = support_set(rho, tol)

    if len(support) == 1:
        (top,) = support
        witness = next((o for o in orders if o.item(1) == top), orders[0])
        agree = degree_by_definition(rho, orders) == 0 if not tol else True
        return DegreeReport(0, witness, agree)

    found = [
        (j, w) for j in range(1, rho.n + 1)
        if (w := has_jth_ordered_composition(rho, j, tol, orders)) is not None
    ]
    j, witness = found[0]
    degree = j - 1
    checked = orders if check_all else [witness]
    if tol:
        by_index = {_last_positive_rank(rho, o, tol) - 1 for o in checked}
    else:
        by_index = {weights_from_data(rho, o).max_index() for o in checked}
    agree = len(found) == 1 and by_index == {degree}
    if check_all and not tol:
        agree = agree and degree_by_definition(rho, orders) == degree
    return DegreeReport(degree, witness, agree)
