"""Harmful-RUM detection through ordered compositions.

An order composes a dataset when every ``rho(x, A)`` can be rebuilt from the
grand-menu row alone by the rank formula in :func:`composes`. A dataset is a
harmful RUM exactly when some order composes it.

Every equality attached to rank ``j`` depends only on the items at ranks
``1..j``, so the search extends prefixes depth-first and abandons a prefix as
soon as the newly placed item fails one of its equalities. All qualifying
candidates are branched on; the result is every composing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .data import StochasticChoice, close, parse_probability
from .orders import LinearOrder, _bits, enumerate_orders

__all__ = [
    "Check",
    "CompositionWitness",
    "composes",
    "composition_witness",
    "composing_orders",
    "iter_composing_orders",
    "brute_force_composing_orders",
    "is_harmful",
]


@dataclass(frozen=True)
class Check:
    menu: str
    item: str
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass
class CompositionWitness:
    order: LinearOrder
    composes: bool
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _rank_checks(rho: StochasticChoice, prefix: list[int], grand: list[Fraction],
                 total: Fraction, tol: Fraction, log: list | None = None) -> bool:
    """Check every equality for the last item of ``prefix``.

    ``grand`` holds the running sums of grand-menu probabilities along the
    prefix, so ``grand[k]`` sums ranks ``1..k``.
    """
    j = len(prefix)
    x = prefix[-1]
    placed_mask = 0
    rank_of = {}
    for r, i in enumerate(prefix, start=1):
        placed_mask |= 1 << i
        rank_of[i] = r
    full = rho.ground.full_mask
    others = full & ~(1 << x)
    below_total = total - grand[j]
    # enumerate subsets of the other items; each menu is {x} | sub
    sub = others
    ok = True
    while True:
        mask = sub | 1 << x
        g = 0
        for i in _bits(sub & placed_mask):
            if rank_of[i] > g and rank_of[i] < j:
                g = rank_of[i]
        rhs = grand[j]
        if g:
            rhs -= grand[g]
        if not mask & ~placed_mask:
            rhs += below_total
        lhs = rho.p(x, mask)
        good = close(lhs, rhs, tol)
        if log is not None:
            log.append(Check(rho.ground.key(mask), rho.ground.items[x], lhs, rhs, good))
        elif not good:
            return False
        ok = ok and good
        if not sub:
            break
        sub = (sub - 1) & others
    return ok


def composition_witness(rho: StochasticChoice, order: LinearOrder,
                        tolerance: Fraction | str | int = 0) -> CompositionWitness:
    """Evaluate every composition equality for ``order`` and keep the log."""
    tol = parse_probability(tolerance)
    full = rho.ground.full_mask
    total = sum((rho.p(i, full) for i in range(rho.n)), Fraction(0))
    grand = [Fraction(0)]
    log: list[Check] = []
    ok = True
    prefix: list[int] = []
    for i in order.ranking:
        prefix.append(i)
        grand.append(grand[-1] + rho.p(i, full))
        ok = _rank_checks(rho, prefix, grand, total, tol, log) and ok
    return CompositionWitness(order, ok, log)


def composes(rho: StochasticChoice, order: LinearOrder,
             tolerance: Fraction | str | int = 0) -> bool:
    r"""Whether ``order`` composes ``rho``.

    For the item ``x_j`` at rank ``j`` and every menu ``A`` containing it::

        rho(x_j, A) = S(j) - [A has items above x_j] * S(g)
                      + [A has no items below x_j] * (S(n) - S(j))

    where ``S(k)`` sums ``rho(x_1, X) .. rho(x_k, X)`` and ``g`` is the rank of
    the worst item of ``A`` above ``x_j``.
    """
    if order.ground != rho.ground:
        return False
    tol = parse_probability(tolerance)
    full = rho.ground.full_mask
    total = sum((rho.p(i, full) for i in range(rho.n)), Fraction(0))
    grand = [Fraction(0)]
    prefix: list[int] = []
    for i in order.ranking:
        prefix.append(i)
        grand.append(grand[-1] + rho.p(i, full))
        if not _rank_checks(rho, prefix, grand, total, tol):
            return False
    return True


def iter_composing_orders(rho: StochasticChoice,
                          tolerance: Fraction | str | int = 0) -> Iterator[LinearOrder]:
    """Yield composing orders in lexicographic order of item indices."""
    n = rho.n
    if n < 3:
        yield from (o for o in enumerate_orders(rho.ground) if composes(rho, o, tolerance))
        return
    tol = parse_probability(tolerance)
    full = rho.ground.full_mask
    gp = [rho.p(i, full) for i in range(n)]
    total = sum(gp, Fraction(0))
    prefix: list[int] = []
    grand = [Fraction(0)]

    def extend() -> Iterator[LinearOrder]:
        if len(prefix) == n:
            yield LinearOrder(rho.ground, tuple(prefix))
            return
        used = set(prefix)
        for y in range(n):
            if y in used:
                continue
            prefix.append(y)
            grand.append(grand[-1] + gp[y])
            if _rank_checks(rho, prefix, grand, total, tol):
                yield from extend()
            prefix.pop()
            grand.pop()

    yield from extend()


def composing_orders(rho: StochasticChoice,
                     tolerance: Fraction | str | int = 0) -> list[LinearOrder]:
    """Every order composing ``rho``; empty when ``rho`` is not a harmful RUM."""
    return list(iter_composing_orders(rho, tolerance))


def brute_force_composing_orders(rho: StochasticChoice,
                                 tolerance: Fraction | str | int = 0) -> list[LinearOrder]:
    """Reference enumeration: test :func:`composes` on all ``n!`` orders."""
    return [o for o in enumerate_orders(rho.ground) if composes(rho, o, tolerance)]


def is_harmful(rho: StochasticChoice, tolerance: Fraction | str | int = 0) -> bool:
    return next(iter_composing_orders(rho, tolerance), None) is not None
