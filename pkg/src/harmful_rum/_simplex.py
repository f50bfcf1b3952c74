"""Exact linear feasibility over the rationals.

Phase I of the tableau simplex method on ``A x = b, x >= 0`` with one
artificial variable per row. Bland's rule guarantees termination, and
Fraction arithmetic makes the zero test on the optimum exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)


def feasible_point(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """A nonnegative solution of ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    nv = len(A[0]) if m else 0
    width = nv + m
    rows: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]] + [_ZERO] * m + [Fraction(sign * b[i])]
        row[nv + i] = Fraction(1)
        rows.append(row)
    basis = [nv + i for i in range(m)]

    # reduced costs of the phase-one objective (sum of artificials)
    cost = [_ZERO] * (width + 1)
    for row in rows:
        for j in range(nv):
            if row[j]:
                cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded direction; cannot happen in phase one
            break
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [_ZERO] * nv
    for i, j in enumerate(basis):
        if j < nv:
            x[j] = rows[i][width]
    return x


def _pivot(rows: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    inv = 1 / prow[c]
    nz = [k for k, v in enumerate(prow) if v]
    for k in nz:
        prow[k] *= inv
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[c]
        if f:
            for k in nz:
                row[k] -= f * prow[k]
    f = cost[c]
    if f:
        for k in nz:
            cost[k] -= f * prow[k]
