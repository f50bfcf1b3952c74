"""Linear orders over a finite labelled ground set and their harmful distortions.

An order is stored as a best-to-worst tuple of item indices into its
:class:`GroundSet`. Menus are handled internally as integer bitmasks over
those indices; the public helpers accept labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .exceptions import DataError

__all__ = [
    "GroundSet",
    "LinearOrder",
    "harmful_distortion",
    "harm",
    "star_order",
    "undistort",
    "enumerate_orders",
    "is_single_peaked",
]


@dataclass(frozen=True)
class GroundSet:
    """Ordered tuple of distinct, non-empty item labels."""

    items: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        items = tuple(str(x) for x in self.items)
        object.__setattr__(self, "items", items)
        if not items:
            raise DataError("ground set must contain at least one item")
        for label in items:
            if not label or label != label.strip():
                raise DataError(f"invalid item label {label!r}")
            if "," in label:
                raise DataError(f"item label {label!r} may not contain a comma")
        if len(set(items)) != len(items):
            raise DataError(f"duplicate item labels in {list(items)}")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(items)})

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[str]:
        return iter(self.items)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DataError(f"unknown item {label!r}") from None

    def mask(self, menu: Iterable[str] | str) -> int:
        """Bitmask of a menu given as labels or as a comma-separated string."""
        if isinstance(menu, str):
            menu = [m.strip() for m in menu.split(",")]
        m = 0
        for label in menu:
            m |= 1 << self.index(label)
        if not m:
            raise DataError("a menu must be nonempty")
        return m

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(self.items[i] for i in _bits(mask))

    def key(self, mask: int) -> str:
        """Canonical menu key: labels sorted lexicographically, comma-joined."""
        return ",".join(sorted(self.items[i] for i in _bits(mask)))

    def menus(self, min_size: int = 1) -> list[int]:
        """All menus with at least ``min_size`` items, as bitmasks."""
        return [m for m in range(1, 1 << self.n) if m.bit_count() >= min_size]


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class LinearOrder:
    """A strict ranking of the ground set; ``ranking[0]`` is the best item."""

    ground: GroundSet
    ranking: tuple[int, ...]

    def __post_init__(self):
        ranking = tuple(int(i) for i in self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if sorted(ranking) != list(range(self.ground.n)):
            raise DataError(f"{ranking} is not a permutation of the ground set")

    @classmethod
    def from_labels(cls, labels: Iterable[str] | str, ground: GroundSet | None = None):
        """Build an order from labels, best first.

        Without ``ground`` the labels themselves, in the given order, become
        the ground set.
        """
        if isinstance(labels, str):
            labels = [x.strip() for x in labels.split(",")]
        labels = list(labels)
        if ground is None:
            ground = GroundSet(tuple(labels))
        if len(labels) != ground.n:
            raise DataError(
                f"order {','.join(labels)} does not rank all {ground.n} items"
            )
        return cls(ground, tuple(ground.index(x) for x in labels))

    @property
    def n(self) -> int:
        return len(self.ranking)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.ground.items[i] for i in self.ranking)

    def __str__(self) -> str:
        return ",".join(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def item(self, rank: int) -> str:
        """Label at 1-based ``rank``."""
        if not 1 <= rank <= self.n:
            raise DataError(f"rank {rank} out of bounds 1..{self.n}")
        return self.ground.items[self.ranking[rank - 1]]

    def rank(self, label: str) -> int:
        return self.ranking.index(self.ground.index(label)) + 1

    def upper_set(self, rank: int) -> frozenset[str]:
        """Items strictly better than the item at ``rank``."""
        return frozenset(self.labels[: rank - 1])

    def lower_set(self, rank: int) -> frozenset[str]:
        """Items strictly worse than the item at ``rank``."""
        return frozenset(self.labels[rank:])

    def best(self, menu: Iterable[str] | str | int) -> str:
        mask = menu if isinstance(menu, int) else self.ground.mask(menu)
        return self.ground.items[self.best_index(mask)]

    def best_index(self, mask: int) -> int:
        for i in self.ranking:
            if mask >> i & 1:
                return i
        raise DataError("empty menu")

    def positions(self) -> tuple[int, ...]:
        """``positions()[item_index]`` is the 0-based position of that item."""
        return self._positions

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for p, i in enumerate(self.ranking):
            pos[i] = p
        return tuple(pos)

    def prefers(self, a: str, b: str) -> bool:
        return self.rank(a) < self.rank(b)


def _check_same_ground(a: LinearOrder, b: LinearOrder):
    if a.ground != b.ground:
        raise DataError("orders are defined over different ground sets")


def harmful_distortion(order: LinearOrder, i: int) -> LinearOrder:
    """Move the top ``i`` items of ``order`` to the bottom in reverse order."""
    if not 0 <= i <= order.n - 1:
        raise DataError(f"distortion index {i} out of bounds 0..{order.n - 1}")
    r = order.ranking
    return LinearOrder(order.ground, r[i:] + r[:i][::-1])


def harm(order: LinearOrder) -> list[LinearOrder]:
    """All ``n`` harmful distortions, indexed by distortion index."""
    return [harmful_distortion(order, i) for i in range(order.n)]


def undistort(order: LinearOrder, i: int) -> LinearOrder:
    """The unique order whose ``i``-th harmful distortion is ``order``."""
    if not 0 <= i <= order.n - 1:
        raise DataError(f"distortion index {i} out of bounds 0..{order.n - 1}")
    r = order.ranking
    k = order.n - i
    return LinearOrder(order.ground, r[k:][::-1] + r[:k])


def star_order(order: LinearOrder, j: int) -> LinearOrder:
    """Keep the first ``j - 1`` items and reverse the rest."""
    if not 1 <= j <= order.n:
        raise DataError(f"rank {j} out of bounds 1..{order.n}")
    r = order.ranking
    return LinearOrder(order.ground, r[: j - 1] + r[j - 1 :][::-1])


def enumerate_orders(ground: GroundSet) -> Iterator[LinearOrder]:
    """Every linear order on ``ground``, lexicographic in item indices."""
    for perm in itertools.permutations(range(ground.n)):
        yield LinearOrder(ground, perm)


def is_single_peaked(candidate: LinearOrder, reference: LinearOrder) -> bool:
    """Whether ``candidate`` is single peaked with respect to ``reference``.

    Items on the same side of the candidate's peak (along ``reference``) must
    be ranked by the candidate in order of closeness to the peak.
    """
    _check_same_ground(candidate, reference)
    ref = reference.positions()
    cand = candidate.positions()
    peak = ref[candidate.ranking[0]]
    for x in range(candidate.n):
        for y in range(candidate.n):
            if x == y:
                continue
            # y ref x ref peak, or peak ref x ref y
            between = ref[y] < ref[x] < peak or peak < ref[x] < ref[y]
            if between and not cand[x] < cand[y]:
                return False
    return True
