"""Exception hierarchy.

Input problems derive from :class:`DataError` so the CLI can map them to a
single exit code.
"""

from __future__ import annotations

from fractions import Fraction


class HarmfulRUMError(Exception):
    """Base class for every error raised by this package."""


class DataError(HarmfulRUMError, ValueError):
    """The supplied dataset, order or weight vector is malformed."""


class MissingMenu(DataError):
    def __init__(self, menu: str):
        self.menu = menu
        super().__init__(f"menu {{{menu}}} is missing from the dataset")


class RowSumViolation(DataError):
    def __init__(self, menu: str, total: Fraction):
        self.menu = menu
        self.total = total
        self.deficit = 1 - total
        super().__init__(
            f"probabilities on menu {{{menu}}} sum to {total} "
            f"(deficit {self.deficit})"
        )


class ForeignItem(DataError):
    def __init__(self, item: str, menu: str):
        self.item = item
        self.menu = menu
        super().__init__(f"item {item!r} does not belong to menu {{{menu}}}")


class NegativeProbability(DataError):
    def __init__(self, item: str, menu: str, value: Fraction):
        self.item = item
        self.menu = menu
        self.value = value
        super().__init__(f"negative probability {value} for {item!r} on {{{menu}}}")


class NotHarmful(HarmfulRUMError):
    """No linear order composes the dataset."""


class SizeGuardExceeded(HarmfulRUMError):
    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(
            f"ground set has {n} items, above the size guard of {max_n}; "
            "raise max_n to proceed"
        )


class IdentificationMismatch(HarmfulRUMError, AssertionError):
    """The theorem-based identification tag disagrees with the brute-force count."""
