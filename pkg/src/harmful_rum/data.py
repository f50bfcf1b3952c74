"""Stochastic choice datasets with exact rational probabilities.

A dataset assigns to every nonempty menu a probability distribution over its
members. Probabilities are :class:`fractions.Fraction` throughout; files carry
them as strings (``"0.3"`` or ``"3/10"``) so nothing is lost on parsing.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping

from .exceptions import (
    DataError,
    ForeignItem,
    MissingMenu,
    NegativeProbability,
    RowSumViolation,
)
from .orders import GroundSet, _bits

__all__ = [
    "StochasticChoice",
    "parse_probability",
    "format_probability",
    "validate",
    "support_set",
    "is_regular",
    "load",
    "loads_csv",
    "close",
]


def parse_probability(value: Any) -> Fraction:
    """Exact rational from a decimal string, ``a/b`` string, int or Fraction.

    Floats are read through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DataError(f"not a probability: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DataError(f"not a rational number: {value!r}") from None
    raise DataError(f"not a probability: {value!r}")


def format_probability(value: Fraction, decimals: int | None = None) -> str:
    """``a/b`` rendering, or a fixed-point view when ``decimals`` is given."""
    if decimals is None:
        return str(value)
    scaled = round(value * 10**decimals)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if decimals == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**decimals)
    return f"{sign}{whole}.{frac:0{decimals}d}"


def close(a: Fraction, b: Fraction, tolerance: Fraction = Fraction(0)) -> bool:
    if not tolerance:
        return a == b
    return abs(a - b) <= tolerance


class StochasticChoice:
    """Validated menu-indexed choice probabilities ``rho(x, A)``.

    Build one with :func:`validate` or :meth:`from_table`; instances are
    treated as immutable.
    """

    __slots__ = ("ground", "_table")

    def __init__(self, ground: GroundSet, table: dict[int, dict[int, Fraction]]):
        self.ground = ground
        self._table = table

    @classmethod
    def from_table(
        cls,
        ground: GroundSet | Iterable[str],
        table: Mapping[Any, Mapping[str, Any]],
        tolerance: Fraction | str | int = 0,
    ) -> "StochasticChoice":
        """Validate a ``{menu: {item: probability}}`` mapping.

        Menus may be label iterables or comma-separated strings. Singleton
        menus may be omitted; members of a menu without an entry get 0.
        """
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        tolerance = parse_probability(tolerance)
        rows: dict[int, dict[int, Fraction]] = {}
        for menu, entries in table.items():
            try:
                mask = ground.mask(menu)
            except DataError as exc:
                label = menu if isinstance(menu, str) else ",".join(menu)
                raise DataError(f"menu {{{label}}}: {exc}") from None
            key = ground.key(mask)
            if mask in rows:
                raise DataError(f"menu {{{key}}} appears more than once")
            row = {i: Fraction(0) for i in _bits(mask)}
            for label, value in entries.items():
                if label not in ground or not mask >> ground.index(label) & 1:
                    raise ForeignItem(label, key)
                p = parse_probability(value)
                if p < 0:
                    raise NegativeProbability(label, key, p)
                row[ground.index(label)] = p
            rows[mask] = row

        for mask in range(1, 1 << ground.n):
            if mask not in rows:
                if mask.bit_count() >= 2:
                    raise MissingMenu(ground.key(mask))
                rows[mask] = {next(_bits(mask)): Fraction(1)}
            total = sum(rows[mask].values())
            if not close(total, Fraction(1), tolerance):
                raise RowSumViolation(ground.key(mask), total)
        return cls(ground, dict(sorted(rows.items())))

    @property
    def n(self) -> int:
        return self.ground.n

    def p(self, item: int, mask: int) -> Fraction:
        """Fast access by item index and menu bitmask."""
        return self._table[mask].get(item, Fraction(0))

    def prob(self, item: str, menu: Iterable[str] | str) -> Fraction:
        """``rho(item, menu)``; zero when ``item`` is not in the menu."""
        return self.p(self.ground.index(item), self.ground.mask(menu))

    def grand(self, item: str) -> Fraction:
        """Probability of choosing ``item`` from the whole ground set."""
        return self.p(self.ground.index(item), self.ground.full_mask)

    def row(self, menu: Iterable[str] | str | int) -> dict[str, Fraction]:
        mask = menu if isinstance(menu, int) else self.ground.mask(menu)
        return {self.ground.items[i]: p for i, p in self._table[mask].items()}

    def masks(self) -> list[int]:
        return list(self._table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StochasticChoice):
            return NotImplemented
        return self.ground == other.ground and self._table == other._table

    def __hash__(self):
        return hash(self.to_json())

    def __repr__(self) -> str:
        return f"StochasticChoice(items={list(self.ground.items)}, menus={len(self._table)})"

    def to_dict(self, decimals: int | None = None, singletons: bool = False) -> dict:
        menus = {}
        for mask in sorted(self._table, key=self.ground.key):
            if mask.bit_count() < 2 and not singletons:
                continue
            row = self._table[mask]
            menus[self.ground.key(mask)] = {
                self.ground.items[i]: format_probability(row[i], decimals)
                for i in sorted(row, key=lambda i: self.ground.items[i])
            }
        return {"items": list(self.ground.items), "menus": menus}

    def to_json(self, decimals: int | None = None, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(decimals), indent=indent, sort_keys=True) + "\n"

    def to_csv(self, decimals: int | None = None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["menu", "item", "probability"])
        for key, row in self.to_dict(decimals)["menus"].items():
            for label, p in row.items():
                writer.writerow([key, label, p])
        return buf.getvalue()

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form."""
        return hashlib.sha256(self.to_json(indent=None).encode()).hexdigest()


def validate(raw: Mapping[str, Any], tolerance: Fraction | str | int = 0) -> StochasticChoice:
    """Validate a decoded JSON dataset ``{"items": [...], "menus": {...}}``."""
    if not isinstance(raw, Mapping) or "menus" not in raw:
        raise DataError('dataset must be an object with "items" and "menus"')
    menus = raw["menus"]
    if not isinstance(menus, Mapping):
        raise DataError('"menus" must be an object keyed by menu')
    items = raw.get("items")
    if items is None:
        items = _items_in_order(menus)
    for key, row in menus.items():
        if not isinstance(row, Mapping):
            raise DataError(f"menu {{{key}}} must map items to probabilities")
    return StochasticChoice.from_table(GroundSet(tuple(items)), menus, tolerance)


def _items_in_order(menus: Mapping[str, Any]) -> list[str]:
    seen: dict[str, None] = {}
    for key in menus:
        for label in str(key).split(","):
            seen.setdefault(label.strip(), None)
    return list(seen)


def loads_csv(text: str, tolerance: Fraction | str | int = 0) -> StochasticChoice:
    """Parse the ``menu,item,probability`` CSV form."""
    reader = csv.reader(io.StringIO(text))
    menus: dict[str, dict[str, str]] = {}
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        if lineno == 1 and [c.strip().lower() for c in row] == ["menu", "item", "probability"]:
            continue
        if len(row) != 3:
            raise DataError(f"line {lineno}: expected menu,item,probability")
        menu, item, p = (c.strip() for c in row)
        entry = menus.setdefault(menu, {})
        if item in entry:
            raise DataError(f"line {lineno}: duplicate entry for {item!r} on {{{menu}}}")
        entry[item] = p
    return validate({"menus": menus}, tolerance)


def load(path: str | Path, fmt: str | None = None, tolerance: Fraction | str | int = 0) -> StochasticChoice:
    """Read a dataset from a JSON or CSV file (format inferred from suffix)."""
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "csv" if path.suffix.lower() == ".csv" else "json"
    if fmt == "csv":
        return loads_csv(text, tolerance)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from None
    return validate(raw, tolerance)


def support_set(rho: StochasticChoice, tolerance: Fraction | str | int = 0) -> frozenset[str]:
    """Items chosen from the grand menu with positive probability."""
    tolerance = parse_probability(tolerance)
    full = rho.ground.full_mask
    return frozenset(
        rho.ground.items[i] for i in range(rho.n) if rho.p(i, full) > tolerance
    )


def is_regular(rho: StochasticChoice, tolerance: Fraction | str | int = 0) -> bool:
    """``rho(x, A) >= rho(x, B)`` whenever ``x in A`` and ``A`` is a subset of ``B``.

    Checking one-item extensions suffices since the relation is transitive.
    """
    tolerance = parse_probability(tolerance)
    full = rho.ground.full_mask
    for a in range(1, full + 1):
        for x in _bits(a):
            pa = rho.p(x, a)
            for y in _bits(full & ~a):
                if rho.p(x, a | 1 << y) > pa + tolerance:
                    return False
    return True
