"""Integer partitions, Ferrers diagrams, hook lengths, and corner data.

Diagrams are stored in English orientation: row 1 is the longest row and
legs point downward.  Hook lengths, their products, and everything built
from them are invariant under flipping the diagram, so all quantities
match the usual French-orientation pictures as well.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple


class PartitionError(ValueError):
    """Raised for input that does not describe a partition."""


class Cell(NamedTuple):
    """1-based (row, col) position of a box in a Ferrers diagram."""

    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition is the unique partition of 0.  ``part(i)`` uses
    1-based indexing and returns 0 beyond the last row, the convention
    under which every formula in this package is stated.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or p <= 0:
                raise PartitionError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise PartitionError(f"parts not weakly decreasing: {parts}")
            prev = p
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based); zero for i beyond the length."""
        if i < 1:
            raise IndexError("part index is 1-based")
        return self[i - 1] if i <= len(self) else 0

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def contains_cell(self, cell: Cell) -> bool:
        return 1 <= cell.row <= len(self) and 1 <= cell.col <= self[cell.row - 1]

    def conjugate(self) -> "Partition":
        """Column lengths of the diagram; an involution."""
        if not self:
            return Partition()
        counts = [0] * self[0]
        for p in self:
            for j in range(p):
                counts[j] += 1
        return Partition(counts)

    def __getnewargs__(self):
        return (tuple(self),)

    def __str__(self) -> str:
        if not self:
            return "0"
        if len(self) == 1:
            s = str(self[0])
            # a bare "53" would re-parse in compact notation as (5,3); mark
            # such single parts with a trailing comma so parsing round-trips
            return s + "," if _reads_as_compact(s) else s
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


@dataclass(frozen=True)
class CornerData:
    """Corner index sets of a partition.

    ``in_corners`` lists the rows whose rightmost box can be removed
    (every row i with part(i) > part(i+1)); ``out_corners`` is
    {1} union {i+1 : i in in_corners}, one element longer.  ``removals``
    maps each in-corner row to the partition left after removing that
    box.
    """

    in_corners: tuple[int, ...]
    out_corners: tuple[int, ...]
    removals: dict

    @property
    def removal_list(self) -> tuple[Partition, ...]:
        return tuple(self.removals[i] for i in self.in_corners)


def _reads_as_compact(digits: str) -> bool:
    return (
        len(digits) > 1
        and "0" not in digits
        and all(digits[i] >= digits[i + 1] for i in range(len(digits) - 1))
    )


def parse_partition(text: str) -> Partition:
    """Parse "5,5,3,3,1", compact "55331", or "0"/"" for the empty partition.

    A bare digit string is read in compact notation (one part per digit)
    when that gives a valid partition with parts 1-9, and as a single part
    otherwise; so "55331" is (5,5,3,3,1) while "10" is (10).  A trailing
    comma forces the single-part reading ("53," is (53), not (5,3)).
    """
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    if "," in text:
        tokens = text.split(",")
        if tokens[-1] == "":
            tokens.pop()  # trailing comma: single-part form like "53,"
        parts = []
        for tok in tokens:
            if not tok.isdigit():
                raise PartitionError(f"non-numeric part {tok!r} in {text!r}")
            parts.append(int(tok))
        return Partition(parts)
    if not text.isdigit():
        raise PartitionError(f"not a partition string: {text!r}")
    if _reads_as_compact(text):
        return Partition(int(ch) for ch in text)
    return Partition((int(text),))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, exactly once, in reverse-lexicographic order.

    The first partition is (n) and the last is (1,...,1); the count is
    the partition number p(n).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return
    cur = [n]
    yield Partition(cur)
    while True:
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(cur) - i  # the 1s to the right plus the unit taken from cur[i]
        cur[i] -= 1
        del cur[i + 1:]
        m = cur[i]
        while rem > 0:
            p = min(m, rem)
            cur.append(p)
            rem -= p
        yield Partition(cur)


def hook_length(lam: Partition, cell: Cell) -> int:
    """Hook length of a box: itself, the boxes to its right, and the boxes
    in its column on the leg side."""
    cell = Cell(*cell)
    if not lam.contains_cell(cell):
        raise PartitionError(f"cell {tuple(cell)} outside the diagram of {lam}")
    conj = lam.conjugate()
    return (lam[cell.row - 1] - cell.col) + (conj[cell.col - 1] - cell.row) + 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook lengths of every box, as rows matching the diagram."""
    conj = lam.conjugate()
    return [
        [(p - j) + (conj[j] - i) - 1 for j in range(p)]
        for i, p in enumerate(lam)
    ]


@functools.cache
def hook_product(lam: Partition) -> int:
    """Product of all hook lengths; 1 for the empty partition."""
    return prod(h for row in hook_lengths(lam) for h in row)


@functools.cache
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of the shape, via n!/(hook product).

    The division is asserted exact; a remainder would mean the hook data
    is internally inconsistent.
    """
    q, r = divmod(factorial(lam.size), hook_product(lam))
    if r:
        raise ArithmeticError(f"{lam.size}! not divisible by the hook product of {lam}")
    return q


def syt_count_bruteforce(lam: Partition, limit: int = 10) -> int:
    """Count standard Young tableaux by exhaustive corner-removal recursion.

    Every filling is traced once (no memoization), so this is an oracle
    independent of the hook formula.  Guarded by ``limit`` because the
    count itself is the amount of work.
    """
    if lam.size > limit:
        raise ValueError(f"|{lam}| = {lam.size} exceeds the brute-force limit {limit}")

    def count(shape: tuple[int, ...]) -> int:
        if not shape:
            return 1
        total = 0
        for i in range(len(shape)):
            nxt = shape[i + 1] if i + 1 < len(shape) else 0
            if shape[i] > nxt:
                smaller = shape[:i] + ((shape[i] - 1,) if shape[i] > 1 else ()) + shape[i + 1:]
                total += count(smaller)
        return total

    return count(tuple(lam))


def corner_sets(lam: Partition) -> CornerData:
    """In-corner rows, out-corner rows, and the corner-removed partitions."""
    if not lam:
        raise PartitionError("the empty partition has no corners")
    in_corners = tuple(
        i for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)
    )
    out_corners = (1,) + tuple(i + 1 for i in in_corners)
    removals = {i: _remove_corner(lam, i) for i in in_corners}
    return CornerData(in_corners, out_corners, removals)


def _remove_corner(lam: Partition, i: int) -> Partition:
    parts = list(lam)
    parts[i - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return Partition(parts)


def corner_removals(lam: Partition) -> tuple[Partition, ...]:
    """The distinct partitions obtained by erasing one corner box."""
    return corner_sets(lam).removal_list


def single_box_additions(lam: Partition) -> tuple[Partition, ...]:
    """The partitions obtained by adding one box; adjoint to corner removal."""
    out = []
    for i in range(1, len(lam) + 1):
        if i == 1 or lam.part(i - 1) > lam.part(i):
            parts = list(lam)
            parts[i - 1] += 1
            out.append(Partition(parts))
    out.append(Partition(tuple(lam) + (1,)))
    return tuple(out)
