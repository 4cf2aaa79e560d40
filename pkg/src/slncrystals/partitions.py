"""Partitions, bead rows (Maya diagrams), ribbons, cores and quotients.

A partition is stored as a weakly decreasing tuple of positive integers.
A row of beads lives on "slots" indexed by the integers: slot b stands for
the physical half-integer position b + 1/2, so the vacuum of charge c has
beads exactly on the slots b < c.  The partition with parts p_1 >= p_2 >= ...
and charge c occupies the slots p_j - j + c.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError("parts must be positive: %r" % (parts,))
            if i > 0 and parts[i - 1] < p:
                raise ValueError("parts must weakly decrease: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def part(self, j):
        """The j-th part (1-indexed), zero beyond the last part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    @property
    def size(self):
        return sum(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def cells(self):
        """Iterate over cells (row, col), both 1-indexed."""
        for r, p in enumerate(self.parts, start=1):
            for c in range(1, p + 1):
                yield (r, c)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))


EMPTY = Partition()


@dataclass(frozen=True)
class ChargedPartition:
    """A partition whose parts are indexed starting at an integer charge."""

    charge: int
    partition: Partition

    def to_json(self):
        return {"charge": self.charge, "parts": self.partition.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["charge"]), Partition.from_json(data["parts"]))


@dataclass(frozen=True)
class BeadRow:
    """One row of beads, stored canonically as (charge, partition).

    The occupied slots are {part(j) - j + charge : j >= 1}; in particular all
    slots below charge - len(partition) are occupied and all slots at or above
    charge + part(1) are empty.
    """

    charge: int
    partition: Partition

    def bead_slot(self, j):
        """Slot of the j-th bead counting from the right, j >= 1."""
        return self.partition.part(j) - j + self.charge

    def occupied(self, slot):
        if slot < self.charge - len(self.partition):
            return True
        j = 1
        while True:
            b = self.bead_slot(j)
            if b == slot:
                return True
            if b < slot:
                return False
            j += 1

    def shifted(self, d):
        """The same row with every bead moved d slots to the right."""
        return BeadRow(self.charge + d, self.partition)

    def move_bead(self, j, delta):
        """Move the j-th bead by delta slots; the target slot must be free."""
        parts = list(self.partition.parts)
        while len(parts) < j:
            parts.append(0)
        parts[j - 1] += delta
        while parts and parts[-1] == 0:
            parts.pop()
        return BeadRow(self.charge, Partition(parts))

    def bracket_window(self):
        """A slot range [lo, hi] outside of which every gap is homogeneous."""
        lo = self.charge - len(self.partition) - 1
        hi = self.charge + self.partition.part(1) + 1
        return lo, hi

    @classmethod
    def vacuum(cls, charge):
        return cls(charge, EMPTY)

    @classmethod
    def from_occupied(cls, slots, floor):
        """Build a row from its occupied slots at or above `floor`.

        Every slot below `floor` is taken to be occupied; `slots` lists the
        occupied slots >= floor.
        """
        slots = sorted(set(int(s) for s in slots))
        if slots and slots[0] < floor:
            raise ValueError("slot below floor")
        n_occ_nonneg = sum(1 for s in slots if s >= 0)
        if floor <= 0:
            n_empty_neg = -floor - sum(1 for s in slots if s < 0)
        else:
            # slots in [0, floor) are implicitly occupied
            n_occ_nonneg += floor
            n_empty_neg = 0
        charge = n_occ_nonneg - n_empty_neg
        parts = []
        for j, slot in enumerate(reversed(slots), start=1):
            parts.append(slot + j - charge)
        if any(p < 0 for p in parts):
            raise ValueError("inconsistent slot set")
        while parts and parts[-1] == 0:
            parts.pop()
        row = cls(charge, Partition(parts))
        # the implicit beads below floor must agree with the vacuum tail
        if row.charge - len(row.partition) < floor and parts:
            raise ValueError("slot set not eventually full below floor")
        return row

    def to_charged_partition(self):
        return ChargedPartition(self.charge, self.partition)

    def to_json(self):
        return {"charge": self.charge, "parts": self.partition.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["charge"]), Partition.from_json(data["parts"]))


@dataclass(frozen=True)
class RibbonMove:
    """A ribbon addition: the bead at source_slot advances `length` slots."""

    source_slot: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("ribbon length must be positive")

    @property
    def rightmost_col(self):
        return self.source_slot + self.length


def addable_ribbons(lam, length):
    """Every RibbonMove adding a `length`-ribbon to lam."""
    row = BeadRow(0, Partition(lam))
    lo, hi = row.bracket_window()
    return [
        RibbonMove(s, length)
        for s in range(lo - length, hi + 1)
        if row.occupied(s) and not row.occupied(s + length)
    ]


def removable_ribbons(lam, length):
    """Every RibbonMove whose addition produced a removable ribbon of lam."""
    row = BeadRow(0, Partition(lam))
    lo, hi = row.bracket_window()
    return [
        RibbonMove(s, length)
        for s in range(lo - length, hi + 1)
        if not row.occupied(s) and row.occupied(s + length)
    ]


def partition_to_bead_row(lam, charge=0):
    """The bead row of a partition: beads on slots part(j) - j + charge."""
    return BeadRow(charge, Partition(lam))


def bead_row_to_partition(row):
    """Inverse of partition_to_bead_row: (charge, partition)."""
    return row.charge, row.partition


def add_ribbon(lam, length, rightmost_col):
    """Add a `length`-ribbon whose rightmost box sits above `rightmost_col`.

    On the bead row this moves the bead at slot rightmost_col - length to
    slot rightmost_col.  Raises ValueError if no such ribbon can be added.
    """
    if length < 1:
        raise ValueError("ribbon length must be positive")
    row = partition_to_bead_row(lam)
    src = rightmost_col - length
    if not row.occupied(src) or row.occupied(rightmost_col):
        raise ValueError(
            "no %d-ribbon with rightmost column %d addable to %r"
            % (length, rightmost_col, lam)
        )
    return _move_slot(row, src, rightmost_col).partition


def remove_ribbon(lam, length, rightmost_col):
    """Exact inverse of add_ribbon."""
    if length < 1:
        raise ValueError("ribbon length must be positive")
    row = partition_to_bead_row(lam)
    src = rightmost_col - length
    if not row.occupied(rightmost_col) or row.occupied(src):
        raise ValueError(
            "no %d-ribbon with rightmost column %d removable from %r"
            % (length, rightmost_col, lam)
        )
    return _move_slot(row, rightmost_col, src).partition


def _move_slot(row, src, dst):
    """Move the bead at slot src to the empty slot dst (same row)."""
    floor = min(row.charge - len(row.partition), src, dst) - 1
    slots = set()
    j = 1
    while True:
        b = row.bead_slot(j)
        if b < floor:
            break
        slots.add(b)
        j += 1
    slots.remove(src)
    slots.add(dst)
    return BeadRow.from_occupied(slots, floor)


def ell_quotient(lam, ell):
    """The ell rows of the ell-strand abacus of lam, as charged partitions.

    Slot s of the single charge-0 bead row goes to row s mod ell, slot
    floor(s / ell); row 0 is the bottom row.  Charges are the raw ones read
    off from this block decomposition (their sum is 0).
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    rows = [r.to_charged_partition() for r in _quotient_rows(lam, ell)]
    return tuple(rows)


def _quotient_rows(lam, ell):
    lam = Partition(lam)
    row0 = partition_to_bead_row(lam)
    lo = -(len(lam) + ell + 1)
    hi = lam.part(1) + ell + 1
    occupied = [s for s in range(lo, hi + 1) if row0.occupied(s)]
    rows = []
    for j in range(ell):
        floor_b = (lo - j) // ell + 1
        slots = [(s - j) // ell for s in occupied if (s - j) % ell == 0]
        rows.append(BeadRow.from_occupied([b for b in slots if b >= floor_b], floor_b))
    return rows


def combine_quotient(rows, ell):
    """Inverse of ell_quotient; the row charges must sum to zero."""
    rows = [r if isinstance(r, BeadRow) else BeadRow(r.charge, r.partition) for r in rows]
    if len(rows) != ell:
        raise ValueError("expected %d rows" % ell)
    if sum(r.charge for r in rows) != 0:
        raise ValueError("row charges must sum to zero for a partition")
    floor_b = min(r.charge - len(r.partition) for r in rows) - 1
    hi_b = max(r.charge + r.partition.part(1) for r in rows) + 1
    slots = []
    for j, row in enumerate(rows):
        for b in range(floor_b, hi_b + 1):
            if row.occupied(b):
                slots.append(ell * b + j)
    row = BeadRow.from_occupied(slots, ell * floor_b)
    if row.charge != 0:
        raise ValueError("combined row has nonzero charge")
    return row.partition


def ell_core(lam, ell):
    """Push every abacus row fully left and read the result back."""
    rows = [BeadRow.vacuum(r.charge) for r in _quotient_rows(lam, ell)]
    return combine_quotient(rows, ell)


def normalized_quotient(lam, ell):
    """The quotient partitions alone, every row renormalized to charge 0."""
    return tuple(c.partition for c in ell_quotient(lam, ell))


def partitions_of(m, max_part=None):
    """All partitions of m with parts at most max_part, largest part first."""
    if m < 0:
        return
    if m == 0:
        yield Partition()
        return
    if max_part is None or max_part > m:
        max_part = m
    for first in range(max_part, 0, -1):
        for rest in partitions_of(m - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(m):
    """All partitions of size at most m."""
    return itertools.chain.from_iterable(partitions_of(k) for k in range(m + 1))
