"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own fast paths: ribbons
are found by enumerating skew shapes, cores by stripping ribbons in every
order, bracket strings by repeated substring deletion, and so on.
"""

from functools import lru_cache

from slncrystals.abacus import (
    AbacusConfig,
    enumerate_descending,
    enumerate_tight,
    highest_weight_config,
)
from slncrystals.partitions import BeadRow, Partition, partitions_up_to
from slncrystals.qseries import level_weights

P = Partition


def config(n, ell, *rows):
    return AbacusConfig(n, ell, tuple(BeadRow(c, P(parts)) for c, parts in rows))


# worked examples from the source figures
FIG1 = P((12, 11, 10, 9, 7, 5, 3, 3, 3, 1))
FIG1_SLOTS = [-13, -12, -11, -9, -6, -5, -4, -1, 2, 5, 7, 9, 11]
FIG2 = P((12, 11, 10, 9, 8, 8, 3, 3, 3, 1))


def fig4():
    """The 4-strand abacus of FIG2 with n = 3 (not descending)."""
    return config(3, 4, (-1, (1,)), (0, (3, 3)), (-1, (2, 1)), (2, (1, 1, 1)))


def fig7():
    """A descending but not tight configuration; T_2 applies."""
    return config(3, 4, (1, (2, 2)), (0, (2, 1, 1)), (0, (1, 1)), (0, (1,)))


def fig9():
    """Compact generator of highest weight L0 + 2 L1 + L2 for n = 3."""
    return config(3, 4, (2, ()), (1, ()), (1, ()), (0, ()))


def fig10():
    """An element of the irreducible crystal generated by fig9; weight 18."""
    return config(3, 4, (2, (2, 1, 1)), (1, (2, 2, 1)), (1, (2, 1)), (0, (2, 2, 1, 1)))


FIG12_PROFILE = (2, 1, 1, 0)
FIG12_ROWS = ((3, 1), (3, 2), (2, 1), (4, 2))


def fig8():
    from slncrystals.cylindric import CylindricPlanePartition

    return CylindricPlanePartition(
        3,
        6,
        (4, 4, 3, 3, 2, 1),
        (P((4, 4, 1)), P((4, 1)), P((5, 3)), P((3, 3)), P((7, 3)), P((6, 5, 1))),
    )


@lru_cache(maxsize=None)
def descending_configs(n, ell, coeffs, max_weight):
    psi0 = highest_weight_config(coeffs, n, ell)
    return tuple(enumerate_descending(psi0, max_weight))


@lru_cache(maxsize=None)
def tight_configs(n, ell, coeffs, max_weight):
    psi0 = highest_weight_config(coeffs, n, ell)
    return tuple(enumerate_tight(psi0, max_weight))


def all_level_coeffs(n, level):
    return [w.coeffs for w in level_weights(n, level)]


# ---------------------------------------------------------------------------
# independent oracles


def occupied_slots_oracle(lam, charge, lo, hi):
    """Occupied slots of the bead row, straight from the defining formula."""
    lam = P(lam)
    slots = set()
    j = 1
    while True:
        s = lam.part(j) - j + charge
        if s < lo:
            break
        slots.add(s)
        j += 1
    return sorted(s for s in slots if lo <= s <= hi)


def ribbons_by_skew_shapes(lam, length):
    """All mu obtained from lam by adding one ribbon, via skew-shape search.

    Returns {rightmost column: mu}.  A ribbon is a connected skew shape with
    at most one cell over each diagonal position.
    """
    lam = P(lam)
    out = {}
    rows = len(lam) + length
    for mu in _partitions_containing(lam, length, rows):
        cells = set(mu.cells()) - set(lam.cells())
        if len(cells) != length:
            continue
        diagonals = [c - r for (r, c) in cells]
        if len(set(diagonals)) != length:
            continue
        if not _connected(cells):
            continue
        out[max(diagonals)] = mu
    return out


def _partitions_containing(lam, extra, max_rows):
    """All partitions of |lam| + extra containing lam."""
    results = []

    def build(prefix, remaining, row):
        if remaining == 0:
            tail = list(lam.parts[row - 1 :])
            if not tail or not prefix or prefix[-1] >= tail[0]:
                results.append(P([p for p in prefix + tail if p > 0]))
            return
        if row > max_rows:
            return
        lo = lam.part(row)
        hi = min(prefix[-1] if prefix else lo + remaining, lo + remaining)
        for v in range(lo, hi + 1):
            build(prefix + [v], remaining - (v - lo), row + 1)

    build([], extra, 1)
    return results


def _connected(cells):
    cells = set(cells)
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == cells


@lru_cache(maxsize=None)
def _strip_cores_cached(parts, length):
    lam = P(parts)
    removable = ribbons_by_skew_shapes_removals(lam, length)
    if not removable:
        return frozenset([lam])
    cores = frozenset()
    for mu in removable:
        cores |= _strip_cores_cached(mu.parts, length)
    return cores


def strip_cores(lam, length):
    """All partitions reachable by removing ribbons until none can be removed."""
    return set(_strip_cores_cached(P(lam).parts, length))


def ribbons_by_skew_shapes_removals(lam, length):
    """All mu obtained from lam by removing one ribbon (skew-shape search)."""
    lam = P(lam)
    out = []
    for mu in partitions_up_to(lam.size - length):
        if mu.size != lam.size - length:
            continue
        if any(mu.part(r) > lam.part(r) for r in range(1, len(mu) + 1)):
            continue
        cells = set(lam.cells()) - set(mu.cells())
        diagonals = [c - r for (r, c) in cells]
        if len(set(diagonals)) == length and _connected(cells):
            out.append(mu)
    return out


def signature_oracle(string):
    """Reduce a bracket string by repeatedly deleting adjacent "()" pairs."""
    s = list(string)
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 1):
            if s[i] == "(" and s[i + 1] == ")":
                del s[i : i + 2]
                changed = True
                break
    return "".join(s)


def greedy_left_push_moves(psi):
    """Compactify by greedy single-slot left moves, counting the moves."""
    moves = 0
    rows = list(psi.rows)
    for idx, row in enumerate(rows):
        parts = list(row.partition.parts)
        moves += sum(parts)
    return moves


def cpp_by_white_beads(psi):
    """Literal construction of the cylindric plane partition from bead counts.

    Entry (i, p_i + w - 1) is the number of beads to the right of the w-th
    empty slot of row i, counting empty slots from the left.
    """
    from slncrystals.cylindric import CylindricPlanePartition

    profile = []
    rows = []
    for row in psi.rows:
        profile.append(row.charge)
        floor = row.charge - len(row.partition) - 1
        hi = row.charge + row.partition.part(1) + 1
        occupied = [s for s in range(floor, hi + 1) if row.occupied(s)]
        empties = [s for s in range(floor, hi + 1) if not row.occupied(s)]
        parts = []
        for e in empties:
            count = sum(1 for s in occupied if s > e)
            if count == 0:
                break
            parts.append(count)
        rows.append(P(parts))
    return CylindricPlanePartition(psi.n, psi.ell, tuple(profile), tuple(rows))
