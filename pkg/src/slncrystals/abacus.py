"""Multi-row abacus configurations for a fixed pair (n, ell).

An AbacusConfig holds ell bead rows (index 0 at the bottom).  Row indices
extend to all integers through the wrap rule: row i + ell is row i with every
bead shifted n slots to the left.  A configuration is descending when each
extended row dominates the next one bead-by-bead; these are the
configurations in bijection with cylindric plane partitions.

The tightening operator tighten(psi, k) slides the k-th bead of every row
down one row (the top row's bead wrapping to the bottom, n slots further
left); loosen is its inverse.  Tight configurations, those admitting no
tightening at all, form the irreducible highest weight crystal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import BeadRow, Partition, partitions_of


@dataclass(frozen=True)
class DominantWeight:
    """Sum m_i * Lambda_i with nonnegative coefficients m_0..m_{n-1}."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise ValueError("dominant weight needs nonnegative coefficients")

    @property
    def n(self):
        return len(self.coeffs)

    @property
    def level(self):
        return sum(self.coeffs)

    def rotated(self, k):
        """Relabel Lambda_i -> Lambda_{i+k} (cyclic color rotation)."""
        n = self.n
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[(i + k) % n] += c
        return DominantWeight(tuple(out))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(("L%d" % i) if c == 1 else ("%d*L%d" % (c, i)))
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class AbacusConfig:
    n: int
    ell: int
    rows: tuple  # of BeadRow, index 0 = bottom

    def __post_init__(self):
        if self.n < 1 or self.ell < 1:
            raise ValueError("need n >= 1 and ell >= 1")
        if len(self.rows) != self.ell:
            raise ValueError("expected %d rows" % self.ell)

    def row(self, i):
        """Extended row accessor: row(i + ell) = row(i) shifted left by n."""
        q, r = divmod(i, self.ell)
        return self.rows[r].shifted(-self.n * q)

    def bead_position(self, i, j):
        """Slot of the j-th bead from the right on extended row i."""
        return self.row(i).bead_slot(j)

    def occupied(self, i, slot):
        return self.row(i).occupied(slot)

    def replace_row(self, r, new_row):
        rows = list(self.rows)
        rows[r] = new_row
        return AbacusConfig(self.n, self.ell, tuple(rows))

    def charges(self):
        return tuple(r.charge for r in self.rows)

    def max_bead_index(self):
        """Largest j such that some row's j-th bead is off its vacuum slot."""
        return max(len(r.partition) for r in self.rows)

    def key(self):
        return (self.n, self.ell) + tuple(
            (r.charge, r.partition.parts) for r in self.rows
        )

    def label(self):
        """Compact deterministic string, bottom row first."""
        return "|".join(
            "%d:%s" % (r.charge, ",".join(map(str, r.partition.parts)))
            for r in self.rows
        )

    def to_json(self):
        return {"n": self.n, "ell": self.ell, "rows": [r.to_json() for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["n"]),
            int(data["ell"]),
            tuple(BeadRow.from_json(r) for r in data["rows"]),
        )


def bead_position(psi, i, j):
    return psi.bead_position(i, j)


def is_descending(psi):
    """True iff every extended row dominates the next one."""
    for i in range(psi.ell):
        upper = psi.row(i + 1)
        lower = psi.rows[i]
        jmax = max(len(lower.partition), len(upper.partition)) + 1
        for j in range(1, jmax + 1):
            if lower.bead_slot(j) < upper.bead_slot(j):
                return False
    return True


def compactify(psi):
    """Push all beads fully left on each row (charges are preserved)."""
    return AbacusConfig(
        psi.n, psi.ell, tuple(BeadRow.vacuum(r.charge) for r in psi.rows)
    )


def weight(psi):
    """Number of one-slot left moves needed to reach the compactification."""
    return sum(r.partition.size for r in psi.rows)


def tighten(psi, k):
    """Slide the k-th bead of every row down one row, or None if blocked.

    Defined exactly when every row's incoming bead stays strictly right of
    that row's (k+1)-st bead.
    """
    if k < 1:
        raise ValueError("bead index must be positive")
    for i in range(psi.ell):
        if psi.bead_position(i + 1, k) <= psi.bead_position(i, k + 1):
            return None
    return _set_bead_column(psi, k, [psi.bead_position(i + 1, k) for i in range(psi.ell)])


def loosen(psi, k):
    """Slide the k-th bead of every row up one row; inverse of tighten."""
    if k < 1:
        raise ValueError("bead index must be positive")
    for i in range(psi.ell):
        if k > 1 and psi.bead_position(i - 1, k) >= psi.bead_position(i, k - 1):
            return None
    return _set_bead_column(psi, k, [psi.bead_position(i - 1, k) for i in range(psi.ell)])


def _set_bead_column(psi, k, new_slots):
    rows = []
    for i, row in enumerate(psi.rows):
        delta = new_slots[i] - row.bead_slot(k)
        rows.append(row.move_bead(k, delta))
    return AbacusConfig(psi.n, psi.ell, tuple(rows))


def is_tight(psi):
    """True iff no tighten(psi, k) is possible."""
    for k in range(1, psi.max_bead_index() + 2):
        if tighten(psi, k) is not None:
            return False
    return True


def highest_weight(psi0):
    """The dominant weight of a compact descending configuration.

    m_i counts the rows whose last bead sits at a slot b with b + 1 = i
    mod n, i.e. the rows whose charge is congruent to i.
    """
    if weight(psi0) != 0:
        raise ValueError("configuration is not compact")
    if not is_descending(psi0):
        raise ValueError("configuration is not descending")
    m = [0] * psi0.n
    for r in psi0.rows:
        m[r.charge % psi0.n] += 1
    return DominantWeight(tuple(m))


def highest_weight_config(w, n, ell):
    """The canonical compact descending configuration of a given weight.

    Charges are the residues of the weight, with multiplicity, sorted in
    decreasing order from the bottom row up.
    """
    if isinstance(w, DominantWeight):
        coeffs = w.coeffs
    else:
        coeffs = tuple(w)
    if len(coeffs) != n:
        raise ValueError("weight has %d coefficients, expected %d" % (len(coeffs), n))
    if sum(coeffs) != ell:
        raise ValueError("weight level %d does not match ell=%d" % (sum(coeffs), ell))
    charges = []
    for i, m in enumerate(coeffs):
        charges.extend([i] * m)
    charges.sort(reverse=True)
    return AbacusConfig(n, ell, tuple(BeadRow.vacuum(c) for c in charges))


def gamma(psi):
    """The tight configuration reached by exhausting the tightening moves.

    Bead sets are processed from the vacuum end toward the rightmost bead;
    the result is independent of the order (asserted in the test suite).
    """
    if not is_descending(psi):
        raise ValueError("gamma needs a descending configuration")
    for k in range(psi.max_bead_index() + 1, 0, -1):
        while True:
            nxt = tighten(psi, k)
            if nxt is None:
                break
            psi = nxt
    return psi


def slack(psi, j):
    """How many times tighten(-, j) applies before hitting the (j+1)-st beads."""
    m = 0
    while True:
        ok = all(
            psi.bead_position(i + m + 1, j) > psi.bead_position(i, j + 1)
            for i in range(psi.ell)
        )
        if not ok:
            return m
        m += 1


def lambda_part(psi):
    """The partition of tightening slack.

    Part j is the total number of tightening moves the j-th bead set absorbs
    when the configuration is tightened, i.e. the slack at all bead sets at
    or beyond j.
    """
    if not is_descending(psi):
        raise ValueError("lambda_part needs a descending configuration")
    kmax = psi.max_bead_index() + 1
    slacks = [slack(psi, j) for j in range(1, kmax + 1)]
    parts = []
    total = sum(slacks)
    for w in slacks:
        if total == 0:
            break
        parts.append(total)
        total -= w
    return Partition(parts)


def recombine(gamma_cfg, lam):
    """The unique descending psi with gamma(psi) = gamma_cfg, lambda = lam."""
    if not is_tight(gamma_cfg) or not is_descending(gamma_cfg):
        raise ValueError("recombine needs a tight descending configuration")
    lam = Partition(lam)
    psi = gamma_cfg
    for j in range(1, len(lam) + 1):
        for _ in range(lam.part(j)):
            psi = loosen(psi, j)
            if psi is None:
                raise AssertionError("loosening blocked; invalid slack partition")
    return psi


def gl_move(psi, p, direction):
    """Act on the slack partition by a one-step bead move, keeping gamma.

    direction "down" moves the bead at slot p+1 of the slack row to slot p;
    "up" moves the bead at slot p to slot p+1.  Returns None when the move
    kills the basis vector.
    """
    if direction not in ("up", "down"):
        raise ValueError("direction must be 'up' or 'down'")
    lam = lambda_part(psi)
    row = BeadRow(0, lam)
    if direction == "down":
        src, dst = p + 1, p
    else:
        src, dst = p, p + 1
    if not row.occupied(src) or row.occupied(dst):
        return None
    j = 1
    while row.bead_slot(j) != src:
        j += 1
    new_row = row.move_bead(j, dst - src)
    return recombine(gamma(psi), new_row.partition)


def total_charge_mod_n(psi):
    return sum(r.charge for r in psi.rows) % psi.n


def enumerate_descending(psi0, max_weight):
    """All descending configurations with the given compactification.

    Yields configurations of weight at most max_weight, grouped by weight in
    increasing order.  psi0 must be compact.
    """
    if weight(psi0) != 0:
        raise ValueError("enumeration starts from a compact configuration")
    charges = psi0.charges()
    ell, n = psi0.ell, psi0.n
    parts_by_size = [list(partitions_of(s)) for s in range(max_weight + 1)]
    for w in range(max_weight + 1):
        for sizes in _compositions(w, ell):
            for lams in itertools.product(*(parts_by_size[s] for s in sizes)):
                cfg = AbacusConfig(
                    n, ell, tuple(BeadRow(c, lam) for c, lam in zip(charges, lams))
                )
                if is_descending(cfg):
                    yield cfg


def enumerate_tight(psi0, max_weight):
    for cfg in enumerate_descending(psi0, max_weight):
        if is_tight(cfg):
            yield cfg


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def right_moves(psi):
    """All single-bead one-slot right moves that keep the config descending."""
    out = []
    for r, row in enumerate(psi.rows):
        jmax = len(row.partition) + 1
        for j in range(1, jmax + 1):
            if j > 1 and row.bead_slot(j - 1) == row.bead_slot(j) + 1:
                continue  # target slot occupied
            cand = psi.replace_row(r, row.move_bead(j, 1))
            if is_descending(cand):
                out.append(cand)
    return out
