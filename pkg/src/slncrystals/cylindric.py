"""Cylindric plane partitions and their crystal structure.

A cylindric plane partition of type (n, ell) is stored diagonal-major: ell
charged partitions pi_0..pi_{ell-1}, where pi_i starts at column profile[i]
and the array repeats via pi(i + ell, j - n) = pi(i, j).  Diagonal i of the
array is the conjugate of row i of the matching abacus configuration, and
profile[i] is that row's charge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abacus import AbacusConfig, DominantWeight, is_descending
from .partitions import BeadRow, Partition


@dataclass(frozen=True)
class CylindricPlanePartition:
    n: int
    ell: int
    profile: tuple  # profile[i] = first defined column of diagonal i
    rows: tuple  # rows[i] = Partition of the entries of diagonal i

    def __post_init__(self):
        if len(self.profile) != self.ell or len(self.rows) != self.ell:
            raise ValueError("profile and rows must have length ell")

    def defined(self, i, j):
        q, r = divmod(i, self.ell)
        return j + q * self.n >= self.profile[r]

    def entry(self, i, j):
        """The entry at diagonal i, column j (0 on defined empty cells)."""
        q, r = divmod(i, self.ell)
        w = j + q * self.n - self.profile[r]
        if w < 0:
            raise ValueError("entry (%d, %d) is outside the boundary" % (i, j))
        return self.rows[r].part(w + 1)

    def key(self):
        return (self.n, self.ell, self.profile, tuple(r.parts for r in self.rows))

    def to_json(self):
        return {
            "n": self.n,
            "ell": self.ell,
            "profile": list(self.profile),
            "rows": [r.to_json() for r in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["n"]),
            int(data["ell"]),
            tuple(int(p) for p in data["profile"]),
            tuple(Partition.from_json(r) for r in data["rows"]),
        )


def is_valid_cpp(pi):
    """Check the defining conditions: nested boundary and double monotonicity."""
    ell, n = pi.ell, pi.n
    for i in range(ell):
        p_here = pi.profile[i]
        p_next = pi.profile[(i + 1) % ell] - (n if i + 1 == ell else 0)
        if p_here < p_next:
            return False
        jmax = max(p_here + len(pi.rows[i]), p_next + len(pi.rows[(i + 1) % ell])) + 1
        for j in range(p_here, jmax + 1):
            if pi.entry(i, j) < pi.entry(i + 1, j):
                return False
    return True


def from_abacus(psi):
    """The cylindric plane partition of a descending configuration.

    Diagonal i is the conjugate of row i's partition, charged by the row's
    charge; equivalently entry (i, j) counts the beads to the right of the
    appropriate white bead of row i.
    """
    if not is_descending(psi):
        raise ValueError("from_abacus needs a descending configuration")
    return CylindricPlanePartition(
        psi.n,
        psi.ell,
        tuple(r.charge for r in psi.rows),
        tuple(r.partition.conjugate() for r in psi.rows),
    )


def to_abacus(pi):
    """Inverse of from_abacus."""
    if not is_valid_cpp(pi):
        raise ValueError("not a valid cylindric plane partition")
    psi = AbacusConfig(
        pi.n,
        pi.ell,
        tuple(
            BeadRow(c, parts.conjugate()) for c, parts in zip(pi.profile, pi.rows)
        ),
    )
    assert is_descending(psi)
    return psi


def hw_of_cpp(pi):
    """m_i counts the diagonals whose first entry lies on a column = i mod n."""
    m = [0] * pi.n
    for p in pi.profile:
        m[p % pi.n] += 1
    return DominantWeight(tuple(m))


def cpp_weight(pi):
    """Sum of the entries over one period."""
    return sum(r.size for r in pi.rows)


# ---------------------------------------------------------------------------
# the box model


@dataclass(frozen=True)
class Box:
    """A unit box: diagonal x, column y, height z (identified up to periods)."""

    x: int
    y: int
    z: int


def box_color(box, n):
    """Color is constant along (x, y+s, z+s); the first layer is colored by y."""
    return (box.y - box.z + 1) % n


def t_value(box, n, ell):
    """The ordering function n*x/ell + y - z, exact."""
    return Fraction(n * box.x, ell) + box.y - box.z


def _t_key(box, n, ell):
    # t scaled by ell; integer, same order
    return n * box.x + ell * (box.y - box.z)


def addable_boxes(pi, i):
    """Color-i boxes addable so that every diagonal stays a partition."""
    out = []
    for r in range(pi.ell):
        parts = pi.rows[r]
        p = pi.profile[r]
        for w in range(len(parts) + 1):
            cur = parts.part(w + 1)
            if w > 0 and parts.part(w) <= cur:
                continue
            box = Box(r, p + w, cur + 1)
            if box_color(box, pi.n) == i % pi.n:
                out.append(box)
    return out


def removable_boxes(pi, i):
    """Color-i boxes removable so that every diagonal stays a partition."""
    out = []
    for r in range(pi.ell):
        parts = pi.rows[r]
        p = pi.profile[r]
        for w in range(len(parts)):
            cur = parts.part(w + 1)
            if parts.part(w + 2) >= cur:
                continue
            box = Box(r, p + w, cur)
            if box_color(box, pi.n) == i % pi.n:
                out.append(box)
    return out


def cpp_brackets(pi, i):
    """"(" per addable box and ")" per removable box, ordered by t."""
    tokens = [("(", b) for b in addable_boxes(pi, i)]
    tokens += [(")", b) for b in removable_boxes(pi, i)]
    keys = [_t_key(t[1], pi.n, pi.ell) for t in tokens]
    if len(set(keys)) != len(keys):
        raise AssertionError("t values collide on addable/removable boxes")
    tokens.sort(key=lambda t: _t_key(t[1], pi.n, pi.ell))
    return tokens


def _with_box(pi, box, delta):
    r = box.x
    w = box.y - pi.profile[r]
    parts = list(pi.rows[r].parts)
    while len(parts) <= w:
        parts.append(0)
    parts[w] += delta
    while parts and parts[-1] == 0:
        parts.pop()
    rows = list(pi.rows)
    rows[r] = Partition(parts)
    return CylindricPlanePartition(pi.n, pi.ell, pi.profile, tuple(rows))


def f_cpp(pi, i):
    """Add the box at the first uncanceled "(", or None."""
    from .crystal import signature_reduce

    sig = signature_reduce(cpp_brackets(pi, i))
    if sig.first_open is None:
        return None
    out = _with_box(pi, sig.first_open, +1)
    assert is_valid_cpp(out), "f_cpp left the set of cylindric plane partitions"
    return out


def e_cpp(pi, i):
    """Remove the box at the last uncanceled ")", or None."""
    from .crystal import signature_reduce

    sig = signature_reduce(cpp_brackets(pi, i))
    if sig.last_close is None:
        return None
    out = _with_box(pi, sig.last_close, -1)
    assert is_valid_cpp(out), "e_cpp left the set of cylindric plane partitions"
    return out


# ---------------------------------------------------------------------------
# reflection and rank-level duality


def _profile_ext(pi, i):
    q, r = divmod(i, pi.ell)
    return pi.profile[r] - q * pi.n


def reflect(pi):
    """Transpose the cylinder, swapping the roles of (n, ell).

    Diagonals become columns and vice versa; the total weight over one period
    is preserved.
    """
    if not is_valid_cpp(pi):
        raise ValueError("reflect needs a valid cylindric plane partition")
    n, ell = pi.n, pi.ell
    new_profile = []
    new_rows = []
    for j in range(n):
        i = 0
        while _profile_ext(pi, i) > j:
            i += ell
        while _profile_ext(pi, i - 1) <= j:
            i -= 1
        new_profile.append(i)
        parts = []
        k = i
        while True:
            v = pi.entry(k, j)
            if v == 0:
                break
            parts.append(v)
            k += 1
        new_rows.append(Partition(parts))
    out = CylindricPlanePartition(ell, n, tuple(new_profile), tuple(new_rows))
    assert is_valid_cpp(out)
    return out


def dual_weight(w, n, ell):
    """The level-n weight of the reflected cylinder.

    For w = sum c_i Lambda_i of level ell, the dual collects one fundamental
    weight Lambda'_{c_i + c_{i+1} + ... + c_{n-1}} per i, indices mod ell.
    """
    coeffs = w.coeffs if isinstance(w, DominantWeight) else tuple(w)
    if len(coeffs) != n or sum(coeffs) != ell:
        raise ValueError("expected a level-%d weight with %d coefficients" % (ell, n))
    out = [0] * ell
    for i in range(n):
        out[sum(coeffs[i:]) % ell] += 1
    return DominantWeight(tuple(out))


def render_text(pi):
    """Plain-text grid: one line per diagonal, entries starting at its column."""
    lo = min(pi.profile)
    lines = []
    for i in range(pi.ell):
        pad = "  . " * (pi.profile[i] - lo)
        cells = "".join("%4d" % v for v in pi.rows[i].parts)
        lines.append("pi_%d |%s%s" % (i, pad, cells))
    return "\n".join(lines) + "\n"
