"""Crystal operators on partitions and abacus configurations.

All three bracket rules live here: the gap rule on arbitrary abacus
configurations, the grouped bead-set rule on descending configurations,
and the column rule on partitions.  Each builds a string of brackets,
cancels matched "()" pairs, and acts at the first uncanceled "(" (for a
lowering move) or the last uncanceled ")" (for a raising move).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import is_descending
from .partitions import BeadRow, Partition, add_ribbon, remove_ribbon


@dataclass(frozen=True)
class AffineWeight:
    """Integer coefficients of Lambda_0..Lambda_{n-1}; delta is not tracked."""

    coeffs: tuple

    def minus_simple_root(self, i):
        """Subtract alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1}."""
        n = len(self.coeffs)
        out = list(self.coeffs)
        out[i % n] -= 2
        out[(i - 1) % n] += 1
        out[(i + 1) % n] += 1
        return AffineWeight(tuple(out))


@dataclass(frozen=True)
class Signature:
    """Result of canceling matched "()" pairs in a bracket string."""

    first_open: object  # payload of first uncanceled "(", or None
    last_close: object  # payload of last uncanceled ")", or None
    n_close: int
    n_open: int


def signature_reduce(tokens):
    """Cancel "()" pairs in a sequence of ("(" | ")", payload) tokens."""
    stack = []
    closes = []
    for char, payload in tokens:
        if char == "(":
            stack.append(payload)
        elif char == ")":
            if stack:
                stack.pop()
            else:
                closes.append(payload)
        else:
            raise ValueError("bad token %r" % char)
    return Signature(
        first_open=stack[0] if stack else None,
        last_close=closes[-1] if closes else None,
        n_close=len(closes),
        n_open=len(stack),
    )


# ---------------------------------------------------------------------------
# gap rule on arbitrary abacus configurations


def abacus_brackets(psi, i):
    """Tokens over the color-i gaps, left to right, bottom row to top.

    Gap g sits between slots g-1 and g and carries color g mod n.  A bead
    that can hop right across the gap contributes "(", one that can hop left
    contributes ")".  Payload is (gap, row).
    """
    lo = min(r.bracket_window()[0] for r in psi.rows)
    hi = max(r.bracket_window()[1] for r in psi.rows)
    start = lo + ((i - lo) % psi.n)
    tokens = []
    for g in range(start, hi + 1, psi.n):
        for r_idx, row in enumerate(psi.rows):
            left = row.occupied(g - 1)
            right = row.occupied(g)
            if left and not right:
                tokens.append(("(", (g, r_idx)))
            elif right and not left:
                tokens.append((")", (g, r_idx)))
    return tokens


def _move_on_row(psi, r_idx, src_slot, delta):
    row = psi.rows[r_idx]
    j = 1
    while row.bead_slot(j) != src_slot:
        j += 1
    return psi.replace_row(r_idx, row.move_bead(j, delta))


def f_abacus(psi, i):
    """Advance the bead at the first uncanceled "(", or None."""
    sig = signature_reduce(abacus_brackets(psi, i))
    if sig.first_open is None:
        return None
    g, r_idx = sig.first_open
    return _move_on_row(psi, r_idx, g - 1, +1)


def e_abacus(psi, i):
    """Retract the bead at the last uncanceled ")", or None."""
    sig = signature_reduce(abacus_brackets(psi, i))
    if sig.last_close is None:
        return None
    g, r_idx = sig.last_close
    return _move_on_row(psi, r_idx, g, -1)


# ---------------------------------------------------------------------------
# grouped rule on descending configurations

VIRTUAL = "tail"


def descending_brackets(psi, i, extra_blocks=0):
    """Tokens of the grouped rule; payload is the bead-set index k.

    Block k contributes ")" for each k-th bead on a slot congruent to i and
    "(" for each on a slot congruent to i-1, blocks listed from the vacuum
    side in.  The infinite compact tail beyond the last displaced bead
    collapses to a run of "(" belonging to the first untouched bead set;
    those tokens carry the payload (VIRTUAL, k).  extra_blocks widens the
    window (the outcome must not change; asserted in tests).
    """
    n = psi.n
    kmax = psi.max_bead_index() + extra_blocks
    virtual_k = kmax + 1
    tokens = []
    v = sum(
        1
        for r in range(psi.ell)
        if psi.bead_position(r, virtual_k) % n == (i - 1) % n
    )
    tokens.extend([("(", (VIRTUAL, virtual_k))] * v)
    for k in range(kmax, 0, -1):
        slots = [psi.bead_position(r, k) for r in range(psi.ell)]
        n_close = sum(1 for s in slots if s % n == i % n)
        n_open = sum(1 for s in slots if s % n == (i - 1) % n)
        tokens.extend([(")", k)] * n_close)
        tokens.extend([("(", k)] * n_open)
    return tokens


def _bead_set(psi, k):
    """Beads of the k-th set as (slot, row), in column order bottom-up."""
    return sorted((psi.bead_position(r, k), r) for r in range(psi.ell))


def f_descending(psi, i):
    """Lowering via the grouped bead-set rule (descending configurations)."""
    assert is_descending(psi), "f_descending needs a descending configuration"
    sig = signature_reduce(descending_brackets(psi, i))
    if sig.first_open is None:
        return None
    k = sig.first_open
    if isinstance(k, tuple):
        k = k[1]
    beads = [(s, r) for s, r in _bead_set(psi, k) if s % psi.n == (i - 1) % psi.n]
    s, r = beads[0]
    return _move_bead_index(psi, r, k, +1)


def e_descending(psi, i):
    """Raising via the grouped bead-set rule (descending configurations)."""
    assert is_descending(psi), "e_descending needs a descending configuration"
    sig = signature_reduce(descending_brackets(psi, i))
    if sig.last_close is None:
        return None
    k = sig.last_close
    beads = [(s, r) for s, r in _bead_set(psi, k) if s % psi.n == i % psi.n]
    s, r = beads[-1]
    return _move_bead_index(psi, r, k, -1)


def _move_bead_index(psi, r, k, delta):
    return psi.replace_row(r, psi.rows[r].move_bead(k, delta))


# ---------------------------------------------------------------------------
# column rule on partitions


def partition_brackets(lam, i, n, ell):
    """Tokens over columns, left to right; payload is the column index.

    Boxes above column k are colored by floor(k / ell) mod n.  "(" marks an
    addable ell-ribbon with rightmost column k, ")" a removable one.
    """
    lam = Partition(lam)
    row = BeadRow(0, lam)
    lo = -len(lam) - ell - 1
    hi = lam.part(1) + ell + 1
    tokens = []
    for k in range(lo, hi + 1):
        if (k // ell) % n != i % n:
            continue
        src = row.occupied(k - ell)
        dst = row.occupied(k)
        if src and not dst:
            tokens.append(("(", k))
        elif dst and not src:
            tokens.append((")", k))
    return tokens


def f_partition(lam, i, n, ell):
    sig = signature_reduce(partition_brackets(lam, i, n, ell))
    if sig.first_open is None:
        return None
    return add_ribbon(lam, ell, sig.first_open)


def e_partition(lam, i, n, ell):
    sig = signature_reduce(partition_brackets(lam, i, n, ell))
    if sig.last_close is None:
        return None
    return remove_ribbon(lam, ell, sig.last_close)


# ---------------------------------------------------------------------------
# string functions and weights


def eps_phi(psi, i):
    """(eps_i, phi_i) of an abacus configuration from uncanceled brackets."""
    sig = signature_reduce(abacus_brackets(psi, i))
    return sig.n_close, sig.n_open


def eps_phi_by_iteration(x, i, apply_e, apply_f):
    """(eps_i, phi_i) by applying the operators until they vanish."""
    eps = 0
    y = apply_e(x, i)
    while y is not None:
        eps += 1
        y = apply_e(y, i)
    phi = 0
    y = apply_f(x, i)
    while y is not None:
        phi += 1
        y = apply_f(y, i)
    return eps, phi


def wt(psi):
    """phi - eps coordinatewise, as an affine weight without delta."""
    coeffs = []
    for i in range(psi.n):
        eps, phi = eps_phi(psi, i)
        coeffs.append(phi - eps)
    return AffineWeight(tuple(coeffs))


# ---------------------------------------------------------------------------
# graded crystal graph


@dataclass
class CrystalGraph:
    n: int
    layers: list  # layers[d] = sorted list of AbacusConfig at principal degree d
    edges: list  # (source config, color i, target config)

    def layer_sizes(self):
        return [len(layer) for layer in self.layers]


def crystal_graph(psi0, max_degree):
    """BFS closure of a compact descending generator under all f_i.

    Layer d holds the configurations of principal degree d; every f_i edge
    raises the degree by one.
    """
    from .abacus import weight

    if weight(psi0) != 0 or not is_descending(psi0):
        raise ValueError("crystal_graph needs a compact descending generator")
    layers = [[psi0]]
    edges = []
    for _ in range(max_degree):
        seen = {}
        for node in layers[-1]:
            for i in range(psi0.n):
                img = f_abacus(node, i)
                if img is not None:
                    edges.append((node, i, img))
                    seen[img.key()] = img
        if not seen:
            break
        layers.append(sorted(seen.values(), key=lambda c: c.key()))
    return CrystalGraph(psi0.n, layers, edges)


def graph_to_dot(graph):
    """Deterministic DOT rendering, one rank per principal degree."""
    ids = {}
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for d, layer in enumerate(graph.layers):
        decls = []
        for node in layer:
            ids[node.key()] = "n%d" % len(ids)
            decls.append('%s [label="%s"];' % (ids[node.key()], node.label()))
        lines.append("  { rank=same; %s }" % " ".join(decls))
    for src, i, dst in graph.edges:
        lines.append('  %s -> %s [label="%d"];' % (ids[src.key()], ids[dst.key()], i))
    lines.append("}")
    return "\n".join(lines) + "\n"
