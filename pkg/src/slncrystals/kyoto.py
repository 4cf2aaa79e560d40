"""The level-ell perfect crystal of one-row fillings and semi-infinite paths.

An element of the perfect crystal is a weakly increasing ell-tuple with
values in {1/2, 3/2, ..., n - 1/2}, stored as the integers 0..n-1 (add 1/2
to recover the usual entries).  A path is a semi-infinite tensor product
... x b_3 x b_2 x b_1 of such elements that agrees with the ground state
path of its highest weight in all but finitely many positions.

to_path is the crystal isomorphism sending a tight descending abacus
configuration to the path whose k-th element collects the residues of the
k-th beads, one per row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import (
    DominantWeight,
    compactify,
    highest_weight,
    highest_weight_config,
    is_descending,
    is_tight,
)
from .crystal import signature_reduce


@dataclass(frozen=True)
class PerfectElem:
    entries: tuple  # sorted, each in [0, n)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(int(e) for e in self.entries)))

    def to_json(self):
        return list(self.entries)


def all_perfect_elems(n, ell):
    """Every weakly increasing ell-tuple over 0..n-1."""
    out = []

    def build(prefix, lo):
        if len(prefix) == ell:
            out.append(PerfectElem(tuple(prefix)))
            return
        for v in range(lo, n):
            build(prefix + [v], v)

    build([], 0)
    return out


def f_perfect(b, i, n):
    """Raise the rightmost entry i-1 to i; for i = 0, turn an n-1 into 0."""
    entries = list(b.entries)
    i = i % n
    src = (i - 1) % n
    if src not in entries:
        return None
    if i == 0:
        idx = entries.index(n - 1)
    else:
        idx = len(entries) - 1 - entries[::-1].index(src)
    entries[idx] = i
    return PerfectElem(tuple(entries))


def e_perfect(b, i, n):
    """Inverse of f_perfect."""
    entries = list(b.entries)
    i = i % n
    if i not in entries:
        return None
    idx = entries.index(i)
    entries[idx] = (i - 1) % n
    return PerfectElem(tuple(entries))


def eps_phi_perfect(b, n):
    """(eps, phi) as dominant weights, computed by iterating the operators."""
    eps = []
    phi = []
    for i in range(n):
        m = 0
        y = e_perfect(b, i, n)
        while y is not None:
            m += 1
            y = e_perfect(y, i, n)
        eps.append(m)
        m = 0
        y = f_perfect(b, i, n)
        while y is not None:
            m += 1
            y = f_perfect(y, i, n)
        phi.append(m)
    return DominantWeight(tuple(eps)), DominantWeight(tuple(phi))


_ground_cache = {}


def _ground_chain(weight_coeffs, n, ell, upto):
    """Ground state elements b_1..b_upto for the given highest weight."""
    key = (weight_coeffs, n, ell)
    chain = _ground_cache.setdefault(key, [])
    elems = all_perfect_elems(n, ell)
    if chain:
        target = eps_phi_perfect(chain[-1], n)[0]
    else:
        target = DominantWeight(weight_coeffs)
    while len(chain) < upto:
        matches = [b for b in elems if eps_phi_perfect(b, n)[1] == target]
        if len(matches) != 1:
            raise AssertionError(
                "ground chain link is not unique for %s" % (target,)
            )
        chain.append(matches[0])
        target = eps_phi_perfect(matches[0], n)[0]
    return chain


@dataclass(frozen=True)
class Path:
    """A path in the semi-infinite tensor power of the perfect crystal."""

    n: int
    ell: int
    weight: DominantWeight
    deviations: tuple  # sorted ((k, PerfectElem), ...), all differing from ground

    def ground(self, k):
        return _ground_chain(self.weight.coeffs, self.n, self.ell, k)[k - 1]

    def element(self, k):
        for pos, elem in self.deviations:
            if pos == k:
                return elem
        return self.ground(k)

    def last_position(self):
        return max((k for k, _ in self.deviations), default=0)

    def to_json(self):
        return {
            "n": self.n,
            "ell": self.ell,
            "weight": list(self.weight.coeffs),
            "deviations": {str(k): e.to_json() for k, e in self.deviations},
        }

    @classmethod
    def from_json(cls, data):
        devs = tuple(
            sorted(
                (int(k), PerfectElem(tuple(v)))
                for k, v in data.get("deviations", {}).items()
            )
        )
        return _pruned_path(
            int(data["n"]), int(data["ell"]), DominantWeight(tuple(data["weight"])), devs
        )


def _pruned_path(n, ell, w, deviations):
    chain_len = max((k for k, _ in deviations), default=0)
    chain = _ground_chain(w.coeffs, n, ell, chain_len)
    kept = tuple(
        (k, e) for k, e in sorted(deviations) if chain[k - 1] != e
    )
    return Path(n, ell, w, kept)


def ground_state_path(w, n, ell):
    """The unique path with phi(b_1) = w and eps(b_k) = phi(b_{k+1})."""
    if isinstance(w, DominantWeight):
        coeffs = w.coeffs
    else:
        coeffs = tuple(w)
    if sum(coeffs) != ell:
        raise ValueError("weight level must equal ell")
    _ground_chain(coeffs, n, ell, 1)  # force existence/uniqueness check
    return Path(n, ell, DominantWeight(coeffs), ())


def path_brackets(path, i, extra=0):
    """Bracket tokens for the signature rule, rightmost factor last.

    The untouched ground tail collapses to a run of "(" owned by the first
    ground position beyond the window; widening the window with `extra` whole
    positions must not change any outcome (asserted in tests).
    """
    K = path.last_position() + extra
    n = path.n
    tokens = []
    eps, phi = eps_phi_perfect(path.ground(K + 1), n)
    tokens.extend([("(", K + 1)] * phi.coeffs[i % n])
    for k in range(K, 0, -1):
        eps, phi = eps_phi_perfect(path.element(k), n)
        tokens.extend([(")", k)] * eps.coeffs[i % n])
        tokens.extend([("(", k)] * phi.coeffs[i % n])
    return tokens


def _with_element(path, k, elem):
    devs = tuple((p, e) for p, e in path.deviations if p != k) + ((k, elem),)
    return _pruned_path(path.n, path.ell, path.weight, devs)


def f_path(path, i):
    sig = signature_reduce(path_brackets(path, i))
    if sig.first_open is None:
        return None
    k = sig.first_open
    elem = f_perfect(path.element(k), i, path.n)
    assert elem is not None
    return _with_element(path, k, elem)


def e_path(path, i):
    sig = signature_reduce(path_brackets(path, i))
    if sig.last_close is None:
        return None
    k = sig.last_close
    elem = e_perfect(path.element(k), i, path.n)
    assert elem is not None
    return _with_element(path, k, elem)


def eps_phi_path(path, i):
    sig = signature_reduce(path_brackets(path, i))
    return sig.n_close, sig.n_open


def to_path(psi):
    """The path whose k-th element lists the k-th bead residues of psi."""
    if not is_descending(psi) or not is_tight(psi):
        raise ValueError("to_path needs a tight descending configuration")
    w = highest_weight(compactify(psi))
    kmax = psi.max_bead_index()
    devs = []
    for k in range(1, kmax + 1):
        elem = PerfectElem(
            tuple(psi.bead_position(r, k) % psi.n for r in range(psi.ell))
        )
        devs.append((k, elem))
    return _pruned_path(psi.n, psi.ell, w, tuple(devs))


def from_path(path):
    """Inverse of to_path, by unwinding to the ground path and replaying."""
    from .crystal import e_abacus, f_abacus

    moves = []
    p = path
    guard = 0
    while p.deviations:
        for i in range(path.n):
            q = e_path(p, i)
            if q is not None:
                moves.append(i)
                p = q
                break
        else:
            raise AssertionError("non-ground path with no raising move")
        guard += 1
        if guard > 10000:
            raise AssertionError("unwinding did not terminate")
    psi = highest_weight_config(path.weight, path.n, path.ell)
    for i in reversed(moves):
        psi = f_abacus(psi, i)
        assert psi is not None
    return psi
