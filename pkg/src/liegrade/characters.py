"""Exact characters of irreducible modules and greedy character peeling.

Multiplicities are computed with Freudenthal's recursion, entirely in
rational arithmetic.  Characters may be decomposed with respect to a
sub-diagram (a Levi factor): the weights keep their full coordinate vectors,
and only the reflections of the chosen active nodes are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootcore import delete_node
from .weyl import reflect

MAX_MODULE_RANK = 10**4
MAX_PEEL_RANK = 7


class CharacterCapError(RuntimeError):
    """Raised when a requested module exceeds the desk-scale caps."""


class NotInvariantError(ValueError):
    """Raised when a multiset fails Weyl invariance; carries the node."""

    def __init__(self, node):
        super().__init__(f"multiset is not invariant under the reflection at node {node}")
        self.node = node


@dataclass(frozen=True)
class WeightMultiset:
    """An exact multiset of weights: map from coordinate tuple to positive
    multiplicity."""

    entries: tuple  # sorted tuple of (weight, multiplicity)

    @staticmethod
    def from_dict(d):
        return WeightMultiset(tuple(sorted((w, m) for w, m in d.items() if m)))

    def to_dict(self):
        return dict(self.entries)

    def total(self):
        return sum(m for _, m in self.entries)


@lru_cache(maxsize=None)
def symmetrizer(datum):
    """Half root lengths d_a = (alpha_a, alpha_a)/2 normalized to 1 at the
    first node of each component, making d_a * cartan[a][b] symmetric."""
    n = datum.rank
    d = [None] * n
    for a in range(n):
        if d[a] is not None:
            continue
        d[a] = Fraction(1)
        stack = [a]
        while stack:
            x = stack.pop()
            for y in range(n):
                if datum.cartan[x][y] != 0 and x != y and d[y] is None:
                    d[y] = d[x] * Fraction(datum.cartan[x][y], datum.cartan[y][x])
                    stack.append(y)
    return tuple(d)


def _inner_weight_root(datum, lam, beta):
    """(lam, beta) for lam in weight coordinates and beta in the root
    lattice given by simple-root coordinates."""
    d = symmetrizer(datum)
    return sum(beta[a] * lam[a] * d[a] for a in range(datum.rank))


def weyl_dimension(datum, lam):
    """Dimension of the irreducible module with highest weight lam."""
    if any(x < 0 for x in lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    rho = (1,) * datum.rank
    num = den = Fraction(1)
    lam_rho = tuple(x + 1 for x in lam)
    for beta in datum.positive_roots:
        num *= _inner_weight_root(datum, lam_rho, beta)
        den *= _inner_weight_root(datum, rho, beta)
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


def irreducible_character(datum, lam, cap=MAX_MODULE_RANK):
    """Weights of the irreducible module with highest weight lam, as a dict
    weight -> multiplicity, by Freudenthal's recursion."""
    lam = tuple(lam)
    n = datum.rank
    dim = weyl_dimension(datum, lam)
    if dim > cap:
        raise CharacterCapError(f"module of rank {dim} exceeds cap {cap}")
    d = symmetrizer(datum)
    roots_w = [(beta, datum.root_to_weight(beta)) for beta in datum.positive_roots]
    alpha_cols = [tuple(datum.cartan[a][j] for a in range(n)) for j in range(n)]

    mult = {lam: 1}
    offset = {lam: (0,) * n}  # simple-root coordinates of lam - mu
    level = [lam]
    while level:
        candidates = {}
        for mu in level:
            off = offset[mu]
            for j in range(n):
                nu = tuple(mu[a] - alpha_cols[j][a] for a in range(n))
                if nu not in candidates:
                    candidates[nu] = tuple(o + (a == j) for a, o in enumerate(off))
        level = []
        for nu, off in sorted(candidates.items()):
            acc = Fraction(0)
            for beta, beta_w in roots_w:
                t = 1
                while True:
                    up = tuple(nu[a] + t * beta_w[a] for a in range(n))
                    m = mult.get(up)
                    if not m:
                        break
                    acc += m * _inner_weight_root(datum, up, beta)
                    t += 1
            if acc == 0:
                continue
            # (lam + nu + 2 rho, lam - nu)
            shifted = tuple(lam[a] + nu[a] + 2 for a in range(n))
            den = sum(off[a] * shifted[a] * d[a] for a in range(n))
            m = 2 * acc / den
            assert m.denominator == 1 and m > 0
            mult[nu] = int(m)
            offset[nu] = off
            level.append(nu)
    assert sum(mult.values()) == dim
    return mult


def _levi_datum(datum, active):
    levi = datum
    for lbl in datum.nodes:
        if lbl not in active:
            levi = delete_node(levi, lbl)
    return levi


def decompose_character(datum, weights, active=None, cap=MAX_MODULE_RANK):
    """Greedy peeling of a character into irreducible summands.

    ``weights`` is a WeightMultiset (or dict) of full coordinate vectors over
    ``datum``; ``active`` restricts the acting reflections to a sub-diagram
    (all nodes by default), so that characters of parabolic Levi factors can
    be peeled while keeping the central coordinates.  Returns a list of
    (highest weight, multiplicity) pairs; re-summing the corresponding
    irreducible characters reproduces the input exactly.
    """
    if isinstance(weights, WeightMultiset):
        remaining = weights.to_dict()
    else:
        remaining = dict(weights)
    active = list(datum.nodes) if active is None else sorted(active)
    if datum.rank > MAX_PEEL_RANK:
        raise CharacterCapError(f"peeling capped at rank {MAX_PEEL_RANK}")

    for j in active:
        for w, m in remaining.items():
            if remaining.get(reflect(datum, j, w), 0) != m:
                raise NotInvariantError(j)

    if not active:
        return sorted(remaining.items())

    levi = _levi_datum(datum, active)
    d = symmetrizer(datum)
    n = datum.rank

    def height_key(w):
        # (w, rho) strictly decreases along positive roots; ties broken
        # lexicographically for determinism
        c = datum.weight_to_root_coords(w)
        return (sum(c[a] * d[a] for a in range(n)), w)

    summands = []
    while remaining:
        lam = max(remaining, key=height_key)
        for j in active:
            if lam[datum.index(j)] < 0:
                raise ValueError(f"greedy highest weight {lam} is not dominant at node {j}")
        m = remaining[lam]
        lam_levi = tuple(lam[datum.index(j)] for j in levi.nodes)
        char = irreducible_character(levi, lam_levi, cap=cap)
        summands.append((lam, m))
        for mu_levi, mu_mult in char.items():
            off = levi.weight_to_root_coords(tuple(l - m_ for l, m_ in zip(lam_levi, mu_levi)))
            mu = list(lam)
            for pos, lbl in enumerate(levi.nodes):
                c = off[pos]
                assert c.denominator == 1
                j = datum.index(lbl)
                for a in range(n):
                    mu[a] -= int(c) * datum.cartan[a][j]
            mu = tuple(mu)
            left = remaining.get(mu, 0) - m * mu_mult
            if left < 0:
                raise ValueError(f"character peeling went negative at {mu}")
            if left:
                remaining[mu] = left
            else:
                remaining.pop(mu, None)
    return summands


def summand_rank(datum, active, lam):
    """Rank of the Levi-irreducible summand with highest weight lam (full
    coordinates over datum)."""
    levi = _levi_datum(datum, sorted(active)) if active else None
    if levi is None:
        return 1
    return weyl_dimension(levi, tuple(lam[datum.index(j)] for j in levi.nodes))
