"""Exact Weyl-group action on weights via reduced words.

Words are lists of node labels and act right-to-left: the word [j1, ..., jm]
denotes s_{j1} s_{j2} ... s_{jm}, so s_{jm} is applied first.  This
convention is fixed globally; the fixed-point bookkeeping downstream relies
on it to place the sink at the identity coset.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_ORBIT_CAP = 10**7
ORBIT_CAP_ENV = "LIEGRADE_ORBIT_CAP"


class OrbitCapExceeded(RuntimeError):
    """Raised when an orbit enumeration grows past the configured cap."""


def orbit_cap():
    return int(os.environ.get(ORBIT_CAP_ENV, DEFAULT_ORBIT_CAP))


def reflect(datum, j, lam):
    """Simple reflection s_j on a weight in fundamental-weight coordinates:
    s_j(lam) = lam - <lam, alpha_j^vee> alpha_j."""
    pos = datum.index(j)
    pairing = lam[pos]
    if pairing == 0:
        return tuple(lam)
    return tuple(x - pairing * datum.cartan[a][pos] for a, x in enumerate(lam))


def reflect_root(datum, j, beta):
    """Simple reflection s_j on a root in simple-root coordinates."""
    pos = datum.index(j)
    pairing = sum(datum.cartan[pos][b] * beta[b] for b in range(datum.rank))
    if pairing == 0:
        return tuple(beta)
    return tuple(x - pairing * (a == pos) for a, x in enumerate(beta))


def apply_word(datum, word, lam):
    """Apply a Weyl word (right-to-left) to a weight."""
    for j in reversed(word):
        lam = reflect(datum, j, lam)
    return lam


def apply_word_to_root(datum, word, beta):
    for j in reversed(word):
        beta = reflect_root(datum, j, beta)
    return beta


@dataclass(frozen=True)
class WeightOrbit:
    """A full W-orbit of a weight, each element with a shortest word mapping
    the seed to it."""

    seed: tuple
    elements: tuple  # of (weight, word) pairs, in BFS order

    def __len__(self):
        return len(self.elements)

    def word_for(self, lam):
        for w, word in self.elements:
            if w == lam:
                return word
        raise KeyError(lam)


def weight_orbit(datum, seed, generators=None, cap=None):
    """BFS orbit of a weight under the reflections with labels in
    ``generators`` (all nodes by default), with shortest words.

    The BFS frontier is processed in lexicographic order of the weight
    coordinates so that the enumeration is deterministic.
    """
    if generators is None:
        generators = datum.nodes
    cap = orbit_cap() if cap is None else cap
    seed = tuple(seed)
    words = {seed: ()}
    order = [seed]
    frontier = [seed]
    while frontier:
        frontier.sort()
        nxt = []
        for lam in frontier:
            word = words[lam]
            for j in generators:
                mu = reflect(datum, j, lam)
                if mu not in words:
                    words[mu] = (j,) + word
                    order.append(mu)
                    nxt.append(mu)
                    if len(order) > cap:
                        raise OrbitCapExceeded(f"orbit of {seed} exceeds cap {cap}")
        frontier = nxt
    return WeightOrbit(seed, tuple((lam, words[lam]) for lam in order))


def longest_element(datum):
    """A reduced word for w0: push rho = (1,...,1) to the antidominant
    chamber by greedy reflections; the reversed sequence of labels is w0."""
    lam = (1,) * datum.rank
    applied = []
    while True:
        j = next((datum.nodes[a] for a, x in enumerate(lam) if x > 0), None)
        if j is None:
            break
        lam = reflect(datum, j, lam)
        applied.append(j)
    return tuple(reversed(applied))


def w0_node_involution(datum):
    """The diagram automorphism j -> j' with w0(alpha_j) = -alpha_{j'},
    returned as a dict over the node labels.  Requires an irreducible type
    (apply per component otherwise)."""
    if len(datum.dynkin_type.components) != 1:
        raise ValueError("w0 involution is defined per irreducible component")
    w0 = longest_element(datum)
    out = {}
    for j in datum.nodes:
        image = apply_word_to_root(datum, w0, datum.simple_root(j))
        neg = tuple(-x for x in image)
        try:
            pos = neg.index(1)
        except ValueError:
            raise AssertionError("w0 did not map a simple root to a negative simple root")
        assert sum(abs(x) for x in neg) == 1
        out[j] = datum.nodes[pos]
    return out


def weyl_order(dynkin_type):
    """Order of the Weyl group, from the classical closed forms."""
    import math

    exceptional = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}
    total = 1
    for fam, r in dynkin_type.components:
        if fam == "A":
            total *= math.factorial(r + 1)
        elif fam in ("B", "C"):
            total *= 2**r * math.factorial(r)
        elif fam == "D":
            total *= 2 ** (r - 1) * math.factorial(r)
        else:
            total *= exceptional[(fam, r)]
    return total
