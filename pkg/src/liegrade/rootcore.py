"""Exact root-system combinatorics for the finite Dynkin types.

Roots are stored as integer coefficient vectors in the simple-root basis,
weights as integer vectors in the fundamental-weight basis.  With the Cartan
matrix convention

    cartan[a][b] = <alpha_b, alpha_a^vee> = 2 (alpha_a, alpha_b) / (alpha_a, alpha_a)

the conversion from root coordinates to weight coordinates is multiplication
by the Cartan matrix, and every computation stays in the integers (no inner
product normalization is needed for the non-simply-laced types).

Node numbering follows Bourbaki within each irreducible component:

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (n short)
    C_n   1 - 2 - ... - (n-1) <= n          (n long)
    D_n   1 - 2 - ... - (n-2) < (n-1, n)
    E_n   1 - 3 - 4 - 5 - 6 (- 7 (- 8)),  2 attached to 4
    F_4   1 - 2 => 3 - 4
    G_2   1 <<= 2                           (1 short)

Reducible types are first class: node labels are global indices across
components, and diagrams obtained by deleting a node keep the labels of the
parent diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

class InvalidTypeError(ValueError):
    """Raised for a family/rank combination outside the finite list."""


def _check_family_rank(family, rank):
    if family not in FAMILIES:
        raise InvalidTypeError(f"unknown family {family!r}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not ok:
        raise InvalidTypeError(f"invalid rank {rank} for family {family}")


def simple_cartan(family, rank):
    """Cartan matrix of an irreducible type, Bourbaki numbering, as a tuple
    of tuples with the convention described in the module docstring."""
    _check_family_rank(family, rank)
    n = rank
    c = [[2 if a == b else 0 for b in range(n)] for a in range(n)]

    def join(a, b, ab=-1, ba=-1):
        c[a][b] = ab
        c[b][a] = ba

    if family in ("A", "B", "C"):
        for a in range(n - 1):
            join(a, a + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2
        if family == "C" and n >= 2:
            c[n - 2][n - 1] = -2
    elif family == "D":
        for a in range(n - 2):
            join(a, a + 1)
        join(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            join(a, b)
        join(1, 3)
    elif family == "F":
        join(0, 1)
        join(1, 2, ab=-1, ba=-2)  # alpha_3 short
        join(2, 3)
    elif family == "G":
        join(0, 1, ab=-3, ba=-1)  # alpha_1 short
    return tuple(tuple(row) for row in c)


@dataclass(frozen=True)
class DynkinType:
    """A possibly reducible Dynkin type: a list of (family, rank) pairs.

    Node labels are the global indices 1..n across the components, Bourbaki
    numbering within each component.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple((f, int(r)) for f, r in self.components)
        for f, r in comps:
            _check_family_rank(f, r)
        object.__setattr__(self, "components", comps)

    @property
    def rank(self):
        return sum(r for _, r in self.components)

    def cartan(self):
        n = self.rank
        c = [[0] * n for _ in range(n)]
        off = 0
        for fam, r in self.components:
            blk = simple_cartan(fam, r)
            for a in range(r):
                for b in range(r):
                    c[off + a][off + b] = blk[a][b]
            off += r
        return tuple(tuple(row) for row in c)

    def __str__(self):
        if not self.components:
            return "0"
        return " x ".join(f"{f}{r}" for f, r in self.components)


def dynkin(family, rank):
    return DynkinType(((family, rank),))


def _close_roots(cartan):
    """All roots of the root system with the given Cartan matrix, generated
    as the orbit of the simple roots under the simple reflections."""
    n = len(cartan)
    simple = [tuple(1 if a == b else 0 for b in range(n)) for a in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for j in range(n):
            pair = sum(cartan[j][b] * beta[b] for b in range(n))
            if pair == 0:
                continue
            new = list(beta)
            new[j] -= pair
            new = tuple(new)
            if new not in seen:
                seen.add(new)
                queue.append(new)
        neg = tuple(-x for x in beta)
        if neg not in seen:
            seen.add(neg)
            queue.append(neg)
    return sorted(seen)


@dataclass(frozen=True)
class RootDatum:
    """A root system together with its weight-lattice bookkeeping.

    ``nodes`` carries the global labels of the simple roots; coordinate
    vectors (roots and weights alike) are indexed positionally in the order
    of ``nodes``.  All values are immutable after construction.
    """

    dynkin_type: DynkinType
    cartan: tuple
    nodes: tuple
    roots: tuple
    positive_roots: tuple
    _pos: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    @property
    def rank(self):
        return len(self.nodes)

    def index(self, node):
        """Position of a global node label."""
        return self._pos[node]

    def simple_root(self, node):
        """Simple root alpha_node in root coordinates."""
        j = self.index(node)
        return tuple(1 if a == j else 0 for a in range(self.rank))

    def fundamental_weight(self, node):
        """omega_node in fundamental-weight coordinates."""
        j = self.index(node)
        return tuple(1 if a == j else 0 for a in range(self.rank))

    def root_to_weight(self, beta):
        """Pairings <beta, alpha_a^vee> of a root with all simple coroots."""
        return tuple(
            sum(self.cartan[a][b] * beta[b] for b in range(self.rank))
            for a in range(self.rank)
        )

    def weight_to_root_coords(self, lam):
        """Express a weight vector in the simple-root basis (rational)."""
        return _mat_solve(self.cartan, lam)

    @property
    def highest_roots(self):
        """Highest root of each irreducible component."""
        out = []
        off = 0
        for _, r in self.dynkin_type.components:
            block = [b for b in self.positive_roots if any(b[off + a] for a in range(r))]
            out.append(max(block, key=lambda b: sum(b)))
            off += r
        return out

    def to_json(self):
        return json.dumps(
            {
                "type": [[f, r] for f, r in self.dynkin_type.components],
                "nodes": list(self.nodes),
                "cartan": [list(row) for row in self.cartan],
                "roots": [list(b) for b in self.roots],
            }
        )

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        typ = DynkinType(tuple((f, r) for f, r in data["type"]))
        datum = build_root_datum(typ)
        if list(datum.nodes) != data["nodes"] or [list(r) for r in datum.cartan] != data["cartan"]:
            raise ValueError("serialized datum is inconsistent with its type")
        if sorted(tuple(b) for b in data["roots"]) != list(datum.roots):
            raise ValueError("serialized root set is inconsistent with its type")
        return datum


@lru_cache(maxsize=None)
def _mat_inverse(cartan):
    n = len(cartan)
    aug = [[Fraction(cartan[a][b]) for b in range(n)] + [Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                g = aug[r][col]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _mat_solve(cartan, vec):
    inv = _mat_inverse(tuple(tuple(row) for row in cartan))
    n = len(inv)
    return tuple(sum(inv[a][b] * vec[b] for b in range(n)) for a in range(n))


def _make_datum(dynkin_type, cartan, nodes):
    roots = _close_roots(cartan)
    positive = tuple(b for b in roots if all(x >= 0 for x in b))
    negative = {tuple(-x for x in b) for b in positive}
    assert negative == {b for b in roots if b not in positive}, "roots do not split by sign"
    datum = RootDatum(dynkin_type, tuple(tuple(r) for r in cartan), tuple(nodes), tuple(roots), positive)
    datum._pos.update({lbl: a for a, lbl in enumerate(nodes)})
    return datum


@lru_cache(maxsize=None)
def build_root_datum(dynkin_type):
    """Complete root system of a (possibly reducible) Dynkin type, with
    global node labels 1..n."""
    if isinstance(dynkin_type, tuple):
        dynkin_type = DynkinType(dynkin_type)
    return _make_datum(dynkin_type, dynkin_type.cartan(), range(1, dynkin_type.rank + 1))


@dataclass(frozen=True)
class HeightMap:
    """The linear functional on the root lattice summing the coefficients of
    the simple roots with labels in ``marked``."""

    marked: frozenset

    def __post_init__(self):
        object.__setattr__(self, "marked", frozenset(self.marked))
        if not self.marked:
            raise ValueError("marked set must be nonempty")


def _marked_set(sigma):
    if isinstance(sigma, HeightMap):
        return sigma.marked
    if isinstance(sigma, int):
        return {sigma}
    return set(sigma)


def height(datum, sigma, beta):
    """sigma_J-height of a root given in simple-root coordinates."""
    return sum(beta[datum.index(j)] for j in _marked_set(sigma))


def weight_height(datum, sigma, lam):
    """sigma_J evaluated on a weight; rational unless lam is in the root
    lattice."""
    coords = datum.weight_to_root_coords(lam)
    return sum(coords[datum.index(j)] for j in _marked_set(sigma))


def rh_dimension(datum, marked):
    """Dimension of the rational homogeneous variety marked by the node set
    ``marked``: the number of positive roots of positive sigma_J-height.

    The empty marking gives 0 (an isolated point).
    """
    marked = set(marked)
    if not marked:
        return 0
    if not marked <= set(datum.nodes):
        raise ValueError(f"marking {marked} outside node set {datum.nodes}")
    return sum(1 for b in datum.positive_roots if height(datum, marked, b) > 0)


def delete_node(datum, i):
    """The root datum of the diagram with node ``i`` removed.

    The remaining nodes keep their labels from the parent diagram; the
    component structure is re-identified against the standard types.
    """
    keep = [lbl for lbl in datum.nodes if lbl != i]
    if len(keep) == len(datum.nodes):
        raise ValueError(f"node {i} not in {datum.nodes}")
    idx = [datum.index(lbl) for lbl in keep]
    sub = [[datum.cartan[a][b] for b in idx] for a in idx]
    comps = identify_diagram(sub, keep)
    typ = DynkinType(tuple((f, r) for f, r, _ in comps))
    order = [lbl for _, _, node_map in comps for lbl in node_map]
    pos = {lbl: keep.index(lbl) for lbl in keep}
    reordered = [[sub[pos[a]][pos[b]] for b in order] for a in order]
    return _make_datum(typ, reordered, order)


def restrict_weight(datum, i, lam):
    """Restriction of a weight to the torus of the deleted diagram: drop the
    coordinate of node ``i`` (this kills omega_i and fixes the others)."""
    return tuple(x for a, x in enumerate(lam) if datum.nodes[a] != i)


def identify_diagram(cartan, labels):
    """Classify a valid Cartan matrix into standard irreducible components.

    Returns a list of (family, rank, node_map) triples where ``node_map`` is
    the tuple of input labels in Bourbaki order (entry b = label carrying the
    standard node b+1).  Among the automorphic possibilities the
    lexicographically smallest node_map is chosen, and path diagrams are
    always reported as type A.  Components are sorted by smallest label.
    """
    n = len(labels)
    comps = []
    unseen = set(range(n))
    while unseen:
        start = min(unseen)
        block = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop()
            for b in range(n):
                if b in unseen and b not in block and cartan[a][b] != 0:
                    block.add(b)
                    frontier.append(b)
        unseen -= block
        comps.append(sorted(block))

    out = []
    for block in comps:
        r = len(block)
        found = None
        for fam in FAMILIES:
            try:
                std = simple_cartan(fam, r)
            except InvalidTypeError:
                continue
            best = None
            for perm in permutations(block):
                if all(
                    cartan[perm[a]][perm[b]] == std[a][b]
                    for a in range(r)
                    for b in range(r)
                ):
                    cand = tuple(labels[p] for p in perm)
                    if best is None or cand < best:
                        best = cand
            if best is not None:
                found = (fam, r, best)
                break
        if found is None:
            raise ValueError("matrix block is not a standard Cartan matrix")
        out.append(found)
    return sorted(out, key=lambda c: min(c[2]))
