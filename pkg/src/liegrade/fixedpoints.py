"""Fixed-point data of the one-parameter subgroup attached to a short
grading, acting on a rational homogeneous variety of Picard number one.

The variety is the marked diagram D(k); the acting subgroup comes from a
short grading at node i.  Torus-fixed points are indexed by the Weyl orbit
of omega_k, fixed components by the orbits of the sub-Weyl-group generated
by the reflections away from i.  Each component carries its linearization
weight mu (normalized to 0 at the sink), its type as a marked subdiagram of
the deleted diagram, and the rank splitting of its normal directions.

Sign convention: nu_plus counts the normal directions whose closures
connect the component to fixed components of larger mu, nu_minus those
going down; the sink therefore has nu_minus = 0 and the source nu_plus = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .characters import WeightMultiset, decompose_character  # noqa: F401  (re-export)
from .gradings import NotShortError, is_short
from .rootcore import delete_node, height, rh_dimension
from .weyl import apply_word_to_root, longest_element, weight_orbit


@dataclass(frozen=True)
class FixedComponent:
    marking: tuple  # node labels of the deleted diagram, sorted
    mu: int
    dim: int
    nu_minus: int
    nu_plus: int
    rep_word: tuple
    orbit_size: int
    label: str  # marked-diagram rendering, e.g. "A2(1) x A2(2)"

    def to_payload(self):
        return {
            "J": list(self.marking),
            "type": self.label,
            "mu": self.mu,
            "dim": self.dim,
            "nu_minus": self.nu_minus,
            "nu_plus": self.nu_plus,
            "fixed_points": self.orbit_size,
        }


@dataclass(frozen=True)
class ActionReport:
    family: str
    rank: int
    grading_node: int
    k: int
    perp: object  # RootDatum of the deleted diagram
    ambient_dim: int
    delta: int
    components: tuple  # sorted by (mu, marking)

    @property
    def sink(self):
        return next(c for c in self.components if c.mu == 0)

    @property
    def source(self):
        return next(c for c in self.components if c.mu == self.delta)

    def to_payload(self):
        return {
            "ambient": {"type": self.family, "rank": self.rank, "k": self.k},
            "i": self.grading_node,
            "dim": self.ambient_dim,
            "delta": self.delta,
            "components": [c.to_payload() for c in self.components],
        }

    def to_json(self):
        return json.dumps(self.to_payload(), indent=2)


def restrict_to_perp(datum, perp, lam):
    """Weight coordinates over the deleted diagram, in perp node order
    (drops the coordinate of the deleted node)."""
    return tuple(lam[datum.index(lbl)] for lbl in perp.nodes)


def component_label(perp, marking):
    """Render a marked subdiagram as a product of standard marked types."""
    marking = set(marking)
    parts = []
    off = 0
    for fam, r in perp.dynkin_type.components:
        block = perp.nodes[off : off + r]
        marks = sorted(block.index(lbl) + 1 for lbl in marking if lbl in block)
        parts.append(f"{fam}{r}({','.join(map(str, marks))})" if marks else "pt")
        off += r
    shown = [p for p in parts if p != "pt"]
    return " x ".join(shown) if shown else "pt"


def enumerate_components(datum, i, k):
    """Full fixed-point report of the grading-node-i action on D(k)."""
    if not is_short(datum, i):
        raise NotShortError(f"node {i} does not induce a short grading on {datum.dynkin_type}")
    if k not in datum.nodes:
        raise ValueError(f"node {k} not in {datum.nodes}")
    perp = delete_node(datum, i)
    seed = datum.fundamental_weight(k)
    orbit = weight_orbit(datum, seed)
    words = dict(orbit.elements)
    sub_generators = tuple(j for j in datum.nodes if j != i)

    # partition the orbit into orbits of the sub-Weyl-group away from i
    assigned = {}
    groups = []
    for lam, _ in orbit.elements:
        if lam in assigned:
            continue
        members = weight_orbit(datum, lam, generators=sub_generators)
        group = [w for w, _ in members.elements]
        for w in group:
            assigned[w] = len(groups)
        groups.append((lam, group))

    i_pos = datum.index(i)
    ambient_dim = rh_dimension(datum, {k})
    tangent_roots = [b for b in datum.roots if height(datum, k, b) < 0]

    components = []
    for rep, group in groups:
        mu_frac = _sigma_of_difference(datum, i, seed, rep)
        assert mu_frac.denominator == 1
        mu = int(mu_frac)
        # mu is constant on the whole group
        for lam in group:
            assert _sigma_of_difference(datum, i, seed, lam) == mu

        dominant = [lam for lam in group if all(x >= 0 for a, x in enumerate(lam) if a != i_pos)]
        assert len(dominant) == 1
        lam_plus = dominant[0]
        marking = tuple(sorted(j for j in sub_generators if lam_plus[datum.index(j)] > 0))

        word = words[rep]
        dim = nu_minus = nu_plus = 0
        for beta in tangent_roots:
            h = height(datum, i, apply_word_to_root(datum, word, beta))
            if h == 0:
                dim += 1
            elif h < 0:
                nu_plus += 1
            else:
                nu_minus += 1
        assert dim == rh_dimension(perp, marking)
        assert dim + nu_minus + nu_plus == ambient_dim
        components.append(
            FixedComponent(marking, mu, dim, nu_minus, nu_plus, word, len(group), component_label(perp, marking))
        )

    delta = max(c.mu for c in components)
    assert sum(c.orbit_size for c in components) == len(orbit)
    assert sum(1 for c in components if c.mu == 0) == 1
    assert sum(1 for c in components if c.mu == delta) == 1
    sink = next(c for c in components if c.mu == 0)
    source = next(c for c in components if c.mu == delta)
    assert sink.nu_minus == 0 and source.nu_plus == 0
    # independent location of the source: the w0-image of the seed lies on it
    w0 = longest_element(datum)
    from .weyl import apply_word

    assert assigned[apply_word(datum, w0, seed)] == components.index(source)

    components.sort(key=lambda c: (c.mu, c.marking))
    fam, rank = datum.dynkin_type.components[0]
    return ActionReport(fam, rank, i, k, perp, ambient_dim, delta, tuple(components))


def _sigma_of_difference(datum, i, seed, lam):
    """sigma_i(seed - lam); the difference lies in the root lattice."""
    diff = tuple(s - x for s, x in zip(seed, lam))
    coords = datum.weight_to_root_coords(diff)
    return coords[datum.index(i)]


def normal_weights(datum, i, k, side):
    """Restricted-torus weight multiset of the normal module at the sink or
    the source, by direct enumeration of the grading.

    Sink: { iota*(-beta) : beta > 0, sigma_i(beta) > 0, sigma_k(beta) > 0 }.
    Source: { iota*(beta) : beta > 0, sigma_i(beta) > 0, sigma_k(w0(beta)) < 0 }.
    """
    if side not in ("sink", "source"):
        raise ValueError("side must be 'sink' or 'source'")
    if not is_short(datum, i):
        raise NotShortError(f"node {i} does not induce a short grading on {datum.dynkin_type}")
    perp = delete_node(datum, i)
    w0 = longest_element(datum)
    out = {}
    for beta in datum.positive_roots:
        if height(datum, i, beta) <= 0:
            continue
        if side == "sink":
            if height(datum, k, beta) <= 0:
                continue
            lam = datum.root_to_weight(tuple(-x for x in beta))
        else:
            if height(datum, k, apply_word_to_root(datum, w0, beta)) >= 0:
                continue
            lam = datum.root_to_weight(beta)
        w = restrict_to_perp(datum, perp, lam)
        out[w] = out.get(w, 0) + 1
    return WeightMultiset.from_dict(out)


def chamber_count(datum, i, k):
    """Number of geometric-quotient chambers: the mu-weight spread between
    source and sink."""
    return enumerate_components(datum, i, k).delta
