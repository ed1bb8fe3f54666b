"""Classification of short and balanced gradings of the simple Lie algebras.

A node i of an irreducible diagram grades g by the alpha_i-coefficient of
each root.  The grading is short when that coefficient only takes the values
-1, 0, 1, and a short grading is balanced when conjugation by the longest
Weyl element inverts the associated one-parameter subgroup.  Both properties
are decided here by two independent criteria each and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootcore import build_root_datum, dynkin, height
from .weyl import apply_word_to_root, longest_element, w0_node_involution


class NotShortError(ValueError):
    """Raised when an operation requires a short grading and the requested
    node does not induce one."""


@dataclass(frozen=True)
class GradingReport:
    family: str
    rank: int
    node: int
    is_short: bool
    is_balanced: bool  # None when not short: balance is only defined then
    dims: tuple  # (dim g_-, dim g_0, dim g_+), root spaces plus Cartan

    def to_payload(self):
        return {
            "type": self.family,
            "rank": self.rank,
            "node": self.node,
            "short": self.is_short,
            "balanced": self.is_balanced,
            "dims": list(self.dims),
        }


def grading_pieces(datum, i):
    """Dimensions (dim g_-, dim g_0, dim g_+) of the grading by the
    alpha_i-coefficient; the Cartan subalgebra sits in g_0."""
    neg = pos = 0
    for beta in datum.roots:
        h = height(datum, i, beta)
        if h > 0:
            pos += 1
        elif h < 0:
            neg += 1
    zero = len(datum.roots) - neg - pos + datum.rank
    return (neg, zero, pos)


def is_short(datum, i):
    """True iff every root has alpha_i-coefficient in {-1, 0, 1}.

    Shortness is equivalent to the highest-root coefficient at i being 1;
    both tests are run and compared.
    """
    if len(datum.dynkin_type.components) != 1:
        raise ValueError("short gradings are classified per irreducible type")
    full_scan = all(abs(height(datum, i, b)) <= 1 for b in datum.roots)
    top = max(height(datum, i, b) for b in datum.highest_roots)
    assert full_scan == (top == 1), "shortness criteria disagree"
    return full_scan


def is_balanced(datum, i):
    """True iff the short grading at node i satisfies
    sigma_i(w0(beta)) = -sigma_i(beta) for every root beta.

    Equivalently the node i is fixed by the -w0 diagram involution; both
    criteria are computed and compared.
    """
    if not is_short(datum, i):
        raise NotShortError(f"node {i} does not induce a short grading on {datum.dynkin_type}")
    w0 = longest_element(datum)
    rootwise = all(
        height(datum, i, apply_word_to_root(datum, w0, b)) == -height(datum, i, b)
        for b in datum.roots
    )
    fixed_node = w0_node_involution(datum)[i] == i
    assert rootwise == fixed_node, "balancedness criteria disagree"
    return rootwise


def classify_type(family, rank):
    """One GradingReport per node of the given irreducible type."""
    datum = build_root_datum(dynkin(family, rank))
    out = []
    for i in datum.nodes:
        short = is_short(datum, i)
        balanced = is_balanced(datum, i) if short else None
        out.append(GradingReport(family, rank, i, short, balanced, grading_pieces(datum, i)))
    return out


def classify(family, rank_min, rank_max):
    """GradingReports for a family over an inclusive rank range; ranks
    outside the family bounds are skipped."""
    from .rootcore import InvalidTypeError

    out = []
    for r in range(rank_min, rank_max + 1):
        try:
            out.extend(classify_type(family, r))
        except InvalidTypeError:
            continue
    return out


def short_nodes(family, rank):
    return [g.node for g in classify_type(family, rank) if g.is_short]


def balanced_nodes(family, rank):
    return [g.node for g in classify_type(family, rank) if g.is_balanced]
