"""Exact matrix models of the classical one-parameter flows on
(isotropic) Grassmannians.

A point is a full-column-rank rational matrix of basis vectors (columns);
isotropy with respect to the frozen block forms below is checked exactly.
The flows scale the ambient coordinates by t-powers in {-1, 0, 1}; limits
at t -> 0 and t -> infinity are computed over the rational function field
Q(s) with explicit valuations, never numerically.

Frozen coordinate conventions (V = ambient space):

  split action (used for A/C/D Grassmannians, the sigma_n-type flows):
      t . (x_0, ..., x_{2n-1}) = (t x_0, ..., t x_{n-1}, x_n, ..., x_{2n-1}),
      V_- = <e_0 .. e_{n-1}>  (weight 1),  V_+ = <e_n .. e_{2n-1}>  (weight 0).

  quadric action (the sigma_1-type flows on B/D quadric Grassmannians):
      weight 1 on x_0, weight -1 on x_n, weight 0 elsewhere;
      V_- = <e_0>, V_+ = <e_n>, V_0 = the rest.

  forms: C: [[0, I], [-I, 0]];  D: [[0, I], [I, 0]];
         B (dim 2n+1): [[0, I, 0], [I, 0, 0], [0, 0, 1]].

Under these conventions the limit at t -> 0 is the sink-directed limit
(a graph [I; B] over V_- degenerates to [I; 0] = [V_-]), and the limit at
t -> infinity is the source-directed one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg as rl


class NotIsotropicError(ValueError):
    pass


class NotFixedError(ValueError):
    pass


class IndeterminacyError(ValueError):
    """Chart inversion of a singular matrix; carries the vanishing
    determinant/norm."""

    def __init__(self, vanishing):
        super().__init__(f"point lies in the indeterminacy locus (vanishing {vanishing})")
        self.vanishing = vanishing


def form_matrix(family, n):
    """The frozen block form of the family, or None for A."""
    if family == "A":
        return None
    if family == "C":
        top = [[Fraction(0)] * n + [Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        bot = [[-Fraction(int(a == b)) for b in range(n)] + [Fraction(0)] * n for a in range(n)]
        return tuple(tuple(r) for r in top + bot)
    if family == "D":
        top = [[Fraction(0)] * n + [Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        bot = [[Fraction(int(a == b)) for b in range(n)] + [Fraction(0)] * n for a in range(n)]
        return tuple(tuple(r) for r in top + bot)
    if family == "B":
        dim = 2 * n + 1
        q = [[Fraction(0)] * dim for _ in range(dim)]
        for a in range(n):
            q[a][n + a] = q[n + a][a] = Fraction(1)
        q[2 * n][2 * n] = Fraction(1)
        return tuple(tuple(r) for r in q)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class FlowSpec:
    """A one-parameter flow on the family's Grassmannians: `split` is the
    sigma_n-type action, `quadric` the sigma_1-type one."""

    family: str  # A | B | C | D
    n: int
    action: str = None  # "split" | "quadric"; default per family

    def __post_init__(self):
        action = self.action
        if action is None:
            action = "quadric" if self.family == "B" else "split"
        if action not in ("split", "quadric"):
            raise ValueError(f"unknown action {self.action!r}")
        if self.family == "B" and action != "quadric":
            raise ValueError("the B model only carries the quadric action")
        if self.family == "A" and action != "split":
            raise ValueError("the A model only carries the split action")
        object.__setattr__(self, "action", action)

    @property
    def ambient_dim(self):
        return 2 * self.n + 1 if self.family == "B" else 2 * self.n

    @property
    def weights(self):
        dim = self.ambient_dim
        if self.action == "split":
            return (1,) * self.n + (0,) * self.n
        w = [0] * dim
        w[0] = 1
        w[self.n] = -1
        return tuple(w)

    @property
    def form(self):
        return form_matrix(self.family, self.n)


@dataclass(frozen=True)
class GrassPoint:
    """A k-dimensional subspace, as the column span of a full-rank basis
    matrix; optionally isotropic for one of the frozen forms."""

    basis: tuple  # ambient_dim x k rationals
    family: str = "A"
    n: int = None

    def __post_init__(self):
        basis = rl.as_matrix(self.basis)
        object.__setattr__(self, "basis", basis)
        n = self.n
        if n is None:
            n = len(basis) // 2
            object.__setattr__(self, "n", n)
        if len(basis) != (2 * n + 1 if self.family == "B" else 2 * n):
            raise ValueError("basis has the wrong ambient dimension")
        if rl.rank(basis) != self.k:
            raise ValueError("basis columns are linearly dependent")
        q = form_matrix(self.family, n)
        if q is not None:
            gram = rl.mat_mul(rl.mat_mul(rl.transpose(basis), q), basis)
            if any(any(x != 0 for x in row) for row in gram):
                raise NotIsotropicError("subspace is not isotropic for the frozen form")

    @property
    def ambient_dim(self):
        return len(self.basis)

    @property
    def k(self):
        return len(self.basis[0])

    def spans_same(self, other):
        if self.k != other.k or self.ambient_dim != other.ambient_dim:
            return False
        joint = tuple(ra + rb for ra, rb in zip(self.basis, other.basis))
        return rl.rank(joint) == self.k


# -- Laurent polynomials in s as {exponent: coefficient} dicts --------------


def _lp_add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _lp_scale(c, p, shift=0):
    c = Fraction(c)
    return {e + shift: c * v for e, v in p.items() if c * v}


def _lp_val(p):
    return min(p) if p else None


def _col_val(col):
    vals = [_lp_val(p) for p in col if p]
    return min(vals) if vals else None


def flow_limit(point, flow, direction):
    """The limit of the flow through the point, at t -> 0 (`direction="0"`)
    or t -> infinity (`direction="inf"`).

    Rows are scaled by s^(-w) resp. s^(+w) (with s -> 0 in both cases, s
    standing for t resp. 1/t under the conventions in the module
    docstring), columns are reduced over Q(s) until their valuation-zero
    parts are independent, and the result is evaluated at s = 0.
    """
    if direction not in ("0", "inf"):
        raise ValueError("direction must be '0' or 'inf'")
    w = flow.weights
    if len(w) != point.ambient_dim:
        raise ValueError("flow and point live in different ambient spaces")
    sign = -1 if direction == "0" else 1
    k = point.k
    cols = [
        [({sign * w[r]: point.basis[r][c]} if point.basis[r][c] else {}) for r in range(point.ambient_dim)]
        for c in range(k)
    ]
    while True:
        # per-column valuation normalization (a column scalar over Q(s))
        for col in cols:
            v = _col_val(col)
            for r, p in enumerate(col):
                col[r] = _lp_scale(1, p, shift=-v)
        m0 = tuple(tuple(col[r].get(0, Fraction(0)) for col in cols) for r in range(point.ambient_dim))
        if rl.rank(m0) == k:
            return GrassPoint(m0, point.family, point.n)
        # some s=0 columns are dependent; fold one dependency back in
        lam = rl.nullspace(m0)[0]
        pivot = max(c for c in range(k) if lam[c])
        folded = [{} for _ in range(point.ambient_dim)]
        for c in range(k):
            if lam[c]:
                for r in range(point.ambient_dim):
                    folded[r] = _lp_add(folded[r], _lp_scale(lam[c], cols[c][r]))
        assert _col_val(folded) is not None and _col_val(folded) > 0
        cols[pivot] = folded


def is_fixed(point, flow, t=Fraction(2)):
    """Exact fixed-point test: scaling the rows by t^w preserves the span."""
    scaled = tuple(
        tuple(Fraction(t) ** w * x for x in row) for w, row in zip(flow.weights, point.basis)
    )
    return point.spans_same(GrassPoint(scaled, point.family, point.n))


@dataclass(frozen=True)
class ComponentDescriptor:
    """Intersection profile of a fixed subspace with the weight blocks,
    and the Pluecker-normalized weight mu (0 at the sink)."""

    profile: tuple  # ((weight, dim), ...) sorted by weight
    mu: int


def component_membership(point, flow):
    """Which fixed-point component a flow-fixed subspace lies on, reported
    through its weight-block intersection dimensions."""
    if not is_fixed(point, flow):
        raise NotFixedError("point is not fixed by the flow")
    w = flow.weights
    dims = {}
    for weight in sorted(set(w), reverse=True):
        keep = [r for r in range(point.ambient_dim) if w[r] != weight]
        outside = tuple(point.basis[r] for r in keep)
        dims[weight] = point.k - rl.rank(outside)
    assert sum(dims.values()) == point.k, "fixed subspace is not weight-split"
    if flow.action == "split":
        mu = point.k - dims[1]
    else:
        mu = 1 - dims[1] + dims[-1]
    return ComponentDescriptor(tuple(sorted(dims.items())), mu)


def graph_point(b, family, n):
    """The graph chart at the sink: span of [I_n; B]."""
    b = rl.as_matrix(b)
    basis = tuple(rl.identity(n)) + b
    return GrassPoint(basis, family, n)


def source_chart_coordinate(point):
    """The graph-over-V_+ coordinate of a point of a split-model
    Grassmannian with k = n, or None if the point is outside that chart."""
    n = point.k
    top = point.basis[:n]
    bottom = point.basis[n : 2 * n]
    try:
        binv = rl.mat_inverse(bottom)
    except rl.SingularMatrixError:
        return None
    return rl.mat_mul(top, binv)


def chart_inverse_check(b, model, n):
    """The Thaddeus check: the birational map between the sink and source
    graph charts of the split flow is matrix inversion.

    Builds the point span[I_n; B], re-expresses it as a graph over V_+ by
    column reduction, and compares the resulting coordinate with the
    directly computed inverse of B.  Raises IndeterminacyError for singular
    B (those points never reach the source chart; see component_membership
    of their t -> infinity limits).
    """
    b = rl.as_matrix(b)
    if model not in ("A", "C", "D"):
        raise ValueError("model must be A, C or D")
    if model == "C" and b != rl.transpose(b):
        raise ValueError("the C model needs a symmetric matrix")
    if model == "D" and any(b[i][j] != -b[j][i] for i in range(n) for j in range(n)):
        raise ValueError("the D model needs a skew-symmetric matrix")
    d = rl.det(b)
    if d == 0:
        raise IndeterminacyError(d)
    point = graph_point(b, model, n)
    coord = source_chart_coordinate(point)
    return coord == rl.mat_inverse(b)
