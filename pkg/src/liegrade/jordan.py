"""The five simple Jordan algebras over the rationals.

Variants and their data:

  FullMatrix   n x n rational matrices, x o y = (xy + yx)/2, norm = det.
  SymMatrix    symmetric matrices, same product, norm = det.
  SkewMatrix   skew matrices of even size n = 2m.  These do not close under
               the naive symmetrized product, so the product is taken at the
               unit J (the block-diagonal skew matrix with Pf(J) = 1):
               x o y = (x J^-1 y + y J^-1 x)/2.  norm = Pfaffian.
  SpinFactor   pairs (a, u) with u a rational vector,
               (a, u) o (b, v) = (ab + q(u, v), av + bu), norm = a^2 - q(u,u).
  Albert       3 x 3 Hermitian octonion matrices, symmetrized product,
               norm = the cubic norm N.

In every case the inversion map jinvert is the Jordan inverse (x o x^-1 = 1
and x^2 o x^-1 = x) and cremona is its polynomial (adjugate) lift:
norm(x) * jinvert(x) = cremona(x) on the invertible locus, and cremona is
defined everywhere, vanishing-norm elements being its indeterminacy locus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg as rl
from .octonion import DIM as OCT_DIM
from .octonion import Octonion


class SingularElementError(ZeroDivisionError):
    """Inversion of a non-invertible element; carries the vanishing norm."""

    def __init__(self, vanishing_norm):
        super().__init__(f"element is not invertible (norm = {vanishing_norm})")
        self.vanishing_norm = vanishing_norm


class VariantMismatchError(TypeError):
    pass


# ---------------------------------------------------------------------------
# the five variants


@dataclass(frozen=True)
class FullMatrix:
    entries: tuple  # n x n rationals

    def __post_init__(self):
        object.__setattr__(self, "entries", rl.as_matrix(self.entries))

    @property
    def n(self):
        return len(self.entries)


@dataclass(frozen=True)
class SymMatrix:
    entries: tuple

    def __post_init__(self):
        m = rl.as_matrix(self.entries)
        if m != rl.transpose(m):
            raise ValueError("entries are not symmetric")
        object.__setattr__(self, "entries", m)

    @property
    def n(self):
        return len(self.entries)


@dataclass(frozen=True)
class SkewMatrix:
    entries: tuple

    def __post_init__(self):
        m = rl.as_matrix(self.entries)
        if len(m) % 2:
            raise ValueError("skew variant needs even size")
        if any(m[i][j] != -m[j][i] for i in range(len(m)) for j in range(len(m))):
            raise ValueError("entries are not skew-symmetric")
        object.__setattr__(self, "entries", m)

    @property
    def n(self):
        return len(self.entries)


@dataclass(frozen=True)
class SpinFactor:
    scalar: Fraction
    vec: tuple

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "vec", tuple(Fraction(v) for v in self.vec))


@dataclass(frozen=True)
class Albert:
    """3 x 3 Hermitian octonion matrix, stored as the three (rational)
    diagonal entries and the three independent octonions:

        [ d0   x2   x1~ ]
        [ x2~  d1   x0  ]      (~ denotes conjugation)
        [ x1   x0~  d2  ]
    """

    diag: tuple  # 3 rationals
    off: tuple  # 3 Octonions

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(Fraction(d) for d in self.diag))
        off = tuple(x if isinstance(x, Octonion) else Octonion(x) for x in self.off)
        if len(self.diag) != 3 or len(off) != 3:
            raise ValueError("Albert elements have 3 diagonal and 3 octonion entries")
        object.__setattr__(self, "off", off)

    def matrix(self):
        d0, d1, d2 = (Octonion.from_real(d) for d in self.diag)
        x0, x1, x2 = self.off
        return (
            (d0, x2, x1.conj()),
            (x2.conj(), d1, x0),
            (x1, x0.conj(), d2),
        )

    @staticmethod
    def from_matrix(m):
        for i in range(3):
            assert m[i][i].is_real()
            for j in range(3):
                assert m[i][j] == m[j][i].conj()
        return Albert((m[0][0].real(), m[1][1].real(), m[2][2].real()), (m[1][2], m[2][0], m[0][1]))


VARIANTS = (FullMatrix, SymMatrix, SkewMatrix, SpinFactor, Albert)
KIND = {FullMatrix: "full", SymMatrix: "sym", SkewMatrix: "skew", SpinFactor: "spin", Albert: "albert"}
BY_KIND = {v: k for k, v in KIND.items()}


def _check_pair(x, y):
    if type(x) is not type(y):
        raise VariantMismatchError(f"cannot combine {type(x).__name__} and {type(y).__name__}")
    if isinstance(x, SpinFactor):
        if len(x.vec) != len(y.vec):
            raise VariantMismatchError("spin factors of different dimension")
    elif isinstance(x, Albert):
        pass
    elif x.n != y.n:
        raise VariantMismatchError("matrix sizes differ")


def skew_unit_matrix(n):
    """Block-diagonal J made of m = n/2 copies of [[0,1],[-1,0]]; Pf(J) = 1."""
    j = [[Fraction(0)] * n for _ in range(n)]
    for b in range(n // 2):
        j[2 * b][2 * b + 1] = Fraction(1)
        j[2 * b + 1][2 * b] = Fraction(-1)
    return tuple(tuple(row) for row in j)


def unit(x):
    """The unit element of x's Jordan algebra."""
    if isinstance(x, FullMatrix):
        return FullMatrix(rl.identity(x.n))
    if isinstance(x, SymMatrix):
        return SymMatrix(rl.identity(x.n))
    if isinstance(x, SkewMatrix):
        return SkewMatrix(skew_unit_matrix(x.n))
    if isinstance(x, SpinFactor):
        return SpinFactor(1, (0,) * len(x.vec))
    if isinstance(x, Albert):
        return Albert((1, 1, 1), (Octonion((0,) * OCT_DIM),) * 3)
    raise VariantMismatchError(type(x).__name__)


def dimension(x):
    """Dimension over Q of x's Jordan algebra."""
    if isinstance(x, FullMatrix):
        return x.n * x.n
    if isinstance(x, SymMatrix):
        return x.n * (x.n + 1) // 2
    if isinstance(x, SkewMatrix):
        return x.n * (x.n - 1) // 2
    if isinstance(x, SpinFactor):
        return 1 + len(x.vec)
    if isinstance(x, Albert):
        return 27
    raise VariantMismatchError(type(x).__name__)


def add(x, y):
    _check_pair(x, y)
    if isinstance(x, SpinFactor):
        return SpinFactor(x.scalar + y.scalar, tuple(a + b for a, b in zip(x.vec, y.vec)))
    if isinstance(x, Albert):
        return Albert(
            tuple(a + b for a, b in zip(x.diag, y.diag)),
            tuple(a + b for a, b in zip(x.off, y.off)),
        )
    return type(x)(rl.mat_add(x.entries, y.entries))


def scale(t, x):
    t = Fraction(t)
    if isinstance(x, SpinFactor):
        return SpinFactor(t * x.scalar, tuple(t * v for v in x.vec))
    if isinstance(x, Albert):
        return Albert(tuple(t * d for d in x.diag), tuple(t * o for o in x.off))
    return type(x)(rl.scalar_mul(t, x.entries))


def jordan_product(x, y):
    """The commutative product x o y; see the module docstring for the
    variant-by-variant formulas."""
    _check_pair(x, y)
    if isinstance(x, (FullMatrix, SymMatrix)):
        xy = rl.mat_mul(x.entries, y.entries)
        yx = rl.mat_mul(y.entries, x.entries)
        return type(x)(rl.scalar_mul(Fraction(1, 2), rl.mat_add(xy, yx)))
    if isinstance(x, SkewMatrix):
        jinv = rl.mat_inverse(skew_unit_matrix(x.n))
        a = rl.mat_mul(rl.mat_mul(x.entries, jinv), y.entries)
        b = rl.mat_mul(rl.mat_mul(y.entries, jinv), x.entries)
        return SkewMatrix(rl.scalar_mul(Fraction(1, 2), rl.mat_add(a, b)))
    if isinstance(x, SpinFactor):
        q = sum(u * v for u, v in zip(x.vec, y.vec))
        return SpinFactor(
            x.scalar * y.scalar + q,
            tuple(x.scalar * v + y.scalar * u for u, v in zip(x.vec, y.vec)),
        )
    if isinstance(x, Albert):
        mx, my = x.matrix(), y.matrix()
        half = Fraction(1, 2)
        prod = tuple(
            tuple(
                half * sum((mx[i][l] * my[l][j] + my[i][l] * mx[l][j] for l in range(3)), Octonion((0,) * OCT_DIM))
                for j in range(3)
            )
            for i in range(3)
        )
        return Albert.from_matrix(prod)
    raise VariantMismatchError(type(x).__name__)


def norm(x):
    """The generic norm: det / det / Pfaffian / a^2 - q(u,u) / cubic N."""
    if isinstance(x, (FullMatrix, SymMatrix)):
        return rl.det(x.entries)
    if isinstance(x, SkewMatrix):
        return rl.pfaffian(x.entries)
    if isinstance(x, SpinFactor):
        return x.scalar * x.scalar - sum(v * v for v in x.vec)
    if isinstance(x, Albert):
        d0, d1, d2 = x.diag
        x0, x1, x2 = x.off
        return (
            d0 * d1 * d2
            + 2 * (x0 * (x1 * x2)).real()
            - d0 * x0.norm()
            - d1 * x1.norm()
            - d2 * x2.norm()
        )
    raise VariantMismatchError(type(x).__name__)


def _albert_trace(x):
    return sum(x.diag)


def cremona(x):
    """The adjugate (polynomial) form of the inversion: everywhere defined,
    with cremona(x) = norm(x) * jinvert(x) on the invertible locus."""
    if isinstance(x, (FullMatrix, SymMatrix)):
        return type(x)(rl.adjugate(x.entries))
    if isinstance(x, SkewMatrix):
        j = skew_unit_matrix(x.n)
        return SkewMatrix(rl.mat_mul(rl.mat_mul(j, rl.pfaffian_adjugate(x.entries)), j))
    if isinstance(x, SpinFactor):
        return SpinFactor(x.scalar, tuple(-v for v in x.vec))
    if isinstance(x, Albert):
        # x^sharp = x^2 - tr(x) x + s(x) 1, with s = (tr(x)^2 - tr(x^2))/2
        x2 = jordan_product(x, x)
        t = _albert_trace(x)
        s = (t * t - _albert_trace(x2)) / 2
        one = unit(x)
        return add(add(x2, scale(-t, x)), scale(s, one))
    raise VariantMismatchError(type(x).__name__)


# exponent p per variant with cremona(cremona(x)) = norm(x)^p * x; the
# matrix cases are the classical adj(adj A) = det(A)^(n-2) A
def cremona_square_power(x):
    if isinstance(x, (FullMatrix, SymMatrix)):
        return x.n - 2
    if isinstance(x, SkewMatrix):
        return x.n // 2 - 2
    if isinstance(x, SpinFactor):
        return 0
    if isinstance(x, Albert):
        return 1
    raise VariantMismatchError(type(x).__name__)


def jinvert(x):
    """The Jordan inverse; raises SingularElementError off the invertible
    locus."""
    nx = norm(x)
    if nx == 0:
        raise SingularElementError(nx)
    if isinstance(x, FullMatrix):
        return FullMatrix(rl.mat_inverse(x.entries))
    if isinstance(x, SymMatrix):
        return SymMatrix(rl.mat_inverse(x.entries))
    if isinstance(x, SkewMatrix):
        j = skew_unit_matrix(x.n)
        return SkewMatrix(rl.mat_mul(rl.mat_mul(j, rl.mat_inverse(x.entries)), j))
    return scale(Fraction(1, 1) / nx, cremona(x))


def equivariance_check(x, t):
    """jinvert(t x) == t^-1 jinvert(x), the homogeneity of inversion under
    the one-parameter group."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    return jinvert(scale(t, x)) == scale(1 / t, jinvert(x))


# ---------------------------------------------------------------------------
# JSON encoding: {"kind": ..., "entries": ...} with rationals as "p/q" strings


def _frac_out(f):
    return str(f)


def _mat_out(m):
    return [[_frac_out(x) for x in row] for row in m]


def to_payload(x):
    if isinstance(x, (FullMatrix, SymMatrix, SkewMatrix)):
        return {"kind": KIND[type(x)], "entries": _mat_out(x.entries)}
    if isinstance(x, SpinFactor):
        return {
            "kind": "spin",
            "entries": {"scalar": _frac_out(x.scalar), "vec": [_frac_out(v) for v in x.vec]},
        }
    if isinstance(x, Albert):
        return {
            "kind": "albert",
            "entries": {
                "diag": [_frac_out(d) for d in x.diag],
                "off": [[_frac_out(c) for c in o.coords] for o in x.off],
            },
        }
    raise VariantMismatchError(type(x).__name__)


def from_payload(payload):
    kind = payload["kind"]
    entries = payload["entries"]
    if kind in ("full", "sym", "skew"):
        return BY_KIND[kind]([[Fraction(v) for v in row] for row in entries])
    if kind == "spin":
        return SpinFactor(Fraction(entries["scalar"]), [Fraction(v) for v in entries["vec"]])
    if kind == "albert":
        return Albert(
            [Fraction(d) for d in entries["diag"]],
            [Octonion([Fraction(c) for c in o]) for o in entries["off"]],
        )
    raise ValueError(f"unknown element kind {kind!r}")


def to_json(x):
    return json.dumps(to_payload(x))


def from_json(text):
    return from_payload(json.loads(text))
