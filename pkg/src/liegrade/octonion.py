"""Octonions over the rationals, by Cayley-Dickson doubling.

The basis is fixed once and for all: e0 = 1, (e0, e1) spans the complex
numbers, (e0..e3) the quaternions (e1*e2 = e3), and (e0..e7) the octonions
(e_a * e4 = e_{4+a} for a < 4).  The doubling rule is

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c)),

applied recursively on halves, with conj(a, b) = (conj(a), -b).  With this
table x * conj(x) = N(x) * 1 where N is the sum of squares, so the algebra
is a (non-associative) division algebra over Q.
"""

from __future__ import annotations

from fractions import Fraction

DIM = 8


def _cd_mul(x, y):
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    left = tuple(p - q for p, q in zip(_cd_mul(a, c), _cd_mul(_cd_conj(d), b)))
    right = tuple(p + q for p, q in zip(_cd_mul(d, a), _cd_mul(b, _cd_conj(c))))
    return left + right


def _cd_conj(x):
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h]) + tuple(-v for v in x[h:])


def _build_table():
    """Structure constants e_a * e_b = sign * e_c, read off the doubling."""
    table = [[None] * DIM for _ in range(DIM)]
    for a in range(DIM):
        ea = tuple(Fraction(int(t == a)) for t in range(DIM))
        for b in range(DIM):
            eb = tuple(Fraction(int(t == b)) for t in range(DIM))
            prod = _cd_mul(ea, eb)
            (c,) = [t for t, v in enumerate(prod) if v]
            table[a][b] = (c, 1 if prod[c] > 0 else -1)
    return table


_TABLE = _build_table()


def _mul(x, y):
    out = [Fraction(0)] * DIM
    for a, xa in enumerate(x):
        if not xa:
            continue
        row = _TABLE[a]
        for b, yb in enumerate(y):
            if yb:
                c, s = row[b]
                out[c] += xa * yb if s > 0 else -(xa * yb)
    return tuple(out)


class Octonion:
    """An octonion with 8 exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"need {DIM} coordinates, got {len(coords)}")
        self.coords = coords

    @staticmethod
    def from_real(r):
        return Octonion((Fraction(r),) + (Fraction(0),) * (DIM - 1))

    @staticmethod
    def basis(a):
        return Octonion(tuple(Fraction(int(b == a)) for b in range(DIM)))

    def __add__(self, other):
        return Octonion(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(_mul(self.coords, other.coords))
        return Octonion(tuple(x * Fraction(other) for x in self.coords))

    def __rmul__(self, other):
        # rational scalar on the left
        return Octonion(tuple(Fraction(other) * x for x in self.coords))

    def conj(self):
        return Octonion(_cd_conj(self.coords))

    def real(self):
        return self.coords[0]

    def norm(self):
        """N(x) = x * conj(x), a sum of eight squares."""
        return sum(x * x for x in self.coords)

    def is_real(self):
        return all(x == 0 for x in self.coords[1:])

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Octonion({list(self.coords)})"


ZERO = Octonion((0,) * DIM)
ONE = Octonion.from_real(1)
