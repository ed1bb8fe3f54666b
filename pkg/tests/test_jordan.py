import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liegrade import jordan
from liegrade.jordan import (
    Albert,
    FullMatrix,
    SingularElementError,
    SkewMatrix,
    SpinFactor,
    SymMatrix,
    VariantMismatchError,
    cremona,
    cremona_square_power,
    dimension,
    equivariance_check,
    from_json,
    jinvert,
    jordan_product,
    norm,
    scale,
    to_json,
    unit,
)
from liegrade.octonion import Octonion


def rfrac(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def random_element(cls, rng, n=3):
    while True:
        if cls is FullMatrix:
            x = FullMatrix([[rfrac(rng) for _ in range(n)] for _ in range(n)])
        elif cls is SymMatrix:
            a = [[rfrac(rng) for _ in range(n)] for _ in range(n)]
            x = SymMatrix([[a[i][j] + a[j][i] for j in range(n)] for i in range(n)])
        elif cls is SkewMatrix:
            m = n + n % 2
            a = [[Fraction(0)] * m for _ in range(m)]
            for i in range(m):
                for j in range(i + 1, m):
                    a[i][j] = rfrac(rng)
                    a[j][i] = -a[i][j]
            x = SkewMatrix(a)
        elif cls is SpinFactor:
            x = SpinFactor(rfrac(rng), [rfrac(rng) for _ in range(5)])
        else:
            x = Albert(
                [rfrac(rng) for _ in range(3)],
                [Octonion([rfrac(rng) for _ in range(8)]) for _ in range(3)],
            )
        if norm(x) != 0:
            return x


VARIANTS = (FullMatrix, SymMatrix, SkewMatrix, SpinFactor, Albert)


@pytest.mark.parametrize("cls", VARIANTS)
def test_unit_and_inverse_axioms(cls):
    rng = random.Random(10)
    for _ in range(10):
        x = random_element(cls, rng)
        one = unit(x)
        assert jordan_product(one, x) == x
        xi = jinvert(x)
        x2 = jordan_product(x, x)
        assert jordan_product(x, xi) == one
        assert jordan_product(x2, xi) == x
        assert jinvert(xi) == x


@pytest.mark.parametrize("cls", VARIANTS)
def test_jordan_identity(cls):
    rng = random.Random(20)
    for _ in range(10):
        x = random_element(cls, rng)
        y = random_element(cls, rng)
        x2 = jordan_product(x, x)
        assert jordan_product(x2, jordan_product(x, y)) == jordan_product(x, jordan_product(x2, y))


@pytest.mark.parametrize("cls", VARIANTS)
def test_adjugate_coherence_and_square(cls):
    rng = random.Random(30)
    for _ in range(8):
        x = random_element(cls, rng)
        assert scale(norm(x), jinvert(x)) == cremona(x)
        assert cremona(cremona(x)) == scale(norm(x) ** cremona_square_power(x), x)


@pytest.mark.parametrize("cls", VARIANTS)
def test_homogeneity(cls):
    rng = random.Random(40)
    x = random_element(cls, rng)
    for t in (1, Fraction(5, 7), -2, Fraction(-3, 11)):
        assert equivariance_check(x, t)
    with pytest.raises(ValueError):
        equivariance_check(x, 0)


@given(st.integers(-9, 9), st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_spin_factor_cremona_is_linear_reflection(a, u):
    x = SpinFactor(a, u)
    c = cremona(x)
    assert c.scalar == x.scalar and c.vec == tuple(-v for v in x.vec)
    if norm(x) != 0:
        assert jordan_product(x, jinvert(x)) == unit(x)


def test_singular_elements_raise():
    with pytest.raises(SingularElementError):
        jinvert(FullMatrix([[1, 1], [1, 1]]))
    with pytest.raises(SingularElementError):
        jinvert(SpinFactor(1, (1, 0)))
    # but the adjugate is total
    assert cremona(FullMatrix([[1, 1], [1, 1]])).entries == ((1, -1), (-1, 1))


def test_rank_one_adjugate_vanishes():
    x = FullMatrix([[1, 2, 3], [2, 4, 6], [3, 6, 9]])
    assert cremona(x).entries == tuple((Fraction(0),) * 3 for _ in range(3))


def test_worked_examples():
    assert jinvert(FullMatrix([[1, 1], [0, 1]])).entries == ((1, -1), (0, 1))
    c = cremona(FullMatrix([[1, 0, 0], [0, 2, 0], [0, 0, 4]]))
    assert c.entries == ((8, 0, 0), (0, 4, 0), (0, 0, 2))
    d = jinvert(Albert([2, 3, 4], [Octonion([0] * 8)] * 3))
    assert d.diag == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    e11 = FullMatrix([[1, 0], [0, 0]])
    e12 = FullMatrix([[0, 1], [0, 0]])
    assert jordan_product(e11, e12) == scale(Fraction(1, 2), e12)


def test_variant_mismatch():
    with pytest.raises(VariantMismatchError):
        jordan_product(FullMatrix([[1]]), SpinFactor(1, (0,)))
    with pytest.raises(VariantMismatchError):
        jordan_product(FullMatrix([[1]]), FullMatrix([[1, 0], [0, 1]]))


def test_shape_validation():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        SkewMatrix([[0]])


def test_json_roundtrip():
    rng = random.Random(50)
    for cls in VARIANTS:
        x = random_element(cls, rng)
        assert from_json(to_json(x)) == x


def test_dimension_bookkeeping():
    from liegrade.fixedpoints import enumerate_components
    from liegrade.rootcore import build_root_datum, dynkin

    # the Jordan algebra dimension equals the normal rank at the isolated sink
    cases = [
        (FullMatrix([[0] * 2] * 2), ("A", 3, 2, 2)),
        (SymMatrix([[0] * 3] * 3), ("C", 3, 3, 3)),
        (SkewMatrix([[0] * 4] * 4), ("D", 4, 4, 4)),
        (SpinFactor(0, (0,) * 4), ("B", 3, 1, 1)),  # d + 1 = 2n - 1
        (SpinFactor(0, (0,) * 5), ("D", 4, 1, 1)),  # d + 1 = 2n - 2
        (Albert([0] * 3, [Octonion([0] * 8)] * 3), ("E", 7, 7, 7)),
    ]
    for x, (fam, rank, i, k) in cases:
        report = enumerate_components(build_root_datum(dynkin(fam, rank)), i, k)
        assert report.sink.dim == 0
        assert dimension(x) == report.sink.nu_plus


def test_octonion_composition_algebra():
    rng = random.Random(60)
    for _ in range(20):
        x = Octonion([rfrac(rng) for _ in range(8)])
        y = Octonion([rfrac(rng) for _ in range(8)])
        assert (x * y).norm() == x.norm() * y.norm()
        assert x * (x * y) == (x * x) * y  # alternativity
        prod = x * x.conj()
        assert prod.is_real() and prod.real() == x.norm()
