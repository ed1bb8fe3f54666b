import random
from fractions import Fraction

import pytest

from liegrade import ratlinalg as rl
from liegrade.grassflow import (
    ComponentDescriptor,
    FlowSpec,
    GrassPoint,
    IndeterminacyError,
    NotFixedError,
    NotIsotropicError,
    chart_inverse_check,
    component_membership,
    flow_limit,
    graph_point,
    is_fixed,
    source_chart_coordinate,
)


def rfrac(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def test_point_validation():
    with pytest.raises(ValueError):
        GrassPoint([[1, 2], [2, 4], [0, 0], [0, 0]], "A", 2)  # dependent columns
    with pytest.raises(NotIsotropicError):
        GrassPoint([[1], [0], [1], [0]], "D", 2)  # e_0 + e_2 pairs with itself
    # e_0 + e_2 is fine for the skew C form
    GrassPoint([[1], [0], [1], [0]], "C", 2)


def test_fixed_point_is_its_own_limit():
    f = FlowSpec("A", 3)
    p = GrassPoint([[1, 0], [0, 1], [0, 0], [0, 0], [0, 0], [0, 0]], "A", 3)
    for d in ("0", "inf"):
        assert flow_limit(p, f, d).spans_same(p)


def test_a_model_worked_example():
    f = FlowSpec("A", 2)
    p = graph_point([[1, 0], [1, 1]], "A", 2)
    sink = flow_limit(p, f, "0")
    source = flow_limit(p, f, "inf")
    assert sink.basis == rl.as_matrix([[1, 0], [0, 1], [0, 0], [0, 0]])
    assert source.spans_same(GrassPoint([[0, 0], [0, 0], [1, 0], [0, 1]], "A", 2))
    assert component_membership(sink, f) == ComponentDescriptor(((0, 0), (1, 2)), 0)
    assert component_membership(source, f) == ComponentDescriptor(((0, 2), (1, 0)), 2)


def test_limits_are_fixed_and_isotropic():
    rng = random.Random(4)
    for model, n in (("A", 3), ("C", 3), ("D", 4)):
        f = FlowSpec(model, n)
        for _ in range(6):
            b = [[rfrac(rng) for _ in range(n)] for _ in range(n)]
            if model == "C":
                b = [[b[i][j] + b[j][i] for j in range(n)] for i in range(n)]
            if model == "D":
                b = [[b[i][j] - b[j][i] for j in range(n)] for i in range(n)]
            p = graph_point(b, model, n)
            for d in ("0", "inf"):
                lim = flow_limit(p, f, d)  # the constructor asserts isotropy
                assert is_fixed(lim, f)
                assert component_membership(lim, f).mu in range(n + 1)


def test_quadric_model():
    f = FlowSpec("B", 3)
    # e_0 plus an isotropic line of V_0
    p = GrassPoint([[1, 0], [0, 1], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]], "B", 3)
    desc = component_membership(p, f)
    assert desc == ComponentDescriptor(((-1, 0), (0, 1), (1, 1)), 0)
    # a non-fixed quadric point: e_1 + e_3 mixes the 0 and -1 weight blocks
    q = GrassPoint([[0], [1], [0], [1], [0], [0], [0]], "B", 3)
    lo = flow_limit(q, f, "0")
    hi = flow_limit(q, f, "inf")
    assert component_membership(lo, f).mu <= component_membership(hi, f).mu


def test_not_fixed_error():
    f = FlowSpec("A", 2)
    p = graph_point([[1, 0], [1, 1]], "A", 2)
    with pytest.raises(NotFixedError):
        component_membership(p, f)


def test_chart_inverse_worked_examples():
    assert chart_inverse_check([[1, 1, 0], [0, 1, 1], [0, 0, 1]], "A", 3)
    assert chart_inverse_check([[2, 1], [1, 1]], "C", 2)
    assert chart_inverse_check(rl.identity(3), "A", 3)


def test_chart_inverse_randoms_and_involution():
    rng = random.Random(5)
    for _ in range(10):
        b = [[rfrac(rng) for _ in range(3)] for _ in range(3)]
        if rl.det(b) == 0:
            continue
        assert chart_inverse_check(b, "A", 3)
        # the chart map is an involution: the coordinate of the coordinate is b
        p = graph_point(b, "A", 3)
        c = source_chart_coordinate(p)
        assert source_chart_coordinate(graph_point(rl.mat_inverse(c), "A", 3)) is not None


def test_chart_inverse_model_constraints():
    with pytest.raises(ValueError):
        chart_inverse_check([[1, 2], [3, 4]], "C", 2)  # not symmetric
    with pytest.raises(ValueError):
        chart_inverse_check([[1, 0], [0, 1]], "D", 2)  # not skew
    with pytest.raises(IndeterminacyError):
        chart_inverse_check([[1, 1], [1, 1]], "A", 2)


def test_singular_b_misses_the_source_chart():
    f = FlowSpec("A", 3)
    b = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]  # rank 2
    lim = flow_limit(graph_point(b, "A", 3), f, "inf")
    assert source_chart_coordinate(lim) is None
    desc = component_membership(lim, f)
    assert dict(desc.profile)[0] == rl.rank(b) < 3


def test_flowspec_validation():
    with pytest.raises(ValueError):
        FlowSpec("A", 2, "quadric")
    with pytest.raises(ValueError):
        FlowSpec("B", 2, "split")
    assert FlowSpec("D", 3, "quadric").weights == (1, 0, 0, -1, 0, 0)
    assert FlowSpec("C", 2).weights == (1, 1, 0, 0)
    assert FlowSpec("B", 2).ambient_dim == 5
