import json

import pytest

from liegrade.fixedpoints import (
    chamber_count,
    component_label,
    enumerate_components,
    normal_weights,
    restrict_to_perp,
)
from liegrade.gradings import NotShortError
from liegrade.rootcore import build_root_datum, delete_node, dynkin


def test_requires_short_grading():
    datum = build_root_datum(dynkin("B", 3))
    with pytest.raises(NotShortError):
        enumerate_components(datum, 2, 1)


def test_a5_grassmannian():
    datum = build_root_datum(dynkin("A", 5))
    report = enumerate_components(datum, 3, 2)
    assert report.ambient_dim == 8
    assert report.delta == 2
    assert [(c.mu, c.label, c.dim) for c in report.components] == [
        (0, "A2(2)", 2),
        (1, "A2(1) x A2(1)", 4),
        (2, "A2(2)", 2),
    ]
    assert report.sink.nu_minus == 0 and report.source.nu_plus == 0


def test_a5_isolated_extremes():
    datum = build_root_datum(dynkin("A", 5))
    report = enumerate_components(datum, 3, 3)
    assert report.sink.dim == 0 and report.source.dim == 0
    assert report.sink.label == "pt"
    assert report.sink.nu_plus == report.ambient_dim == 9
    assert report.delta == 3


def test_b3_quadric_grassmannian():
    datum = build_root_datum(dynkin("B", 3))
    report = enumerate_components(datum, 1, 2)
    assert report.delta == 2
    assert [(c.mu, c.label) for c in report.components] == [
        (0, "B2(1)"),
        (1, "B2(2)"),
        (2, "B2(1)"),
    ]


def test_c3_inner_flag():
    datum = build_root_datum(dynkin("C", 3))
    report = enumerate_components(datum, 3, 2)
    labels = [c.label for c in report.components]
    assert labels == ["A2(2)", "A2(1,2)", "A2(1)"]


def test_d4_spinor():
    datum = build_root_datum(dynkin("D", 4))
    report = enumerate_components(datum, 4, 3)
    assert report.delta == 1
    assert {c.mu: c.label for c in report.components} == {0: "A3(3)", 1: "A3(1)"}


def test_e7_row_4():
    datum = build_root_datum(dynkin("E", 7))
    report = enumerate_components(datum, 7, 4)
    assert report.sink.label == "E6(4)" and report.source.label == "E6(4)"
    assert report.sink.dim == 29
    assert report.sink.nu_plus == 24
    assert report.delta == 6


def test_normal_weights_match_normal_ranks():
    for fam, rank, i, k in (("A", 5, 3, 2), ("B", 4, 1, 3), ("C", 3, 3, 2), ("D", 5, 1, 2)):
        datum = build_root_datum(dynkin(fam, rank))
        report = enumerate_components(datum, i, k)
        assert normal_weights(datum, i, k, "sink").total() == report.sink.nu_plus
        assert normal_weights(datum, i, k, "source").total() == report.source.nu_minus


def test_chamber_counts():
    assert chamber_count(build_root_datum(dynkin("A", 5)), 3, 1) == 1
    assert chamber_count(build_root_datum(dynkin("B", 4)), 1, 4) == 1
    assert chamber_count(build_root_datum(dynkin("C", 4)), 4, 4) == 4


def test_component_label_and_restrict():
    datum = build_root_datum(dynkin("A", 5))
    perp = delete_node(datum, 3)
    assert component_label(perp, (1, 4)) == "A2(1) x A2(1)"
    assert component_label(perp, ()) == "pt"
    lam = (1, 0, 2, 0, 1)
    assert restrict_to_perp(datum, perp, lam) == (1, 0, 0, 1)


def test_report_payload_roundtrip():
    datum = build_root_datum(dynkin("D", 4))
    report = enumerate_components(datum, 1, 1)
    payload = json.loads(report.to_json())
    assert payload == report.to_payload()
    assert payload["ambient"] == {"type": "D", "rank": 4, "k": 1}
    assert payload["dim"] == 6
