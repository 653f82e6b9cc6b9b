"""Tests for augmented directed complexes, atoms and basis certification."""

from __future__ import annotations

import pytest

from steiner_kit.adc import (
    adc_to_dict,
    atom_table,
    basis_counts,
    boundary_pm,
    is_loop_free,
    is_unitary,
    order_relation,
    sub_adc,
    truncate,
    validate_adc,
)
from steiner_kit.errors import (
    AugmentationNonzeroOnBoundary,
    BoundarySquareNonzero,
    GradingViolation,
    InvariantViolation,
    MalformedInput,
    NotHomogeneous,
    UnknownBasisId,
)
from steiner_kit.morphisms import globe_adc
from steiner_kit.simplicial import oriental


def _cycle_complex():
    return validate_adc(
        "cycle",
        [("x", 0), ("y", 0), ("u", 1), ("w", 1)],
        {"u": {"y": 1, "x": -1}, "w": {"x": 1, "y": -1}},
        {"x": 1, "y": 1},
    )


def test_oriental_basis_sizes_and_boundary():
    K, top = oriental(2)
    assert basis_counts(K) == (3, 3, 1)
    assert K.boundary(top.chain).to_mapping() == {"01": 1, "02": -1, "12": 1}
    assert K.augment(K.chain_of_ids("0", "2")) == 2
    assert len(oriental(4)[0].basis) == 31


def test_validate_rejects_malformed_descriptions():
    with pytest.raises(MalformedInput):
        validate_adc("K", [("a", 0), ("a", 0)])
    with pytest.raises(GradingViolation):
        validate_adc("K", [("a", -1)])
    with pytest.raises(UnknownBasisId):
        validate_adc("K", [("a", 0), ("e", 1)], {"e": {"b": 1}})
    with pytest.raises(GradingViolation):
        validate_adc("K", [("a", 0), ("t", 2)], {"t": {"a": 1}})
    with pytest.raises(GradingViolation):
        validate_adc("K", [("a", 0), ("e", 1)], {"e": {}}, {"e": 1})


def test_validate_checks_boundary_square_and_augmentation():
    with pytest.raises(BoundarySquareNonzero) as excinfo:
        validate_adc(
            "K",
            [("a", 0), ("b", 0), ("e", 1), ("f", 1), ("t", 2)],
            {"e": {"b": 1, "a": -1}, "f": {"b": 1, "a": -1}, "t": {"e": 1, "f": 1}},
            {"a": 1, "b": 1},
        )
    assert excinfo.value.code == "BoundarySquareNonzero"
    with pytest.raises(AugmentationNonzeroOnBoundary):
        validate_adc("K", [("a", 0), ("b", 0), ("e", 1)], {"e": {"b": 1}}, {"a": 1, "b": 1})


def test_boundary_pm_requires_homogeneous_input():
    K, _ = oriental(2)
    plus, minus = boundary_pm(K, K.chain_of_ids("012"))
    assert plus == K.chain_of_ids("01", "12")
    assert minus == K.chain_of_ids("02")
    with pytest.raises(NotHomogeneous):
        boundary_pm(K, K.chain_of_ids("012", "01"))
    with pytest.raises(GradingViolation):
        boundary_pm(K, K.chain_of_ids("0"))


def test_level_one_atoms_of_four_simplex():
    K, _ = oriental(4)
    expected = {
        "0124": ("04", ("01", "12", "24")),
        "0134": ("04", ("01", "13", "34")),
        "1234": ("14", ("12", "23", "34")),
        "0234": ("04", ("02", "23", "34")),
    }
    for sid, (minus, plus) in expected.items():
        atom = atom_table(K, K.element(sid))
        assert atom.minus[1] == K.chain_of_ids(minus)
        assert atom.plus[1] == K.chain_of_ids(*plus)
        assert atom.minus[0] == K.chain_of_ids("0" if sid[0] == "0" else "1")
        assert atom.plus[0] == K.chain_of_ids("4")


def test_atom_table_rejects_foreign_elements():
    K, _ = oriental(2)
    L, _ = oriental(3)
    with pytest.raises(UnknownBasisId):
        atom_table(K, L.element("0123"))


@pytest.mark.parametrize("n", range(8))
def test_orientals_are_unitary_and_loop_free(n):
    K, _ = oriental(n)
    assert is_unitary(K).ok
    assert is_loop_free(K).ok


@pytest.mark.parametrize("n", range(7))
def test_globes_are_unitary_and_loop_free(n):
    G = globe_adc(n)
    assert is_unitary(G).ok
    assert is_loop_free(G).ok


def test_order_relation_on_four_simplex():
    K, _ = oriental(4)
    relation = order_relation(K, 2)
    assert relation.precedes(K.element("0124"), K.element("0234"))
    assert not relation.precedes(K.element("0234"), K.element("0124"))
    assert ("0124", "0234") in relation.edges()


def test_loop_free_reports_a_cycle_witness():
    K = _cycle_complex()
    assert is_unitary(K).ok
    report = is_loop_free(K)
    assert not report.ok
    assert report.level == 0
    assert len(report.cycle) >= 2
    assert report.to_dict()["witness"]["level"] == 0


def test_unitarity_violation_is_reported():
    K = validate_adc("K", [("a", 0), ("b", 0), ("e", 1)], {"e": {"b": 1, "a": -1}}, {"a": 2, "b": 2})
    report = is_unitary(K)
    assert not report.ok
    assert report.violators[0]["id"] == "a"


def test_truncate_and_sub_adc():
    K, _ = oriental(3)
    assert basis_counts(truncate(K, 1)) == (4, 6)
    horn = sub_adc(K, [b.id for b in K.basis if b.id not in ("0123", "023")], "horn")
    assert len(horn.basis) == 13
    with pytest.raises(InvariantViolation):
        sub_adc(K, ["01", "0"], "broken")


def test_adc_to_dict_round_trips_through_validation():
    K, _ = oriental(2)
    payload = adc_to_dict(K)
    again = validate_adc("copy", [(b["id"], b["dim"]) for b in payload["basis"]], payload["d"], payload["e"])
    assert adc_to_dict(again) == payload
