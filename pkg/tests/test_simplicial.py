"""Tests for simplicial sets, their chain complexes and signature-word faces."""

from __future__ import annotations

import pytest

from steiner_kit.chain_calculus import d
from steiner_kit.errors import (
    BadIndex,
    BoundarySquareNonzero,
    GradingViolation,
    MalformedInput,
    UnknownBasisId,
    WordTooLong,
)
from steiner_kit.simplicial import (
    alternating_word,
    bar,
    build_complex,
    chains_of,
    check_regular,
    check_simplicial_identities,
    d_s,
    deletion_sequence,
    face_formula,
    iterated_face,
    leibniz_check,
    oriental,
    regularity_witness,
    simplex_id,
    simplicial_from_spec,
    simplicial_to_dict,
    vertices_of,
)

CORRUPTED_TRIANGLE = [
    {"id": "0", "dim": 0},
    {"id": "1", "dim": 0},
    {"id": "2", "dim": 0},
    {"id": "01", "dim": 1, "faces": ["1", "0"]},
    {"id": "02", "dim": 1, "faces": ["2", "0"]},
    {"id": "12", "dim": 1, "faces": ["2", "1"]},
    {"id": "012", "dim": 2, "faces": ["02", "12", "01"]},
]

NON_REGULAR = [
    {"id": "a", "dim": 0},
    {"id": "b", "dim": 0},
    {"id": "e", "dim": 1, "faces": ["a", "b"]},
    {"id": "f", "dim": 1, "faces": ["b", "b"]},
    {"id": "t", "dim": 2, "faces": ["e", "e", "f"]},
]


def test_standard_boundary_and_horn_complexes():
    assert len(build_complex("standard", 2).simplices) == 7
    boundary = build_complex("boundary", 2)
    assert "012" not in boundary.simplices and len(boundary.simplices) == 6
    horn = build_complex("horn", 2, 1)
    assert set(horn.simplices) == {"0", "1", "2", "01", "12"}
    with pytest.raises(BadIndex):
        build_complex("horn", 2, 3)
    with pytest.raises(BadIndex):
        build_complex("standard", -1)


def test_simplex_names():
    assert simplex_id((0, 1, 2, 4)) == "0124"
    assert simplex_id((0, 1, 12)) == "0.1.12"
    assert vertices_of("0.1.12") == (0, 1, 12)
    assert vertices_of("034") == (0, 3, 4)
    with pytest.raises(MalformedInput):
        vertices_of("ab")


def test_faces_and_iterated_faces():
    S = build_complex("standard", 3)
    assert S.face("0123", 0) == "123"
    assert S.face("0123", 3) == "012"
    assert iterated_face(S, "0123", (1, 2)) == "03"
    with pytest.raises(BadIndex):
        S.face("0", 0)
    with pytest.raises(UnknownBasisId):
        S.simplex("0124")


def test_chain_complex_of_a_triangle():
    K = chains_of(build_complex("standard", 2))
    assert K.diff[K.element("012")].to_mapping() == {"01": 1, "02": -1, "12": 1}
    assert all(K.aug[b] == 1 for b in K.in_dim(0))


def test_signature_words():
    assert alternating_word("i", 3) == "ipi"
    assert alternating_word("p", 2) == "pi"
    assert bar("ipp") == "pii"
    with pytest.raises(MalformedInput):
        alternating_word("x", 2)


def test_signature_face_of_the_four_simplex():
    S = build_complex("standard", 4)
    K = chains_of(S)
    assert d_s(S, "01234", "ip") == K.chain_of_ids("034", "023", "012")
    assert d_s(S, "01234", "") == K.chain_of_ids("01234")
    with pytest.raises(WordTooLong):
        d_s(S, "01", "pp")
    with pytest.raises(MalformedInput):
        d_s(S, "01", "x")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_face_formula_agrees_with_sources_and_targets(n):
    S = build_complex("standard", n)
    K, _ = oriental(n)
    for x in S.simplices.values():
        for k in range(x.dim + 1):
            for sign in ("-", "+"):
                assert face_formula(S, x.id, k, sign) == d(K, K.chain_of_ids(x.id), k, sign), (x.id, k, sign)


def test_leibniz_rule_on_the_tetrahedron():
    S = build_complex("standard", 3)
    for word in ("", "p", "i", "pi", "ip"):
        assert leibniz_check(S, "0123", word)


def test_deletion_sequence():
    assert deletion_sequence((0, 1, 3), 4) == (3, 2)
    assert deletion_sequence((0, 1, 2, 3, 4), 4) == ()
    S = build_complex("standard", 4)
    assert iterated_face(S, "01234", deletion_sequence((0, 1, 3), 4)) == "013"


def test_corrupted_triangle_breaks_identities_and_boundary():
    S = simplicial_from_spec("broken", CORRUPTED_TRIANGLE)
    violations = check_simplicial_identities(S)
    assert violations[0] == {"simplex": "012", "i": 0, "j": 2, "lhs": "1", "rhs": "0"}
    with pytest.raises(BoundarySquareNonzero):
        chains_of(S)


def test_non_regular_set_has_a_witness():
    S = simplicial_from_spec("loop", NON_REGULAR)
    assert check_simplicial_identities(S) == []
    assert not check_regular(S)
    witness = regularity_witness(S)
    assert witness is not None and witness["face"] == "b"
    assert check_regular(build_complex("standard", 3))
    chains_of(S)


def test_from_spec_validation():
    with pytest.raises(MalformedInput):
        simplicial_from_spec("S", [{"id": "a", "dim": 0}, {"id": "a", "dim": 0}])
    with pytest.raises(GradingViolation):
        simplicial_from_spec("S", [{"id": "a", "dim": 0, "faces": ["a"]}])
    with pytest.raises(MalformedInput):
        simplicial_from_spec("S", [{"id": "a", "dim": 0}, {"id": "e", "dim": 1, "faces": ["a"]}])
    with pytest.raises(UnknownBasisId):
        simplicial_from_spec("S", [{"id": "a", "dim": 0}, {"id": "e", "dim": 1, "faces": ["a", "z"]}])


def test_to_dict_lists_simplices_by_dimension():
    payload = simplicial_to_dict(build_complex("standard", 1))
    assert payload == {
        "simplices": [
            {"id": "0", "dim": 0, "faces": []},
            {"id": "1", "dim": 0, "faces": []},
            {"id": "01", "dim": 1, "faces": ["1", "0"]},
        ]
    }
