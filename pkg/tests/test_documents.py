"""Tests for the JSON document layer."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from steiner_kit.decomposition import render
from steiner_kit.documents import (
    adc_document,
    parse_adc,
    parse_chain,
    parse_morphism,
    parse_simplicial,
    parse_table,
    parse_tree,
    tree_to_dict,
)
from steiner_kit.errors import MalformedInput, NotCoherentTable, UnknownBasisId
from steiner_kit.morphisms import globe_adc
from steiner_kit.omega import chain_of_table
from steiner_kit.simplicial import oriental

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def test_adc_document_round_trip():
    K, _ = oriental(2)
    payload = adc_document(K)
    assert payload == json.loads((FIXTURES / "oriental_2.json").read_text(encoding="utf-8"))
    assert adc_document(parse_adc(payload)) == payload


def test_unknown_fields_are_rejected():
    with pytest.raises(MalformedInput):
        parse_adc({"basis": [], "extra": 1})
    with pytest.raises(MalformedInput):
        parse_adc({"basis": [{"id": "a"}]})


def test_chains_and_trees():
    K, _ = oriental(2)
    assert parse_chain(K, {"01": 1, "12": 1}) == K.chain_of_ids("01", "12")
    with pytest.raises(MalformedInput):
        parse_chain(K, {"01": "many"})
    with pytest.raises(MalformedInput):
        parse_chain(K, {"01": -1})
    with pytest.raises(UnknownBasisId):
        parse_chain(K, {"03": 1})

    payload = {"k": 0, "factors": [{"unit": {"gen": "2"}}, {"var": "x"}, {"gen": "01"}]}
    tree = parse_tree(K, payload)
    assert render(tree) == "1_{2} *0 x *0 01"
    assert tree_to_dict(tree) == payload
    with pytest.raises(MalformedInput):
        parse_tree(K, {"k": -1, "factors": [{"gen": "01"}]})


def test_simplicial_documents():
    S = parse_simplicial(json.loads((FIXTURES / "corrupted_triangle.json").read_text(encoding="utf-8")))
    assert S.name == "corrupted"
    assert S.face("012", 0) == "02"


def test_morphism_documents():
    K, _ = oriental(1)
    G = globe_adc(1)
    payload = {
        "source": K.name,
        "target": G.name,
        "images": {"0": {"e0-": 1}, "1": {"e0+": 1}, "01": {"e1": 1}},
    }
    f = parse_morphism(payload, {K.name: K, G.name: G})
    assert f.to_dict() == payload
    with pytest.raises(MalformedInput):
        parse_morphism({**payload, "target": "nowhere"}, {K.name: K})


def test_table_documents():
    K, _ = oriental(2)
    payload = {"dim": 1, "minus": [{"0": 1}, {"01": 1, "12": 1}], "plus": [{"2": 1}, {"01": 1, "12": 1}]}
    table = parse_table(K, payload)
    assert table.to_dict() == payload
    assert chain_of_table(K, table).chain == K.chain_of_ids("01", "12")
    with pytest.raises(NotCoherentTable):
        parse_table(K, {**payload, "minus": [{"0": 1}]})
    with pytest.raises(NotCoherentTable):
        parse_table(K, {**payload, "plus": [{"1": 1}, {"01": 1, "12": 1}]})
    with pytest.raises(MalformedInput):
        parse_table(K, {**payload, "rows": []})
