"""Property-based tests on random composites of atoms of the orientals."""

from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steiner_kit.algebra import leq, leq_one, meet
from steiner_kit.chain_calculus import (
    SIGNS,
    comp_degree,
    d,
    degree,
    homogeneous_part,
    is_coherent,
    is_fork_free,
    ordered_form,
    rest,
    sum_of_sources,
)
from steiner_kit.decomposition import Compose, decompose_full, decompose_once, evaluate, tree_leaves
from steiner_kit.omega import Cell, cell_compose, chain_of_table, table_compose, table_of_chain
from steiner_kit.sampling import CellSampler, comp_degree_census, sample_cells
from steiner_kit.simplicial import build_complex, d_s, oriental

seeds = st.integers(min_value=0, max_value=2**16)
orders = st.integers(min_value=1, max_value=4)


@st.composite
def sampled_cells(draw):
    seed = draw(seeds)
    n = draw(orders)
    rounds = draw(st.integers(min_value=0, max_value=6))
    sampler = CellSampler(oriental(n)[0], seed)
    dim = draw(st.integers(min_value=1, max_value=n))
    c = sampler.draw(dim)
    for _ in range(rounds):
        c = sampler.draw(dim)
    return sampler.K, c


@st.composite
def composable_pairs(draw):
    seed = draw(seeds)
    n = draw(st.integers(min_value=2, max_value=4))
    sampler = CellSampler(oriental(n)[0], seed)
    dim = draw(st.integers(min_value=1, max_value=n))
    for _ in range(draw(st.integers(min_value=0, max_value=6))):
        sampler.draw(dim)
    return sampler, sampler.draw_composable(dim)


def _depth(tree) -> int:
    if isinstance(tree, Compose):
        return 1 + max(_depth(f) for f in tree.factors)
    return 0


@settings(max_examples=40, deadline=None)
@given(sample=sampled_cells())
def test_sampled_cells_are_coherent_and_bounded_by_one(sample):
    K, c = sample
    assert is_coherent(K, c.chain)
    assert leq_one(c.chain)


@settings(max_examples=40, deadline=None)
@given(sample=sampled_cells())
def test_tables_round_trip(sample):
    K, c = sample
    table = table_of_chain(K, c)
    assert chain_of_table(K, table) == c
    assert table_of_chain(K, chain_of_table(K, table)) == table


@settings(max_examples=30, deadline=None)
@given(sample=sampled_cells())
def test_decomposition_evaluates_back(sample):
    K, c = sample
    tree = decompose_full(K, c)
    assert evaluate(K, tree, c.dim) == c
    assert _depth(tree) <= degree(c.chain)
    top = degree(c.chain)
    leaves = Counter(b for b in tree_leaves(tree) if b.dim == top)
    assert leaves == Counter(homogeneous_part(c.chain, top).support())
    if comp_degree(c.chain) >= 0:
        assert is_fork_free(K, ordered_form(K, c.chain))


@settings(max_examples=30, deadline=None)
@given(sample=sampled_cells())
def test_factors_have_smaller_composition_degree(sample):
    K, c = sample
    c_deg = comp_degree(c.chain)
    if c_deg < 0:
        return
    k, factors = decompose_once(K, c)
    assert k == c_deg
    assert all(comp_degree(f.chain) < c_deg for f in factors)
    assert evaluate(K, Compose(k=k, factors=tuple(decompose_full(K, f) for f in factors)), c.dim) == c


@settings(max_examples=40, deadline=None)
@given(sample=sampled_cells())
def test_globularity_and_rests(sample):
    K, c = sample
    a = c.chain
    top = degree(a)
    for l in range(top):
        for k in range(l):
            for alpha in SIGNS:
                for beta in SIGNS:
                    assert d(K, d(K, a, l, beta), k, alpha) == d(K, a, k, alpha)
    for m in range(1, top + 1):
        assert rest(a, m - 1) == meet(d(K, a, m - 1, "-"), d(K, a, m - 1, "+"))


@settings(max_examples=40, deadline=None)
@given(sample=sampled_cells())
def test_sources_of_sums_are_bounded_by_sums_of_sources(sample):
    K, c = sample
    c_deg = comp_degree(c.chain)
    if c_deg < 0:
        return
    form = ordered_form(K, c.chain)
    if form.rest:
        return
    for sign in SIGNS:
        assert leq(d(K, c.chain, c_deg, sign), sum_of_sources(K, form.top, c_deg, sign))


@settings(max_examples=40, deadline=None)
@given(pick=composable_pairs())
def test_composition_adds_indices_and_keeps_boundaries(pick):
    sampler, pair = pick
    if pair is None:
        return
    K = sampler.K
    x, y, k = pair
    z = cell_compose(K, x, y, k)
    for b in K.basis:
        if b.dim > k:
            assert z.chain.coeff(b) == x.chain.coeff(b) + y.chain.coeff(b)
    assert d(K, z.chain, k, "-") == d(K, y.chain, k, "-")
    assert d(K, z.chain, k, "+") == d(K, x.chain, k, "+")
    composed = table_compose(table_of_chain(K, x), table_of_chain(K, y), k)
    assert composed == table_of_chain(K, z)


@settings(max_examples=40, deadline=None)
@given(pick=composable_pairs())
def test_composition_is_associative(pick):
    sampler, pair = pick
    if pair is None:
        return
    K = sampler.K
    x, y, k = pair
    w = sampler.draw_before(y, k)
    if w is None:
        w = Cell(chain=d(K, y.chain, k, "-"), dim=y.dim)
    left = cell_compose(K, cell_compose(K, x, y, k), w, k)
    right = cell_compose(K, x, cell_compose(K, y, w, k), k)
    assert left == right


@settings(max_examples=40, deadline=None)
@given(pick=composable_pairs(), data=st.data())
def test_interchange(pick, data):
    sampler, pair = pick
    if pair is None:
        return
    K = sampler.K
    a, b, j = pair
    if a.dim - 1 <= j:
        return
    k = data.draw(st.integers(min_value=j + 1, max_value=a.dim - 1))
    a2 = sampler.draw_after(a, k) or Cell(chain=d(K, a.chain, k, "+"), dim=a.dim)
    b2 = sampler.draw_after(b, k) or Cell(chain=d(K, b.chain, k, "+"), dim=b.dim)
    left = cell_compose(K, cell_compose(K, a2, a, k), cell_compose(K, b2, b, k), j)
    right = cell_compose(K, cell_compose(K, a2, b2, j), cell_compose(K, a, b, j), k)
    assert left == right


@given(seed=seeds)
@settings(max_examples=10, deadline=None)
def test_sample_cells_is_deterministic(seed):
    first = sample_cells(5, seed, 3)
    second = sample_cells(5, seed, 3)
    assert [c for _, c in first] == [c for _, c in second]


def test_samples_include_composites_of_higher_degree():
    census = comp_degree_census(sample_cells(1000, 1729, 5))
    assert sum(census.values()) == 1000
    assert sum(v for c, v in census.items() if c >= 1) >= 50
    assert sum(v for c, v in census.items() if c >= 2) >= 5


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_signature_faces_are_disjoint(n):
    S = build_complex("standard", n)
    for x in S.simplices.values():
        for length in range(1, x.dim + 1):
            words = ["".join(w) for w in itertools.product("ip", repeat=length)]
            for s, t in itertools.combinations(words, 2):
                assert meet(d_s(S, x.id, s), d_s(S, x.id, t)).is_zero(), (x.id, s, t)
