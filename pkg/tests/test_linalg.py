import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hitcalc.linalg import (
    DegreeContext,
    EchelonSpan,
    ResourceLimitError,
    count_monomials,
    intersect_dim,
    iter_bits,
    nullspace,
    popcount,
    rank_of,
    span_of,
)

import oracles


def to_lists(rows, ncols):
    return [[(r >> c) & 1 for c in range(ncols)] for r in rows]


matrices = st.integers(1, 40).flatmap(
    lambda ncols: st.tuples(st.just(ncols), st.lists(st.integers(0, (1 << ncols) - 1), max_size=30))
)


@given(matrices)
def test_rank_matches_dense_rref(mat):
    ncols, rows = mat
    assert rank_of(rows) == oracles.rref_rank(to_lists(rows, ncols))


@given(matrices, st.randoms(use_true_random=False))
def test_rank_independent_of_order(mat, rnd):
    _, rows = mat
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    assert rank_of(rows) == rank_of(shuffled)


@given(matrices, st.integers(0, (1 << 40) - 1))
def test_reduce_decides_membership(mat, probe):
    ncols, rows = mat
    probe &= (1 << ncols) - 1
    span = span_of(rows)
    lists = to_lists(rows, ncols)
    inside = oracles.rref_rank(lists + to_lists([probe], ncols)) == oracles.rref_rank(lists)
    assert span.contains(probe) == inside
    assert (span.reduce(probe) == 0) == inside
    # the residual differs from the probe by an element of the span
    assert span.contains(span.reduce(probe) ^ probe)


@given(matrices)
def test_full_reduction_keeps_span(mat):
    ncols, rows = mat
    semi = span_of(rows)
    full = span_of(rows, full=True)
    assert full.is_fully_reduced()
    semi.fully_reduce()
    assert semi.is_fully_reduced()
    assert sorted(semi.rows) == sorted(full.rows)
    assert all(full.contains(r) for r in rows)


@given(matrices)
def test_nullspace_is_the_relation_space(mat):
    ncols, rows = mat
    rel = nullspace(rows)
    assert len(rel) == len(rows) - oracles.rref_rank(to_lists(rows, ncols))
    for c in rel:
        acc = 0
        for j in iter_bits(c):
            acc ^= rows[j]
        assert acc == 0
    assert rank_of(rel) == len(rel)


@settings(max_examples=50)
@given(matrices, st.integers(0, (1 << 40) - 1))
def test_intersect_dim_against_oracle(mat, mask):
    ncols, rows = mat
    mask &= (1 << ncols) - 1
    span = span_of(rows)
    # oracle: enumerate the span when it is small enough
    if span.rank > 12:
        return
    basis = span.rows
    inside = 0
    for c in range(1 << len(basis)):
        v = 0
        for j in iter_bits(c):
            v ^= basis[j]
        if v & ~mask == 0:
            inside += 1
    assert 1 << intersect_dim(span, mask) == inside


def test_insert_reports_growth():
    s = EchelonSpan(4)
    assert s.insert(0b0011)
    assert s.insert(0b0101)
    assert not s.insert(0b0110)
    assert not s.insert(0)
    assert s.rank == 2
    with pytest.raises(ValueError):
        s.insert(1 << 4)


def test_bit_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert popcount(0b101001) == 3


@pytest.mark.parametrize("t,n", [(1, 0), (2, 5), (3, 7), (4, 9), (5, 6)])
def test_context_is_ordered_and_complete(t, n):
    ctx = DegreeContext(t, n)
    assert ctx.monomials == sorted(oracles.monomials(t, n), key=oracles.order_key)
    assert len(ctx) == count_monomials(t, n) == comb(n + t - 1, t - 1)
    assert all(ctx.rank(ctx.unrank(i)) == i for i in range(len(ctx)))
    pos = DegreeContext(t, n, positive=True)
    assert len(pos) == count_monomials(t, n, positive=True) == sum(1 for m in oracles.monomials(t, n) if all(m))


def test_context_rows_round_trip():
    ctx = DegreeContext(3, 6)
    rng = random.Random(0)
    for _ in range(20):
        row = rng.getrandbits(len(ctx))
        assert ctx.to_row(ctx.from_row(row)) == row
    with pytest.raises(ValueError):
        ctx.to_row([(1, 1, 1)])


def test_weight_ranges_are_contiguous():
    ctx = DegreeContext(4, 11)
    for w, (a, b) in ctx.weight_ranges().items():
        assert all(oracles.weight_vector(ctx.unrank(i)) == w for i in range(a, b))
    assert sum(b - a for a, b in ctx.weight_ranges().values()) == len(ctx)


def test_column_cap():
    with pytest.raises(ResourceLimitError):
        DegreeContext(5, 40, cap=1000)
