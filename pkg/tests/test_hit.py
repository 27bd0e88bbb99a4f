import random

import pytest

from hitcalc import hit
from hitcalc.linalg import count_monomials
from hitcalc.monomial import compositions, is_spike, weight_vector
from hitcalc.poly import Polynomial

import oracles

SMALL = [(1, 3), (1, 4), (2, 4), (2, 6), (3, 5), (3, 7), (3, 10), (4, 5), (4, 7), (4, 8), (3, 12)]


@pytest.mark.parametrize("t,n", SMALL)
def test_admissible_basis_against_dense_oracle(t, n):
    assert list(hit.admissible_basis(t, n).admissible) == oracles.admissible(t, n)
    assert hit.dim_q(t, n) == oracles.dim_q(t, n)


@pytest.mark.parametrize("t,n", [(3, 7), (4, 8), (3, 9)])
def test_full_context_matches_blocks(t, n):
    assert hit.full_admissible(t, n) == list(hit.admissible_basis(t, n).admissible)


@pytest.mark.parametrize("t,n", [(3, 7), (4, 6), (4, 9)])
@pytest.mark.parametrize("method", ["full", "blocked"])
def test_trace_against_oracle(t, n, method):
    tr = hit.hit_trace(t, n, method)
    cols = oracles.monomials(t, n)
    pos = {m: i for i, m in enumerate(cols)}
    acc = []
    for f in tr.families:
        rows = [oracles._vec(oracles.sq_total(f.square, m), pos, len(cols)) for m in oracles.monomials(t, n - f.square)]
        assert f.sources == len(rows)
        if f.standalone is not None:
            assert f.standalone == oracles.rref_rank(rows)
        acc += rows
        assert f.cumulative == oracles.rref_rank(acc)
    assert tr.columns == len(cols)
    assert tr.dim == oracles.dim_q(t, n)


def test_trace_render_and_dict():
    tr = hit.hit_trace(3, 7)
    lines = tr.render().splitlines()
    assert lines[0] == "N := 7; t := 3;"
    assert lines[1] == "[28, 21, 10]"
    assert lines[-3:] == ["36", "26", "10"]
    d = tr.as_dict()
    assert d["squares"] == [1, 2, 4]
    assert d["dim"] == 10


def test_family_squares():
    assert hit.family_squares(31) == [1, 2, 4, 8, 16]
    assert hit.family_squares(32) == [1, 2, 4, 8, 16]
    assert hit.family_squares(1) == []


@pytest.mark.parametrize("t,n", [(3, 8), (4, 7)])
def test_reduction_differs_by_hit_element(t, n):
    in_hit = oracles.hit_membership(t, n)
    qb = hit.admissible_basis(t, n)
    rng = random.Random(t * 100 + n)
    ms = list(compositions(n, t))
    for _ in range(30):
        p = Polynomial(t, rng.sample(ms, 3))
        red = hit.reduce_to_admissible(p)
        assert all(qb.is_admissible(m) for m in red)
        assert in_hit(set(p.sorted_terms()) ^ set(red))
        assert hit.is_hit(p) == in_hit(set(p.sorted_terms()))
        assert bool(qb.coordinates(p)) == (not hit.is_hit(p))


def test_hit_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        hit.is_hit(Polynomial(2, [(1, 0), (1, 1)]))
    assert hit.is_hit(Polynomial.zero(3))


@pytest.mark.parametrize("t,n", [(2, 6), (3, 7), (3, 10), (4, 14), (4, 15), (4, 20)])
def test_spikes_are_admissible(t, n):
    qb = hit.admissible_basis(t, n)
    for m in compositions(n, t):
        if is_spike(m):
            assert qb.is_admissible(m), m


@pytest.mark.parametrize("t,n", [(3, 9), (4, 11), (4, 15)])
def test_singer_criterion_implies_hit(t, n):
    in_hit = oracles.hit_membership(t, n) if count_monomials(t, n) < 1000 else None
    for m in compositions(n, t):
        if hit.singer_zero(m):
            assert hit.is_hit(Polynomial.monomial(m))
            if in_hit is not None:
                assert in_hit({tuple(m)})


@pytest.mark.parametrize("t,n", [(3, 9), (4, 11), (5, 13), (5, 14)])
def test_weight_components_sum_to_dimension(t, n):
    qb = hit.admissible_basis(t, n)
    total = 0
    for w in qb.weights():
        c = hit.dim_q_omega(t, n, w)
        assert c == hit.dim_q_omega(t, n, w, "zero") + hit.dim_q_omega(t, n, w, "positive")
        total += c
    assert total == qb.dim


@pytest.mark.parametrize("t,n", [(3, 9), (4, 11), (5, 13)])
def test_modular_method_agrees_with_count(t, n):
    for w in hit.admissible_basis(t, n).weights():
        for part in hit.PARTS:
            assert hit.dim_q_omega(t, n, w, part, "modular") == hit.dim_q_omega(t, n, w, part)


def test_dim_q_omega_rejects_wrong_degree():
    with pytest.raises(ValueError):
        hit.dim_q_omega(5, 14, (2, 2, 1))
    with pytest.raises(ValueError):
        hit.dim_q_omega(5, 14, (2, 2, 2), part="middle")


def test_reduce_graded_drops_lower_weights():
    qb = hit.admissible_basis(5, 14)
    w = (2, 2, 2)
    lower = [m for m in qb.admissible if weight_vector(m) < w][:3]
    top = qb.by_weight(w)[:2]
    p = Polynomial(5, lower + top)
    assert qb.reduce_graded(p, w) == frozenset(top)
    higher = qb.by_weight((4, 3, 1))[:1]
    with pytest.raises(hit.FiltrationError):
        qb.reduce_graded(Polynomial(5, higher), w)


@pytest.mark.parametrize("t,n", [(3, 9), (4, 10), (4, 13)])
def test_zero_part_formula(t, n):
    dims = hit.positive_dims(t, n)
    assert hit.dim_q_zero_via_formula(t, n, dims[:-1]) == len(hit.admissible_basis(t, n).part("zero"))
    assert dims[-1] == len(hit.admissible_basis(t, n).part("positive"))


@pytest.mark.parametrize("t,n_low", [(2, 1), (3, 2), (3, 4), (4, 3), (5, 4)])
def test_kameko_map_is_surjective_and_split(t, n_low):
    km = hit.kameko_map(t, n_low)
    assert km.surjective
    assert km.kernel_dim == hit.kameko_kernel_dim(t, n_low)
    info = hit.kameko_split(t, n_low)
    assert info["split_total"] == info["kernel"]
    assert hit.kameko_well_defined(t, n_low)


def test_kameko_down():
    assert hit.kameko_down((3, 5, 1)) == (1, 2, 0)
    assert hit.kameko_down((3, 4, 1)) is None


def test_ks_criterion():
    # Sq1(x1 x2) shows x1^2 x2 is congruent to the smaller x1 x2^2
    y = (2, 1)
    assert not hit.is_admissible(y)
    assert hit.ks_criterion((1, 0), y, 1)
    assert not hit.ks_criterion((2, 0), y, 1)
    for x in compositions(1, 2):
        m = tuple(a + 2 * b for a, b in zip(x, y))
        assert not hit.is_admissible(m)


def test_memory_estimate_orders():
    assert hit.estimate_span_bytes(5, 47, "blocked") < hit.estimate_span_bytes(5, 47, "full")
    assert hit.estimate_span_bytes(5, 31, "full") < 2 << 30


def test_ks_criterion_five_variables():
    x = (1, 1, 1, 0, 0)
    y = (2, 1, 4, 8, 16)
    assert not hit.is_admissible(y)
    assert hit.ks_criterion(x, y, 1)
    # the product x * y^2 has degree 65; certify by the weight of x alone
    assert hit.ks_criterion((3, 1, 1, 0, 0), y, 2)
    assert not hit.ks_criterion((3, 1, 1, 0, 0), y, 1)
    with pytest.raises(ValueError):
        hit.ks_criterion((1, 1), y, 1)


@pytest.mark.parametrize("t", [2, 3, 4])
def test_weight_methods_agree_up_to_degree_15(t):
    for n in range(1, 16):
        qb = hit.admissible_basis(t, n)
        total = 0
        for w in qb.weights():
            c = hit.dim_q_omega(t, n, w)
            assert hit.dim_q_omega(t, n, w, method="modular") == c
            total += c
        assert total == qb.dim
