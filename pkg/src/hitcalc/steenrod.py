"""Steenrod squares on F2[x_1, ..., x_t].

``Sq^k`` of a monomial is the degree ``deg + k`` part of the total square
``prod_j (x_j + x_j^2)^{a_j}``, i.e. a sum over splittings ``k = sum k_j`` of
``prod_j C(a_j, k_j) x_j^{a_j + k_j}``. Distinct splittings give distinct
monomials, so no cancellation happens inside a single monomial.
"""

from __future__ import annotations

from typing import Sequence

from .poly import Polynomial


def _submasks_upto(a: int, cap: int) -> list[int]:
    # k <= cap with C(a, k) odd, ascending
    out = []
    s = a
    while True:
        if s <= cap:
            out.append(s)
        if s == 0:
            break
        s = (s - 1) & a
    out.reverse()
    return out


def sq_terms(k: int, exps: Sequence[int]) -> list[tuple[int, ...]]:
    """Terms of ``Sq^k`` applied to the monomial with exponents ``exps``."""
    t = len(exps)
    if k == 0:
        return [tuple(exps)]
    if k > sum(exps):
        return []
    out: list[tuple[int, ...]] = []
    # suffix capacity: the most that variables j.. can absorb
    room = [0] * (t + 1)
    for j in range(t - 1, -1, -1):
        room[j] = room[j + 1] + exps[j]
    acc = [0] * t

    def rec(j: int, rem: int):
        a = exps[j]
        if j == t - 1:
            if rem & ~a == 0:
                acc[j] = a + rem
                out.append(tuple(acc))
            return
        lo = rem - room[j + 1]
        for kj in _submasks_upto(a, rem):
            if kj < lo:
                continue
            acc[j] = a + kj
            rec(j + 1, rem - kj)

    rec(0, k)
    return out


def sq_monomial(k: int, m: Sequence[int]) -> Polynomial:
    if k < 0:
        raise ValueError("negative square")
    return Polynomial._raw(len(m), frozenset(sq_terms(k, m)))


def sq(k: int, p: Polynomial) -> Polynomial:
    """F2-linear extension of :func:`sq_monomial`."""
    if k < 0:
        raise ValueError("negative square")
    acc: set[tuple[int, ...]] = set()
    for m in p.terms:
        acc.symmetric_difference_update(sq_terms(k, m))
    return Polynomial._raw(p.nvars, frozenset(acc))

