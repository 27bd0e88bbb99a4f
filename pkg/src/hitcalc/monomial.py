"""Monomials in F2[x_1, ..., x_t], their weight vectors and the weight-then-exponent order.

A monomial is stored as its exponent tuple: ``(12, 6, 9)`` is x1^12 x2^6 x3^9.
Weight vectors are plain tuples with trailing zeros removed.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .arith import mu


class Monomial(tuple):
    """Exponent tuple with a few conveniences.

    Hashes and compares equal to the plain tuple of its exponents, so the two
    can be mixed freely as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def nvars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def weight(self) -> tuple[int, ...]:
        return weight_vector(self)

    @property
    def support(self) -> frozenset[int]:
        """Zero-based positions of the variables that occur."""
        return frozenset(i for i, e in enumerate(self) if e)

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self)


def weight_vector(m: Sequence[int]) -> tuple[int, ...]:
    """Entry ``j`` counts the exponents whose binary digit ``j`` is set."""
    top = max(m, default=0).bit_length()
    return tuple(sum((e >> j) & 1 for e in m) for j in range(top))


def weight_degree(w: Sequence[int]) -> int:
    return sum(c << j for j, c in enumerate(w))


def trim(w: Sequence[int]) -> tuple[int, ...]:
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def _padded(w: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(w) + (0,) * (length - len(w))


def compare_weights(a: Sequence[int], b: Sequence[int]) -> int:
    """Left-lexicographic comparison of weight vectors, padding with zeros."""
    size = max(len(a), len(b))
    pa, pb = _padded(a, size), _padded(b, size)
    return (pa > pb) - (pa < pb)


def compare(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b`` in the monomial order."""
    if len(a) != len(b):
        raise ValueError("monomials have different numbers of variables")
    c = compare_weights(weight_vector(a), weight_vector(b))
    if c:
        return c
    ta, tb = tuple(a), tuple(b)
    return (ta > tb) - (ta < tb)


def order_key(m: Sequence[int], width: int = 0):
    """Sort key realising :func:`compare`.

    ``width`` pads weight vectors to a common length; it must be at least the
    bit length of the largest exponent in the collection being sorted.
    """
    w = weight_vector(m)
    return (_padded(w, max(width, len(w))), tuple(m))


def sort_monomials(monomials: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    mons = [tuple(m) for m in monomials]
    width = max((max(m, default=0).bit_length() for m in mons), default=0)
    return sorted(mons, key=lambda m: order_key(m, width))


def compositions(n: int, t: int, positive: bool = False) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of length ``t`` summing to ``n`` (entries >= 1 if ``positive``)."""
    low = 1 if positive else 0
    if t == 1:
        if n >= low:
            yield (n,)
        return
    for a in range(low, n - low * (t - 1) + 1):
        for rest in compositions(n - a, t - 1, positive):
            yield (a,) + rest


def weight_vectors_of_degree(n: int, t: int) -> list[tuple[int, ...]]:
    """Every trimmed sequence with entries in ``0..t`` and weight degree ``n``.

    No attempt is made to discard sequences no monomial realises.
    """
    out: list[tuple[int, ...]] = []

    def rec(rem: int, j: int, acc: tuple[int, ...]):
        if rem == 0:
            out.append(trim(acc))
            return
        step = 1 << j
        # the remaining degree must be reachable with entries <= t in higher slots
        for c in range(0, t + 1):
            if c * step > rem:
                break
            if (rem - c * step) % (step * 2) == 0:
                rec(rem - c * step, j + 1, acc + (c,))

    rec(n, 0, ())
    return sorted(set(out))


def is_positive_support(m: Sequence[int]) -> bool:
    return all(e > 0 for e in m)


def _is_spike_exponent(e: int) -> bool:
    return e & (e + 1) == 0


def is_spike(m: Sequence[int]) -> bool:
    """Every exponent is of the form ``2**k - 1`` (zero included)."""
    return all(_is_spike_exponent(e) for e in m)


@lru_cache(maxsize=None)
def _completion(rem: int, slots: int, cap: int) -> tuple[int, ...] | None:
    # strictly decreasing exponents 1 <= k <= cap, except the final two may coincide
    if rem == 0:
        return ()
    if slots == 0:
        return None
    for k in range(cap, 0, -1):
        v = (1 << k) - 1
        if v > rem:
            continue
        rest = _completion(rem - v, slots - 1, k - 1)
        if rest is not None:
            return (k,) + rest
        if slots >= 2 and rem == 2 * v:
            return (k, k)
    return None


def minimal_spike(t: int, n: int) -> Monomial:
    """The minimal spike of degree ``n`` in ``t`` variables, exponents descending from x1.

    Raises ``ValueError`` when ``mu(n) > t`` and no spike exists.
    """
    if t < 1 or n < 0:
        raise ValueError("need t >= 1 and n >= 0")
    if mu(n) > t:
        raise ValueError(f"no spike of degree {n} in {t} variables (mu({n}) = {mu(n)})")
    ks = _completion(n, t, max(n, 1).bit_length())
    if ks is None:  # pragma: no cover - mu(n) <= t guarantees a completion
        raise ValueError(f"no minimal spike found for t={t}, n={n}")
    exps = [(1 << k) - 1 for k in ks]
    return Monomial(exps + [0] * (t - len(exps)))


def format_monomial(m: Sequence[int]) -> str:
    """Canonical text form: space-separated exponents."""
    return " ".join(str(e) for e in m)


def parse_monomial(text: str) -> Monomial:
    return Monomial(int(tok) for tok in text.replace(",", " ").split())


def pretty(m: Sequence[int]) -> str:
    """Human form such as ``x1^7x2^7``; the constant monomial prints as ``1``."""
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "".join(parts) or "1"
