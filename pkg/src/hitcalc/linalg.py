"""Linear algebra over GF(2) on rows packed into Python integers.

Bit ``i`` of a row stands for the monomial of rank ``i`` in a
:class:`DegreeContext`. Python's arbitrary precision integers give word-wise
XOR and a constant-time leading bit (``bit_length``), which is all the
elimination needs.
"""

from __future__ import annotations

import os
from math import comb
from typing import Iterable, Iterator, Sequence

from .monomial import compositions, order_key, weight_vector
from .poly import Polynomial

DEFAULT_COLUMN_CAP = int(os.environ.get("HITCALC_COLUMN_CAP", 2_000_000))


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured size limits."""


class DegreeContext:
    """All degree-``n`` monomials in ``t`` variables, ascending in the monomial order.

    With ``positive=True`` only monomials in which every variable occurs are
    kept; such a context is one support block of the full one.
    """

    def __init__(self, t: int, n: int, positive: bool = False, cap: int | None = None):
        if t < 1 or n < 0:
            raise ValueError("need t >= 1 and n >= 0")
        cap = DEFAULT_COLUMN_CAP if cap is None else cap
        size = count_monomials(t, n, positive)
        if size > cap:
            raise ResourceLimitError(f"{size} monomials of degree {n} in {t} variables exceeds cap {cap}")
        self.t = t
        self.n = n
        self.positive = positive
        width = max(n, 1).bit_length()
        self.monomials: list[tuple[int, ...]] = sorted(
            compositions(n, t, positive), key=lambda m: order_key(m, width)
        )
        self.index: dict[tuple[int, ...], int] = {m: i for i, m in enumerate(self.monomials)}
        self._weights = None

    def __len__(self) -> int:
        return len(self.monomials)

    def __repr__(self) -> str:
        kind = "positive" if self.positive else "all"
        return f"DegreeContext(t={self.t}, n={self.n}, {kind}, size={len(self)})"

    def rank(self, m: Sequence[int]) -> int:
        return self.index[tuple(m)]

    def unrank(self, i: int) -> tuple[int, ...]:
        return self.monomials[i]

    def to_row(self, p: Polynomial | Iterable[Sequence[int]]) -> int:
        terms = p.terms if isinstance(p, Polynomial) else p
        row = 0
        idx = self.index
        for m in terms:
            try:
                row ^= 1 << idx[tuple(m)]
            except KeyError:
                raise ValueError(f"monomial {tuple(m)} is not in {self!r}") from None
        return row

    def from_row(self, row: int) -> Polynomial:
        return Polynomial(self.t, (self.monomials[i] for i in iter_bits(row)))

    def weight_ranges(self) -> dict[tuple[int, ...], tuple[int, int]]:
        """For each weight vector, the half-open rank interval of its monomials.

        The order compares weights first, so each weight occupies a contiguous run.
        """
        if self._weights is None:
            ranges: dict[tuple[int, ...], list[int]] = {}
            for i, m in enumerate(self.monomials):
                w = weight_vector(m)
                if w in ranges:
                    ranges[w][1] = i + 1
                else:
                    ranges[w] = [i, i + 1]
            self._weights = {w: (a, b) for w, (a, b) in ranges.items()}
        return self._weights

    def mask(self, ranks: Iterable[int]) -> int:
        out = 0
        for i in ranks:
            out |= 1 << i
        return out


def count_monomials(t: int, n: int, positive: bool = False) -> int:
    if positive:
        return comb(n - 1, t - 1) if n >= t else 0
    return comb(n + t - 1, t - 1)


def iter_bits(row: int) -> Iterator[int]:
    """Positions of the set bits of ``row``, ascending."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def popcount(row: int) -> int:
    return bin(row).count("1")


class EchelonSpan:
    """Row-echelon basis of a subspace, pivots at the highest set bit of each row.

    By default rows are kept in semi-echelon form (distinct leading bits only),
    which is all rank, membership and reduction need. ``full=True`` keeps the
    basis fully reduced: no pivot bit appears in any other row.
    """

    def __init__(self, ncols: int | None = None, full: bool = False):
        self.ncols = ncols
        self.full = full
        self.pivots: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> list[int]:
        """Basis rows ordered by decreasing pivot."""
        return [self.pivots[p] for p in sorted(self.pivots, reverse=True)]

    def copy(self) -> "EchelonSpan":
        other = EchelonSpan(self.ncols, self.full)
        other.pivots = dict(self.pivots)
        return other

    def _check(self, row: int):
        if row < 0 or (self.ncols is not None and row >> self.ncols):
            raise ValueError("row does not fit the span's column count")

    def insert(self, row: int) -> bool:
        """Add ``row`` to the span; True when the rank grew."""
        self._check(row)
        if self.full:
            row = self.reduce(row)
            if not row:
                return False
            lead = row.bit_length() - 1
            bit = 1 << lead
            for p, r in self.pivots.items():
                if r & bit:
                    self.pivots[p] = r ^ row
            self.pivots[lead] = row
            return True
        pivots = self.pivots
        while row:
            lead = row.bit_length() - 1
            r = pivots.get(lead)
            if r is None:
                pivots[lead] = row
                return True
            row ^= r
        return False

    def extend(self, rows: Iterable[int]) -> int:
        """Insert every row; returns how many raised the rank."""
        gained = 0
        for r in rows:
            gained += self.insert(r)
        return gained

    def reduce(self, row: int) -> int:
        """The residual of ``row`` with every pivot bit cleared; zero iff ``row`` is in the span."""
        self._check(row)
        pivots = self.pivots
        residual = 0
        while row:
            lead = row.bit_length() - 1
            r = pivots.get(lead)
            if r is None:
                bit = 1 << lead
                residual |= bit
                row ^= bit
            else:
                row ^= r
        return residual

    def contains(self, row: int) -> bool:
        pivots = self.pivots
        while row:
            r = pivots.get(row.bit_length() - 1)
            if r is None:
                return False
            row ^= r
        return True

    __contains__ = contains

    def is_fully_reduced(self) -> bool:
        for p, r in self.pivots.items():
            if r.bit_length() - 1 != p:
                return False
            others = r ^ (1 << p)
            for q in self.pivots:
                if q != p and (others >> q) & 1:
                    return False
        return True

    def fully_reduce(self) -> None:
        """Convert to fully reduced form in place (ascending pivot sweep)."""
        done: dict[int, int] = {}
        for p in sorted(self.pivots):
            r = self.pivots[p]
            rest = r ^ (1 << p)
            # only lower bits can hold other pivots
            acc = 1 << p
            while rest:
                lead = rest.bit_length() - 1
                q = done.get(lead)
                if q is None:
                    bit = 1 << lead
                    acc |= bit
                    rest ^= bit
                else:
                    rest ^= q
            done[p] = acc
        self.pivots = done
        self.full = True


def span_of(rows: Iterable[int], ncols: int | None = None, full: bool = False) -> EchelonSpan:
    s = EchelonSpan(ncols, full)
    s.extend(rows)
    return s


def rank_of(rows: Iterable[int]) -> int:
    return span_of(rows).rank


def intersect_dim(span: EchelonSpan, columns: int | Iterable[int]) -> int:
    """Dimension of ``span`` intersected with the coordinate subspace on ``columns``.

    ``columns`` is a bit mask or an iterable of ranks. A vector of the span lies
    in the coordinate subspace iff its projection onto the other columns
    vanishes, so the answer is ``rank(span) - rank(projection)``. Eliminating
    the projections is the same as re-eliminating with the outside columns
    preferred as pivots.
    """
    mask = columns if isinstance(columns, int) else _mask(columns)
    outside = ~mask
    projected = EchelonSpan()
    for r in span.pivots.values():
        projected.insert(r & outside)
    return span.rank - projected.rank


def _mask(ranks: Iterable[int]) -> int:
    out = 0
    for i in ranks:
        out |= 1 << i
    return out


def nullspace(vectors: Sequence[int]) -> list[int]:
    """Basis of ``{c : sum_j c_j vectors[j] = 0}``, each ``c`` packed as a bitset over ``j``.

    The vectors are eliminated with their combination tags carried in the low
    bits; rows whose data part cancels leave a relation behind.
    """
    k = len(vectors)
    span = EchelonSpan()
    relations: list[int] = []
    for j, v in enumerate(vectors):
        row = (v << k) | (1 << j)
        pivots = span.pivots
        while row >> k:
            lead = row.bit_length() - 1
            r = pivots.get(lead)
            if r is None:
                pivots[lead] = row
                break
            row ^= r
        else:
            relations.append(row)
    return relations
