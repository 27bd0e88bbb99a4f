"""Hit subspaces, the quotient Q_n in t variables, and admissible monomial bases.

A monomial is inadmissible exactly when it is the leading (largest) term of
some hit polynomial, so with pivots at the highest monomial rank the
admissible monomials are the non-pivot columns of the echelonised hit span.

Steenrod squares never change which variables occur in a monomial, so the
hit span splits into one block per support set. The block for a support of
size ``s`` is an order-preserving copy of the positive-support problem in
``s`` variables; :class:`QuotientBasis` eliminates each such problem once and
reuses it for every support of that size.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .arith import mu, wood_trivial
from .linalg import (
    DegreeContext,
    EchelonSpan,
    count_monomials,
    intersect_dim,
    iter_bits,
)
from .monomial import (
    Monomial,
    compare_weights,
    compositions,
    minimal_spike,
    sort_monomials,
    weight_degree,
    weight_vector,
)
from .poly import Polynomial
from .steenrod import sq_terms

log = logging.getLogger(__name__)

PARTS = ("all", "zero", "positive")


@dataclass
class FamilyTrace:
    square: int
    sources: int
    standalone: int | None
    cumulative: int


@dataclass
class HitTrace:
    t: int
    n: int
    families: list[FamilyTrace] = field(default_factory=list)
    columns: int = 0
    rank: int = 0

    @property
    def dim(self) -> int:
        return self.columns - self.rank

    def render(self) -> str:
        """Text in the print order of the reference MAGMA session."""
        lines = [
            f"N := {self.n}; t := {self.t};",
            "[" + ", ".join(str(f.sources) for f in self.families) + "]",
        ]
        for i, f in enumerate(self.families):
            lines.append(f"S{f.square}")
            lines.append(str(f.standalone if f.standalone is not None else "-"))
            if i:
                lines.append(str(f.cumulative))
        lines.append("")
        lines.append(str(self.columns))
        lines.append(str(self.rank))
        lines.append(str(self.dim))
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "sources": [f.sources for f in self.families],
            "squares": [f.square for f in self.families],
            "standalone": [f.standalone for f in self.families],
            "cumulative": [f.cumulative for f in self.families],
            "columns": self.columns,
            "rank": self.rank,
            "dim": self.dim,
        }


def family_squares(n: int) -> list[int]:
    """Squares ``2**i < n``; those with ``2**(i+1) > n`` act trivially but are kept for the trace."""
    out = []
    k = 1
    while k < n:
        out.append(k)
        k <<= 1
    return out


def generator_rows(ctx: DegreeContext, k: int, check_support: bool = False) -> Iterator[int]:
    """Rows ``Sq^k(M)`` for every source monomial ``M`` of degree ``n - k``."""
    idx = ctx.index
    for m in compositions(ctx.n - k, ctx.t, ctx.positive):
        terms = sq_terms(k, m)
        if check_support:
            zeros = tuple(e == 0 for e in m)
            for term in terms:
                if tuple(e == 0 for e in term) != zeros:
                    raise AssertionError(f"Sq^{k}{m} mixes support classes at {term}")
        row = 0
        for term in terms:
            row ^= 1 << idx[term]
        yield row


def build_hit_span(
    ctx: DegreeContext, standalone: bool = True, check_support: bool = False
) -> tuple[EchelonSpan, HitTrace]:
    """Eliminate the images of ``Sq^1, Sq^2, Sq^4, ...`` into ``ctx``, in that order."""
    span = EchelonSpan(len(ctx))
    trace = HitTrace(ctx.t, ctx.n, columns=len(ctx))
    for k in family_squares(ctx.n):
        sources = count_monomials(ctx.t, ctx.n - k, ctx.positive)
        alone = EchelonSpan(len(ctx)) if standalone else None
        done = 0
        for row in generator_rows(ctx, k, check_support):
            span.insert(row)
            if alone is not None:
                alone.insert(row)
            done += 1
            if done % 20000 == 0:
                log.info("t=%d n=%d Sq%d: %d/%d rows, rank %d", ctx.t, ctx.n, k, done, sources, span.rank)
        trace.families.append(FamilyTrace(k, sources, alone.rank if alone is not None else None, span.rank))
    trace.rank = span.rank
    return span, trace


def hit_span(t: int, n: int, standalone: bool = True, positive: bool = False, cap: int | None = None):
    """Hit span of the full degree-``n`` context (or its positive block); returns ``(span, trace)``."""
    ctx = DegreeContext(t, n, positive=positive, cap=cap)
    return build_hit_span(ctx, standalone)


@dataclass
class PositiveBlock:
    """Quotient data for monomials in which all ``s`` variables occur."""

    context: DegreeContext
    span: EchelonSpan
    trace: HitTrace
    admissible_mask: int

    @property
    def dim(self) -> int:
        return len(self.context) - self.span.rank

    @property
    def admissible(self) -> list[tuple[int, ...]]:
        mons = self.context.monomials
        return [mons[i] for i in iter_bits(self.admissible_mask)]


@lru_cache(maxsize=6)
def positive_block(s: int, n: int, standalone: bool = False) -> PositiveBlock:
    ctx = DegreeContext(s, n, positive=True)
    span, trace = build_hit_span(ctx, standalone)
    free = ((1 << len(ctx)) - 1) ^ _pivot_mask(span)
    return PositiveBlock(ctx, span, trace, free)


def _pivot_mask(span: EchelonSpan) -> int:
    m = 0
    for p in span.pivots:
        m |= 1 << p
    return m


def _insert_zeros(local: Sequence[int], support: Sequence[int], t: int) -> tuple[int, ...]:
    e = [0] * t
    for pos, a in zip(support, local):
        e[pos] = a
    return tuple(e)


class QuotientBasis:
    """Admissible monomial basis of the degree-``n`` quotient in ``t`` variables.

    ``blocks[s]`` holds the positive-support elimination in ``s`` variables;
    every support of size ``s`` reuses it. ``admissible`` is ascending in the
    monomial order.
    """

    def __init__(self, t: int, n: int):
        if t < 1 or n < 0:
            raise ValueError("need t >= 1 and n >= 0")
        self.t = t
        self.n = n
        self.blocks: dict[int, PositiveBlock] = {}
        if n > 0:
            for s in range(1, min(t, n) + 1):
                if not wood_trivial(s, n):
                    self.blocks[s] = positive_block(s, n)
        mons = []
        if n == 0:
            mons.append((0,) * t)
        for s, block in self.blocks.items():
            local = block.admissible
            for support in combinations(range(t), s):
                mons.extend(_insert_zeros(m, support, t) for m in local)
        self.admissible: list[tuple[int, ...]] = sort_monomials(mons)
        self.position: dict[tuple[int, ...], int] = {m: i for i, m in enumerate(self.admissible)}

    def __len__(self) -> int:
        return len(self.admissible)

    @property
    def dim(self) -> int:
        return len(self.admissible)

    @property
    def columns(self) -> int:
        return count_monomials(self.t, self.n)

    @property
    def rank(self) -> int:
        return self.columns - self.dim

    def __repr__(self) -> str:
        return f"QuotientBasis(t={self.t}, n={self.n}, dim={self.dim})"

    def is_admissible(self, m: Sequence[int]) -> bool:
        return tuple(m) in self.position

    def _check(self, p: Polynomial):
        if p.nvars != self.t:
            raise ValueError(f"polynomial has {p.nvars} variables, expected {self.t}")
        bad = p.degrees() - {self.n}
        if bad:
            raise ValueError(f"polynomial is not homogeneous of degree {self.n}")

    def _group(self, terms: Iterable[tuple[int, ...]]) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
        groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for m in terms:
            support = tuple(i for i, e in enumerate(m) if e)
            groups.setdefault(support, []).append(tuple(m[i] for i in support))
        return groups

    def reduce(self, p: Polynomial | Sequence[int], floor: int | None = None) -> frozenset[tuple[int, ...]]:
        """Admissible monomials whose sum is congruent to ``p`` modulo hit elements.

        Empty exactly when ``p`` is hit.
        """
        if not isinstance(p, Polynomial):
            p = Polynomial.monomial(p)
        self._check(p)
        if self.n == 0:
            return p.terms
        out: set[tuple[int, ...]] = set()
        for support, local in self._group(p.terms).items():
            block = self.blocks.get(len(support))
            if block is None:
                continue  # the whole block is hit
            row = block.context.to_row(local)
            residual = block.span.reduce(row)
            mons = block.context.monomials
            out.update(_insert_zeros(mons[i], support, self.t) for i in iter_bits(residual))
        return frozenset(out)

    def reduce_graded(self, p: Polynomial, weight: Sequence[int]) -> frozenset[tuple[int, ...]]:
        """Reduction in the weight-``weight`` quotient of the filtration.

        Terms of smaller weight are discarded; a term of larger weight raises,
        since ``p`` is then not in the filtration stage at all.
        """
        self._check(p)
        weight = tuple(weight)
        for m in p.terms:
            if compare_weights(weight_vector(m), weight) > 0:
                raise FiltrationError(f"term {m} has weight above {weight}")
        out: set[tuple[int, ...]] = set()
        for support, local in self._group(p.terms).items():
            block = self.blocks.get(len(support))
            if block is None:
                continue
            ranges = block.context.weight_ranges()
            if weight not in ranges:
                continue  # every term sits strictly below the weight
            lo, _ = ranges[weight]
            row = block.context.to_row(local)
            residual = 0
            pivots = block.span.pivots
            while row >> lo:
                lead = row.bit_length() - 1
                r = pivots.get(lead)
                if r is None:
                    bit = 1 << lead
                    residual |= bit
                    row ^= bit
                else:
                    row ^= r
            mons = block.context.monomials
            out.update(_insert_zeros(mons[i], support, self.t) for i in iter_bits(residual))
        return frozenset(out)

    def coordinates(self, p: Polynomial | Sequence[int]) -> int:
        """``reduce(p)`` as a bitset over positions in ``admissible``."""
        v = 0
        for m in self.reduce(p):
            v |= 1 << self.position[m]
        return v

    def is_hit(self, p: Polynomial | Sequence[int]) -> bool:
        return not self.reduce(p)

    def by_weight(self, weight: Sequence[int], part: str = "all") -> list[tuple[int, ...]]:
        weight = tuple(weight)
        return [m for m in self.admissible if weight_vector(m) == weight and _in_part(m, part)]

    def part(self, part: str) -> list[tuple[int, ...]]:
        return [m for m in self.admissible if _in_part(m, part)]

    def weights(self) -> dict[tuple[int, ...], int]:
        counts: dict[tuple[int, ...], int] = {}
        for m in self.admissible:
            w = weight_vector(m)
            counts[w] = counts.get(w, 0) + 1
        return counts


class FiltrationError(ArithmeticError):
    """A polynomial left the weight filtration stage it was supposed to live in."""


def _in_part(m: Sequence[int], part: str) -> bool:
    if part == "all":
        return True
    positive = all(m)
    if part == "positive":
        return positive
    if part == "zero":
        return not positive
    raise ValueError(f"unknown support part {part!r}; expected one of {PARTS}")


@lru_cache(maxsize=8)
def admissible_basis(t: int, n: int) -> QuotientBasis:
    return QuotientBasis(t, n)


def dim_q(t: int, n: int) -> int:
    """Dimension of the degree-``n`` quotient in ``t`` variables."""
    if t < 1 or n < 0:
        raise ValueError("need t >= 1 and n >= 0")
    if n == 0:
        return 1
    if wood_trivial(t, n):
        return 0
    return admissible_basis(t, n).dim


def hit_trace(t: int, n: int, method: str = "full") -> HitTrace:
    """Per-family ranks of the hit span.

    ``full`` eliminates the whole context at once; ``blocked`` combines the
    positive blocks, each counted once per support set of its size.
    """
    if method == "full":
        return hit_span(t, n, standalone=True)[1]
    if method != "blocked":
        raise ValueError(f"unknown method {method!r}")
    trace = HitTrace(t, n, columns=count_monomials(t, n))
    squares = family_squares(n)
    sources = [0] * len(squares)
    alone = [0] * len(squares)
    cum = [0] * len(squares)
    for s in range(1, min(t, n) + 1):
        mult = comb(t, s)
        ctx = DegreeContext(s, n, positive=True)
        _, bt = build_hit_span(ctx, standalone=True)
        for i, f in enumerate(bt.families):
            sources[i] += mult * f.sources
            alone[i] += mult * f.standalone
            cum[i] += mult * f.cumulative
        trace.rank += mult * bt.rank
    trace.families = [FamilyTrace(k, sources[i], alone[i], cum[i]) for i, k in enumerate(squares)]
    return trace


def estimate_span_bytes(t: int, n: int, method: str = "blocked") -> int:
    """Rough peak memory of the elimination.

    A semi-echelon row with pivot ``p`` occupies about ``p / 8`` bytes, so a
    span over ``c`` columns costs about ``c * c / 16`` bytes plus the monomial
    index. The blocked method only ever holds its largest block.
    """
    if n == 0 or wood_trivial(t, n):
        return 0
    if method == "full":
        c = count_monomials(t, n)
    else:
        c = max(count_monomials(s, n, positive=True) for s in range(1, min(t, n) + 1))
    return c * c // 16 + 300 * c


def is_hit(p: Polynomial) -> bool:
    degs = p.degrees()
    if not degs:
        return True
    if len(degs) > 1:
        raise ValueError("is_hit needs a homogeneous polynomial")
    return admissible_basis(p.nvars, degs.pop()).is_hit(p)


def reduce_to_admissible(p: Polynomial) -> frozenset[tuple[int, ...]]:
    degs = p.degrees()
    if not degs:
        return frozenset()
    if len(degs) > 1:
        raise ValueError("reduce_to_admissible needs a homogeneous polynomial")
    return admissible_basis(p.nvars, degs.pop()).reduce(p)


def is_admissible(m: Sequence[int]) -> bool:
    return admissible_basis(len(m), sum(m)).is_admissible(m)


def _check_weight(n: int, w: Sequence[int]):
    if weight_degree(w) != n:
        raise ValueError(f"weight vector {tuple(w)} has degree {weight_degree(w)}, not {n}")


def dim_q_omega(t: int, n: int, w: Sequence[int], part: str = "all", method: str = "count") -> int:
    """Dimension of the weight-``w`` quotient, optionally restricted to a support part.

    ``count`` counts admissible monomials of weight exactly ``w``.
    ``modular`` works from the hit span directly:
    ``dim P^{<=w} - dim((H + P^{<w}) cap P^{<=w})``, which equals the quotient
    dimension because ``P^{<w}`` lies inside ``P^{<=w}``.
    """
    _check_weight(n, w)
    w = tuple(w)
    if part not in PARTS:
        raise ValueError(f"unknown support part {part!r}; expected one of {PARTS}")
    if method == "count":
        if n > 0 and wood_trivial(t, n):
            return 0
        return len(admissible_basis(t, n).by_weight(w, part))
    if method != "modular":
        raise ValueError(f"unknown method {method!r}")
    span, ctx = _full_span(t, n)
    le, lt, part_mask = 0, 0, 0
    for i, m in enumerate(ctx.monomials):
        if not _in_part(m, part):
            continue
        part_mask |= 1 << i
        c = compare_weights(weight_vector(m), w)
        if c <= 0:
            le |= 1 << i
        if c < 0:
            lt |= 1 << i
    work = EchelonSpan(len(ctx))
    outside = ~part_mask
    for r in span.pivots.values():
        if not r & outside:
            work.insert(r)
    for i in iter_bits(lt):
        work.insert(1 << i)
    return bin(le).count("1") - intersect_dim(work, le)


@lru_cache(maxsize=2)
def _full_span(t: int, n: int) -> tuple[EchelonSpan, DegreeContext]:
    ctx = DegreeContext(t, n)
    span, _ = build_hit_span(ctx, standalone=False)
    return span, ctx


def full_admissible(t: int, n: int) -> list[tuple[int, ...]]:
    """Admissible monomials from one elimination over the whole context (no blocks)."""
    span, ctx = _full_span(t, n)
    return [m for i, m in enumerate(ctx.monomials) if i not in span.pivots]


def dim_q_zero_via_formula(t: int, n: int, positive_dims: Sequence[int]) -> int:
    """``sum_s C(t, s) * positive_dims[s-1]`` over ``s = 1 .. t-1``."""
    if len(positive_dims) != t - 1:
        raise ValueError(f"expected {t - 1} positive-part dimensions, got {len(positive_dims)}")
    return sum(comb(t, s) * d for s, d in enumerate(positive_dims, start=1))


def positive_dims(t: int, n: int) -> list[int]:
    """Positive-support dimensions in ``1 .. t`` variables at degree ``n``."""
    out = []
    for s in range(1, t + 1):
        if n == 0 or n < s or wood_trivial(s, n):
            out.append(0)
        else:
            out.append(positive_block(s, n).dim)
    return out


def kameko_down(m: Sequence[int]) -> Monomial | None:
    """``prod x_j^{(a_j - 1)/2}`` when every exponent is odd, else ``None`` (the zero class)."""
    if all(a & 1 for a in m):
        return Monomial((a - 1) >> 1 for a in m)
    return None


@dataclass
class KamekoMap:
    t: int
    n_low: int
    source: QuotientBasis
    target: QuotientBasis
    columns: list[int]
    rank: int

    @property
    def surjective(self) -> bool:
        return self.rank == self.target.dim

    @property
    def kernel_dim(self) -> int:
        return self.source.dim - self.rank


def kameko_map(t: int, n_low: int) -> KamekoMap:
    """Matrix of the Kameko map on admissible bases, degree ``t + 2 n_low`` to ``n_low``."""
    source = admissible_basis(t, t + 2 * n_low)
    target = admissible_basis(t, n_low)
    cols = []
    for m in source.admissible:
        y = kameko_down(m)
        cols.append(0 if y is None else target.coordinates(y))
    span = EchelonSpan()
    span.extend(cols)
    return KamekoMap(t, n_low, source, target, cols, span.rank)


def kameko_split(t: int, n_low: int) -> dict:
    """Kernel accounting: the zero-support part plus every positive component whose weight starts below ``t``.

    Positive monomials of weight ``(t, ...)`` have all exponents odd; those are
    the ones the Kameko map does not kill.
    """
    n = t + 2 * n_low
    qb = admissible_basis(t, n)
    comps = {}
    for w, count in sorted(qb.weights().items()):
        pos = len(qb.by_weight(w, "positive"))
        if pos and w[0] < t:
            comps[w] = pos
    zero = len(qb.part("zero"))
    return {
        "source_dim": qb.dim,
        "target_dim": dim_q(t, n_low),
        "kernel": kameko_kernel_dim(t, n_low),
        "zero": zero,
        "components": comps,
        "split_total": zero + sum(comps.values()),
    }


def kameko_kernel_dim(t: int, n_low: int) -> int:
    """Kernel dimension of the (surjective) Kameko map by rank-nullity."""
    return dim_q(t, t + 2 * n_low) - dim_q(t, n_low)


def kameko_well_defined(t: int, n_low: int) -> bool:
    """Check that every hit generator in degree ``t + 2 n_low`` maps to a hit element."""
    n = t + 2 * n_low
    target = admissible_basis(t, n_low)
    for k in family_squares(n):
        for m in compositions(n - k, t):
            acc: set = set()
            for term in sq_terms(k, m):
                y = kameko_down(term)
                if y is not None:
                    acc ^= {tuple(y)}
            if acc and not target.is_hit(Polynomial(t, acc)):
                return False
    return True


def singer_zero(m: Sequence[int]) -> bool:
    """Weight of ``m`` below that of the minimal spike of its degree (which forces ``m`` hit)."""
    t, n = len(m), sum(m)
    if mu(n) > t:
        raise ValueError(f"mu({n}) > {t}: there is no minimal spike")
    return compare_weights(weight_vector(m), weight_vector(minimal_spike(t, n))) < 0


def ks_criterion(x: Sequence[int], y: Sequence[int], s: int) -> bool:
    """True when ``x * y^(2^s)`` is certified inadmissible: ``x < 2^s`` exponentwise and ``y`` inadmissible."""
    if len(x) != len(y):
        raise ValueError("x and y have different numbers of variables")
    if s < 1:
        raise ValueError("s must be positive")
    if len(weight_vector(x)) > s:
        return False
    return not is_admissible(y)
