"""Maps between polynomial algebras in t-1 and t variables.

``q_insert`` inserts a missing variable, ``psi`` is the weight preserving
lifting of a monomial into full support, ``p_project`` is the linear
projection back down. ``phi_sets`` collects the images of a set of monomials
and :func:`verify_sum_conjecture` checks that admissible inputs have
admissible images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .arith import bit
from .hit import admissible_basis
from .monomial import Monomial, compare_weights, weight_vector
from .poly import Polynomial, SubstitutionMap, substitute


def q_insert(l: int, t: int, m: Sequence[int]) -> Monomial:
    """Insert a zero exponent at (one-based) position ``l``; ``m`` has ``t - 1`` variables."""
    if not 1 <= l <= t:
        raise ValueError(f"insertion index {l} out of range 1..{t}")
    if len(m) != t - 1:
        raise ValueError(f"monomial has {len(m)} variables, expected {t - 1}")
    e = list(m)
    e.insert(l - 1, 0)
    return Monomial(e)


@dataclass(frozen=True)
class PsiSpec:
    """A pair ``(l, L)`` with ``1 <= l < L[0] < ... < L[-1] <= t``."""

    l: int
    L: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(self.L))
        seq = (self.l,) + self.L
        if self.l < 1 or seq[-1] > self.t or any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"({self.l}, {self.L}) is not an admissible index pair for t={self.t}")

    @property
    def r(self) -> int:
        return len(self.L)

    def divisor(self, u: int) -> tuple[int, ...]:
        """Exponents of ``X_(L,u)`` in ``t`` variables."""
        r = self.r
        e = [0] * self.t
        e[self.L[u - 1] - 1] = sum(1 << (r - d) for d in range(1, u + 1))
        for d in range(u + 1, r + 1):
            e[self.L[d - 1] - 1] = 1 << (r - d)
        return tuple(e)


def index_pairs(t: int, min_r: int = 0) -> Iterator[PsiSpec]:
    """Every ``(l, L)`` for ``t`` variables with ``len(L) >= min_r``."""
    for l in range(1, t + 1):
        rest = range(l + 1, t + 1)
        for r in range(min_r, t - l + 1):
            for L in combinations(rest, r):
                yield PsiSpec(l, L, t)


def _candidates(spec: PsiSpec, a: Sequence[int], strict: bool) -> list[int]:
    r = spec.r
    top = 1 << r
    # a_{l_d - 1} in one-based terms
    vals = [a[p - 2] for p in spec.L]
    found = []
    for u in range(1, r + 1):
        if any(v + 1 != top for v in vals[: u - 1]):
            break
        if vals[u - 1] + 1 <= top:
            continue
        if strict:
            if any(not bit(vals[u - 1], r - d) for d in range(1, u + 1)):
                continue
            if any(not bit(vals[d - 1], r - d) for d in range(u + 1, r + 1)):
                continue
        found.append(u)
    return found


def psi_condition(spec: PsiSpec, m: Sequence[int], strict: bool = True) -> int | None:
    """The index ``u`` making ``psi`` nonzero on ``m``, or ``None``.

    With ``strict=False`` only the equality and size clauses are checked.
    """
    if len(m) != spec.t - 1:
        raise ValueError(f"monomial has {len(m)} variables, expected {spec.t - 1}")
    if spec.r == 0:
        raise ValueError("the condition needs a nonempty L")
    found = _candidates(spec, m, strict)
    if len(found) > 1:  # pragma: no cover - the clauses force uniqueness
        raise AssertionError(f"several u fit {tuple(m)} under {spec}: {found}")
    return found[0] if found else None


def psi(spec: PsiSpec, m: Sequence[int], lenient: bool = False) -> Monomial | None:
    """Image of ``m`` under ``psi``; ``None`` stands for zero.

    ``lenient`` skips the binary digit clauses and applies the division
    whenever the size clauses admit a ``u`` (and it leaves no negative exponent).
    """
    lifted = q_insert(spec.l, spec.t, m)
    if spec.r == 0:
        return lifted
    u = psi_condition(spec, m, strict=not lenient)
    if u is None:
        return None
    e = list(lifted)
    e[spec.l - 1] += (1 << spec.r) - 1
    div = spec.divisor(u)
    out = [x - y for x, y in zip(e, div)]
    if any(x < 0 for x in out):
        if lenient:
            return None
        raise AssertionError(f"psi{spec} on {tuple(m)} divides to a negative exponent")
    return Monomial(out)


def p_map(l: int, L: Sequence[int], t: int) -> SubstitutionMap:
    """Substitution from ``t`` to ``t - 1`` variables behind :func:`p_project`."""
    PsiSpec(l, tuple(L), t)  # validates
    images = []
    for j in range(1, t + 1):
        if j < l:
            images.append(Polynomial.variable(j, t - 1))
        elif j == l:
            acc = Polynomial.zero(t - 1)
            for p in L:
                acc = acc + Polynomial.variable(p - 1, t - 1)
            images.append(acc)
        else:
            images.append(Polynomial.variable(j - 1, t - 1))
    return SubstitutionMap(tuple(images), t - 1)


def p_project(l: int, L: Sequence[int], p: Polynomial | Sequence[int]) -> Polynomial:
    if not isinstance(p, Polynomial):
        p = Polynomial.monomial(p)
    if p.nvars < 2:
        raise ValueError("projection needs at least two variables")
    return substitute(p_map(l, L, p.nvars), p)


def mothebe_uys_lift(l: int, d: int, m: Sequence[int]) -> Monomial:
    """``x_l^(2^d - 1) * q_insert(l, t, m)`` with ``t = len(m) + 1``."""
    if d < 1:
        raise ValueError("d must be positive")
    e = list(q_insert(l, len(m) + 1, m))
    e[l - 1] = (1 << d) - 1
    return Monomial(e)


def phi_sets(
    V: Iterable[Sequence[int]], t: int, lenient: bool = False
) -> tuple[set[tuple[int, ...]], set[tuple[int, ...]]]:
    """``(phi0, phi_pos)``: all insertions, and the full-support nonzero images with ``L`` nonempty."""
    V = [tuple(v) for v in V]
    phi0: set[tuple[int, ...]] = set()
    pos: set[tuple[int, ...]] = set()
    for v in V:
        for l in range(1, t + 1):
            phi0.add(tuple(q_insert(l, t, v)))
    specs = list(index_pairs(t, min_r=1))
    for v in V:
        for spec in specs:
            y = psi(spec, v, lenient)
            if y is not None and all(y):
                pos.add(tuple(y))
    return phi0, pos


@dataclass
class ConjectureReport:
    t: int
    n: int
    weight: tuple[int, ...]
    sources: int
    images: int
    counterexamples: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = field(
        default_factory=list
    )

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    @property
    def vacuous(self) -> bool:
        return self.sources == 0


def verify_sum_conjecture(t: int, n: int, w: Sequence[int], cumulative: bool = False) -> ConjectureReport:
    """Check that the insertions and psi-lifts of admissible monomials stay admissible.

    Sources are the admissible monomials in ``t - 1`` variables of weight
    exactly ``w`` (at most ``w`` with ``cumulative=True``). Each failure is
    recorded as ``(source, (l,) + L, image)``; a plain insertion has ``L`` empty.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    w = tuple(w)
    low = admissible_basis(t - 1, n)
    high = admissible_basis(t, n)
    if cumulative:
        sources = [m for m in low.admissible if compare_weights(weight_vector(m), w) <= 0]
    else:
        sources = low.by_weight(w)
    report = ConjectureReport(t, n, w, len(sources), 0)
    specs = list(index_pairs(t, min_r=1))
    seen = set()
    for x in sources:
        for l in range(1, t + 1):
            y = tuple(q_insert(l, t, x))
            seen.add(y)
            if not high.is_admissible(y):
                report.counterexamples.append((x, (l,), y))
        for spec in specs:
            y = psi(spec, x)
            if y is None:
                continue
            y = tuple(y)
            seen.add(y)
            if not high.is_admissible(y):
                report.counterexamples.append((x, (spec.l,) + spec.L, y))
    report.images = len(seen)
    return report
