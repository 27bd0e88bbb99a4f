"""Symmetric and general linear group actions on the quotient, and their invariants.

Both groups are handled through generators: the adjacent transpositions
``sigma_1 .. sigma_{t-1}`` generate the symmetric group and adding the
transvection ``sigma_t: x1 -> x1 + x2`` gives all of GL_t(F2). A class is
invariant iff every generator fixes it, so the invariant space is the common
kernel of the matrices ``M_d + I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hit import FiltrationError, QuotientBasis, _check_weight, admissible_basis
from .linalg import iter_bits, nullspace
from .poly import Polynomial, SubstitutionMap, substitute

KINDS = ("symmetric", "gl")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    t: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown group {self.kind!r}; expected one of {KINDS}")
        if self.t < 1:
            raise ValueError("t must be positive")

    @classmethod
    def parse(cls, text: str, t: int) -> "GroupSpec":
        aliases = {"gl": "gl", "general_linear": "gl", "sym": "symmetric", "symmetric": "symmetric", "sigma": "symmetric"}
        key = text.strip().lower()
        if key not in aliases:
            raise ValueError(f"unknown group {text!r}")
        return cls(aliases[key], t)

    def generators(self) -> list[SubstitutionMap]:
        if self.t == 1:
            return []
        last = self.t if self.kind == "gl" else self.t - 1
        return [sigma(d, self.t) for d in range(1, last + 1)]


def sigma(d: int, t: int) -> SubstitutionMap:
    """``sigma_d`` swaps ``x_d`` and ``x_{d+1}`` for ``d < t``; ``sigma_t`` sends ``x1`` to ``x1 + x2``."""
    if not 1 <= d <= t:
        raise ValueError(f"generator index {d} out of range 1..{t}")
    x = [Polynomial.variable(j, t) for j in range(1, t + 1)]
    if d < t:
        x[d - 1], x[d] = x[d], x[d - 1]
    else:
        if t < 2:
            raise ValueError("the transvection needs t >= 2")
        x[0] = x[0] + x[1]
    return SubstitutionMap(tuple(x), t)


def induced_action(qb: QuotientBasis, smap: SubstitutionMap) -> list[int]:
    """Columns of the induced matrix: column ``j`` holds the coordinates of ``smap(admissible[j])``."""
    if smap.source_nvars != qb.t or smap.target_nvars != qb.t:
        raise ValueError("map is not an endomorphism of the quotient's variables")
    return [qb.coordinates(substitute(smap, m)) for m in qb.admissible]


def graded_action(qb: QuotientBasis, smap: SubstitutionMap, weight: Sequence[int]) -> tuple[list, list[int]]:
    """Action on the weight-``weight`` quotient: ``(basis, columns)`` over its exact-weight basis.

    Terms of smaller weight vanish in this quotient. A term of larger weight
    raises :class:`FiltrationError`.
    """
    basis = qb.by_weight(weight)
    pos = {m: i for i, m in enumerate(basis)}
    cols = []
    for m in basis:
        v = 0
        for y in qb.reduce_graded(substitute(smap, m), weight):
            v |= 1 << pos[y]
        cols.append(v)
    return basis, cols


def _common_fixed(dim: int, matrices: list[list[int]]) -> list[int]:
    # stack the columns of every (M_d + I) and solve once
    if not matrices:
        return [1 << j for j in range(dim)]
    vectors = []
    for j in range(dim):
        v = 0
        for d, cols in enumerate(matrices):
            v |= (cols[j] ^ (1 << j)) << (d * dim)
        vectors.append(v)
    return nullspace(vectors)


@dataclass
class InvariantResult:
    t: int
    n: int
    group: GroupSpec
    basis_monomials: list
    vectors: list[int]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def supports(self) -> list[list[tuple[int, ...]]]:
        """Each invariant vector as the admissible monomials it sums."""
        return [[self.basis_monomials[i] for i in iter_bits(v)] for v in self.vectors]


def invariants(t: int, n: int, group: GroupSpec | str = "gl") -> InvariantResult:
    if isinstance(group, str):
        group = GroupSpec.parse(group, t)
    if group.t != t:
        raise ValueError("group and quotient have different variable counts")
    qb = admissible_basis(t, n)
    mats = [induced_action(qb, g) for g in group.generators()]
    return InvariantResult(t, n, group, list(qb.admissible), _common_fixed(qb.dim, mats))


def invariant_dim(t: int, n: int, group: GroupSpec | str = "gl") -> tuple[int, list[int]]:
    """``(dimension, basis)`` of the invariants; basis vectors are bitsets over admissible positions."""
    res = invariants(t, n, group)
    return res.dim, res.vectors


def invariants_omega(t: int, n: int, w: Sequence[int], group: GroupSpec | str = "gl") -> InvariantResult:
    _check_weight(n, w)
    if isinstance(group, str):
        group = GroupSpec.parse(group, t)
    qb = admissible_basis(t, n)
    basis = qb.by_weight(w)
    mats = []
    for g in group.generators():
        _, cols = graded_action(qb, g, w)
        mats.append(cols)
    return InvariantResult(t, n, group, basis, _common_fixed(len(basis), mats))


def invariant_dim_omega(t: int, n: int, w: Sequence[int], group: GroupSpec | str = "gl") -> int:
    return invariants_omega(t, n, w, group).dim


def is_invariant(p: Polynomial, group: GroupSpec | str = "gl") -> bool:
    """Whether the class of ``p`` is fixed by every generator."""
    t = p.nvars
    if isinstance(group, str):
        group = GroupSpec.parse(group, t)
    degs = p.degrees()
    if not degs:
        return True
    qb = admissible_basis(t, degs.pop())
    base = qb.coordinates(p)
    return all(qb.coordinates(substitute(g, p)) == base for g in group.generators())


__all__ = [
    "FiltrationError",
    "GroupSpec",
    "InvariantResult",
    "graded_action",
    "induced_action",
    "invariant_dim",
    "invariant_dim_omega",
    "invariants",
    "invariants_omega",
    "is_invariant",
    "sigma",
]
