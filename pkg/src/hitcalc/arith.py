"""Integer helpers: binary digits, the mu-function and generic-degree arithmetic."""

from __future__ import annotations

from dataclasses import dataclass


def alpha(n: int) -> int:
    """Number of ones in the binary expansion of ``n``."""
    if n < 0:
        raise ValueError("alpha is defined for n >= 0")
    return bin(n).count("1")


def bit(n: int, j: int) -> int:
    """The ``j``-th binary digit of ``n`` (``j = 0`` is the units digit)."""
    return (n >> j) & 1


def mu(n: int) -> int:
    """Least number of summands of the form ``2**d - 1`` (d > 0) adding up to ``n``.

    Uses the characterisation ``mu(n) = min{r >= 0 : alpha(n + r) <= r}``;
    ``mu(0) == 0``.
    """
    if n < 0:
        raise ValueError("mu is defined for n >= 0")
    r = 0
    while alpha(n + r) > r:
        r += 1
    return r


def binom_mod2(a: int, b: int) -> int:
    """``C(a, b) mod 2`` by Lucas: odd iff the bits of ``b`` are a subset of those of ``a``."""
    if a < 0 or b < 0:
        raise ValueError("binom_mod2 needs non-negative arguments")
    return int(b & ~a == 0)


@dataclass(frozen=True)
class GenericDegreeSpec:
    r: int
    m: int
    d: int

    def __post_init__(self):
        if self.r < 1 or self.m < 0 or self.d < 0:
            raise ValueError(f"invalid generic degree spec {self}")

    @property
    def degree(self) -> int:
        return generic_degree(self)


def generic_degree(spec: GenericDegreeSpec) -> int:
    return spec.r * ((1 << spec.d) - 1) + spec.m * (1 << spec.d)


def wood_trivial(t: int, n: int) -> bool:
    """True when the degree-``n`` quotient in ``t`` variables vanishes because ``mu(n) > t``."""
    if t < 1:
        raise ValueError("t must be positive")
    return mu(n) > t


def kameko_iso(t: int, n: int) -> bool:
    """True when the Kameko map from degree ``t + 2n`` to degree ``n`` is an isomorphism."""
    if t < 1:
        raise ValueError("t must be positive")
    return mu(t + 2 * n) == t


def validate_dlP(t: int, n_zeta: int) -> bool:
    """Check ``1 <= t-3 <= mu(n_zeta) == alpha(n_zeta + mu(n_zeta)) <= t-2``."""
    m = mu(n_zeta)
    return 1 <= t - 3 <= m <= t - 2 and m == alpha(n_zeta + m)


def sum_phuc_dimension(t: int, base_dim: int) -> int:
    """Dimension in ``t`` variables obtained from a ``(t-1)``-variable dimension.

    Only meaningful once :func:`validate_dlP` holds for the underlying degree.
    """
    if t < 2 or base_dim < 0:
        raise ValueError("need t >= 2 and base_dim >= 0")
    return ((1 << t) - 1) * base_dim
