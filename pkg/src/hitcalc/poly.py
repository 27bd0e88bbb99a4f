"""Polynomials over F2 as sets of exponent tuples, and ring homomorphisms between them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .monomial import Monomial, format_monomial, sort_monomials


class Polynomial:
    """A homogeneous-or-not polynomial over F2: the set of monomials with coefficient 1.

    Equality and hashing are structural (the term set plus the variable count).
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Iterable[Sequence[int]] = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        acc: set[tuple[int, ...]] = set()
        for m in terms:
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"term {m} does not have {nvars} variables")
            acc ^= {m}
        self.nvars = nvars
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, nvars: int, terms: frozenset) -> "Polynomial":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, m: Sequence[int]) -> "Polynomial":
        return cls._raw(len(m), frozenset([tuple(m)]))

    @classmethod
    def variable(cls, j: int, nvars: int) -> "Polynomial":
        """``x_j`` with ``j`` one-based."""
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} out of range 1..{nvars}")
        e = [0] * nvars
        e[j - 1] = 1
        return cls.monomial(e)

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, frozenset())

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.monomial((0,) * nvars)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __contains__(self, m) -> bool:
        return tuple(m) in self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.terms))

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial._raw(self.nvars, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: set[tuple[int, ...]] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Polynomial._raw(self.nvars, frozenset(acc))

    def frobenius(self, k: int = 1) -> "Polynomial":
        """``p ** (2 ** k)``: over F2 this just scales every exponent."""
        s = 1 << k
        return Polynomial._raw(self.nvars, frozenset(tuple(e * s for e in m) for m in self.terms))

    def __pow__(self, a: int) -> "Polynomial":
        if a < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars)
        k = 0
        while a:
            if a & 1:
                result = result * self.frobenius(k)
            a >>= 1
            k += 1
        return result

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[tuple[int, ...]]:
        return sort_monomials(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(m) for m in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.sorted_terms()!r})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


_VAR = re.compile(r"x(\d+)(?:\^(\d+))?")


def _parse_term(chunk: str, nvars: int | None) -> Monomial:
    chunk = chunk.strip()
    if "x" not in chunk:
        if chunk == "1" and nvars is not None and nvars != 1:
            return Monomial((0,) * nvars)
        return Monomial(int(tok) for tok in chunk.split())
    if nvars is None:
        raise ValueError("terms written with x_i need an explicit variable count")
    if _VAR.sub("", chunk.replace("*", "").replace(" ", "")):
        raise ValueError(f"cannot read term {chunk!r}")
    e = [0] * nvars
    for idx, power in _VAR.findall(chunk):
        j = int(idx)
        if not 1 <= j <= nvars:
            raise ValueError(f"variable x{j} out of range 1..{nvars}")
        e[j - 1] += int(power or 1)
    return Monomial(e)


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Read ``"3 1 0 + 0 2 2"`` (the ``str`` form) or ``"x1^3x2 + x2^2x3^2"``."""
    text = text.strip()
    if text == "0":
        if nvars is None:
            raise ValueError("the zero polynomial needs an explicit variable count")
        return Polynomial.zero(nvars)
    terms = [_parse_term(chunk, nvars) for chunk in text.split("+")]
    if nvars is None:
        nvars = len(terms[0])
    return Polynomial(nvars, terms)


@dataclass(frozen=True)
class SubstitutionMap:
    """Ring homomorphism ``F2[x_1..x_s] -> F2[x_1..x_t]`` given by the images of the variables."""

    images: tuple[Polynomial, ...]
    target_nvars: int

    def __post_init__(self):
        if not self.images:
            raise ValueError("a substitution needs at least one source variable")
        for p in self.images:
            if p.nvars != self.target_nvars:
                raise ValueError("image polynomial has the wrong variable count")

    @property
    def source_nvars(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, t: int) -> "SubstitutionMap":
        return cls(tuple(Polynomial.variable(j, t) for j in range(1, t + 1)), t)

    def __call__(self, p: Polynomial | Sequence[int]) -> Polynomial:
        return substitute(self, p)

    def compose(self, other: "SubstitutionMap") -> "SubstitutionMap":
        """``self`` after ``other``: x_j -> self(other(x_j))."""
        return SubstitutionMap(tuple(substitute(self, q) for q in other.images), self.target_nvars)


def substitute(smap: SubstitutionMap, p: Polynomial | Sequence[int]) -> Polynomial:
    """Image of ``p`` (a polynomial or a single exponent tuple) under ``smap``."""
    if not isinstance(p, Polynomial):
        p = Polynomial.monomial(p)
    if p.nvars != smap.source_nvars:
        raise ValueError(f"polynomial has {p.nvars} variables, map expects {smap.source_nvars}")
    t = smap.target_nvars
    powers: dict[tuple[int, int], Polynomial] = {}
    acc: set[tuple[int, ...]] = set()
    for m in p.terms:
        img = Polynomial.one(t)
        for j, a in enumerate(m):
            if not a:
                continue
            key = (j, a)
            pw = powers.get(key)
            if pw is None:
                pw = powers[key] = smap.images[j] ** a
            img = img * pw
            if not img:
                break
        acc ^= img.terms
    return Polynomial._raw(t, frozenset(acc))
