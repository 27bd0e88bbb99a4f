"""Published admissible monomial lists in five variables, bundled as JSON.

Lists are keyed by name: ``W`` (degree 14), ``X`` and ``Y`` (degree 31), and
the degree-32 lists ``Zt``/``Z``, ``Zt1``/``Z1``, ``Zt2``/``Z2`` (the ``t``
variants are the zero-support halves). Labels are one-based.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .monomial import weight_vector


@dataclass(frozen=True)
class MonomialList:
    name: str
    n: int
    monomials: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, label: int) -> tuple[int, ...]:
        if not 1 <= label <= len(self.monomials):
            raise IndexError(f"{self.name}{label} is not in the list")
        return self.monomials[label - 1]

    def select(self, labels) -> list[tuple[int, ...]]:
        return [self[j] for j in labels]

    def groups(self) -> Counter:
        """Counts per ``(weight, part)``."""
        return Counter((weight_vector(m), "positive" if all(m) else "zero") for m in self.monomials)


@lru_cache(maxsize=1)
def load_appendix() -> dict[str, MonomialList]:
    raw = json.loads(resources.files("hitcalc.data").joinpath("appendix.json").read_text(encoding="utf-8"))
    out = {}
    for entry in raw["lists"]:
        if entry["labels"] != list(range(1, len(entry["monomials"]) + 1)):
            raise ValueError(f"list {entry['name']} has gaps in its labels")
        out[entry["name"]] = MonomialList(entry["name"], entry["n"], tuple(tuple(m) for m in entry["monomials"]))
    return out


# the degree-14 invariant of weight (2,2,2), as labels into W
ZETA_LABELS = (71, 73, 75, 76, 77, 111, 112, 113, 114, 115, 116, 117, 118, 119, 121, 122, 124, 125, 127, 128, 129, 130)
