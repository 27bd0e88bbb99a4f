"""GL5 and symmetric-group invariants of the degree-14 quotient.

Shows the total invariant dimensions, the per-weight breakdown and the
monomials in the single GL5-invariant class.

    python3 demos/invariants_tour.py
"""

from hitcalc.invariants import invariant_dim_omega, invariants
from hitcalc.monomial import pretty

N = 14
WEIGHTS = ((2, 2, 2), (2, 4, 1), (4, 3, 1))


def main():
    for group in ("symmetric", "gl"):
        res = invariants(5, N, group)
        print(f"{group:>9} invariants in degree {N}: {res.dim}")
    print()
    for w in WEIGHTS:
        print(f"weight {w}: GL5 {invariant_dim_omega(5, N, w, 'gl')}, "
              f"symmetric {invariant_dim_omega(5, N, w, 'symmetric')}")

    res = invariants(5, N, "gl")
    (terms,) = res.supports()
    print(f"\nthe invariant class is a sum of {len(terms)} admissible monomials:")
    for i in range(0, len(terms), 4):
        print(("  " + "  ".join(f"{pretty(m):<22}" for m in terms[i:i + 4])).rstrip())


if __name__ == "__main__":
    main()
