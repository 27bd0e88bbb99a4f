"""Split a five-variable quotient by weight vector and support.

Default degree 14 finishes in a second or two; pass 31 or 32 for the larger
degrees (around ten seconds each).

    python3 demos/weight_components.py [n]
"""

import sys

from hitcalc import admissible_basis
from hitcalc.hit import dim_q_zero_via_formula, kameko_split, positive_dims


def main(n: int = 14):
    qb = admissible_basis(5, n)
    print(f"dim Q(5, {n}) = {qb.dim}   ({qb.columns} monomials, hit rank {qb.rank})")
    print(f"{'weight':<20}{'zero':>8}{'positive':>10}")
    for w in sorted(qb.weights()):
        zero = len(qb.by_weight(w, "zero"))
        pos = len(qb.by_weight(w, "positive"))
        print(f"{str(w):<20}{zero:>8}{pos:>10}")

    dims = positive_dims(5, n)
    print(f"\npositive parts in 1..5 variables: {dims}")
    print(f"zero part from those: {dim_q_zero_via_formula(5, n, dims[:4])}")

    if n % 2 == 1 and n > 5:
        info = kameko_split(5, (n - 5) // 2)
        parts = " + ".join(str(c) for c in [info["zero"], *info["components"].values()])
        print(f"Kameko kernel {info['kernel']} = {parts}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 14)
