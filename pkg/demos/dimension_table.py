"""Quotient dimensions for small numbers of variables.

Prints dim Q(t, n) for t = 1..4 and n up to 20, then a few five-variable
degrees. Runs in well under a minute.

    python3 demos/dimension_table.py
"""

from hitcalc import dim_q, kameko_iso, mu

MAX_N = 20


def main():
    print("n    " + "".join(f"t={t:<6}" for t in range(1, 5)) + "mu(n)")
    for n in range(1, MAX_N + 1):
        row = "".join(f"{dim_q(t, n):<8}" for t in range(1, 5))
        print(f"{n:<5}{row}{mu(n)}")

    print()
    for n in (5, 13, 14):
        print(f"dim Q(5, {n}) = {dim_q(5, n)}")

    # degrees where the Kameko map is an isomorphism need no elimination at all
    for n_low in (13, 139):
        n = 5 + 2 * n_low
        verdict = "isomorphism" if kameko_iso(5, n_low) else "needs the kernel"
        print(f"Kameko map Q(5, {n}) -> Q(5, {n_low}): {verdict}")


if __name__ == "__main__":
    main()
