"""Replay suites: fixed expected values plus exhaustive or randomised property checks.

``quick`` stays at t <= 4 plus degree 14 in five variables and runs in well
under a minute. ``paper`` adds the degree 29, 31 and 32 computations in five
variables, the group invariants and the bundled monomial lists. ``extended``
adds degree 47.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from math import comb
from typing import Any, Callable

from . import arith
from .appendix import ZETA_LABELS, load_appendix
from .hit import (
    admissible_basis,
    build_hit_span,
    dim_q,
    dim_q_omega,
    dim_q_zero_via_formula,
    hit_trace,
    kameko_kernel_dim,
    kameko_map,
    positive_block,
    positive_dims,
    singer_zero,
)
from .invariants import invariant_dim, invariant_dim_omega, is_invariant
from .linalg import DegreeContext, EchelonSpan, count_monomials
from .maps import PsiSpec, psi, q_insert, verify_sum_conjecture
from .monomial import (
    compositions,
    minimal_spike,
    weight_degree,
    weight_vector,
    weight_vectors_of_degree,
)
from .poly import Polynomial
from .steenrod import sq, sq_monomial

log = logging.getLogger(__name__)

SUITES = ("quick", "paper", "extended")


@dataclass
class Check:
    name: str
    expected: Any
    compute: Callable[[], Any]


@dataclass
class Outcome:
    name: str
    expected: Any
    actual: Any
    ok: bool
    seconds: float
    error: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status}  {self.name}  expected={self.expected!r} actual={self.actual!r}  ({self.seconds:.1f}s)"
        if self.error:
            text += f"  error: {self.error}"
        return text


def run_checks(checks: list[Check], progress: Callable[[Outcome], None] | None = None) -> list[Outcome]:
    out = []
    for c in checks:
        start = time.perf_counter()
        try:
            actual = c.compute()
            err = None
        except Exception as exc:  # a crash is a failure, reported with its message
            actual, err = None, f"{type(exc).__name__}: {exc}"
        res = Outcome(c.name, c.expected, actual, err is None and actual == c.expected, time.perf_counter() - start, err)
        out.append(res)
        if progress is not None:
            progress(res)
    return out


# small independent oracles


def _mu_by_partitions(limit: int) -> list[int]:
    parts = [(1 << d) - 1 for d in range(1, limit.bit_length() + 2) if (1 << d) - 1 <= limit]
    best = [0] + [limit + 1] * limit
    for v in range(1, limit + 1):
        best[v] = 1 + min(best[v - p] for p in parts if p <= v)
    return best


def _total_square(k: int, m) -> Polynomial:
    # coefficient of T^k in prod_j (x_j + T x_j^2)^(a_j), by repeated multiplication
    t = len(m)
    poly: dict[tuple[int, tuple[int, ...]], int] = {(0, (0,) * t): 1}
    for j, a in enumerate(m):
        for _ in range(a):
            nxt: dict = {}
            for (tk, e), c in poly.items():
                for dt, de in ((0, 1), (1, 2)):
                    if tk + dt > k:
                        continue
                    ee = list(e)
                    ee[j] += de
                    key = (tk + dt, tuple(ee))
                    nxt[key] = nxt.get(key, 0) ^ c
            poly = {key: c for key, c in nxt.items() if c}
    return Polynomial(t, [e for (tk, e), c in poly.items() if tk == k and c])


def _dense_rank(rows: list[int], ncols: int) -> int:
    mat = [[(r >> i) & 1 for i in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                mat[i] = [x ^ y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _spikes(t: int, n: int):
    vals = [(1 << k) - 1 for k in range(0, n.bit_length() + 1) if (1 << k) - 1 <= n]

    def rec(j, rem):
        if j == t:
            if rem == 0:
                yield ()
            return
        for v in vals:
            if v <= rem:
                for rest in rec(j + 1, rem - v):
                    yield (v,) + rest

    yield from rec(0, n)


# property checks; each returns True or raises with a witness


def prop_mu(limit: int = 10_000) -> bool:
    oracle = _mu_by_partitions(limit)
    for n in range(limit + 1):
        if arith.mu(n) != oracle[n]:
            raise AssertionError(f"mu({n}) = {arith.mu(n)}, partition search gives {oracle[n]}")
    return True


def prop_binom(limit: int = 64) -> bool:
    for a in range(limit + 1):
        for b in range(limit + 1):
            if arith.binom_mod2(a, b) != comb(a, b) % 2:
                raise AssertionError(f"C({a},{b}) mod 2")
    return True


def prop_sq_oracle(max_t: int = 3, max_deg: int = 8, max_k: int = 8) -> bool:
    for t in range(1, max_t + 1):
        for d in range(0, max_deg + 1):
            for m in compositions(d, t):
                for k in range(0, max_k + 1):
                    if sq_monomial(k, m) != _total_square(k, m):
                        raise AssertionError(f"Sq^{k}{m}")
    return True


def _random_poly(rng: random.Random, t: int, deg: int, terms: int = 3) -> Polynomial:
    mons = list(compositions(deg, t))
    return Polynomial(t, rng.sample(mons, min(terms, len(mons))))


def prop_cartan(samples: int = 150, seed: int = 1) -> bool:
    rng = random.Random(seed)
    for _ in range(samples):
        t = rng.randint(1, 5)
        p = _random_poly(rng, t, rng.randint(0, 6), 2)
        q = _random_poly(rng, t, rng.randint(0, 6), 2)
        k = rng.randint(0, 8)
        rhs = Polynomial.zero(t)
        for i in range(k + 1):
            rhs = rhs + sq(i, p) * sq(k - i, q)
        if sq(k, p * q) != rhs:
            raise AssertionError(f"Cartan fails for k={k}, p={p}, q={q}")
    return True


def prop_instability(max_t: int = 3, max_deg: int = 9) -> bool:
    for t in range(1, max_t + 1):
        for d in range(max_deg + 1):
            for m in compositions(d, t):
                p = Polynomial.monomial(m)
                if sq(d, p) != p * p or sq(d + 1, p) or sq(d + 3, p):
                    raise AssertionError(f"instability at {m}")
    return True


def prop_adem(max_t: int = 3, max_deg: int = 10) -> bool:
    for t in range(1, max_t + 1):
        for d in range(max_deg + 1):
            for m in compositions(d, t):
                p = Polynomial.monomial(m)
                if sq(1, sq(1, p)):
                    raise AssertionError(f"Sq1Sq1 {m}")
                if sq(1, sq(2, p)) != sq(3, p):
                    raise AssertionError(f"Sq1Sq2 {m}")
    return True


def prop_spikes_admissible(max_t: int = 5, max_n: int = 32) -> bool:
    """Every spike is admissible, checked on the positive blocks that can hold spikes."""
    for s in range(1, max_t + 1):
        for n in range(s, max_n + 1):
            if (n - s) % 2:
                continue  # s odd exponents sum to n only when n and s agree mod 2
            local = [m for m in _spikes(s, n) if all(m)]
            if not local:
                continue
            block = positive_block(s, n)
            free = block.admissible_mask
            idx = block.context.index
            for m in local:
                if not (free >> idx[m]) & 1:
                    raise AssertionError(f"spike {m} is inadmissible")
    return True


def prop_singer(max_t: int = 4, max_n: int = 15) -> bool:
    for t in range(1, max_t + 1):
        for n in range(1, max_n + 1):
            if arith.mu(n) > t:
                continue
            qb = admissible_basis(t, n)
            for m in compositions(n, t):
                if singer_zero(m) and not qb.is_hit(m):
                    raise AssertionError(f"{m} passes Singer's test but is not hit")
    return True


def prop_order_independence(t: int = 4, n: int = 12, shuffles: int = 3, seed: int = 7) -> bool:
    ctx = DegreeContext(t, n)
    from .hit import family_squares, generator_rows

    rows = [r for k in family_squares(n) for r in generator_rows(ctx, k)]
    base = EchelonSpan(len(ctx))
    base.extend(rows)
    rng = random.Random(seed)
    for _ in range(shuffles):
        rng.shuffle(rows)
        s = EchelonSpan(len(ctx))
        s.extend(rows)
        if s.rank != base.rank or set(s.pivots) != set(base.pivots):
            raise AssertionError("rank or pivot set depends on insertion order")
    return True


def prop_dense_oracle(max_cols: int = 500) -> bool:
    for t in range(1, 5):
        for n in range(1, 40):
            if count_monomials(t, n) > max_cols:
                break
            ctx = DegreeContext(t, n)
            span, trace = build_hit_span(ctx, standalone=False)
            from .hit import family_squares, generator_rows

            rows = [r for k in family_squares(n) for r in generator_rows(ctx, k)]
            if _dense_rank(rows, len(ctx)) != span.rank:
                raise AssertionError(f"rank mismatch at t={t} n={n}")
    return True


def prop_omega_sum(t: int, n: int) -> bool:
    total = 0
    for w in weight_vectors_of_degree(n, t):
        a = dim_q_omega(t, n, w, "all")
        z = dim_q_omega(t, n, w, "zero")
        p = dim_q_omega(t, n, w, "positive")
        if a != z + p:
            raise AssertionError(f"support split fails at {w}")
        total += a
    if total != dim_q(t, n):
        raise AssertionError(f"weight components sum to {total}, not {dim_q(t, n)}")
    return True


def prop_modular_agrees(t: int, n: int) -> bool:
    for w in weight_vectors_of_degree(n, t):
        for part in ("all", "zero", "positive"):
            a = dim_q_omega(t, n, w, part)
            b = dim_q_omega(t, n, w, part, method="modular")
            if a != b:
                raise AssertionError(f"{w} {part}: count {a}, modular {b}")
    return True


def prop_psi_q(samples: int = 200, seed: int = 3) -> bool:
    rng = random.Random(seed)
    for _ in range(samples):
        t = rng.randint(2, 5)
        m = tuple(rng.randint(0, 20) for _ in range(t - 1))
        l = rng.randint(1, t)
        y = q_insert(l, t, m)
        if weight_vector(y) != weight_vector(m) or sum(y) != sum(m):
            raise AssertionError(f"q changes weight of {m}")
        k = rng.randint(0, 8)
        img = Polynomial(t, [q_insert(l, t, z) for z in sq_monomial(k, m).terms]) if len(m) else None
        if sq_monomial(k, y) != img:
            raise AssertionError(f"q does not commute with Sq^{k} on {m}")
        if l < t:
            L = tuple(sorted(rng.sample(range(l + 1, t + 1), rng.randint(1, t - l))))
            z = psi(PsiSpec(l, L, t), m)
            if z is not None and weight_vector(z) != weight_vector(m):
                raise AssertionError(f"psi changes weight of {m}")
    return True


def psi_witness() -> tuple:
    spec = PsiSpec(1, (2, 3, 4), 4)
    left = sq_monomial(2, psi(spec, (12, 6, 9)))
    right = [psi(spec, m, lenient=True) for m in sq_monomial(2, (12, 6, 9)).terms]
    return (tuple(left.sorted_terms()), tuple(tuple(r) for r in right))


# suites


def quick_checks() -> list[Check]:
    return [
        Check("alpha(70)", 3, lambda: arith.alpha(70)),
        Check("mu(67)", 3, lambda: arith.mu(67)),
        Check("mu(139)", 5, lambda: arith.mu(139)),
        Check("generic_degree(5,13,1)", 31, lambda: arith.generic_degree(arith.GenericDegreeSpec(5, 13, 1))),
        Check("validate_dlP(6,47)", True, lambda: arith.validate_dlP(6, 47)),
        Check("sum_phuc_dimension(6,1894)", 119322, lambda: arith.sum_phuc_dimension(6, 1894)),
        Check("weight_vector(12,6,9)", (1, 1, 2, 2), lambda: weight_vector((12, 6, 9))),
        Check("weight_degree(2,1,1,1,1)", 32, lambda: weight_degree((2, 1, 1, 1, 1))),
        Check("minimal_spike(5,31)", (31, 0, 0, 0, 0), lambda: tuple(minimal_spike(5, 31))),
        Check("minimal_spike(5,32)", (31, 1, 0, 0, 0), lambda: tuple(minimal_spike(5, 32))),
        Check("minimal_spike(5,14)", (7, 7, 0, 0, 0), lambda: tuple(minimal_spike(5, 14))),
        Check("Sq2(7,8,4,8)", ((9, 8, 4, 8),), lambda: tuple(sq_monomial(2, (7, 8, 4, 8)).sorted_terms())),
        Check("dim Q(1,3)", 1, lambda: dim_q(1, 3)),
        Check("dim Q(1,4)", 0, lambda: dim_q(1, 4)),
        Check("dim Q(2,4)", 2, lambda: dim_q(2, 4)),
        Check("dim Q(5,5)", 46, lambda: dim_q(5, 5)),
        Check("dim Q(5,13)", 250, lambda: dim_q(5, 13)),
        Check("dim Q(5,14)", 320, lambda: dim_q(5, 14)),
        Check(
            "components (5,14)",
            (130, 15, 175),
            lambda: tuple(dim_q_omega(5, 14, w) for w in ((2, 2, 2), (2, 4, 1), (4, 3, 1))),
        ),
        Check("kameko kernel (2,1)", 0, lambda: kameko_kernel_dim(2, 1)),
        Check("GL5 invariants n=13", 0, lambda: invariant_dim(5, 13)[0]),
        Check("GL5 invariants n=14", 1, lambda: invariant_dim(5, 14)[0]),
        Check(
            "GL5 invariants per weight n=14",
            (1, 0, 0),
            lambda: tuple(invariant_dim_omega(5, 14, w) for w in ((2, 2, 2), (2, 4, 1), (4, 3, 1))),
        ),
        Check("zeta is GL5-invariant", True, lambda: is_invariant(Polynomial(5, load_appendix()["W"].select(ZETA_LABELS)))),
        Check("conjecture (5,14,(2,4,1)) vacuous", (True, True), lambda: _conj(5, 14, (2, 4, 1))),
        Check("psi non-commutation witness", (((9, 8, 4, 8),), ((7, 8, 6, 8),)), psi_witness),
        Check("mu vs partition search n<=10^4", True, prop_mu),
        Check("binom_mod2 vs exact", True, prop_binom),
        Check("Sq vs total-square oracle", True, prop_sq_oracle),
        Check("Cartan formula", True, prop_cartan),
        Check("instability", True, prop_instability),
        Check("Adem Sq1Sq1=0, Sq1Sq2=Sq3", True, prop_adem),
        Check("spikes admissible t<=5 n<=32", True, prop_spikes_admissible),
        Check("Singer criterion implies hit t<=4 n<=15", True, prop_singer),
        Check("rank independent of insertion order", True, prop_order_independence),
        Check("elimination vs dense RREF <=500 columns", True, prop_dense_oracle),
        Check("weight components sum (5,14)", True, lambda: prop_omega_sum(5, 14)),
        Check("count and modular methods agree (5,14)", True, lambda: prop_modular_agrees(5, 14)),
        Check("psi and q preserve weight; q commutes with Sq", True, prop_psi_q),
    ]


def _conj(t, n, w):
    r = verify_sum_conjecture(t, n, w)
    return (r.holds, r.vacuous)


W31 = ((1, 1, 1, 1, 1), (3, 2, 2, 2), (3, 4, 3, 1))
W32 = ((2, 1, 1, 1, 1), (4, 2, 2, 2), (4, 4, 3, 1))


def _appendix_ok() -> bool:
    for lst in load_appendix().values():
        qb = admissible_basis(5, lst.n)
        bad = [m for m in lst.monomials if not qb.is_admissible(m)]
        if bad:
            raise AssertionError(f"{lst.name}: {len(bad)} listed monomials are inadmissible, e.g. {bad[0]}")
        for (w, part), count in lst.groups().items():
            got = dim_q_omega(5, lst.n, w, part)
            if got != count:
                raise AssertionError(f"{lst.name} {w} {part}: list has {count}, basis has {got}")
    return True


def _kameko_split(t: int, n_low: int) -> tuple:
    n = t + 2 * n_low
    km = kameko_map(t, n_low)
    zero = len(admissible_basis(t, n).part("zero"))
    comps = [
        (w, dim_q_omega(t, n, w, "positive"))
        for w in weight_vectors_of_degree(n, t)
        if w and w[0] < t and dim_q_omega(t, n, w, "positive")
    ]
    return (km.kernel_dim, zero) + tuple(c for _, c in comps)


def paper_checks() -> list[Check]:
    appendix = load_appendix()
    return quick_checks() + [
        Check(
            "trace (5,31)",
            {
                "sources": [46376, 40920, 31465, 17550, 3876],
                "standalone": [24615, 28665, 26520, 15900, 0],
                "cumulative": [24615, 43334, 49530, 51494, 51494],
                "columns": 52360,
                "dim": 866,
            },
            lambda: {k: v for k, v in hit_trace(5, 31, "full").as_dict().items() if k in ("sources", "standalone", "cumulative", "columns", "dim")},
        ),
        Check("monomials (5,30)", 46376, lambda: count_monomials(5, 30)),
        Check("dim Q(5,29)", 645, lambda: dim_q(5, 29)),
        Check("dim Q(5,31)", 866, lambda: dim_q(5, 31)),
        Check("(5,32) columns, rank, dim", (58905, 57901, 1004), lambda: _colrank(5, 32)),
        Check("positive components n=31", (1, 215, 70), lambda: tuple(dim_q_omega(5, 31, w, "positive") for w in W31)),
        Check("zero components n=31", (30, 300), lambda: tuple(dim_q_omega(5, 31, w, "zero") for w in W31[:2])),
        Check("weight (1,1,1,3) vanishes n=31", 0, lambda: dim_q_omega(5, 31, (1, 1, 1, 3))),
        Check("positive components n=32", (9, 310, 320), lambda: tuple(dim_q_omega(5, 32, w, "positive") for w in W32)),
        Check("zero components n=32", (115, 175, 75), lambda: tuple(dim_q_omega(5, 32, w, "zero") for w in W32)),
        Check("weight components sum (5,31)", True, lambda: prop_omega_sum(5, 31)),
        Check("weight components sum (5,32)", True, lambda: prop_omega_sum(5, 32)),
        Check("positive dims n=31", [1, 1, 8, 47, 536], lambda: positive_dims(5, 31)),
        Check("positive dims n=32", [0, 3, 5, 57, 639], lambda: positive_dims(5, 32)),
        Check("zero part n=31 by formula", 330, lambda: dim_q_zero_via_formula(5, 31, positive_dims(5, 31)[:4])),
        Check("zero part n=31 direct", 330, lambda: len(admissible_basis(5, 31).part("zero"))),
        Check("zero part n=32 by formula", 365, lambda: dim_q_zero_via_formula(5, 32, positive_dims(5, 32)[:4])),
        Check("zero part n=32 direct", 365, lambda: len(admissible_basis(5, 32).part("zero"))),
        Check("kameko kernel (5,13) split", (616, 330, 1, 215, 70), lambda: _kameko_split(5, 13)),
        Check("kameko (5,13) surjective", True, lambda: kameko_map(5, 13).surjective),
        Check("GL5 invariants n=31", 2, lambda: invariant_dim(5, 31)[0]),
        Check("GL5 invariants n=32", 0, lambda: invariant_dim(5, 32)[0]),
        Check("GL5 invariants per weight n=31", (1, 1, 0), lambda: tuple(invariant_dim_omega(5, 31, w) for w in W31)),
        Check("GL5 invariants per weight n=32", (0, 0, 0), lambda: tuple(invariant_dim_omega(5, 32, w) for w in W32)),
        Check("listed monomials admissible, counts match", True, _appendix_ok),
        Check("list sizes", {"W": 320, "X": 215, "Y": 70, "Zt": 115, "Z": 9, "Zt1": 175, "Z1": 310, "Zt2": 75, "Z2": 320}, lambda: {k: len(v) for k, v in appendix.items()}),
        Check("conjecture (5,31,(3,2,2,2))", True, lambda: verify_sum_conjecture(5, 31, (3, 2, 2, 2)).holds),
        Check("conjecture (5,32) all weights", True, lambda: all(verify_sum_conjecture(5, 32, w).holds for w in W32)),
        Check("kameko iso (5,139)", True, lambda: arith.kameko_iso(5, 139)),
    ]


def _colrank(t: int, n: int) -> tuple[int, int, int]:
    qb = admissible_basis(t, n)
    return (qb.columns, qb.rank, qb.dim)


def extended_checks() -> list[Check]:
    return paper_checks() + [
        Check("dim Q(5,47)", 1894, lambda: dim_q(5, 47)),
    ]


def checks_for(suite: str) -> list[Check]:
    if suite == "quick":
        return quick_checks()
    if suite == "paper":
        return paper_checks()
    if suite == "extended":
        return extended_checks()
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")


def run_suite(suite: str, progress: Callable[[Outcome], None] | None = None) -> list[Outcome]:
    return run_checks(checks_for(suite), progress)
