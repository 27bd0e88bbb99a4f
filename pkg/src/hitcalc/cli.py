"""Command line interface: ``hitcalc <command> ...``.

Exit codes: 0 success, 1 usage or input error, 2 a verification mismatch,
3 a resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence, TextIO

from . import __version__
from .arith import kameko_iso
from .cache import SCHEMA, Cache, CorruptCacheError, cached_basis
from .hit import (
    PARTS,
    _in_part,
    estimate_span_bytes,
    hit_trace,
    kameko_split,
)
from .invariants import GroupSpec, invariants, invariants_omega
from .linalg import ResourceLimitError, count_monomials
from .maps import PsiSpec, mothebe_uys_lift, p_project, psi, q_insert, verify_sum_conjecture
from .monomial import (
    format_monomial,
    parse_monomial,
    weight_degree,
    weight_vector,
    weight_vectors_of_degree,
)

log = logging.getLogger("hitcalc")

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_size(text: str) -> int:
    """Bytes from ``"2G"``, ``"512M"``, ``"1.5GiB"`` or a plain integer."""
    units = {"k": 1 << 10, "m": 1 << 20, "g": 1 << 30, "t": 1 << 40}
    s = text.strip().lower()
    s = s.removesuffix("ib").removesuffix("b") if s[-2:] == "ib" or (s[-1:] == "b" and s[-2:-1] in units) else s
    try:
        if s and s[-1] in units:
            return int(float(s[:-1]) * units[s[-1]])
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read size {text!r}") from None


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read weight vector {text!r}") from None
    if any(x < 0 for x in w):
        raise argparse.ArgumentTypeError("weight entries must be non-negative")
    return w


def parse_index_list(text: str) -> tuple[int, ...]:
    if text.strip() in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read index list {text!r}") from None


def _dump(record: dict, out: TextIO):
    out.write(json.dumps({"schema": SCHEMA, **record}, sort_keys=True) + "\n")


def _guard(args, t: int, n: int, method: str = "blocked"):
    need = estimate_span_bytes(t, n, method)
    if need > args.max_mem:
        raise ResourceLimitError(
            f"t={t} n={n} needs about {need / 2**20:.0f} MiB, above --max-mem {args.max_mem / 2**20:.0f} MiB"
        )


def _cache(args) -> Cache | None:
    return None if args.no_cache else Cache(args.cache_dir)


def _check_tn(t: int, n: int):
    if t < 1:
        raise UsageError("-t must be at least 1")
    if n < 0:
        raise UsageError("-n must be non-negative")


# commands


def cmd_dim(args, out: TextIO) -> int:
    t, n = args.t, args.n
    _check_tn(t, n)
    if args.trace:
        return cmd_trace(args, out)
    _guard(args, t, n)
    dim = len(cached_basis(t, n, _cache(args)))
    if args.json:
        cols = count_monomials(t, n)
        _dump({"t": t, "n": n, "monomials": cols, "hit_rank": cols - dim, "dim": dim}, out)
    else:
        out.write(f"{dim}\n")
    return EXIT_OK


def cmd_trace(args, out: TextIO) -> int:
    t, n = args.t, args.n
    _check_tn(t, n)
    if n == 0:
        raise UsageError("there is no hit span in degree 0")
    method = getattr(args, "method", "full")
    _guard(args, t, n, method)
    tr = hit_trace(t, n, method)
    if args.json:
        _dump(tr.as_dict(), out)
    else:
        out.write(tr.render() + "\n")
    return EXIT_OK


def cmd_basis(args, out: TextIO) -> int:
    t, n = args.t, args.n
    _check_tn(t, n)
    if args.omega is not None and weight_degree(args.omega) != n:
        raise UsageError(f"weight vector {args.omega} has degree {weight_degree(args.omega)}, not {n}")
    _guard(args, t, n)
    mons = cached_basis(t, n, _cache(args))
    if args.omega is not None:
        mons = [m for m in mons if weight_vector(m) == args.omega]
    mons = [m for m in mons if _in_part(m, args.part)]
    text = "".join(format_monomial(m) + "\n" for m in mons)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"{len(mons)}\n")
    else:
        out.write(text)
        print(f"{len(mons)} admissible monomials", file=sys.stderr)
    return EXIT_OK


def cmd_kameko(args, out: TextIO) -> int:
    t, n_low = args.t, args.n
    _check_tn(t, n_low)
    n = t + 2 * n_low
    if kameko_iso(t, n_low):
        rec = {"t": t, "n_low": n_low, "n": n, "isomorphism": True, "kernel": 0}
        if args.json:
            _dump(rec, out)
        else:
            out.write(f"mu({n}) = {t}: the Kameko map from degree {n} to degree {n_low} is an isomorphism\n")
            out.write("kernel 0\n")
        return EXIT_OK
    _guard(args, t, n)
    info = kameko_split(t, n_low)
    if args.json:
        rec = {
            "t": t,
            "n_low": n_low,
            "n": n,
            "isomorphism": False,
            "source_dim": info["source_dim"],
            "target_dim": info["target_dim"],
            "kernel": info["kernel"],
        }
        if args.split:
            rec["zero"] = info["zero"]
            rec["components"] = [{"weight": list(w), "positive": c} for w, c in info["components"].items()]
        _dump(rec, out)
        return EXIT_OK
    out.write(f"dim Q(t={t}, n={n}) = {info['source_dim']}\n")
    out.write(f"dim Q(t={t}, n={n_low}) = {info['target_dim']}\n")
    out.write(f"kernel {info['kernel']}\n")
    if args.split:
        terms = [str(info["zero"])] + [str(c) for c in info["components"].values()]
        out.write(f"zero support {info['zero']}\n")
        for w, c in info["components"].items():
            out.write(f"weight {','.join(map(str, w))} positive {c}\n")
        out.write(f"split {' + '.join(terms)} = {info['split_total']}\n")
        if info["split_total"] != info["kernel"]:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_invariants(args, out: TextIO) -> int:
    t, n = args.t, args.n
    _check_tn(t, n)
    group = GroupSpec.parse(args.group, t)
    _guard(args, t, n)
    if args.omega is not None:
        if weight_degree(args.omega) != n:
            raise UsageError(f"weight vector {args.omega} has degree {weight_degree(args.omega)}, not {n}")
        res = invariants_omega(t, n, args.omega, group)
    else:
        res = invariants(t, n, group)
    if args.json:
        _dump(
            {
                "t": t,
                "n": n,
                "group": group.kind,
                "weight": list(args.omega) if args.omega is not None else None,
                "dim": res.dim,
                "basis": [[list(m) for m in s] for s in res.supports()],
            },
            out,
        )
        return EXIT_OK
    out.write(f"{res.dim}\n")
    for s in res.supports():
        out.write(" + ".join(format_monomial(m) for m in s) + "\n")
    return EXIT_OK


def _read_monomials(args) -> list[tuple[int, ...]]:
    src = args.monomials or [line for line in sys.stdin.read().splitlines()]
    mons = []
    for line in src:
        if line.strip() and not line.lstrip().startswith("#"):
            mons.append(tuple(parse_monomial(line)))
    return mons


def cmd_maps(args, out: TextIO) -> int:
    for m in _read_monomials(args):
        if args.map == "q":
            img = q_insert(args.l, args.t or len(m) + 1, m)
            text = format_monomial(img)
        elif args.map == "psi":
            t = args.t or len(m) + 1
            y = psi(PsiSpec(args.l, args.L, t), m, lenient=args.lenient)
            text = "0" if y is None else format_monomial(y)
        elif args.map == "p":
            text = str(p_project(args.l, args.L, m))
        else:  # lift
            text = format_monomial(mothebe_uys_lift(args.l, args.d, m))
        out.write(text + "\n")
    return EXIT_OK


def cmd_conjecture(args, out: TextIO) -> int:
    t, n = args.t, args.n
    _check_tn(t, n)
    if t < 2:
        raise UsageError("the check needs t >= 2")
    _guard(args, t, n)
    if args.omega is not None:
        if weight_degree(args.omega) != n:
            raise UsageError(f"weight vector {args.omega} has degree {weight_degree(args.omega)}, not {n}")
        weights = [args.omega]
    else:
        weights = weight_vectors_of_degree(n, t - 1)
    status = EXIT_OK
    for w in weights:
        r = verify_sum_conjecture(t, n, w, cumulative=args.cumulative)
        if args.omega is None and r.vacuous:
            continue
        label = ",".join(map(str, w))
        if r.holds:
            word = "holds (vacuously)" if r.vacuous else "holds"
            out.write(f"weight {label}: {word}; {r.sources} sources, {r.images} images\n")
        else:
            status = EXIT_MISMATCH
            out.write(f"weight {label}: fails with {len(r.counterexamples)} counterexamples\n")
            for src, idx, img in r.counterexamples:
                out.write(f"  {format_monomial(src)} -> {format_monomial(img)} via {','.join(map(str, idx))}\n")
    return status


def cmd_verify(args, out: TextIO) -> int:
    from .verify import run_suite

    def progress(o):
        out.write(o.line() + "\n")
        out.flush()

    results = run_suite(args.suite, progress)
    failed = [o for o in results if not o.ok]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed ({args.suite})\n")
    if failed:
        out.write("mismatches:\n")
        for o in failed:
            out.write(f"  {o.name}\n    expected {o.expected!r}\n    actual   {o.actual!r}\n")
            if o.error:
                out.write(f"    error    {o.error}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_cache(args, out: TextIO) -> int:
    cache = Cache(args.cache_dir)
    if args.action == "clear":
        out.write(f"removed {cache.clear()} entries from {cache.root}\n")
        return EXIT_OK
    entries = cache.entries()
    out.write(f"{cache.root}: {len(entries)} entries\n")
    for e in entries:
        out.write(f"  {e['name']}  {e['bytes']} bytes\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hitcalc", description="Admissible monomial bases and quotient dimensions over F2.")
    p.add_argument("--version", action="version", version=f"hitcalc {__version__}")
    p.add_argument("--cache-dir", default=None, help="cache directory (default $HITCALC_CACHE_DIR or ./.hitcalc-cache)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--max-mem", type=parse_size, default=2 << 30, help="refuse runs estimated above this size (default 2G)")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress output on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def tn(sp, n_help="degree"):
        sp.add_argument("-t", type=int, required=True, help="number of variables")
        sp.add_argument("-n", type=int, required=True, help=n_help)

    sp = sub.add_parser("dim", help="dimension of the quotient")
    tn(sp)
    sp.add_argument("--trace", action="store_true", help="print the per-family rank trace instead")
    sp.add_argument("--method", choices=("full", "blocked"), default="full", help="elimination used by --trace")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("trace", help="per-family rank trace of the hit span")
    tn(sp)
    sp.add_argument("--method", choices=("full", "blocked"), default="full")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("basis", help="list admissible monomials")
    tn(sp)
    sp.add_argument("--omega", type=parse_weight, default=None, help="weight vector such as 3,2,2,2")
    sp.add_argument("--part", choices=PARTS, default="all")
    sp.add_argument("--out", default=None, help="write the list to a file and print only the count")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("kameko", help="Kameko map from degree t+2n to degree n")
    tn(sp, "target degree n")
    sp.add_argument("--split", action="store_true", help="account for the kernel by support and weight")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_kameko)

    sp = sub.add_parser("invariants", help="invariants of the symmetric or general linear group")
    tn(sp)
    sp.add_argument("--group", default="gl", help="gl or symmetric")
    sp.add_argument("--omega", type=parse_weight, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("maps", help="apply q, psi, p or the lift to monomials (arguments or stdin)")
    sp.add_argument("map", choices=("q", "psi", "p", "lift"))
    sp.add_argument("-l", type=int, required=True, help="one-based index l")
    sp.add_argument("-L", type=parse_index_list, default=(), help="comma separated L")
    sp.add_argument("-t", type=int, default=None, help="target variable count (default: input count + 1)")
    sp.add_argument("-d", type=int, default=1, help="exponent parameter of the lift")
    sp.add_argument("--lenient", action="store_true", help="psi: skip the binary digit clauses")
    sp.add_argument("monomials", nargs="*", help='monomials such as "12 6 9"')
    sp.set_defaults(func=cmd_maps)

    sp = sub.add_parser("conjecture", help="check that admissible monomials lift to admissible monomials")
    tn(sp)
    sp.add_argument("--omega", type=parse_weight, default=None)
    sp.add_argument("--cumulative", action="store_true", help="use sources of weight at most omega")
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("verify", help="replay a suite of recorded values and properties")
    sp.add_argument("suite", nargs="?", choices=("quick", "paper", "extended"), default="quick")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cache", help="inspect or clear the cache")
    sp.add_argument("action", choices=("inspect", "clear"))
    sp.set_defaults(func=cmd_cache)
    return p


def _setup_logging(quiet: bool):
    root = logging.getLogger("hitcalc")
    if not root.handlers:
        h = logging.StreamHandler(sys.stderr)
        h.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(h)
    root.setLevel(logging.WARNING if quiet else logging.INFO)
    threads = os.environ.get("HITCALC_THREADS")
    if threads and threads != "1":
        log.debug("HITCALC_THREADS=%s ignored: elimination is single-threaded", threads)


def _looks_numeric(text: str) -> bool:
    return text.replace(" ", "").replace(",", "").lstrip("-").isdigit()


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # argparse binds the optional monomial list before it sees the options
        if getattr(args, "command", None) == "maps" and not any(x.startswith("-") and not _looks_numeric(x) for x in extra):
            args.monomials = list(args.monomials) + extra
        else:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    _setup_logging(args.quiet)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"hitcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"hitcalc: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MemoryError:
        print("hitcalc: resource limit: out of memory", file=sys.stderr)
        return EXIT_RESOURCE
    except CorruptCacheError as exc:
        print(f"hitcalc: corrupt cache entry: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"hitcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit():  # console script entry point
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
