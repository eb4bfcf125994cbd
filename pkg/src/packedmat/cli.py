"""Command-line front end: ``packedmat enumerate | dims | verify | oeis-check``."""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Callable, Sequence

from . import asm as asm_mod
from . import congruences, embeddings
from .bases import hilbert_series
from .enumeration import enumerate_packed, enumerate_packed_by_weight
from .hopf import FAULTS, verify_axioms
from .lincomb import Element, dumps
from .matrix import format_matrix
from .oeis import oeis_check
from .series import DimSeries, series_generators, series_totally_primitive

SIZE_CAPS = {1: 4, 2: 3}
WEIGHT_CAPS = {1: 6, 2: 4}
ASM_CAP = 6


class Refusal(Exception):
    """Raised when a request exceeds a feasibility cap."""


def _cap(k: int | None, grading: str, degree: int, unsafe: bool) -> None:
    if unsafe:
        return
    if k is None:
        limit = ASM_CAP
    else:
        caps = SIZE_CAPS if grading == "size" else WEIGHT_CAPS
        limit = caps.get(k, 2 if grading == "size" else 3)
    if degree > limit:
        what = "ASM size" if k is None else f"{grading} for k={k}"
        raise Refusal(f"{what} {degree} exceeds the cap {limit}; pass --unsafe-large to force it")


def _grading(args) -> tuple[str, int]:
    if args.weight is not None:
        return "weight", args.weight
    if args.size is not None:
        return "size", args.size
    raise Refusal("give --size N or --weight N")


# -- enumerate -----------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    grading, degree = _grading(args)
    if args.asm:
        if grading != "size":
            raise Refusal("ASMs are enumerated by size")
        _cap(None, grading, degree, args.unsafe_large)
        items = [a.support for a in asm_mod.enumerate_asm(degree)]
        show: Callable = lambda m: asm_mod.format_asm(asm_mod.asm_from_packed(m))
    else:
        _cap(args.k, grading, degree, args.unsafe_large)
        if grading == "size":
            items = list(enumerate_packed(args.k, degree))
        else:
            items = list(enumerate_packed_by_weight(args.k, degree))
        show = format_matrix
    if args.json:
        for m in items:
            out.write(dumps(Element({m: 1}, "F", m.k)) + "\n")
    else:
        out.write("\n\n".join(show(m) for m in items) + "\n")
    return 0


# -- dims ----------------------------------------------------------------------

def _write_csv(out, header: Sequence[str], rows) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _transform(what: str, values: list[int]) -> list[int]:
    if what == "all":
        return values
    if what == "generators":
        return list(series_generators(DimSeries(tuple(values))).coeffs)
    if what == "primitives":
        return list(series_totally_primitive(DimSeries(tuple(values))).coeffs)
    raise Refusal(f"unknown selector {what!r}")


def cmd_dims(args, out) -> int:
    grading = "weight" if args.weight else "size"
    n = args.n
    if args.quotient or args.histogram or args.asm:
        if grading != "size":
            raise Refusal("ASM tables are graded by size")
        _cap(None, grading, n, args.unsafe_large)
        if args.histogram:
            rows = [(d, v, c) for d in range(n + 1)
                    for v, c in asm_mod.stat_histogram(args.histogram, d).items()]
            _write_csv(out, ("n", args.histogram, "count"), rows)
            return 0
        if args.quotient:
            values = [asm_mod.quotient_dims(args.quotient, d) for d in range(n + 1)]
        else:
            values = _transform(args.what, [asm_mod.asm_count(d) for d in range(n + 1)])
    elif args.congruence:
        _cap(args.k, grading, n, args.unsafe_large)
        values = [congruences.class_count(args.congruence, args.k, grading, d) for d in range(n + 1)]
    else:
        values = _transform(args.what, list(hilbert_series(args.k, grading, n).coeffs))
    _write_csv(out, ("n" if grading == "size" else "weight", "dim"), enumerate(values))
    return 0


# -- verify --------------------------------------------------------------------

def _verify_hopf(args, out) -> bool:
    report = verify_axioms(args.k, args.max_size, fault=args.inject_fault)
    out.write(report.to_text() + "\n")
    return report.passed


def _verify_congruences(args, out) -> bool:
    names = args.congruence or ["sylvester", "plactic", "hypoplactic", "total"]
    ok = True
    for name in names:
        rep = congruences.validate_good_congruence(name, sample_budget=args.sample, seed=args.seed)
        out.write(rep.to_text() + "\n")
        ok = ok and rep.passed
        for n1 in range(1, args.max_size):
            for n2 in range(1, args.max_size - n1 + 1):
                closure = congruences.p_basis_product_check(name, n1, n2)
                out.write(f"  class sums {n1}x{n2}: {closure.to_text()}\n")
                ok = ok and closure.passed
    return ok


def _verify_asm_closure(args, out) -> bool:
    rep = asm_mod.asm_closure_check(args.max_size)
    out.write(rep.to_text() + "\n")
    return rep.passed


def _verify_asm_morphisms(args, out) -> bool:
    rep = asm_mod.morphism_suite(args.max_size)
    out.write(rep.to_text() + "\n")
    return rep.passed


def _verify_embeddings(args, out) -> bool:
    budget = args.max_size
    ok = True
    preds = [args.predicate] if args.predicate else ["ubp", "permutation"]
    for name in preds:
        k = args.k if name == "permutation" else 1
        rep = embeddings.image_closure_check(embeddings.PREDICATES[name], budget, k=k, name=name)
        out.write(rep.to_text() + "\n")
        ok = ok and rep.passed
    if args.predicate:
        return ok
    small = [u for n in range(min(budget, 4) + 1) for u in embeddings.enumerate_ubp(n)]
    checks = {
        "beta injective": embeddings.injective(embeddings.beta(u) for u in small),
        "beta transpose = beta inverse": embeddings.transpose_inverse_holds(small),
        "alpha injective": embeddings.injective(
            embeddings.alpha(p) for n in range(min(budget, 3) + 1)
            for p in embeddings.colored_permutations(n, args.k)),
        "weak order covers": all(embeddings.weak_order_check(n)[0] for n in range(min(budget, 5) + 1)),
        "colored shuffle": all(
            embeddings.colored_shuffle_correspondence(p1, p2)
            for n1 in range(budget + 1) for n2 in range(budget - n1 + 1)
            for p1 in embeddings.colored_permutations(n1, args.k)
            for p2 in embeddings.colored_permutations(n2, args.k)),
    }
    for name, passed in checks.items():
        out.write(f"{name}: {'PASS' if passed else 'FAIL'}\n")
        ok = ok and passed
    return ok


SUITES = {
    "hopf": _verify_hopf,
    "congruences": _verify_congruences,
    "asm-closure": _verify_asm_closure,
    "asm-morphisms": _verify_asm_morphisms,
    "embeddings": _verify_embeddings,
}


def cmd_verify(args, out) -> int:
    if args.inject_fault and args.suite != "hopf":
        raise Refusal("--inject-fault applies to the hopf suite only")
    limit = {"asm-closure": ASM_CAP, "asm-morphisms": ASM_CAP}.get(args.suite)
    if limit is None:
        _cap(args.k, "size", args.max_size, args.unsafe_large)
    elif args.max_size > limit and not args.unsafe_large:
        raise Refusal(f"max size {args.max_size} exceeds the cap {limit}; pass --unsafe-large")
    passed = SUITES[args.suite](args, out)
    out.write(("all checks passed" if passed else "violations found") + "\n")
    return 0 if passed else 1


# -- oeis-check ----------------------------------------------------------------

def cmd_oeis(args, out) -> int:
    results = oeis_check()
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.matches for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="packedmat", description="Hopf algebra of packed matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list matrices of one homogeneous component")
    e.add_argument("--k", type=int, default=1)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--size", type=int)
    g.add_argument("--weight", type=int)
    e.add_argument("--asm", action="store_true", help="alternating sign matrices instead")
    e.add_argument("--json", action="store_true", help="one JSON record per line")
    e.add_argument("--unsafe-large", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("dims", help="dimension tables as CSV")
    d.add_argument("--k", type=int, default=1)
    g = d.add_mutually_exclusive_group()
    g.add_argument("--size", action="store_true", help="grade by size (default)")
    g.add_argument("--weight", action="store_true", help="grade by number of nonzero entries")
    d.add_argument("--n", type=int, default=4, help="largest degree")
    d.add_argument("--what", choices=("all", "generators", "primitives"), default="all")
    d.add_argument("--congruence", choices=sorted(congruences.CONGRUENCES))
    d.add_argument("--asm", action="store_true")
    d.add_argument("--quotient", metavar="STATS", help="comma-separated statistics, e.g. io,nw")
    d.add_argument("--histogram", choices=asm_mod.STATS, help="per-size distribution of one statistic")
    d.add_argument("--unsafe-large", action="store_true")
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="exhaustive property checks")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--max-size", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sample", type=int, help="random instances per condition (congruences)")
    v.add_argument("--congruence", action="append", choices=sorted(congruences.CONGRUENCES))
    v.add_argument("--predicate", choices=sorted(embeddings.PREDICATES),
                   help="check the closure of one image predicate only")
    v.add_argument("--inject-fault", choices=sorted(FAULTS))
    v.add_argument("--unsafe-large", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oeis-check", help="compare computed sequences with vendored OEIS prefixes")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (Refusal, ValueError) as exc:
        print(f"packedmat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
