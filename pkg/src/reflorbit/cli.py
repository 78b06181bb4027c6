"""Command-line interface.

Subcommands:
  group info|validate   catalog metadata and mandatory validation
  imprim construct      constructive nice-tuple witnesses in G(m, p, n)
  imprim verify         theorem suite over all m <= m-max (TSV output)
  mc                    middle convolution of a tuple file
  induce                SL2 induction of a rank-2 tuple file
  orbit                 braid orbit of an SL2 tuple file
  subgroup              subgroup recognition for a tuple file
  run                   full pipeline for one group and tuple length
  report                render a result-store directory as TSV/markdown
"""

from __future__ import annotations

import argparse
import sys

from reflorbit import KERNEL_NAME, __version__


def _parse_root(text):
    from reflorbit.cyclo import RootOfUnity

    d, k = text.split(":")
    return RootOfUnity(int(d), int(k))


def cmd_group(args):
    from reflorbit.refgroup import load_catalog

    entry = load_catalog(args.id, validate=args.cmd == "validate")
    print(f"id:        {entry.id}")
    print(f"rank:      {entry.rank}")
    print(f"order:     {entry.order}")
    print(f"degrees:   {entry.degrees}")
    print(f"field:     Q(zeta_{entry.base_field.conductor})")
    print(f"center:    {entry.center_order}")
    if args.cmd == "validate":
        rs = entry.reflection_set()
        print(f"reflections: {len(rs)} in {rs.class_count()} classes")
        print("validation: OK")
    return 0


def cmd_imprim_construct(args):
    from reflorbit.imprim import construct_nice

    result = construct_nice(args.m, args.p, args.n, args.T)
    if result is None:
        print("none")
        return 1
    tup, lam = result
    print("tuple:", " ".join(repr(r) for r in tup))
    print(f"lambda: {lam.order}:{lam.exponent}")
    return 0


def cmd_imprim_verify(args):
    from reflorbit.imprim import construct_nice, exists_nice

    print("m\tp\tn\tT\texists\twitness\tlambda")
    bad = 0
    for m in range(2, args.m_max + 1):
        for p in [d for d in range(1, m + 1) if m % d == 0]:
            for n, T in [(3, 3), (3, 4), (4, 4), (4, 5)]:
                built = construct_nice(m, p, n, T)
                found = exists_nice(m, p, n, T)
                if (built is not None) != found:
                    bad += 1
                witness = " ".join(repr(r) for r in built[0]) if built else "-"
                lam = f"{built[1].order}:{built[1].exponent}" if built else "-"
                print(f"{m}\t{p}\t{n}\t{T}\t{found}\t{witness}\t{lam}")
    if bad:
        print(f"MISMATCHES: {bad}", file=sys.stderr)
        return 1
    return 0


def _load_tuple(path):
    from reflorbit.midconv import tuple_from_text

    with open(path) as fh:
        return tuple_from_text(fh.read())


def cmd_mc(args):
    from reflorbit.midconv import convolve, tuple_to_text

    A = _load_tuple(args.tuple)
    lam = _parse_root(args.lam)
    data = convolve(A, lam)
    print(f"input:  {len(A)} matrices of dim {A.dim}", file=sys.stderr)
    print(
        f"K dim {data.K.dim}, L dim {data.L.dim}, output dim {data.output.dim}",
        file=sys.stderr,
    )
    if not args.check_only:
        out = tuple_to_text(data.output)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            print(out)
    return 0


def cmd_induce(args):
    from reflorbit.midconv import tuple_to_text
    from reflorbit.sl2 import induce

    A = _load_tuple(args.tuple)
    induced, char = induce(A)
    print(tuple_to_text(induced))
    return 0


def cmd_orbit(args):
    from reflorbit.braid import OrbitCapExceeded, orbit
    from reflorbit.cyclo import elt_to_text
    from reflorbit.midconv import MatTuple

    M = _load_tuple(args.tuple)
    try:
        orb = orbit(M, cap=args.cap)
        print(f"orbit size: {orb.size}")
    except OrbitCapExceeded as e:
        orb = e.partial
        print(f"orbit size: >= {orb.size} (cap {args.cap} exceeded)")
    if args.emit_signatures:
        from reflorbit.braid import signature

        for rep in orb.representatives:
            sig = signature(rep)
            print(" ; ".join(elt_to_text(c) for c in sig.coords))
    return 0


def cmd_subgroup(args):
    from reflorbit.sl2 import subgroup_id

    M = _load_tuple(args.tuple)
    print(subgroup_id(M, cap=args.cap))
    return 0


def cmd_run(args):
    from reflorbit.pipeline import ResultStore, distinct_orbit_count, report, run_group

    store = ResultStore(args.out) if args.out else None
    rows, types = run_group(
        args.group,
        args.T,
        orbit_cap=args.cap,
        search_cap=args.search_cap if not args.unbounded else 10**18,
        store=store,
        progress=lambda msg: print(msg, file=sys.stderr),
    )
    print(report(rows, fmt="tsv"))
    n, _ = distinct_orbit_count(rows)
    print(f"distinct orbits: {n}", file=sys.stderr)
    return 0


def cmd_report(args):
    import json
    import os

    rows = []
    for sub in sorted(os.listdir(args.dir)):
        index = os.path.join(args.dir, sub, "index.tsv")
        if os.path.isfile(index):
            with open(index) as fh:
                rows.append(fh.read())
    if args.format == "tsv":
        print("\n".join(rows))
    else:
        for block in rows:
            lines = [ln.split("\t") for ln in block.strip().splitlines()]
            if not lines:
                continue
            print("| " + " | ".join(lines[0]) + " |")
            print("|" + "---|" * len(lines[0]))
            for ln in lines[1:]:
                print("| " + " | ".join(ln) + " |")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="reflorbit",
        description="reflection groups, middle convolution, braid orbits "
        f"(v{__version__}, {KERNEL_NAME} kernels)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="catalog info / validation")
    g.add_argument("cmd", choices=["info", "validate"])
    g.add_argument("id")
    g.set_defaults(func=cmd_group)

    im = sub.add_parser("imprim", help="imprimitive constructions")
    imsub = im.add_subparsers(dest="imprim_cmd", required=True)
    c = imsub.add_parser("construct")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--T", type=int, required=True)
    c.set_defaults(func=cmd_imprim_construct)
    v = imsub.add_parser("verify")
    v.add_argument("--m-max", type=int, default=6)
    v.set_defaults(func=cmd_imprim_verify)

    mc = sub.add_parser("mc", help="middle convolution of a tuple file")
    mc.add_argument("--tuple", required=True)
    mc.add_argument("--lambda", dest="lam", required=True, metavar="d:k")
    mc.add_argument("--check-only", action="store_true")
    mc.add_argument("--out")
    mc.set_defaults(func=cmd_mc)

    ind = sub.add_parser("induce", help="SL2 induction of a rank-2 tuple")
    ind.add_argument("--tuple", required=True)
    ind.add_argument("--field-extension", type=int, default=0)
    ind.set_defaults(func=cmd_induce)

    orb = sub.add_parser("orbit", help="braid orbit of an SL2 tuple")
    orb.add_argument("--tuple", required=True)
    orb.add_argument("--cap", type=int, default=1_000_000)
    orb.add_argument("--emit-signatures", action="store_true")
    orb.set_defaults(func=cmd_orbit)

    sg = sub.add_parser("subgroup", help="subgroup recognition")
    sg.add_argument("--tuple", required=True)
    sg.add_argument("--cap", type=int, default=3000)
    sg.set_defaults(func=cmd_subgroup)

    run = sub.add_parser("run", help="full pipeline for one group")
    run.add_argument("--group", required=True)
    run.add_argument("--T", type=int, required=True)
    run.add_argument("--cap", type=int, default=1_000_000)
    run.add_argument("--search-cap", type=int, default=5_000_000)
    run.add_argument("--unbounded", action="store_true")
    run.add_argument("--out")
    run.set_defaults(func=cmd_run)

    rep = sub.add_parser("report", help="render a result store")
    rep.add_argument("--dir", required=True)
    rep.add_argument("--format", choices=["tsv", "md"], default="tsv")
    rep.set_defaults(func=cmd_report)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
