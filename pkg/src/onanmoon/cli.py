"""Command-line surface: coefficients, dimensions, class numbers, traces,
multiplicities, verification reports, example tables and the Rademacher
numeric cross-check.

Exit code 0 iff every requested computation/check succeeds.
"""

from __future__ import annotations

import argparse
import sys


def _cmd_coeff(args) -> int:
    from .mtseries import mt_series_for_class

    s = mt_series_for_class(args.order, args.dmax + 1)
    for n in range(-4, args.dmax + 1):
        c = s.coefficient(n)
        if c:
            print(f"{n}\t{c}")
    return 0


def _cmd_dims(args) -> int:
    from .mtseries import mt_series

    s = mt_series("F1A", args.dmax + 1)
    for n in range(3, args.dmax + 1):
        if n % 4 in (0, 3):
            print(f"{n}\t{s.coefficient(n)}")
    return 0


def _cmd_classnum(args) -> int:
    from .quadforms import class_number

    for D in range(0, args.dmax + 1):
        if D % 4 in (0, 3):
            print(f"{D}\t{class_number(args.level, D)}")
    return 0


def _cmd_traces(args) -> int:
    from .traces import trace4, trace4_plus

    fn = trace4_plus if args.plus else trace4
    for D in range(3, args.dmax + 1):
        if D % 4 in (0, 3):
            print(f"{D}\t{fn(args.level, D)}")
    return 0


def _cmd_mult(args) -> int:
    from .chartable import multiplicities_table

    ms = [m for m in range(3, args.mmax + 1) if m % 4 in (0, 3)]
    table = multiplicities_table(ms)
    print("m\t" + "\t".join(f"V{i}" for i in range(1, 31)))
    for m in ms:
        print(f"{m}\t" + "\t".join(str(x) for x in table[m]))
    return 0


def _cmd_verify(args) -> int:
    ok = True
    if args.what == "congruences":
        from .arith import verify_congruences

        checked = verify_congruences(args.bound)
        print(f"all {len(checked)} series congruences hold to q^{args.bound}")
    elif args.what == "tables":
        from .tables import TABLE_ROWS, build_table, render

        for which in (3, 4, 5, 6, 9, 10):
            header, rows = build_table(which)
            print(render(header, rows, "markdown"))
    elif args.what == "characterization":
        from .chartable import (
            centralizer_orders,
            character_value,
            class_names,
            verify_column_orthogonality,
            verify_row_orthogonality,
        )
        from .mtseries import mt_coefficient

        ok &= verify_column_orthogonality()
        ok &= verify_row_orthogonality()
        centralizer_orders()
        print("character table self-certified (orthogonality, class equation)")
        for name in class_names():
            a3 = mt_coefficient(name, 3)
            chi7 = character_value(7, name).as_rational()
            if a3 != chi7:
                print(f"a(3) != chi_7 at {name}: {a3} vs {chi7}")
                ok = False
        print("a(3) row matches chi_7 on all 30 classes" if ok else "FAILED")
    elif args.what == "positivity":
        from .chartable import decompose

        for m in range(13, args.mmax + 1):
            if m % 4 not in (0, 3):
                continue
            mults = decompose(m)
            if any(x < 0 for x in mults):
                print(f"negative multiplicity at m={m}: {mults}")
                ok = False
        print(f"multiplicities nonnegative for 12 < m <= {args.mmax}" if ok
              else "FAILED")
    return 0 if ok else 1


def _cmd_tables(args) -> int:
    from .tables import emit_tables

    which = [int(w) for w in args.which.split(",")]
    print(emit_tables(which, args.format))
    return 0


def _cmd_rademacher(args) -> int:
    from .rademacher import rademacher_coefficients, rademacher_f_coefficients

    if args.mu is None:
        got = rademacher_f_coefficients(args.level, [args.n], c_max=args.cmax)
        print(f"n={args.n}\t{got[args.n]:.6f}")
        from .mtseries import mt_coefficient_at

        names = {1: "1A", 2: "2A", 3: "3A", 4: "4A"}
        if args.level in names:
            exact = int(mt_coefficient_at(names[args.level], args.n))
            rel = abs(got[args.n] / exact - 1) if exact else abs(got[args.n])
            print(f"exact\t{exact}\nrel. error\t{rel:.3e}")
            return 0 if rel < 0.01 else 1
    else:
        got = rademacher_coefficients(
            args.level, [args.n], mu=args.mu, c_max=args.cmax
        )
        print(f"n={args.n}\t{got[args.n]:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="onanmoon",
        description="Exact workbench for the weight-3/2 series attached to "
        "the sporadic O'Nan group.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeff", help="coefficients of one series")
    s.add_argument("--order", default="1A", help="conjugacy class, e.g. 2A")
    s.add_argument("--dmax", type=int, default=100)
    s.set_defaults(fn=_cmd_coeff)

    s = sub.add_parser("dims", help="graded dimensions dim W_D")
    s.add_argument("--dmax", type=int, default=40)
    s.set_defaults(fn=_cmd_dims)

    s = sub.add_parser("classnum", help="level-N class numbers H^(N)(D)")
    s.add_argument("--level", type=int, default=1)
    s.add_argument("--dmax", type=int, default=200)
    s.set_defaults(fn=_cmd_classnum)

    s = sub.add_parser("traces", help="traces of singular moduli Tr4(D)")
    s.add_argument("--level", type=int, default=1)
    s.add_argument("--plus", action="store_true")
    s.add_argument("--dmax", type=int, default=64)
    s.set_defaults(fn=_cmd_traces)

    s = sub.add_parser("mult", help="irreducible multiplicities of W_m")
    s.add_argument("--mmax", type=int, default=36)
    s.set_defaults(fn=_cmd_mult)

    s = sub.add_parser("verify", help="verification reports")
    s.add_argument(
        "what",
        choices=["congruences", "tables", "characterization", "positivity"],
    )
    s.add_argument("--bound", type=int, default=250)
    s.add_argument("--mmax", type=int, default=120)
    s.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("tables", help="example tables (indices 3..10)")
    s.add_argument("--which", default="3,4,5,6,9,10")
    s.add_argument(
        "--format", default="markdown", choices=["markdown", "csv", "json"]
    )
    s.set_defaults(fn=_cmd_tables)

    s = sub.add_parser(
        "rademacher", help="numeric cross-check via Kloosterman/Bessel sums"
    )
    s.add_argument("--level", type=int, default=1, help="class order N")
    s.add_argument("--mu", type=int, default=None, help="-4, 0, or omit "
                   "for the full combination -R^[-4] + 2 R^[0]")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--cmax", type=int, default=100_000)
    s.set_defaults(fn=_cmd_rademacher)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
