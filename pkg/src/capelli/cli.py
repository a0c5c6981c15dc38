"""Command-line surface.

Subcommands: ``ks`` (interpolation polynomials and their singular/regular
parts), ``eig`` (eigenvalue polynomials by route), ``deligne`` (categorical
eigenvalue polynomial, block table, minimal polynomial), ``table``
(partition data), ``verify`` (identity sweeps with machine-readable
reports).

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
configuration error.  Output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import deligne as dl
from . import eigenpoly as ep
from . import knopsahi as ks
from .bipoly import render_bipoly
from .config import ConfigError, load_config
from .partitions import PClass, Pair2, classify, dagger, ell, h_poly, c_super, c_cat, size, upto
from .ratfunc import render_frac, render_unipoly
from .verify import Bounds, BoundsError, SUITES, run_suite

USAGE_EXIT = 2
FAIL_EXIT = 1


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Pair2:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"partition must be 'a,b', got {text!r}")
    try:
        l1, l2 = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"partition must be a pair of integers, got {text!r}")
    if not l1 >= l2 >= 0:
        raise UsageError(f"need a >= b >= 0 in partition '{text}'")
    return (l1, l2)


def parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected an integer or p/q rational, got {text!r}")


def parse_t_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(tok) for tok in text.split(",") if tok.strip())


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sub.add_argument("--out", metavar="PATH", default=None)
    sub.add_argument("--jobs", type=int, default=None, metavar="N")
    sub.add_argument("--config", metavar="PATH", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capelli",
        description="Exact interpolation and Capelli eigenvalue polynomials in two variables.",
    )
    parser.add_argument("--version", action="version", version=f"capelli {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_ks = subs.add_parser("ks", help="interpolation polynomial P_lambda")
    p_ks.add_argument("partition", metavar="LAMBDA", help="partition 'a,b'")
    p_ks.add_argument("--k", type=int, default=None, metavar="K")
    p_ks.add_argument("--part", choices=("poly", "reg", "sing"), default=None)
    p_ks.add_argument("--falling", action="store_true", help="render in the falling basis")
    _common_flags(p_ks)

    p_eig = subs.add_parser("eig", help="eigenvalue polynomial f_lambda")
    p_eig.add_argument("partition", metavar="LAMBDA")
    p_eig.add_argument("--k", type=int, default=None, metavar="K")
    p_eig.add_argument("--route", choices=("a", "b", "c", "d", "oracle", "all"), default="all")
    p_eig.add_argument("--falling", action="store_true", help="render in the falling basis")
    _common_flags(p_eig)

    p_del = subs.add_parser("deligne", help="categorical eigenvalue polynomial at dimension t")
    p_del.add_argument("partition", metavar="LAMBDA")
    p_del.add_argument("--t", required=True, metavar="T", help="rational, 'p/q' or integer")
    p_del.add_argument("--falling", action="store_true", help="render in the falling basis")
    _common_flags(p_del)

    p_tab = subs.add_parser("table", help="partition classification table")
    p_tab.add_argument("--k", type=int, default=None, metavar="K")
    p_tab.add_argument("--size-max", type=int, default=6, dest="size_max")
    _common_flags(p_tab)

    p_ver = subs.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument("--k-max", type=int, default=None, dest="k_max")
    p_ver.add_argument("--size-max", type=int, default=None, dest="size_max")
    p_ver.add_argument("--N-max", "--n-max", type=int, default=None, dest="n_max")
    p_ver.add_argument("--psi-N-max", type=int, default=None, dest="psi_n_max")
    p_ver.add_argument("--deligne-size-max", type=int, default=None, dest="deligne_size_max")
    p_ver.add_argument("--minpoly-d-max", type=int, default=None, dest="minpoly_d_max")
    p_ver.add_argument("--a-max", type=int, default=None, dest="a_max")
    p_ver.add_argument("--bcd-max", type=int, default=None, dest="bcd_max")
    p_ver.add_argument("--t-list", default=None, dest="t_list", metavar="T1,T2,...")
    _common_flags(p_ver)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}")


def _kv_lines(pairs: list[tuple[str, str]]) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)


def _json_doc(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


# -- subcommand implementations ------------------------------------------------------


def _check_size(lam, cfg) -> None:
    if size(lam) > cfg.size_cap:
        raise UsageError(f"partition size {size(lam)} exceeds the hard cap {cfg.size_cap}")


def cmd_ks(args, cfg) -> int:
    lam = parse_partition(args.partition)
    _check_size(lam, cfg)
    if args.part in ("reg", "sing") and args.k is None:
        raise UsageError("--part reg|sing requires --k")
    if args.format == "csv":
        raise UsageError("csv format applies to 'table' and 'verify' only")
    body = ks.ks_poly(lam).body
    fall = args.falling
    pairs: list[tuple[str, str]] = []
    if args.k is None:
        if fall:
            pairs.append(("P_falling", render_bipoly(body, falling=True)))
        else:
            pairs.append(("P", render_bipoly(body)))
            pairs.append(("P_falling", render_bipoly(body, falling=True)))
    else:
        k = args.k
        if k < 0 or k > cfg.k_cap:
            raise UsageError(f"--k must lie in [0, {cfg.k_cap}]")
        reg = ks.reg_part(lam, k)
        sing = ks.sing_part(lam, k)
        if args.part == "sing":
            pairs.append(("Sing", render_bipoly(sing, falling=fall)))
        elif args.part == "reg":
            pairs.append(("Reg", render_bipoly(reg, falling=fall)))
        else:
            pairs.append(("Reg", render_bipoly(reg, falling=fall)))
            pairs.append(("Sing", render_bipoly(sing, falling=fall)))
    if args.format == "json":
        doc = {"command": "ks", "lambda": args.partition, "k": args.k}
        doc.update({k.lower(): v for k, v in pairs})
        _emit(_json_doc(doc), args.out)
    else:
        if args.part in ("reg", "sing"):
            _emit(pairs[0][1] + "\n", args.out)
        else:
            _emit(_kv_lines(pairs), args.out)
    return 0


_ROUTES = {
    "a": ep.Route.A,
    "b": ep.Route.B,
    "c": ep.Route.C,
    "d": ep.Route.D,
    "oracle": ep.Route.ORACLE,
}


def cmd_eig(args, cfg) -> int:
    lam = parse_partition(args.partition)
    _check_size(lam, cfg)
    k = cfg.default_k if args.k is None else args.k
    if k < 0 or k > cfg.k_cap:
        raise UsageError(f"--k must lie in [0, {cfg.k_cap}]")
    if args.format == "csv":
        raise UsageError("csv format applies to 'table' and 'verify' only")
    cls = classify(lam, k)
    if args.route == "all":
        routes = ep.applicable_routes(lam, k)
        bodies = [ep.eigen(lam, k, r) for r in routes]
        agree = all(b.body == bodies[0].body for b in bodies)
        rendered = render_bipoly(bodies[0].body, falling=args.falling)
        if args.format == "json":
            doc = {
                "command": "eig", "lambda": args.partition, "k": k,
                "class": cls.value,
                "routes": [r.value for r in routes],
                "f": rendered,
                "routes_agree": agree,
            }
            _emit(_json_doc(doc), args.out)
        else:
            _emit(f"{rendered}\nroutes agree: {'yes' if agree else 'NO'}\n", args.out)
        return 0 if agree else FAIL_EXIT
    route = _ROUTES[args.route]
    if route not in ep.applicable_routes(lam, k):
        raise UsageError(f"lambda is {k}-{cls.value}; route {args.route} requires {_route_class(route)}")
    body = ep.eigen(lam, k, route).body
    rendered = render_bipoly(body, falling=args.falling)
    if args.format == "json":
        doc = {"command": "eig", "lambda": args.partition, "k": k,
               "class": cls.value, "route": args.route, "f": rendered}
        _emit(_json_doc(doc), args.out)
    else:
        _emit(rendered + "\n", args.out)
    return 0


def _route_class(route: ep.Route) -> str:
    return {
        ep.Route.A: "regular",
        ep.Route.B: "singular",
        ep.Route.C: "quasiregular",
        ep.Route.D: "quasiregular",
    }.get(route, "any class")


def cmd_deligne(args, cfg) -> int:
    lam = parse_partition(args.partition)
    _check_size(lam, cfg)
    t = parse_rational(args.t)
    if args.format == "csv":
        raise UsageError("csv format applies to 'table' and 'verify' only")
    f = dl.cat_eig_formula(lam, t)
    consistent = f == dl.cat_eig_from_blocks(lam, t)
    rendered = render_bipoly(f, falling=args.falling)
    block_rows = []
    for m in range(size(lam) + 1):
        row = ", ".join(f"({b.lam[0]},{b.lam[1]})x{b.mult}" for b in dl.blocks(m, t))
        block_rows.append((m, row))
    mp = dl.min_poly(size(lam), t)
    if args.format == "json":
        doc = {
            "command": "deligne", "lambda": args.partition, "t": render_frac(t),
            "f": rendered,
            "blocks": {str(m): row for m, row in block_rows},
            "min_poly": render_unipoly(mp, "x"),
            "routes_agree": consistent,
        }
        _emit(_json_doc(doc), args.out)
    else:
        lines = [f"f = {rendered}"]
        lines += [f"blocks size {m}: {row}" for m, row in block_rows]
        lines.append(f"min_poly = {render_unipoly(mp, 'x')}")
        lines.append(f"routes agree: {'yes' if consistent else 'NO'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if consistent else FAIL_EXIT


def cmd_table(args, cfg) -> int:
    k = cfg.default_k if args.k is None else args.k
    if k < 0 or k > cfg.k_cap:
        raise UsageError(f"--k must lie in [0, {cfg.k_cap}]")
    if args.size_max > cfg.size_cap:
        raise UsageError(f"--size-max exceeds the hard cap {cfg.size_cap}")
    header = ["lambda", "size", "class", "dagger", "ell", "H(kappa)", "H(k)", "c_super", "c_cat(-2k)"]
    rows = []
    for lam in upto(args.size_max):
        cls = classify(lam, k)
        lamd = dagger(lam, k)
        h = h_poly(lam)
        rows.append([
            f"{lam[0]},{lam[1]}",
            str(size(lam)),
            cls.value,
            f"{lamd[0]},{lamd[1]}" if lamd is not None else "-",
            str(ell(lam, k)) if cls is PClass.QUASIREGULAR else "-",
            render_unipoly(h),
            render_frac(Fraction(h(k))),
            render_frac(c_super(lam, k)),
            render_frac(c_cat(lam, Fraction(-2 * k))),
        ])
    if args.format == "json":
        doc = {
            "command": "table", "k": k, "size_max": args.size_max,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        _emit(_json_doc(doc), args.out)
    elif args.format == "csv":
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        w = _csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        _emit(buf.getvalue(), args.out)
    else:
        widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(len(header))]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args, cfg) -> int:
    overrides = {}
    for name in ("k_max", "size_max", "n_max", "psi_n_max", "deligne_size_max",
                 "minpoly_d_max", "a_max", "bcd_max"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    if args.t_list is not None:
        overrides["t_list"] = parse_t_list(args.t_list)
    bounds = Bounds(**overrides)
    try:
        bounds.validate(cfg)
    except BoundsError as exc:
        raise UsageError(str(exc))
    jobs = args.jobs if args.jobs is not None else cfg.effective_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    params = [
        ("suite", args.suite),
        ("k_max", str(bounds.k_max)),
        ("size_max", str(bounds.size_max)),
        ("N_max", str(bounds.n_max)),
        ("psi_N_max", str(bounds.psi_n_max)),
        ("deligne_size_max", str(bounds.deligne_size_max)),
        ("minpoly_d_max", str(bounds.minpoly_d_max)),
        ("a_max", str(bounds.a_max)),
        ("bcd_max", str(bounds.bcd_max)),
        ("t_list", ",".join(render_frac(t) for t in bounds.t_list)),
    ]
    report = run_suite(args.suite, bounds, params=tuple(params), jobs=jobs)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_pretty(), args.out)
    print(report.summary_line(), file=sys.stderr)
    return 0 if report.all_passed else FAIL_EXIT


_COMMANDS = {
    "ks": cmd_ks,
    "eig": cmd_eig,
    "deligne": cmd_deligne,
    "table": cmd_table,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return _COMMANDS[args.command](args, cfg)
    except (UsageError, ConfigError) as exc:
        print(f"capelli: error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
