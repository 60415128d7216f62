"""Command-line interface.

Exit codes: 0 success, 1 verification found violations, 2 bad input.
All structured output is JSON with sorted keys; tables default to CSV.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import asymptotics, cohomology, sarnakxue, shapes
from .growth import rep_bound
from .infchar import format_rational

SWEEP_CAP_ENV = "UPQGROWTH_SWEEP_CAP"


class ParseError(ValueError):
    pass


# --- small parsers -----------------------------------------------------------


def parse_partition(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()")
    if not body:
        raise ParseError(f"empty partition in {text!r}")
    try:
        parts = tuple(int(v) for v in body.split(","))
    except ValueError:
        raise ParseError(f"bad partition {text!r}") from None
    if any(v < 1 for v in parts):
        raise ParseError(f"partition parts must be positive in {text!r}")
    return tuple(sorted(parts, reverse=True))


def parse_partition_list(text: str) -> list[tuple[int, ...]]:
    return [parse_partition(tok) for tok in text.split(";") if tok.strip()]


def parse_ideal(text: str) -> tuple[tuple[int, int], ...]:
    """"2,3^2" -> ((2,1),(3,2))."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        base, _, exp = tok.partition("^")
        try:
            out.append((int(base), int(exp) if exp else 1))
        except ValueError:
            raise ParseError(f"bad prime power {tok!r}") from None
    if not out:
        raise ParseError("empty ideal")
    return tuple(out)


def parse_indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"bad index list {text!r}") from None


def load_rep(path: str) -> cohomology.GlobalRep:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read representation: {e}") from None
    try:
        return cohomology.global_rep_from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad representation data: {e}") from None


def format_decimal2(x: Fraction) -> str:
    """Two decimals, ties to even, exact integer arithmetic."""
    n, d = x.numerator * 100, x.denominator
    q, r = divmod(n, d)
    if 2 * r > d or (2 * r == d and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 100}.{q % 100:02d}"


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


# --- subcommands -------------------------------------------------------------


def cmd_sx_table(args) -> int:
    if args.parts:
        part_list = parse_partition_list(args.parts)
    else:
        part_list = [row.q for row in sarnakxue.REFERENCE_TABLE]
    rows = [sarnakxue.sx_row(p) for p in part_list]
    if args.json:
        _emit_json({"rows": [r.to_json() for r in rows]})
        return 0
    print(
        "Q,provable,conjectural,sx_goal,trivial,"
        "provable_eps,provable_italic,conjectural_italic,exceeds_goal"
    )
    for r in rows:
        print(
            ",".join(
                [
                    " ".join(str(v) for v in r.q),
                    format_rational(r.provable.main),
                    format_rational(r.conjectural.main),
                    format_decimal2(r.sx_goal),
                    str(r.trivial),
                    str(r.provable.eps),
                    str(int(r.provable_at_coarsening)),
                    str(int(r.conjectural_at_coarsening)),
                    str(int(r.exceeds_goal)),
                ]
            )
        )
    return 0


def cmd_delta_max(args) -> int:
    rep = load_rep(args.rep)
    value, q_arg = rep_bound(rep)
    built = shapes.delta_max(rep)
    _emit_json(
        {
            "bound": value.to_json(),
            "q_argmax": list(q_arg),
            "candidates": [list(q) for q in shapes.sl2_candidates(rep)],
            "shapes": [shapes.shape_to_json(s) for s in built],
        }
    )
    return 0


def cmd_coh_bounds(args) -> int:
    n, d = args.rank, args.length
    if args.half_signature is not None:
        rs = [args.half_signature]
    else:
        rs = list(range(0, n // 2 + 1))
    try:
        rows = [(r, cohomology.lowest_degree(d, n, r)) for r in rs]
    except ValueError as e:
        raise ParseError(str(e)) from None
    if args.json:
        _emit_json({"rows": [{"r": r, "degree": deg} for r, deg in rows]})
        return 0
    print("r,lowest_degree")
    for r, deg in rows:
        print(f"{r},{deg}")
    return 0


def _capped(n: int) -> int:
    cap = os.environ.get(SWEEP_CAP_ENV)
    if cap:
        try:
            return min(n, int(cap))
        except ValueError:
            raise ParseError(f"bad {SWEEP_CAP_ENV}={cap!r}") from None
    return n


def cmd_verify(args) -> int:
    nmax = _capped(args.nmax)
    runners = {
        "table": sarnakxue.verify_table1,
        "qd": lambda: sarnakxue.verify_qd_bound(nmax),
        "density": lambda: sarnakxue.verify_density(nmax),
        "maxsl2": lambda: sarnakxue.verify_maxsl2(min(14, nmax)),
    }
    targets = list(runners) if args.target == "all" else [args.target]
    certs = [runners[t]() for t in targets]
    if args.json:
        _emit_json({"certificates": [c.to_json() for c in certs]})
    else:
        for c in certs:
            if c.ok:
                print(f"ok {c.target}: {c.checked_count} cases ({c.sweep})")
            else:
                print(
                    f"FAIL {c.target}: {len(c.violations)} violations "
                    f"in {c.checked_count} cases"
                )
                for v in c.violations:
                    print(f"  {v}")
    return 0 if all(c.ok for c in certs) else 1


def cmd_leading_term(args) -> int:
    rep = load_rep(args.rep)
    term = asymptotics.leading_term(rep, convention=args.convention)
    _emit_json(term.to_json())
    return 0


def cmd_euler(args) -> int:
    ideal = parse_ideal(args.ideal)
    if (args.indices is None) == (args.congruence is None):
        raise ParseError("need exactly one of --indices / --congruence")
    if args.indices is not None:
        value = asymptotics.gamma_factor(parse_indices(args.indices), ideal)
    else:
        value = asymptotics.index_congruence(args.congruence, ideal)
    print(format_rational(value))
    return 0


# --- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upqgrowth",
        description="Exact growth and density combinatorics for "
        "cohomological representations of real unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sx-table", help="density table rows for partitions")
    p.add_argument("--parts", help='partition list like "(2,2);(2,2,1)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sx_table)

    p = sub.add_parser("delta-max", help="dominant shapes of a representation")
    p.add_argument("--rep", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_delta_max)

    p = sub.add_parser("coh-bounds", help="lowest cohomological degrees")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--half-signature", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coh_bounds)

    p = sub.add_parser("verify", help="run the certified sweeps")
    p.add_argument(
        "--target",
        choices=["all", "table", "qd", "density", "maxsl2"],
        default="all",
    )
    p.add_argument("--nmax", type=int, default=60)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("leading-term", help="main-term data of a rep")
    p.add_argument("--rep", required=True, help="JSON file, or - for stdin")
    p.add_argument(
        "--convention",
        "--packet-convention",
        choices=["binom", "example1"],
        default="binom",
    )
    p.set_defaults(func=cmd_leading_term)

    p = sub.add_parser("euler", help="gamma factors and congruence indices")
    p.add_argument("--ideal", required=True, help='prime powers like "2,3^2"')
    p.add_argument("--indices", help='gamma indices like "2,1,-1"')
    p.add_argument("--congruence", type=int, help="congruence index rank")
    p.set_defaults(func=cmd_euler)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
