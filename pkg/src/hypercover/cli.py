"""Command-line front end: paper tables, single tilings and p-sweeps.

Exit status: 0 success, 2 usage or parse error, 3 invalid tiling,
4 numeric domain error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import List, Optional, Sequence

from .covering import covering_density, limit_p_infinity, sweep
from .errors import HypercoverError, InvalidSymbolError, InvalidTilingError
from .schlafli import CoxeterSymbol, parse_symbol
from .volume import QuadratureConfig

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID_TILING = 3
EXIT_DOMAIN = 4

COLUMNS = ("h", "vol_S", "vol_H", "delta_min")

# table id -> (q, r, listed p values); math.inf is the limit row
H3_TABLES = {
    1: (3, 3, (7, 8, 9, 20, 50, 100, math.inf)),
    2: (4, 3, (5, 6, 7, 20, 50, 100, math.inf)),
    3: (3, 4, (7, 8, 9, 20, 50, 100, math.inf)),
    4: (5, 3, (4, 5, 6, 20, 50, 100, math.inf)),
    5: (3, 5, (7, 8, 9, 20, 50, 100, math.inf)),
}
HIGHER_TABLES = {
    6: ((3, 5, 3, 3), (5, 3, 4, 3)),
    7: ((5, 3, 3, 3, 3), (5, 3, 3, 3, 4)),
}


class UnknownTableError(HypercoverError):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    precision: int = 8
    destination: Optional[str] = None

    def __post_init__(self):
        if self.format not in ("csv", "markdown"):
            raise ValueError(f"unknown format {self.format!r}")
        if not 1 <= self.precision <= 15:
            raise ValueError("precision must be in [1, 15]")


def format_number(x: float, precision: int) -> str:
    """Round half-even to ``precision`` decimal places."""
    q = Decimal(1).scaleb(-precision)
    return str(Decimal(float(x)).quantize(q, rounding=ROUND_HALF_EVEN))


def format_p(p: float, precision: int) -> str:
    if math.isinf(p):
        return "inf"
    text = format_number(p, precision).rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def render(header: Sequence[str], rows: List[Sequence[str]], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
    else:
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _values(res, precision):
    return [format_number(getattr(res, c), precision) for c in COLUMNS]


def cmd_table(table_id: int, out: OutputSpec, cfg: Optional[QuadratureConfig] = None, k: float = 1.0) -> str:
    if table_id in H3_TABLES:
        q, r, ps = H3_TABLES[table_id]
        rows = []
        for p in ps:
            res = limit_p_infinity(q, r, k=k) if math.isinf(p) else covering_density(CoxeterSymbol((p, q, r)), cfg, k)
            rows.append([format_p(p, out.precision)] + _values(res, out.precision))
        return render(("p",) + COLUMNS, rows, out.format)
    if table_id in HIGHER_TABLES:
        rows = []
        for params in HIGHER_TABLES[table_id]:
            res = covering_density(CoxeterSymbol(params), cfg, k)
            rows.append([str(res.symbol)] + _values(res, out.precision))
        return render(("T",) + COLUMNS, rows, out.format)
    raise UnknownTableError(f"unknown table {table_id}; expected 1..7")


def cmd_density(symbol_text: str, out: OutputSpec, cfg: Optional[QuadratureConfig] = None, k: float = 1.0) -> str:
    symbol = parse_symbol(symbol_text)
    if symbol.dim > 3 and not symbol.is_integral:
        raise InvalidSymbolError("only the first entry of a 3D symbol may be non-integer")
    res = covering_density(symbol, cfg, k)
    return render(COLUMNS, [_values(res, out.precision)], out.format)


def cmd_sweep(q: float, r: float, p_min: float, p_max: float, step: float, out: OutputSpec) -> str:
    rows = [
        [format_p(row.p, out.precision)] + _values(row, out.precision)
        for row in sweep(q, r, p_min, p_max, step)
    ]
    return render(("p",) + COLUMNS, rows, out.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercover",
        description="Least dense hyperball coverings of regular prism tilings in H^3, H^4, H^5.",
    )
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--table", type=int, metavar="N", help="reproduce table N (1-7)")
    mode.add_argument("--symbol", metavar="SYMBOL", help='single tiling, e.g. "[7,3,3]"')
    mode.add_argument("--sweep", action="store_true", help="continuous-p sweep of an H^3 family (CSV)")
    parser.add_argument("--q", type=float, default=3.0)
    parser.add_argument("--r", type=float, default=3.0)
    parser.add_argument("--p-min", type=float)
    parser.add_argument("--p-max", type=float)
    parser.add_argument("--step", type=float, default=1.0)
    parser.add_argument("--format", choices=("csv", "markdown"), default="csv")
    parser.add_argument("--precision", type=int, default=8)
    parser.add_argument("--unit-k", type=float, default=1.0, help="natural length unit k (default 1)")
    parser.add_argument("--tol", type=float, default=1e-10, help="5D quadrature tolerance")
    parser.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = OutputSpec(args.format, args.precision, args.output)
        cfg = QuadratureConfig(abs_tol=args.tol)
    except ValueError as exc:
        parser.error(str(exc))
    if not args.unit_k > 0:
        parser.error("--unit-k must be positive")

    try:
        if args.table is not None:
            text = cmd_table(args.table, out, cfg, args.unit_k)
        elif args.symbol is not None:
            text = cmd_density(args.symbol, out, cfg, args.unit_k)
        else:
            if args.p_min is None or args.p_max is None:
                parser.error("--sweep needs --p-min and --p-max")
            text = cmd_sweep(args.q, args.r, args.p_min, args.p_max, args.step, out)
    except (UnknownTableError, InvalidSymbolError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidTilingError as exc:
        print(f"error: invalid tiling {exc.symbol}: {exc.reason}", file=sys.stderr)
        return EXIT_INVALID_TILING
    except (HypercoverError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if out.destination:
        with open(out.destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
