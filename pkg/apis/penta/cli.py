#!/usr/bin/env python3
"""
PENTA: penta-valued batch tool
==============================
Batch front-end for the bipolar -> five-valued decomposition, its inverse,
the crisp five-valued logic, FP5 set operations and Frank t-norm grids.

Commands:
  decompose   mu, nu          -> tau, phi, kappa, pi, iota
  compose     tau..pi[, iota] -> mu, nu
  logic       evaluate an expression or print its truth table
  setop       union / intersect / complement / translate / to-bipolar
  validate    check mu, nu rows against the fuzzy / ifs / pfs constraint
  tnorm-grid  tabulate tnorm, tconorm and conjugate over [0,1]^2

Exit codes: 0 success, 1 usage / I-O / syntax, 2 data validation.

Usage (CLI):
    python -m apis.penta.cli decompose --input pairs.csv --s min
    python penta_cli.py logic --expr "!(a & b) | c" --assign "a=T,b=C,c=F"
"""

import argparse
import functools
import logging
import math
import sys
from typing import Callable, List, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import ValidationError

from apis.penta import config
from apis.penta.algebra import FrankKind, FrankParameter, conjugate_tnorm, tconorm, tnorm
from apis.penta.decomposition import compose, decompose, decompose_lg
from apis.penta.errors import (
    ConsistencyError,
    DataError,
    ExpressionSyntaxError,
    InvalidParameterError,
    IotaMismatchError,
    RowError,
    UsageError,
)
from apis.penta.five_logic import eval_expr, parse_assignment, parse_expr, truth_table
from apis.penta.fp5_sets import (
    NormCouple,
    complement,
    derived_indices,
    intersection,
    label,
    to_bipolar,
    translate,
    union,
    validate,
)
from apis.penta.models import BipolarInputSet, BipolarRecord, FP5Element, FP5Set, PentaCoords, SetKind
from apis.penta.tabular import (
    FORMATS,
    element_ids,
    parse_unit,
    read_table,
    require_columns,
    round_partition,
    write_table,
)

logger = logging.getLogger(__name__)

PENTA_COLUMNS = ["tau", "phi", "kappa", "pi", "iota"]
SET_OPS       = ("union", "intersect", "complement", "translate", "to-bipolar")
INPUT_KINDS   = ("fuzzy", "ifs", "pfs", "bipolar", "fp5")


# ─────────────────────────────────────────────────────────────────────────────
# EXIT STATUS MAPPING
# ─────────────────────────────────────────────────────────────────────────────

def _exit_status(fn: Callable[..., int]) -> Callable[..., int]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> int:
        try:
            return fn(*args, **kwargs)
        except ExpressionSyntaxError as exc:
            logger.error("%s\n  %s\n  %s^", exc, exc.text, " " * exc.offset)
            return 1
        except (UsageError, OSError) as exc:
            logger.error("%s", exc)
            return 1
        except (DataError, ConsistencyError) as exc:
            logger.error("%s", exc)
            return 2
        except ValidationError as exc:
            logger.error("invalid data: %s", exc.errors()[0].get("msg", exc))
            return 2
    return wrapper


def _resolve(fmt: Optional[str], precision: Optional[int]):
    fmt = (fmt or config.DEFAULT_FORMAT).lower()
    if fmt not in FORMATS:
        raise InvalidParameterError(f"unknown format {fmt!r}: expected csv or json")
    precision = config.DEFAULT_PRECISION if precision is None else precision
    if not 0 <= precision <= 15:
        raise InvalidParameterError(f"precision must be between 0 and 15, got {precision}")
    return fmt, precision


def _penta_frame(ids: List[str], coords: List[Sequence[float]], precision: int) -> pd.DataFrame:
    rounded = [round_partition(c, precision) for c in coords]
    df = pd.DataFrame(rounded, columns=PENTA_COLUMNS, dtype=float)
    df.insert(0, "element", ids)
    return df


def _read_iota_checked(df: pd.DataFrame, row: int) -> float:
    """Recompute iota from the four stored coordinates; compare a supplied one."""
    tau, phi, kappa, pi = (parse_unit(df, row, c) for c in ("tau", "phi", "kappa", "pi"))
    total = tau + phi + kappa + pi
    if total > 1.0 + config.TOLERANCE:
        raise RowError(row + 1, f"partition violation: tau+phi+kappa+pi = {total:.12g}")
    iota = max(0.0, 1.0 - total)
    if "iota" in df.columns and str(df.iloc[row]["iota"]).strip():
        given = parse_unit(df, row, "iota")
        if abs(given - iota) > config.IOTA_FILE_TOLERANCE:
            raise RowError(row + 1, str(IotaMismatchError(given, iota)), "iota")
    return iota


# ─────────────────────────────────────────────────────────────────────────────
# COMMANDS
# ─────────────────────────────────────────────────────────────────────────────

@_exit_status
def run_decompose(
    input_path: str,
    output_path: Optional[str] = None,
    s_spec: Optional[str] = None,
    fmt: Optional[str] = None,
    precision: Optional[int] = None,
) -> int:
    fmt, precision = _resolve(fmt, precision)
    param = FrankParameter.parse(s_spec or config.DEFAULT_S_SPEC)

    df = read_table(input_path)
    require_columns(df, ["mu", "nu"])
    ids = element_ids(df)

    coords = []
    for i in range(len(df)):
        pair = (parse_unit(df, i, "mu"), parse_unit(df, i, "nu"))
        c = decompose_lg(pair) if param.kind is FrankKind.MIN else decompose(pair, param)
        coords.append(c.as_tuple())

    logger.info("decomposed %d row(s) with s=%s", len(coords), param)
    write_table(_penta_frame(ids, coords, precision), output_path, fmt, precision)
    return 0


@_exit_status
def run_compose(
    input_path: str,
    output_path: Optional[str] = None,
    fmt: Optional[str] = None,
    precision: Optional[int] = None,
) -> int:
    fmt, precision = _resolve(fmt, precision)

    df = read_table(input_path)
    require_columns(df, ["tau", "phi", "kappa", "pi"])
    ids = element_ids(df)

    rows = []
    for i in range(len(df)):
        iota = _read_iota_checked(df, i)
        coords = PentaCoords(
            tau=parse_unit(df, i, "tau"),
            phi=parse_unit(df, i, "phi"),
            kappa=parse_unit(df, i, "kappa"),
            pi=parse_unit(df, i, "pi"),
            iota=iota,
        )
        pair = compose(coords)
        rows.append((ids[i], pair.x, pair.y))

    out = pd.DataFrame(rows, columns=["element", "mu", "nu"])
    write_table(out, output_path, fmt, precision)
    return 0


@_exit_status
def run_logic(
    expr_text: str,
    assign_text: Optional[str] = None,
    table: bool = False,
    max_vars: Optional[int] = None,
    output_path: Optional[str] = None,
    fmt: Optional[str] = None,
) -> int:
    fmt, _ = _resolve(fmt, None)
    expr = parse_expr(expr_text)

    if table:
        rows = truth_table(expr, max_vars=max_vars)
        names = sorted(rows[0][0]) if rows else []
        records = [
            {**{n: env[n].symbol for n in names}, "value": value.symbol}
            for env, value in rows
        ]
        out = pd.DataFrame(records, columns=names + ["value"])
        write_table(out, output_path, fmt, 0)
        return 0

    env = parse_assignment(assign_text or "")
    value = eval_expr(expr, env).symbol
    if output_path in (None, "-"):
        sys.stdout.write(value + "\n")
    else:
        with open(output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(value + "\n")
    return 0


def _load_bipolar(df: pd.DataFrame, kind: SetKind) -> BipolarInputSet:
    required = ["mu"] if kind is SetKind.FUZZY else ["mu", "nu"]
    require_columns(df, required)
    ids = element_ids(df)
    records = []
    for i in range(len(df)):
        mu = parse_unit(df, i, "mu")
        if "nu" in df.columns:
            nu = parse_unit(df, i, "nu")
        else:
            nu = 1.0 - mu
        records.append(BipolarRecord(element=ids[i], mu=mu, nu=nu))
    return BipolarInputSet(records=tuple(records))


def _load_fp5(df: pd.DataFrame) -> FP5Set:
    require_columns(df, ["tau", "phi", "kappa", "pi"])
    ids = element_ids(df)
    elements = []
    for i in range(len(df)):
        _read_iota_checked(df, i)
        elements.append(FP5Element(
            element=ids[i],
            tau=parse_unit(df, i, "tau"),
            phi=parse_unit(df, i, "phi"),
            kappa=parse_unit(df, i, "kappa"),
            pi=parse_unit(df, i, "pi"),
        ))
    return FP5Set(elements=tuple(elements))


def load_set(path: str, kind: str, s: Optional[FrankParameter] = None) -> FP5Set:
    df = read_table(path)
    if kind == "fp5":
        return _load_fp5(df)
    set_kind = SetKind(kind)
    data = _load_bipolar(df, set_kind)
    bipolar_s = None if s is None or s.kind is FrankKind.MIN else s
    return translate(data, set_kind, bipolar_s)


@_exit_status
def run_setop(
    op: str,
    inputs: Sequence[str],
    output_path: Optional[str] = None,
    couple_spec: str = "minmax",
    kind: str = "fp5",
    fmt: Optional[str] = None,
    precision: Optional[int] = None,
    s_spec: Optional[str] = None,
    with_label: bool = False,
) -> int:
    fmt, precision = _resolve(fmt, precision)
    if op not in SET_OPS:
        raise InvalidParameterError(f"unknown op {op!r}: expected {', '.join(SET_OPS)}")
    if kind not in INPUT_KINDS:
        raise InvalidParameterError(f"unknown kind {kind!r}: expected {', '.join(INPUT_KINDS)}")

    arity = 2 if op in ("union", "intersect") else 1
    if len(inputs) != arity:
        raise InvalidParameterError(f"{op} takes {arity} input file(s), got {len(inputs)}")

    couple = NormCouple.parse(couple_spec)
    s = FrankParameter.parse(s_spec) if s_spec else None
    sets = [load_set(path, kind, s) for path in inputs]

    if op == "union":
        result = union(sets[0], sets[1], couple)
    elif op == "intersect":
        result = intersection(sets[0], sets[1], couple)
    elif op == "complement":
        result = complement(sets[0])
    else:
        result = sets[0]

    if op == "to-bipolar":
        bip = to_bipolar(result)
        out = pd.DataFrame(
            [(r.element, r.mu, r.nu) for r in bip.records], columns=["element", "mu", "nu"]
        )
        write_table(out, output_path, fmt, precision)
        return 0

    out = _penta_frame(
        list(result.universe),
        [e.coords().as_tuple() for e in result.elements],
        precision,
    )
    if with_label:
        out["value"] = [label(e) for e in result.elements]
    logger.info("%s over %d element(s) (couple %s)", op, len(result), couple.name)
    write_table(out, output_path, fmt, precision)
    return 0


@_exit_status
def run_validate(
    input_path: str,
    kind: str,
    output_path: Optional[str] = None,
    fmt: Optional[str] = None,
    precision: Optional[int] = None,
) -> int:
    fmt, precision = _resolve(fmt, precision)
    if kind not in {k.value for k in SetKind}:
        raise InvalidParameterError(f"unknown kind {kind!r}")
    set_kind = SetKind(kind)
    data = _load_bipolar(read_table(input_path), set_kind)

    violations = {v.element: v for v in validate(data, set_kind)}
    indices = derived_indices(data, set_kind)
    out = pd.DataFrame(
        [
            (r.element, r.mu, r.nu, indices[r.element], r.element not in violations)
            for r in data.records
        ],
        columns=["element", "mu", "nu", "index", "ok"],
    )
    write_table(out, output_path, fmt, precision)

    for v in violations.values():
        logger.error("element %r: %s", v.element, v.detail)
    return 2 if violations else 0


@_exit_status
def run_tnorm_grid(
    s_spec: Optional[str],
    step: float,
    output_path: Optional[str] = None,
    fmt: Optional[str] = None,
    precision: Optional[int] = None,
) -> int:
    fmt, precision = _resolve(fmt, precision)
    param = FrankParameter.parse(s_spec or config.DEFAULT_S_SPEC)
    if not (math.isfinite(step) and 0.0 < step <= 0.5):
        raise InvalidParameterError(f"step must satisfy 0 < step <= 0.5, got {step!r}")

    n = int(math.floor(1.0 / step + 1e-9))
    points = np.round(np.arange(n + 1) * step, 12)
    if points[-1] < 1.0:
        points = np.append(points, 1.0)

    rows = [
        (float(x), float(y), tnorm(param, x, y), tconorm(param, x, y), conjugate_tnorm(param, x, y))
        for x in points.tolist()
        for y in points.tolist()
    ]
    out = pd.DataFrame(rows, columns=["x", "y", "tnorm", "tconorm", "conjugate"])
    logger.info("tabulated %d point(s) for s=%s", len(out), param)
    write_table(out, output_path, fmt, precision)
    return 0


# ─────────────────────────────────────────────────────────────────────────────
# CLI ENTRY POINT
# ─────────────────────────────────────────────────────────────────────────────

class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this tool reserves 2 for data."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--output",    default=None,  help="Output file (default: stdout)")
    common.add_argument("--format",    default=None,  choices=FORMATS, help="Output format (default: csv)")
    common.add_argument("--precision", default=None,  type=int, help="Decimal places in output (default: 6)")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = _ArgumentParser(
        description="Penta-valued decomposition, five-valued logic and FP5 set operations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m apis.penta.cli decompose  --input pairs.csv --s min --output coords.csv
  python -m apis.penta.cli compose    --input coords.csv
  python -m apis.penta.cli logic      --expr "a | b" --table
  python -m apis.penta.cli setop      --op union --couple prod --input a.csv --input b.csv
  python -m apis.penta.cli tnorm-grid --s 2 --step 0.1
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="mu, nu -> five descriptors")
    p.add_argument("--input", required=True, help="CSV or JSON with mu, nu columns")
    p.add_argument("--s",     default=None,  help="Frank parameter: min | prod | luk | <number>")

    p = sub.add_parser("compose", parents=[common], help="five descriptors -> mu, nu")
    p.add_argument("--input", required=True, help="CSV or JSON with tau, phi, kappa, pi[, iota]")

    p = sub.add_parser("logic", parents=[common], help="evaluate a five-valued expression")
    p.add_argument("--expr",     required=True, help="Expression, e.g. '!(a & b) | c'")
    p.add_argument("--assign",   default=None,  help="Bindings, e.g. 'a=T,b=C'")
    p.add_argument("--table",    action="store_true", help="Print the full truth table as CSV")
    p.add_argument("--max-vars", default=None, type=int, help="Truth-table variable cap (default: 6)")

    p = sub.add_parser("setop", parents=[common], help="FP5 set operations and translators")
    p.add_argument("--op",     required=True, choices=SET_OPS)
    p.add_argument("--input",  required=True, action="append", help="Input file (repeat for binary ops)")
    p.add_argument("--couple", default="minmax", help="minmax | prod | luk | frank:<s>")
    p.add_argument("--kind",   default="fp5", choices=INPUT_KINDS, help="How to read the inputs")
    p.add_argument("--s",      default=None, help="Frank parameter for --kind bipolar (default: closed form)")
    p.add_argument("--label",  action="store_true", help="Add a value column for crisp elements")

    p = sub.add_parser("validate", parents=[common], help="check mu, nu against a set kind")
    p.add_argument("--input", required=True)
    p.add_argument("--kind",  required=True, choices=[k.value for k in SetKind])

    p = sub.add_parser("tnorm-grid", parents=[common], help="tabulate a Frank t-norm")
    p.add_argument("--s",    default=None, help="Frank parameter: min | prod | luk | <number>")
    p.add_argument("--step", default=0.1, type=float, help="Grid step, 0 < step <= 0.5")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    level = logging.DEBUG if args.verbose else getattr(logging, config.LOG_LEVEL, logging.INFO)
    logging.basicConfig(level=level, format="%(levelname)s  %(message)s")

    if args.command == "decompose":
        return run_decompose(args.input, args.output, args.s, args.format, args.precision)
    if args.command == "compose":
        return run_compose(args.input, args.output, args.format, args.precision)
    if args.command == "logic":
        return run_logic(args.expr, args.assign, args.table, args.max_vars, args.output, args.format)
    if args.command == "setop":
        return run_setop(
            args.op, args.input, args.output, args.couple, args.kind,
            args.format, args.precision, args.s, args.label,
        )
    if args.command == "validate":
        return run_validate(args.input, args.kind, args.output, args.format, args.precision)
    return run_tnorm_grid(args.s, args.step, args.output, args.format, args.precision)


if __name__ == "__main__":
    sys.exit(main())
