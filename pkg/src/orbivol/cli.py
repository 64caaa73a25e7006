"""Command-line interface.

Usage:
    orbivol list --max-n 6
    orbivol bound H.4 --mode paper
    orbivol table --family H --n 4..8 --format csv
    orbivol table --fixed
    orbivol solve-wang --c1 1 --c2 1.41421356
    orbivol curvature --alpha 1.41421356
    orbivol verify --only curvature

Exit status: 0 on success, 2 for bad input, 3 when a verification check fails.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Any, Sequence

import click

from .bounds import BoundError, BoundRefusedError, BoundResult, Mode, bound_rows, compute_bound
from .catalog import Catalog, SymmetricSpaceSpec, UnknownSpaceError
from .curvature import max_curvature_poly
from .formats import SchemaError, load_roots_file, load_spaces_file
from .verification import GROUPS, run_checks
from .wang import NoZeroFoundError, solve_wang_radius

__all__ = ["cli", "main", "output_record"]

RECORD_FIELDS = (
    "space_id", "N", "d", "alpha_G", "C1", "C2", "r", "k",
    "integration_limit", "bound_log10", "bound_scientific", "mode",
)
MAX_DIGITS = 15


class BadInput(click.ClickException):
    exit_code = 2


class VerificationFailed(click.ClickException):
    exit_code = 3


def _sig(x: float, digits: int) -> float:
    return float(f"{x:.{digits - 1}e}")


def output_record(row: BoundResult | BoundError, digits: int = 6) -> dict[str, Any]:
    """Flat record shared by the table, JSON and CSV emitters."""
    if isinstance(row, BoundError):
        return {"space_id": row.space_id, "error": row.message}
    bound = row.bound
    return {
        "space_id": row.space_id,
        "N": row.N,
        "d": row.d,
        "alpha_G": row.alpha_G,
        "C1": _sig(row.profile.c1, digits),
        "C2": _sig(row.profile.c2, digits),
        "r": _sig(row.r_used, digits),
        "k": _sig(row.k_used, digits),
        "integration_limit": _sig(row.limit_used, digits),
        # decimals rather than significant digits so the scientific string round-trips
        "bound_log10": round(bound.log10, digits),
        "bound_scientific": bound.scientific(digits),
        "mode": row.mode.value,
    }


def _text_table(records: Sequence[dict[str, Any]], columns: Sequence[str]) -> str:
    cells = [[str(c) for c in columns]]
    errors = []
    for rec in records:
        if "error" in rec:
            errors.append(f"{rec['space_id']}: error: {rec['error']}")
            continue
        cells.append([str(rec[c]) for c in columns])
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines + errors)


def _emit(records: list[dict[str, Any]], columns: Sequence[str], fmt: str,
          banner: str | None) -> None:
    if fmt == "json":
        click.echo(json.dumps(records, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        fieldnames = list(columns)
        if any("error" in r for r in records):
            fieldnames.append("error")
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\r\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(rec)
        click.echo(buf.getvalue(), nl=False)
    else:
        if banner:
            click.echo(banner)
        click.echo(_text_table(records, columns))


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise BadInput(f"--n expects a..b, got {text!r}") from None
    if a > b:
        raise BadInput(f"empty range {text!r}")
    return a, b


class _State:
    def __init__(self, catalog: Catalog, roots: dict, quiet: bool):
        self.catalog = catalog
        self.roots = roots
        self.quiet = quiet

    def banner(self, text: str, quiet_cmd: bool) -> str | None:
        return None if self.quiet or quiet_cmd else text


_format_opt = click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]),
                           default="table", show_default=True)
_mode_opt = click.option("--mode", type=click.Choice(["paper", "precise"]), default="paper",
                         show_default=True)
_quiet_opt = click.option("--quiet", "quiet_cmd", is_flag=True, help="Suppress the banner line.")
_digits_opt = click.option("--digits", type=click.IntRange(2, MAX_DIGITS), default=6,
                           show_default=True, help="Significant digits in output.")


@click.group()
@click.option("--spaces-file", type=click.Path(exists=True, dir_okay=False),
              help="INI file registering extra symmetric spaces.")
@click.option("--roots-file", type=click.Path(exists=True, dir_okay=False),
              help="INI file with restricted-root data for verify.")
@click.option("--quiet", is_flag=True, help="Suppress the banner line.")
@click.pass_context
def cli(ctx: click.Context, spaces_file: str | None, roots_file: str | None, quiet: bool) -> None:
    """Lower bounds for volumes of locally symmetric orbifolds."""
    try:
        extra = load_spaces_file(spaces_file) if spaces_file else []
        roots = load_roots_file(roots_file) if roots_file else {}
        catalog = Catalog(extra)
    except (SchemaError, ValueError) as exc:
        raise BadInput(str(exc)) from None
    ctx.obj = _State(catalog, roots, quiet)


@cli.command("list")
@click.option("--max-n", type=click.IntRange(min=2), default=4, show_default=True)
@_format_opt
@_quiet_opt
@click.pass_obj
def cmd_list(state: _State, max_n: int, fmt: str, quiet_cmd: bool) -> None:
    """List the spaces with a computable bound."""
    records = [_space_record(s) for s in state.catalog.list_spaces(max_n)]
    columns = ("id", "N", "d", "alpha_G", "constants_class", "name")
    _emit(records, columns, fmt, state.banner(f"# spaces up to n = {max_n}", quiet_cmd))


def _space_record(s: SymmetricSpaceSpec) -> dict[str, Any]:
    return {
        "id": s.id, "N": s.N, "d": s.d, "alpha_G": s.alpha_G,
        "constants_class": s.constants_class.value, "name": s.name,
    }


@cli.command("bound")
@click.argument("space_id")
@_mode_opt
@_format_opt
@_digits_opt
@_quiet_opt
@click.pass_obj
def cmd_bound(state: _State, space_id: str, mode: str, fmt: str, digits: int,
              quiet_cmd: bool) -> None:
    """Volume lower bound for one space."""
    try:
        row = compute_bound(state.catalog.get(space_id), Mode(mode), state.catalog)
    except UnknownSpaceError as exc:
        raise BadInput(exc.args[0]) from None
    except BoundRefusedError as exc:
        raise BadInput(str(exc)) from None
    _emit([output_record(row, digits)], RECORD_FIELDS, fmt,
          state.banner(f"# volume lower bound, mode = {mode}", quiet_cmd))


@cli.command("table")
@click.option("--family", type=click.Choice(["H", "CH"]), help="Parameterized family.")
@click.option("--n", "n_range", default=None, help="Range a..b of the family parameter.")
@click.option("--fixed", is_flag=True, help="The fixed spaces OH.2, G2_2, F4_4.")
@click.option("--user", is_flag=True, help="Spaces registered with --spaces-file.")
@_mode_opt
@_format_opt
@_digits_opt
@_quiet_opt
@click.pass_obj
def cmd_table(state: _State, family: str | None, n_range: str | None, fixed: bool,
              user: bool, mode: str, fmt: str, digits: int, quiet_cmd: bool) -> None:
    """Bounds for a family range or the fixed spaces."""
    ids: list[str] = []
    if family:
        if n_range is None:
            raise BadInput("--family needs --n a..b")
        lo, hi = _parse_range(n_range)
        ids += [f"{family}.{n}" for n in range(lo, hi + 1)]
    if fixed:
        ids += ["F4_4", "G2_2", "OH.2"]
    if user:
        ids += [s.id for s in state.catalog.user_spaces]
    if not ids:
        raise BadInput("choose --family with --n, --fixed or --user")
    rows = bound_rows(ids, Mode(mode), state.catalog)
    _emit([output_record(r, digits) for r in rows], RECORD_FIELDS, fmt,
          state.banner(f"# volume lower bounds, mode = {mode}", quiet_cmd))


@cli.command("solve-wang")
@click.option("--c1", type=float, required=True)
@click.option("--c2", type=float, required=True)
@_format_opt
@click.pass_obj
def cmd_solve_wang(state: _State, c1: float, c2: float, fmt: str) -> None:
    """Least positive zero R_G of H. C. Wang's Zassenhaus function and the ball radius R_G/2."""
    try:
        w = solve_wang_radius(c1, c2)
    except (NoZeroFoundError, ValueError) as exc:
        raise BadInput(str(exc)) from None
    rec = {"c1": c1, "c2": c2, "r_g": w.r_g, "r_half": w.r_half, "residual": w.residual}
    _emit([rec], list(rec), fmt, None)


@cli.command("curvature")
@click.option("--alpha", type=float, required=True, help="Ratio C2/C1.")
@click.option("--c1", type=float, default=1.0, show_default=True)
@_format_opt
@click.pass_obj
def cmd_curvature(state: _State, alpha: float, c1: float, fmt: str) -> None:
    """Maximum of the curvature polynomial and the bound k."""
    if alpha <= 0 or c1 <= 0:
        raise BadInput("alpha and c1 must be positive")
    base = max_curvature_poly(alpha)
    rec = {
        "alpha": alpha, "c1": c1, "poly_max": base.poly_max,
        "argmax_a": base.argmax[0], "argmax_b": base.argmax[1],
        "k": base.poly_max / 4.0 * c1 * c1,
    }
    _emit([rec], list(rec), fmt, None)


@cli.command("verify")
@click.option("--only", multiple=True, type=click.Choice(sorted(GROUPS)),
              help="Restrict to a check group (repeatable).")
@click.pass_obj
def cmd_verify(state: _State, only: tuple[str, ...]) -> None:
    """Run the regression and restricted-root checks."""
    results = run_checks(only or None, state.roots, state.catalog)
    failed = [r for r in results if not r.passed]
    for r in results:
        click.echo(f"{'PASS' if r.passed else 'FAIL'}  {r.group:<10} {r.name}: {r.detail}")
    click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        raise VerificationFailed("failed: " + ", ".join(r.name for r in failed))


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="orbivol",
                 standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
