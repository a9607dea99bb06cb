"""Command-line interface.

Subcommands: count, eval, ch, wdvv, class, verify.  Output formats: text
(default), json (integers serialized as decimal strings so arbitrary
precision survives any consumer) and csv.  Exit codes: 0 success,
1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import csv as _csv
import io
import json
import sys

import click

from . import caporaso_harris as chmod
from . import cusp as cuspmod
from . import exprs, nodal, tangency, wdvv
from .verify import verify as run_verify
from .ring import RingElem, SpaceSig


def _parse_ints(text: str) -> tuple:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"expected a comma-separated list of integers, got {text!r}")


def _emit(ctx, payload: dict, text_lines, csv_row=None):
    fmt = ctx.obj["format"]
    quiet = ctx.obj["quiet"]
    if fmt == "json":
        click.echo(json.dumps(payload, indent=None if quiet else 2))
    elif fmt == "csv":
        row = csv_row if csv_row is not None else payload
        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(row.keys())
        writer.writerow(row.values())
        click.echo(buf.getvalue().rstrip("\n"))
    else:
        for line in text_lines:
            click.echo(line)


def _result_payload(query: str, d: int, sig: SpaceSig, result) -> dict:
    return {
        "query": query,
        "d": str(d),
        "space": {"m": sig.m, "n": sig.n, "dim": sig.dim},
        "ordered_value": str(result.ordered_value),
        "symmetry_factor": str(result.symmetry_factor),
        "unordered_value": None if result.unordered_value is None
        else str(result.unordered_value),
        "warnings": list(result.warnings),
    }


def _result_lines(query, d, result, quiet, unordered=False):
    main = result.unordered_value if unordered else result.ordered_value
    if quiet:
        return [str(main)]
    lines = [f"{query} @ d={d}",
             f"  ordered value:   {result.ordered_value}",
             f"  symmetry factor: {result.symmetry_factor}",
             f"  unordered value: {result.unordered_value}"]
    lines += [f"  warning: {w}" for w in result.warnings]
    return lines


@click.group()
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
              default="text", show_default=True, help="Output format.")
@click.option("--quiet", is_flag=True, help="Print only the essential value(s).")
@click.pass_context
def main(ctx, fmt, quiet):
    """Exact characteristic numbers of plane curves tangent to a line."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    ctx.obj["quiet"] = quiet


@main.command()
@click.option("--d", required=True, type=int, help="Curve degree.")
@click.option("--tangency", "profile", default="", help="Comma-separated tangency orders.")
@click.option("--singularity", type=click.Choice(["none", "node", "cusp"]), default="none",
              show_default=True)
@click.option("--r", default=0, type=int, help="Exponent of y1 (line through r points).")
@click.option("--s", default=0, type=int, help="Exponent of yd (curve through s points).")
@click.option("--eps", default="", help="Comma-separated a-exponents, one per tangency point.")
@click.option("--unordered", is_flag=True, help="Report the unordered count.")
@click.pass_context
def count(ctx, d, profile, singularity, r, s, eps, unordered):
    """Count curves with a tangency profile and optional singularity."""
    ks = _parse_ints(profile)
    eps_t = _parse_ints(eps)
    if eps_t and len(eps_t) != len(ks):
        raise click.UsageError("--eps must list one exponent per tangency order")
    eps_t = eps_t or (0,) * len(ks)
    m = 0 if singularity == "none" else 1
    sig = SpaceSig(d, m, len(ks))
    try:
        c = RingElem.monomial(sig, y1=r, yd=s, a=eps_t)
        if singularity == "none":
            result = tangency.eval_T(d, ks, c)
        elif singularity == "node":
            result = nodal.eval_A1F_T(d, ks, c)
        else:
            if any(k != 1 for k in ks):
                raise ValueError("cusp chains support only first-order tangencies")
            result = cuspmod.eval_A2F_T1s(d, len(ks), c)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    query = f"count tangency={ks} singularity={singularity} r={r} s={s} eps={eps_t}"
    _emit(ctx, _result_payload(query, d, sig, result),
          _result_lines(query, d, result, ctx.obj["quiet"], unordered))


@main.command("eval")
@click.argument("expression")
@click.option("--d", required=True, type=int, help="Curve degree.")
@click.pass_context
def eval_cmd(ctx, expression, d):
    """Evaluate a class expression, e.g. "[A1F T1] * y1 * yd^8"."""
    try:
        expr = exprs.parse(expression)
        result = exprs.evaluate(expr, d)
    except (exprs.ParseError, ValueError) as exc:
        raise click.UsageError(str(exc))
    sig_m = 1 if any(a[0] != "T" for a in expr.atoms) else 0
    if ("A1A1",) in expr.atoms:
        sig_m = 2
    sig = SpaceSig(d, sig_m, sum(1 for a in expr.atoms if a[0] == "T"))
    query = exprs.to_string(expr)
    _emit(ctx, _result_payload(query, d, sig, result),
          _result_lines(query, d, result, ctx.obj["quiet"]))


@main.command()
@click.option("--d", required=True, type=int)
@click.option("--delta", required=True, type=int, help="Number of nodes.")
@click.option("--alpha", default="", help="Fixed contact multiplicities (comma-separated).")
@click.option("--beta", default="", help="Moving contact multiplicities (comma-separated).")
@click.pass_context
def ch(ctx, d, delta, alpha, beta):
    """Severi degree N(d, delta, alpha, beta) from the degeneration recursion."""
    key = chmod.CHKey(d, delta, _parse_ints(alpha), _parse_ints(beta))
    value = chmod.ch_invariant(key)
    query = f"N({d}, {delta}, {key.alpha}, {key.beta})"
    payload = {"query": query, "value": str(value)}
    lines = [str(value)] if ctx.obj["quiet"] else [f"{query} = {value}"]
    _emit(ctx, payload, lines)


@main.command()
@click.option("--max-d", required=True, type=int, help="Largest degree to tabulate.")
@click.pass_context
def wdvv_cmd(ctx, max_d):
    """Rational curve counts n_d and tangent counts N_d^T1 for d = 1..max-d."""
    table = wdvv.gw_table(max_d)
    payload = {"table": {str(d): {"n_d": str(n), "n_d_T1": str(t)}
                         for d, (n, t) in table.items()}}
    if ctx.obj["format"] == "csv":
        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(["d", "n_d", "n_d_T1"])
        for d, (n, t) in table.items():
            writer.writerow([d, n, t])
        click.echo(buf.getvalue().rstrip("\n"))
        return
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    if ctx.obj["quiet"]:
        click.echo(str(table[max_d][1]))
        return
    click.echo(f"{'d':>3} {'n_d':>20} {'N_d^T1':>20}")
    for d, (n, t) in table.items():
        click.echo(f"{d:>3} {n:>20} {t:>20}")


main.add_command(wdvv_cmd, name="wdvv")


@main.command("class")
@click.argument("which", type=click.Choice(["A1F", "A2F", "A1A1", "A3F"]))
@click.option("--d", required=True, type=int)
@click.pass_context
def class_cmd(ctx, which, d):
    """Emit the coefficient table of a singularity class."""
    from . import multisingular

    try:
        if which == "A1F":
            c12, c21, c30 = nodal.derive_A1F_coeffs(d)
            rows = {"yd b1^2": c12, "yd^2 b1": c21, "yd^3": c30}
        elif which == "A2F":
            rows = {"yd^2 b1^2": 12 * d * d - 36 * d + 24,
                    "yd^3 b1": 8 * d - 12, "yd^4": 2}
        elif which == "A1A1":
            rows = {f"yd^{i} b1^{j} b2^{k}": v
                    for (i, j, k), v in sorted(multisingular.coeff_table_A1FA1F(d).items())}
        else:
            rows = {f"yd^{i} b1^{j}": v
                    for (i, j), v in sorted(multisingular.coeff_table_A3F(d).items())}
    except (ValueError, RuntimeError) as exc:
        raise click.UsageError(str(exc))
    payload = {"class": which, "d": str(d),
               "coefficients": {k: str(v) for k, v in rows.items()}}
    if ctx.obj["format"] == "csv":
        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(["monomial", "coefficient"])
        for k, v in rows.items():
            writer.writerow([k, v])
        click.echo(buf.getvalue().rstrip("\n"))
        return
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    for k, v in rows.items():
        click.echo(f"{k:>14}: {v}")


@main.command("verify")
@click.option("--tables", default="", help="Comma-separated table names (default: all).")
@click.pass_context
def verify_cmd(ctx, tables):
    """Recompute all golden reference values and report pass/fail."""
    names = [t for t in tables.split(",") if t] or None
    try:
        report = run_verify(names)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if ctx.obj["format"] == "json":
        payload = {"passed": report.passed,
                   "rows": [{"table": r.table, "query": r.query,
                             "expected": str(r.expected), "computed": str(r.computed),
                             "passed": r.passed} for r in report.rows]}
        click.echo(json.dumps(payload, indent=2))
    elif ctx.obj["format"] == "csv":
        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(["table", "query", "expected", "computed", "passed"])
        for r in report.rows:
            writer.writerow([r.table, r.query, r.expected, r.computed, r.passed])
        click.echo(buf.getvalue().rstrip("\n"))
    else:
        for r in report.rows:
            if not ctx.obj["quiet"] or not r.passed:
                status = "ok  " if r.passed else "FAIL"
                click.echo(f"[{status}] {r.table:>10} | {r.query} "
                           f"(expected {r.expected}, computed {r.computed})")
        click.echo(f"{'PASS' if report.passed else 'FAIL'}: "
                   f"{sum(r.passed for r in report.rows)}/{len(report.rows)} rows")
    if not report.passed:
        sys.exit(1)


if __name__ == "__main__":
    main()
