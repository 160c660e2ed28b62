"""Command-line front end.  All input and output is JSON; polynomials are
ascending-degree lists of decimal-string rationals, so exactness survives
serialization.

Exit codes: 0 success, 1 verification mismatch, 2 malformed input,
3 precondition violation, 4 size bound exceeded.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import corona as corona_mod
from . import coronal as coronal_mod
from . import graphs
from . import spectra
from .coronal import IndexSet
from .polyrat import IntMatrix, poly_to_json, ratfun_to_json

_ENV_LIMIT = "CORONASPECTRA_MAX_VERTICES"


def _oracle_limit(flag_value):
    if flag_value is not None:
        return flag_value
    env = os.environ.get(_ENV_LIMIT)
    return int(env) if env else spectra.DEFAULT_ORACLE_LIMIT


def _theorem_limit(flag_value):
    if flag_value is not None:
        return flag_value
    env = os.environ.get(_ENV_LIMIT)
    return int(env) if env else spectra.DEFAULT_THEOREM_LIMIT


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _announce(exc)
        raise click.exceptions.Exit(2)


def _announce(exc):
    click.echo(f"error: {exc}", err=True)
    return exc


def _emit(obj, output):
    text = json.dumps(obj, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _guarded(fn, *args, **kwargs):
    """Map library errors onto the documented exit codes."""
    try:
        return fn(*args, **kwargs)
    except spectra.SizeLimitError as exc:
        _announce(exc)
        raise click.exceptions.Exit(4)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        _announce(exc)
        raise click.exceptions.Exit(3)


def _parse_spec(data):
    try:
        return corona_mod.spec_from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        _announce(exc)
        raise click.exceptions.Exit(2)


@click.group()
def main():
    """Exact spectra of corona-style graph compositions."""


@main.command()
@click.argument("spec_path")
@click.option("--output", default=None, help="Write JSON to a file instead of stdout.")
def build(spec_path, output):
    """Construct the composition graph described by SPEC_PATH."""
    spec = _parse_spec(_read_json(spec_path))
    g = _guarded(corona_mod.build, spec)
    _emit(graphs.graph_to_json(g), output)


@main.command()
@click.argument("input_path")
@click.option("--alpha", default="all",
              help='Comma-separated indices, "all", or "" for the empty set.')
@click.option("--matrix", "matrix_kind", default="adjacency",
              type=click.Choice(["adjacency", "laplacian", "signless"]))
@click.option("--fast-path", default="auto", type=click.Choice(["auto", "generic"]))
@click.option("--output", default=None)
def coronal(input_path, alpha, matrix_kind, fast_path, output):
    """Constrained coronal of a matrix or graph matrix.

    INPUT_PATH holds either {"matrix": [[...], ...]} or a graph object /
    generator form (the --matrix flag picks which graph matrix to use).
    """
    data = _read_json(input_path)
    if isinstance(data, dict) and "matrix" in data:
        rows = data["matrix"]
        try:
            m = IntMatrix.from_rows(rows)
        except (ValueError, TypeError) as exc:
            _announce(exc)
            raise click.exceptions.Exit(2)
    else:
        g = _guarded(graphs.graph_from_json, data)
        m = _guarded(graphs.graph_matrix, g, matrix_kind)
    idx = _guarded(_parse_alpha, alpha, m.rows)
    result = _guarded(_coronal_value, m, idx, fast_path)
    _emit(ratfun_to_json(result), output)


def _parse_alpha(text: str, n: int) -> IndexSet:
    text = text.strip()
    if text == "all":
        return IndexSet.full(n)
    if not text:
        return IndexSet.empty(n)
    return IndexSet.of((int(p) for p in text.split(",")), n)


def _coronal_value(m, idx, fast_path):
    generic = coronal_mod.coronal_generic(m, idx)
    if fast_path == "generic" or idx.is_empty:
        return generic
    closed = _closed_form_coronal(m, idx)
    if closed is not None and closed != generic:
        raise ArithmeticError("closed-form coronal disagrees with the generic path")
    return generic


def _closed_form_coronal(m, idx):
    if idx.is_full:
        sums = {sum(m.at(i, j) for j in range(m.cols)) for i in range(m.rows)}
        if len(sums) == 1:
            return coronal_mod.coronal_equal_rowsum(m.rows, sums.pop())
        return None
    order = list(idx.indices) + list(idx.complement().indices)
    prof = graphs.block_profile(m.submatrix(order, order), idx.size)
    if prof is not None:
        return coronal_mod.coronal_constrained_partitioned(prof)
    return None


@main.command()
@click.argument("spec_path")
@click.option("--matrix", "matrix_kind", default="adjacency",
              type=click.Choice(["adjacency", "laplacian", "signless"]))
@click.option("--oracle", is_flag=True, help="Also run the explicit-matrix oracle.")
@click.option("--roots", is_flag=True, help="Append approximate roots.")
@click.option("--max-vertices", type=int, default=None,
              help=f"Oracle size bound (or ${_ENV_LIMIT}).")
@click.option("--output", default=None)
def charpoly(spec_path, matrix_kind, oracle, roots, max_vertices, output):
    """Characteristic polynomial report for the composition in SPEC_PATH."""
    spec = _parse_spec(_read_json(spec_path))
    theorem_limit = _theorem_limit(max_vertices)
    if spec.total_vertices > theorem_limit:
        _announce(ValueError(f"{spec.total_vertices} vertices exceed the "
                             f"bound {theorem_limit}"))
        raise click.exceptions.Exit(4)
    report = _guarded(spectra.charpoly_report, spec, matrix_kind,
                      with_oracle=oracle, with_roots=roots,
                      max_oracle_vertices=_oracle_limit(max_vertices))
    _emit(report.to_json(), output)
    if report.verdict != "match":
        raise click.exceptions.Exit(1)


@main.command()
@click.argument("spec_path", required=False)
@click.option("--suite", type=click.Choice(["small"]), default=None,
              help="Run the built-in verification suite.")
@click.option("--max-vertices", type=int, default=None)
@click.option("--output", default=None)
def verify(spec_path, suite, max_vertices, output):
    """Check theorem vs oracle, either for one spec or the built-in suite."""
    limit = _oracle_limit(max_vertices)
    if suite == "small":
        report = _guarded(spectra.verify_small_suite, max_oracle=limit)
        _emit(report.to_json(), output)
        if not report.ok:
            raise click.exceptions.Exit(1)
        return
    if not spec_path:
        _announce(ValueError("give a spec file or --suite small"))
        raise click.exceptions.Exit(2)
    spec = _parse_spec(_read_json(spec_path))
    checks = []
    for kind in spectra.MATRIX_KINDS:
        theorem = _guarded(spectra.theorem_charpoly, spec, kind)
        oracle = _guarded(spectra.oracle_charpoly, spec, kind, limit)
        checks.append({"name": f"theorem=oracle [{kind}]",
                       "ok": theorem == oracle})
    ok = all(c["ok"] for c in checks)
    _emit({"checks": checks, "ok": ok}, output)
    if not ok:
        raise click.exceptions.Exit(1)


@main.command()
@click.argument("g_path")
@click.argument("h_path")
@click.option("--root", type=int, required=True, help="Root vertex of the copy graph.")
@click.option("--output", default=None)
def cluster(g_path, h_path, root, output):
    """Both cluster characteristic polynomials (adjacency and Laplacian)."""
    g = _guarded(graphs.graph_from_json, _read_json(g_path))
    h = _guarded(graphs.graph_from_json, _read_json(h_path))
    h = _guarded(h.with_root, root)
    adj, lap = _guarded(spectra.cluster_charpolys, g, h)
    _emit({"adjacency": poly_to_json(adj), "laplacian": poly_to_json(lap)}, output)


@main.command()
@click.argument("spec_path")
@click.option("--matrix", "matrix_kind", default="A",
              type=click.Choice(["A", "L", "adjacency", "laplacian"]))
@click.option("--output", default=None)
def cospectral(spec_path, matrix_kind, output):
    """Cospectral family report: permute the copies, compare the polynomials."""
    kind = {"A": "adjacency", "L": "laplacian"}.get(matrix_kind, matrix_kind)
    spec = _parse_spec(_read_json(spec_path))
    report = _guarded(spectra.cospectral_family, spec, kind)
    _emit(report.to_json(), output)
    if not report.all_equal:
        raise click.exceptions.Exit(1)


@main.command(name="table-check")
@click.option("--base", default="cycle:4",
              help='Regular base graph, e.g. "cycle:4" or "complete:3".')
@click.option("--op", default="all", help='One catalog operation, or "all".')
@click.option("--output", default=None)
def table_check(base, op, output):
    """Verify the unary-operation catalog row sums on a regular base."""
    g = _guarded(_parse_base, base)
    kinds = None if op == "all" else (op,)
    if kinds and kinds[0] not in graphs.UNARY_KINDS:
        _announce(ValueError(f"unknown unary operation {op!r}"))
        raise click.exceptions.Exit(3)
    report = _guarded(coronal_mod.table_check, g, kinds)
    _emit(report.to_json(), output)
    if not report.all_match:
        raise click.exceptions.Exit(1)


def _parse_base(text: str):
    kind, _, size = text.partition(":")
    if not size:
        raise ValueError('base must look like "cycle:4"')
    return graphs.generate(kind, n=int(size))


if __name__ == "__main__":
    main()
