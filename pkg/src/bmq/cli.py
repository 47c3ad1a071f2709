"""Command line interface: ``bmq <command> ...``.

Exit codes: 0 success, 1 invalid input or data, 2 resource budget exceeded.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from .beads import _is_prime, build_bead_system, solve_system
from .biquandle import check_biquandle, enumerate_endomorphisms
from .bqmodule import RingZm, check_module, search_modules
from .cache import ResultCache, default_cache_dir
from .colorings import enumerate_colorings
from .compute import compute
from .config import (_read_json, build_vector, load_biquandle, load_endomorphisms, load_module,
                     load_vector)
from .diagram import read_diagram
from .errors import BMQError, BudgetExceeded
from .moves import random_edits
from .paths import DEFAULT_BUDGET, PathSemantics

FORMATS = ("json", "latex", "text")


class Options:
    def __init__(self, fmt, jobs, cache_dir, budget):
        self.format = fmt
        self.jobs = jobs
        self.cache_dir = cache_dir
        self.budget = budget


def _emit(obj):
    click.echo(json.dumps(obj, indent=2, sort_keys=False))


def _warn(message):
    click.echo(f"warning: {message}", err=True)


def _vector_options(func):
    func = click.option("--endos", "endos_path", type=click.Path(dir_okay=False),
                        help="JSON list of endomorphism images (default: all of End(X)).")(func)
    func = click.option("--module", "module_path", type=click.Path(dir_okay=False),
                        help="Module JSON file.")(func)
    func = click.option("--biquandle", "biquandle_path", type=click.Path(dir_okay=False),
                        help="Biquandle JSON file.")(func)
    func = click.option("--vector", "-v", "vector",
                        help="Shipped data vector name or vector JSON file.")(func)
    return func


def _resolve_vector(vector, biquandle_path, module_path, endos_path, need_module=True):
    if vector:
        if biquandle_path or module_path or endos_path:
            raise click.UsageError("--vector cannot be combined with --biquandle/--module/--endos")
        return load_vector(vector)
    if not biquandle_path or (need_module and not module_path):
        raise click.UsageError("give --vector, or --biquandle with --module")
    X = load_biquandle(biquandle_path)
    if not module_path:
        return X
    M = load_module(module_path, X)
    S = load_endomorphisms(endos_path, X) if endos_path else None
    return build_vector(X, M, S, name=Path(module_path).stem)


def _check_prime(vec):
    if not _is_prime(vec.M.m):
        _warn(f"modulus {vec.M.m} is not prime; rank counts Z_{vec.M.m} summands only")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes for tabulate.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help="Result cache directory (default: $BMQ_CACHE_DIR or ~/.cache/bmq).")
@click.option("--budget", type=click.IntRange(min=1), default=DEFAULT_BUDGET, show_default=True,
              help="Maximum number of partial paths explored per quiver.")
@click.pass_context
def cli(ctx, fmt, jobs, cache_dir, budget):
    """Biquandle module quiver representations and natural path polynomials."""
    ctx.obj = Options(fmt, jobs, cache_dir, budget)


@cli.command("check-biquandle")
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_obj
def check_biquandle_cmd(opts, path):
    """Check the biquandle axioms for a biquandle JSON file."""
    data = _read_json(path)
    report = check_biquandle(data["under"], data["over"])
    _report(opts, report)


@cli.command("check-module")
@click.argument("biquandle", type=click.Path(dir_okay=False))
@click.argument("module", type=click.Path(dir_okay=False))
@click.pass_obj
def check_module_cmd(opts, biquandle, module):
    """Check the module axioms for a module JSON file over a biquandle."""
    X = load_biquandle(biquandle)
    data = _read_json(module)
    report = check_module(X, RingZm(data["m"]), data["t"], data["s"], data["r"])
    _report(opts, report)


def _report(opts, report):
    if opts.format == "json":
        _emit({"valid": not report, "violations": [{"axiom": v.axiom, "witness": list(v.witness)} for v in report]})
    elif report:
        for v in report:
            click.echo(str(v))
    else:
        click.echo("ok")
    if report:
        raise SystemExit(1)


@cli.command()
@click.argument("biquandle", type=click.Path(dir_okay=False))
@click.pass_obj
def endos(opts, biquandle):
    """List all endomorphisms of a biquandle."""
    maps = [list(f.image) for f in enumerate_endomorphisms(load_biquandle(biquandle))]
    if opts.format == "json":
        _emit(maps)
    else:
        for image in maps:
            click.echo(" ".join(map(str, image)))


@cli.command("search-modules")
@click.argument("biquandle", type=click.Path(dir_okay=False))
@click.option("--m", "modulus", type=click.IntRange(min=2), required=True, help="Coefficient ring Z_m.")
@click.option("--limit", type=click.IntRange(min=1), default=10, show_default=True)
@click.pass_obj
def search_modules_cmd(opts, biquandle, modulus, limit):
    """Find biquandle modules over Z_m by exhaustive search."""
    found = search_modules(load_biquandle(biquandle), RingZm(modulus), limit)
    rows = [M.to_json() for M in found]
    if opts.format == "json":
        _emit(rows)
    else:
        for row in rows:
            click.echo(json.dumps(row))


@cli.command()
@click.argument("diagram", type=click.Path(dir_okay=False))
@_vector_options
@click.pass_obj
def colorings(opts, diagram, vector, biquandle_path, module_path, endos_path):
    """All colorings of a diagram, as color arrays indexed by semiarc."""
    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path, need_module=False)
    X = getattr(vec, "X", vec)
    found = [list(c.colors) for c in enumerate_colorings(read_diagram(diagram), X)]
    if opts.format == "text":
        for colors in found:
            click.echo(" ".join(map(str, colors)))
    else:
        _emit(found)


@cli.command()
@click.argument("diagram", type=click.Path(dir_okay=False))
@_vector_options
@click.option("--dump-matrix", is_flag=True, help="Include each bead system matrix.")
@click.pass_obj
def beads(opts, diagram, vector, biquandle_path, module_path, endos_path, dump_matrix):
    """Bead-coloring module rank for every coloring."""
    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path)
    _check_prime(vec)
    rows = []
    for c in enumerate_colorings(read_diagram(diagram), vec.X):
        system = build_bead_system(c, vec.M)
        row = {"colors": list(c.colors), **solve_system(system).to_json()}
        if dump_matrix:
            row["matrix"] = [list(r) for r in system.matrix]
        rows.append(row)
    if opts.format == "json":
        _emit(rows)
    else:
        for row in rows:
            click.echo(f"{' '.join(map(str, row['colors']))}  rank {row['rank']}"
                       + (f" factors {row['factors']}" if row["factors"] else ""))
            for r in row.get("matrix", []):
                click.echo("    " + " ".join(map(str, r)))


@cli.command()
@click.argument("diagram", type=click.Path(dir_okay=False))
@_vector_options
@click.option("--dot", is_flag=True, help="Emit Graphviz text instead of JSON.")
@click.pass_obj
def quiver(opts, diagram, vector, biquandle_path, module_path, endos_path, dot):
    """The quiver representation of a diagram."""
    from .quiver import build_quiver

    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path)
    _check_prime(vec)
    Q = build_quiver(read_diagram(diagram), vec.X, vec.M, vec.S)
    if dot:
        click.echo(Q.to_dot())
    else:
        _emit(Q.to_json())


@cli.command()
@click.argument("diagram", type=click.Path(dir_okay=False))
@_vector_options
@click.option("--semantics", default=None,
              help="Override path semantics 'repetition,maximality,rank_vertex' (calibration only).")
@click.pass_obj
def invariant(opts, diagram, vector, biquandle_path, module_path, endos_path, semantics):
    """Counting invariant, vertex ranks and natural path polynomial."""
    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path)
    _check_prime(vec)
    sem = PathSemantics.parse(semantics) if semantics else None
    result = compute(read_diagram(diagram), vec, sem, opts.budget)
    if opts.format == "json":
        data = result.to_json()
        data["quiver"] = result.quiver.to_json()
        _emit(data)
    elif opts.format == "latex":
        click.echo(f"{Path(diagram).stem} & {result.polynomial.to_latex()} \\\\")
    else:
        click.echo(str(result.polynomial))


def _tabulate_one(args):
    path, vec, sem_text, budget = args
    try:
        D = read_diagram(path)
        sem = PathSemantics.parse(sem_text)
        result = compute(D, vec, sem, budget)
        return {"count": result.count, "polynomial": str(result.polynomial),
                "latex": result.polynomial.to_latex(), "ranks": result.quiver.ranks}
    except BudgetExceeded as exc:
        return {"error": str(exc), "budget": True}
    except (BMQError, ValueError, OSError) as exc:
        return {"error": str(exc)}


@cli.command()
@click.argument("directory", type=click.Path(file_okay=False, exists=True))
@_vector_options
@click.option("--semantics", default=None, help="Override path semantics (calibration only).")
@click.option("--no-cache", is_flag=True, help="Ignore and do not write cached results.")
@click.pass_obj
def tabulate(opts, directory, vector, biquandle_path, module_path, endos_path, semantics, no_cache):
    """Invariants of every .pdk file in a directory."""
    from .config import default_semantics

    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path)
    _check_prime(vec)
    sem = PathSemantics.parse(semantics) if semantics else default_semantics()
    folder = Path(directory)
    index = folder / "index.json"
    if index.exists():
        files = [folder / f"{n}.pdk" for n in _read_json(index)["order"]]
    else:
        files = sorted(folder.glob("*.pdk"))
    if not files:
        raise click.UsageError(f"no .pdk files in {directory}")
    cache = None if no_cache else ResultCache(opts.cache_dir or default_cache_dir())
    rows, todo = [None] * len(files), []
    keys = [None] * len(files)
    for i, path in enumerate(files):
        text = path.read_text(encoding="utf-8") if path.exists() else ""
        if cache is not None:
            keys[i] = cache.key(text, vec, sem)
            hit = cache.get(keys[i])
            if hit is not None:
                rows[i] = hit
                continue
        todo.append(i)
    jobs = [(files[i], vec, str(sem), opts.budget) for i in todo]
    if opts.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            fresh = list(pool.map(_tabulate_one, jobs))
    else:
        fresh = [_tabulate_one(job) for job in jobs]
    for i, row in zip(todo, fresh):
        rows[i] = row
        if cache is not None and "error" not in row:
            cache.put(keys[i], row)
    if cache is not None:
        click.echo(f"cache: {len(files) - len(todo)} hits, {len(todo)} computed", err=True)
    _print_table(opts, files, rows)
    if any("error" in r and not r.get("budget") for r in rows):
        raise SystemExit(1)
    if any(r.get("budget") for r in rows):
        raise SystemExit(2)


def _print_table(opts, files, rows):
    if opts.format == "json":
        out = []
        for path, row in zip(files, rows):
            item = {"name": path.stem}
            item.update({k: row[k] for k in ("count", "polynomial", "ranks", "error") if k in row})
            out.append(item)
        _emit(out)
        return
    for path, row in zip(files, rows):
        if "error" in row:
            click.echo(f"{path.stem}\terror: {row['error']}")
        elif opts.format == "latex":
            click.echo(f"{path.stem} & {row['latex']} \\\\")
        else:
            click.echo(f"{path.stem}\t{row['count']}\t{row['polynomial']}")


@cli.command()
@click.argument("diagram", type=click.Path(dir_okay=False))
@_vector_options
@click.option("--moves", "-k", type=click.IntRange(min=1), default=3, show_default=True,
              help="Edits per random sequence.")
@click.option("--trials", "-n", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", "-s", type=int, default=0, show_default=True)
@click.option("--reproducer", type=click.Path(dir_okay=False), default="bmq-fuzz-failure.pdk",
              show_default=True, help="Where to write the first failing diagram.")
@click.pass_obj
def fuzz(opts, diagram, vector, biquandle_path, module_path, endos_path, moves, trials, seed, reproducer):
    """Check invariance under random R1/R2/V2 edit sequences."""
    vec = _resolve_vector(vector, biquandle_path, module_path, endos_path)
    D = read_diagram(diagram)
    base = compute(D, vec, None, opts.budget)
    expect = (base.count, base.rank_multiset, base.polynomial)
    rng = random.Random(seed)
    for trial in range(trials):
        E, edits = random_edits(D, moves, rng)
        got = compute(E, vec, None, opts.budget)
        if (got.count, got.rank_multiset, got.polynomial) != expect:
            Path(reproducer).write_text(
                f"# invariance violation for {diagram} (seed {seed}, trial {trial})\n"
                + "".join(f"# {e}\n" for e in edits)
                + f"# expected {base.count} colorings, {base.polynomial}\n"
                + f"# got {got.count} colorings, {got.polynomial}\n"
                + E.to_text() + "\n", encoding="utf-8")
            click.echo(f"violation in trial {trial}; reproducer written to {reproducer}")
            raise SystemExit(1)
    click.echo(f"{trials} sequences of {moves} edits: invariants preserved ({base.polynomial})")


def main(argv=None):
    """Entry point; maps errors to exit codes 1 (invalid input) and 2 (budget)."""
    try:
        cli.main(args=argv, prog_name="bmq", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except BudgetExceeded as exc:
        click.echo(f"error: budget exceeded: {exc}", err=True)
        return 2
    except (BMQError, ValueError, KeyError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
