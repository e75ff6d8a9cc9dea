import functools
import sys
from pathlib import Path

import click

from jsjcube import __version__
from jsjcube.complex.brady_meier import brady_meier_check
from jsjcube.complex.models import TubularComplex, format_word, parse_token
from jsjcube.complex.square import euler_characteristic
from jsjcube.config.config import Configs
from jsjcube.cycles.records import normalize_cycle
from jsjcube.errors import InputSyntaxError, JsjCubeError
from jsjcube.io.loader import load_input
from jsjcube.io.output import OutputFormat, emit_output, to_dot
from jsjcube.io.tgg import emit_tgg
from jsjcube.opening.open import open_along
from jsjcube.opening.pipeline import jsj
from jsjcube.relative.family import FreeGroupFamily
from jsjcube.relative.general import GraphOfFreeGroups, general_jsj
from jsjcube.relative.jsj import relative_jsj
from jsjcube.separation.classify import is_splitting_cycle, splitting_cycle_list
from jsjcube.utils.console_utils import (
    classification_table,
    complex_summary,
    decomposition_table,
    err_console,
    print_section,
    print_status,
)
from jsjcube.utils.log_common import setup_logging


def common_options(func):
    @click.option("--threads", type=int, default=None, help="Worker threads for parallel stages.")
    @click.option("--max-cells", type=int, default=None, help="Cap on sphere and ball sizes.")
    @click.option("--max-cycles", type=int, default=None, help="Cap on enumerated cycle classes.")
    @click.option("--verbose/--quiet", default=None, help="Show or hide debug logging.")
    @functools.wraps(func)
    def wrapper(*args, threads, max_cells, max_cycles, verbose, **kwargs):
        apply_overrides(threads=threads, max_cells=max_cells, max_cycles=max_cycles, verbose=verbose)
        try:
            return func(*args, **kwargs)
        except JsjCubeError as e:
            err_console.print(f"[red]{type(e).__name__}:[/red] {e.message}")
            if e.details and not isinstance(e.details, (str, int)):
                err_console.print(f"[dim]{e.details}[/dim]")
            sys.exit(e.exit_code)

    return wrapper


def output_options(func):
    func = click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in OutputFormat]),
        default=OutputFormat.JSON.value,
        show_default=True,
    )(func)
    return click.option(
        "-o", "--output", type=click.Path(dir_okay=False), default=None, help="Write the result here."
    )(func)


def apply_overrides(threads=None, max_cells=None, max_cycles=None, verbose=None):
    """command line flags win over environment variables and the yaml files"""
    if threads is not None or verbose is not None:
        Configs.basic_config.pin(threads=threads, log_verbose=verbose)
    if max_cells is not None or max_cycles is not None:
        Configs.limits_config.pin(max_cells=max_cells, max_cycles=max_cycles)
    setup_logging(Configs.basic_config.log_file, verbose)


def write_result(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
        print_status(f"wrote {output}", "SUCCESS")
    else:
        click.echo(text, nl=False)


def load_complex(path: str) -> TubularComplex:
    X = load_input(path)
    if not isinstance(X, TubularComplex):
        raise InputSyntaxError(f"{path} describes a graph of free groups; use general-jsj", 1, 1)
    return X


def parse_word_option(text: str):
    return tuple(parse_token(tok) for tok in text.replace(",", " ").split())


@click.group(help="jsjcube - JSJ decompositions of tubular graphs of graphs")
@click.version_option(__version__, prog_name="jsjcube")
def main():
    pass


@main.command("init", help="Write the default config.yaml and limits.yaml templates.")
def init():
    click.echo("--- jsjcube initialization ---")
    try:
        Configs.basic_config.make_dirs()
        click.secho("Created the log directory.", fg="green")
    except OSError as e:
        click.secho(f"Error creating directories: {e}", fg="red")
        sys.exit(1)
    if (Configs.JSJCUBE_ROOT / "config.yaml").exists() and (Configs.JSJCUBE_ROOT / "limits.yaml").exists():
        click.secho("Configuration files already exist, skipping generation.", fg="yellow")
        return
    Configs.create_all_templates()
    click.secho("Generated default configuration files.", fg="green")


@main.command("validate", help="Parse and validate a .tgg or .gog file.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@common_options
def validate(path):
    doc = load_input(path)
    if isinstance(doc, GraphOfFreeGroups):
        print_status(f"graph of free groups: {len(doc.vertices)} vertices, {len(doc.edges)} edges", "SUCCESS")
        return
    err_console.print(complex_summary(doc))
    print_status(
        f"valid: E={doc.vertical_edge_count} F={doc.square_count} "
        f"chi={euler_characteristic(doc)} N={doc.max_thickness}",
        "SUCCESS",
    )


@main.command("bm", help="Check the Brady-Meier condition on every vertex link.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@common_options
def bm(path):
    ok, witness = brady_meier_check(load_complex(path))
    if ok:
        print_status("Brady-Meier: every link is connected without cut points", "SUCCESS")
        return
    print_status(f"not Brady-Meier: {witness}", "ERROR")
    sys.exit(3)


@main.command("cycles", help="List splitting cycles up to a length.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--graph", "graphs", multiple=True, help="Restrict enumeration to these vertex graphs.")
@click.option("--max-len", type=int, default=None, help="Length clamp (default max_cycle_len).")
@output_options
@common_options
def cycles(path, graphs, max_len, output, fmt):
    X = load_complex(path)
    print_section("splitting cycles")
    found = splitting_cycle_list(X, max_len=max_len, graphs=graphs or None)
    err_console.print(classification_table(found.records, title=f"candidates up to length {found.max_len}"))
    if found.truncated:
        print_status(f"clamped at length {found.max_len}; the theoretical cap is {found.theoretical_cap}", "WARNING")
    write_result(emit_output(found, fmt), output)


@main.command("classify", help="Classify one cycle of a vertex graph.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--graph", required=True)
@click.option("--word", required=True, help='Edge tokens, e.g. "a b -a -b".')
@output_options
@common_options
def classify(path, graph, word, output, fmt):
    X = load_complex(path)
    cycle = normalize_cycle(parse_word_option(word), graph=graph, carrier=X.graph(graph))
    record = is_splitting_cycle(X, cycle)
    err_console.print(classification_table([record], title=f"{graph}: {format_word(cycle.word)}"))
    write_result(emit_output(record, fmt), output)


@main.command("open", help="Open the complex along a splitting cycle and write the result as .tgg.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--graph", required=True)
@click.option("--word", required=True, help='Edge tokens, e.g. "a b -a -b".')
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@common_options
def open_command(path, graph, word, output):
    X = load_complex(path)
    cycle = normalize_cycle(parse_word_option(word), graph=graph, carrier=X.graph(graph))
    result = open_along(X, cycle)
    print_status(
        f"opened {cycle}: K={result.K}, circle {result.circle}, pieces {', '.join(result.pieces)}",
        "SUCCESS",
    )
    write_result(emit_tgg(result.complex), output)


def _report(result, output, fmt, dot):
    err_console.print(decomposition_table(result.decomposition))
    if result.provenance.truncated:
        print_status(f"cycles clamped at length {result.provenance.max_cycle_len}", "WARNING")
    if dot:
        Path(dot).write_text(to_dot(result.decomposition), encoding="utf-8")
        print_status(f"wrote {dot}", "SUCCESS")
    write_result(emit_output(result, fmt), output)


@main.command("jsj", help="JSJ decomposition of a Brady-Meier tubular complex.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-cycle-len", type=int, default=None)
@click.option("--dot", type=click.Path(dir_okay=False), default=None, help="Also write Graphviz DOT here.")
@output_options
@common_options
def jsj_command(path, max_cycle_len, dot, output, fmt):
    X = load_complex(path)
    print_section("JSJ decomposition")
    result = jsj(X, max_cycle_len=max_cycle_len)
    result.provenance.command = "jsj"
    _report(result, output, fmt, dot)


@main.command("relative-jsj", help="JSJ of a free group relative to cyclic words.")
@click.option("--rank", type=int, required=True)
@click.option("--word", "words", multiple=True, required=True, help="Letters a..z, capitals for inverses.")
@click.option("--max-word-len", type=int, default=None)
@click.option("--dot", type=click.Path(dir_okay=False), default=None)
@output_options
@common_options
def relative_jsj_command(rank, words, max_word_len, dot, output, fmt):
    family = FreeGroupFamily.of(rank, *words)
    print_section(f"relative JSJ of {family}")
    result = relative_jsj(family, max_word_len=max_word_len)
    if result.whitehead_reduced:
        print_status(f"certified after Whitehead reduction to {result.family}", "WARNING")
    _report(result, output, fmt, dot)


@main.command("general-jsj", help="JSJ of a graph of free groups given as .gog.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-word-len", type=int, default=None)
@click.option("--dot", type=click.Path(dir_okay=False), default=None)
@output_options
@common_options
def general_jsj_command(path, max_word_len, dot, output, fmt):
    gog = load_input(path, kind="gog")
    print_section("general JSJ")
    result = general_jsj(gog, max_word_len=max_word_len)
    _report(result, output, fmt, dot)


if __name__ == "__main__":
    main()
