"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 violated
precondition (including size guards), 4 unknown statement id.
"""

from __future__ import annotations

import json
import sys
from functools import wraps

import click

from . import generators, verify
from .errors import (
    MalformedInputError,
    ParseError,
    PreconditionError,
    ScxError,
    TooLargeError,
    UnknownStatementError,
)
from .facevectors import f_vector, g_vector, h_vector
from .fileio import load_complex, write_complex, write_scx_text
from .homology import (
    is_homology_manifold,
    is_homology_sphere,
    is_normal_pseudomanifold,
)
from .isomorphism import are_isomorphic
from .retriangulate import (
    central_retriangulation,
    inverse_stellar,
    swartz_all,
    swartz_operation,
)

_EXIT_CODES = (
    (UnknownStatementError, 4),
    ((ParseError, MalformedInputError), 2),
    ((PreconditionError, TooLargeError), 3),
    (ScxError, 3),
)


def _exit_code_for(exc: Exception) -> int:
    for types, code in _EXIT_CODES:
        if isinstance(exc, types):
            return code
    return 1


def handles_errors(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ScxError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(_exit_code_for(exc))

    return wrapper


def _parse_face(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"not a face: {text!r}") from exc


def input_path(fn):
    """Accept the input file either positionally or as --input."""

    @click.argument("input_arg", required=False, type=click.Path(), metavar="[INPUT]")
    @click.option("--input", "input_opt", type=click.Path(), default=None,
                  help="input file (alternative to the positional argument)")
    @wraps(fn)
    def wrapper(*args, input_arg=None, input_opt=None, **kwargs):
        path = input_arg or input_opt
        if path is None:
            raise PreconditionError("no input file given (positional or --input)")
        return fn(*args, input=path, **kwargs)

    return handles_errors(wrapper)


def _field_option(value: str):
    if value == "rational":
        return "rational"
    try:
        return int(value)
    except ValueError as exc:
        raise PreconditionError(f"--field must be 'rational' or a prime, got {value!r}") from exc


@click.group()
def main():
    """Exact calculus on simplicial complexes: face vectors, homology-based
    classification, retriangulations, rigidity, and a statement-verification
    harness."""


@main.command()
@input_path
@click.option("--field", default="rational", help="homology field: 'rational' or a prime")
@handles_errors
def info(input, field):
    """Print face vectors and classification predicates of a complex."""
    cx = load_complex(input)
    field = _field_option(field)
    f = f_vector(cx)
    click.echo(f"dimension: {cx.dim}")
    click.echo(f"f-vector: {' '.join(map(str, f.entries))}")
    click.echo(f"h-vector: {' '.join(map(str, h_vector(cx).entries))}")
    g = g_vector(cx)
    click.echo(f"g-vector: {' '.join(map(str, g.entries))}")
    if f.impure:
        click.echo("note: complex is not pure; vectors use d = dim + 1")
    click.echo(f"pure: {cx.is_pure()}")
    click.echo(f"prime: {cx.is_prime()}")
    pm = is_normal_pseudomanifold(cx)
    click.echo(f"normal pseudomanifold: {bool(pm)}")
    if cx.dim >= 1:
        click.echo(f"homology manifold: {bool(is_homology_manifold(cx, field))}")
    click.echo(f"homology sphere: {bool(is_homology_sphere(cx, field))}")


@main.command()
@input_path
@handles_errors
def gvector(input):
    """Print g_0..g_{floor(d/2)} of a complex."""
    cx = load_complex(input)
    click.echo(" ".join(str(x) for x in g_vector(cx).entries))


@main.command()
@input_path
@click.option("--face", required=True, help="comma-separated vertex labels")
@click.option("--output", type=click.Path(), default=None)
@handles_errors
def link(input, face, output):
    """Write or print the link of a face."""
    cx = load_complex(input)
    result = cx.link(_parse_face(face))
    if output:
        write_complex(result, output)
    else:
        click.echo(write_scx_text(result), nl=False)


@main.command()
@input_path
@click.option("-k", "--k", "k", type=int, required=True, help="dimension of missing faces")
@handles_errors
def missing(input, k):
    """List the missing k-faces, one per line."""
    cx = load_complex(input)
    for face in cx.missing_faces(k):
        click.echo(" ".join(map(str, face)))


def _echo_record(record):
    click.echo(f"kind: {record.kind}")
    click.echo(f"g before: {' '.join(map(str, record.g_before))}")
    click.echo(f"g after: {' '.join(map(str, record.g_after))}")
    predicted = " ".join(f"g{i}={v}" for i, v in record.predicted) or "(none)"
    click.echo(f"predicted: {predicted}")
    click.echo(f"prediction holds: {record.prediction_holds()}")
    if record.new_vertices:
        click.echo(f"new vertices: {' '.join(map(str, record.new_vertices))}")
    if record.removed_vertices:
        click.echo(f"removed vertices: {' '.join(map(str, record.removed_vertices))}")
    if record.steps:
        click.echo(f"steps: {record.steps}")
    for note in record.notes:
        click.echo(f"note: {note}")


@main.group()
def op():
    """Retriangulation operations."""


def _op_epilogue(out, record, output, check_iso):
    _echo_record(record)
    if output:
        write_complex(out, output)
        click.echo(f"wrote {output}")
    if check_iso:
        other = load_complex(check_iso)
        cert = are_isomorphic(out, other)
        click.echo(f"isomorphic to {check_iso}: {bool(cert)}")
        if not cert:
            sys.exit(1)


@op.command()
@input_path
@click.option("--ball", required=True,
              help="'star:V1,V2,...' for a face star, or a path to a facet list")
@click.option("--output", type=click.Path(), default=None)
@click.option("--check-iso", type=click.Path(), default=None)
@handles_errors
def crtr(input, ball, output, check_iso):
    """Central retriangulation along a ball subcomplex."""
    cx = load_complex(input)
    if ball.startswith("star:"):
        ball_cx = cx.star(_parse_face(ball[len("star:"):]))
    else:
        ball_cx = load_complex(ball)
    out, record = central_retriangulation(cx, ball_cx)
    _op_epilogue(out, record, output, check_iso)


@op.command()
@input_path
@click.option("--vertex", type=int, required=True)
@click.option("--r", type=int, default=None, help="stackedness level (auto-detected)")
@click.option("--output", type=click.Path(), default=None)
@click.option("--check-iso", type=click.Path(), default=None)
@handles_errors
def sdinv(input, vertex, r, output, check_iso):
    """Inverse stellar retriangulation at a vertex."""
    cx = load_complex(input)
    out, record = inverse_stellar(cx, vertex, r)
    _op_epilogue(out, record, output, check_iso)


@op.command()
@input_path
@click.option("--vertex", type=int, required=True)
@click.option("--tau", default=None, help="missing facet of the link (comma-separated)")
@click.option("--all", "everything", is_flag=True, help="iterate over all missing facets")
@click.option("--output", type=click.Path(), default=None)
@click.option("--check-iso", type=click.Path(), default=None)
@handles_errors
def swartz(input, vertex, tau, everything, output, check_iso):
    """Swartz operation: one step with --tau, or --all to iterate."""
    cx = load_complex(input)
    if everything:
        out, record = swartz_all(cx, vertex)
    else:
        if tau is None:
            raise PreconditionError("provide --tau or --all")
        out, record = swartz_operation(cx, vertex, _parse_face(tau))
    _op_epilogue(out, record, output, check_iso)


@main.command()
@input_path
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=int, default=3, show_default=True)
@handles_errors
def stress(input, seed, trials):
    """Print an exact basis of the stress space, one vector per line."""
    from .rigidity import stress_basis

    cx = load_complex(input)
    basis = stress_basis(cx, seed=seed, trials=trials)
    click.echo("edges: " + " ".join(f"{u}-{v}" for u, v in basis.edges))
    for vec in basis.vectors:
        click.echo(" ".join(str(x) for x in vec))
    non_participating = sorted(v for v, p in basis.participation.items() if not p)
    click.echo(f"dimension: {len(basis.vectors)}")
    click.echo(f"non-participating vertices: {non_participating or 'none'}")


_GENERATORS = {
    "simplex-boundary": (generators.simplex_boundary, 1),
    "cycle": (generators.cycle, 1),
    "stacked-sphere": (generators.stacked_sphere, 2),
    "cross-polytope": (generators.cross_polytope_boundary, 1),
}


@main.command()
@click.argument("name")
@click.argument("params", nargs=-1, type=int)
@click.option("--output", type=click.Path(), default=None)
@handles_errors
def gen(name, params, output):
    """Generate a named complex (simplex-boundary D | cycle N |
    stacked-sphere D N | cross-polytope D | g2one D VARIANT PARAM |
    g2two D KIND [PARAM] | barnette)."""
    if name == "barnette":
        cx = generators.barnette_sphere().complex
    elif name == "g2one":
        if len(params) != 3:
            raise PreconditionError("g2one needs D VARIANT PARAM with VARIANT 1=join 2=cycle")
        variant = {1: "join", 2: "cycle"}.get(params[1])
        cx = generators.g2_one_family(params[0], variant, params[2]).complex
    elif name == "g2two":
        if len(params) < 2:
            raise PreconditionError(
                "g2two needs D KIND [PARAM] with KIND 1=triple_join 2=suspension "
                "3=octahedral 4=crtr_ridge"
            )
        kind = {1: "triple_join", 2: "suspension", 3: "octahedral", 4: "crtr_ridge"}.get(
            params[1]
        )
        param = params[2] if len(params) > 2 else None
        cx = generators.g2_two_catalog(params[0], kind, param).complex
    elif name in _GENERATORS:
        fn, arity = _GENERATORS[name]
        if len(params) != arity:
            raise PreconditionError(f"{name} takes {arity} integer parameter(s)")
        cx = fn(*params)
    else:
        raise PreconditionError(
            f"unknown generator {name!r}; known: {', '.join(_GENERATORS)}, g2one, g2two, barnette"
        )
    if output:
        write_complex(cx, output)
    else:
        click.echo(write_scx_text(cx), nl=False)


def _scale_options(fn):
    fn = click.option("--dmax", type=int, default=6, show_default=True)(fn)
    fn = click.option("--f0max", type=int, default=14, show_default=True)(fn)
    fn = click.option("--cycle-max", type=int, default=8, show_default=True)(fn)
    fn = click.option("--seed", type=int, default=0, show_default=True)(fn)
    fn = click.option("--trials", type=int, default=3, show_default=True)(fn)
    fn = click.option("--report", type=click.Path(), default=None,
                      help="also write the reports as JSON")(fn)
    return fn


def _emit_reports(reports, report_path) -> int:
    for rep in reports:
        click.echo(rep.render())
    if report_path:
        with open(report_path, "w") as fh:
            json.dump([rep.to_dict() for rep in reports], fh, indent=2)
            fh.write("\n")
    failed = [rep for rep in reports if not rep.passed]
    total = sum(rep.instances for rep in reports)
    passes = sum(rep.passes for rep in reports)
    click.echo(
        f"{len(reports) - len(failed)}/{len(reports)} statements passed"
        f" ({passes}/{total} instances)"
    )
    return 1 if failed else 0


@main.command(name="verify")
@click.argument("statement")
@_scale_options
@handles_errors
def verify_cmd(statement, dmax, f0max, cycle_max, seed, trials, report):
    """Run one registered statement check."""
    scale = verify.Scale(dmax=dmax, f0max=f0max, cycle_max=cycle_max, seed=seed, trials=trials)
    rep = verify.run_statement(statement, scale)
    sys.exit(_emit_reports([rep], report))


@main.command(name="verify-all")
@_scale_options
@handles_errors
def verify_all_cmd(dmax, f0max, cycle_max, seed, trials, report):
    """Run every registered statement check."""
    scale = verify.Scale(dmax=dmax, f0max=f0max, cycle_max=cycle_max, seed=seed, trials=trials)
    sys.exit(_emit_reports(verify.run_all(scale), report))


@main.command()
@handles_errors
def statements():
    """List the registered statement ids."""
    for sid in verify.statement_ids():
        click.echo(sid)


if __name__ == "__main__":
    main()
