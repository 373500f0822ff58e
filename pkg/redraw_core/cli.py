"""
Command line entry point. Payloads go to stdout (json or text), diagnostics to stderr.

Exit codes: 0 on success, 2 on input or validation errors, 10 when eval finds that the pure
condition vanishes at the given normals.
"""
from enum import Enum
from enum import unique
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

import typer
from typing_extensions import Annotated

from redraw_core import __version__
from redraw_core.bracket import block_reduce
from redraw_core.bracket import bracketize
from redraw_core.bracket import expand
from redraw_core.bracket import format_bracket_polynomial
from redraw_core.bracket import parse_bracket_polynomial
from redraw_core.bracket import straighten
from redraw_core.exact_polynomial import format_polynomial
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exceptions import NormalError
from redraw_core.geometry import GeometryBundle
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import check_incident_points
from redraw_core.geometry import load_document
from redraw_core.geometry import normals_from_points
from redraw_core.geometry import parse_normals
from redraw_core.matroid import MatroidMethod
from redraw_core.matroid import generic_corank
from redraw_core.matroid import is_independent
from redraw_core.matroid import proper_count_condition
from redraw_core.pure_condition import degree_check
from redraw_core.pure_condition import evaluate
from redraw_core.pure_condition import pin_invariance_check
from redraw_core.pure_condition import pure_condition
from redraw_core.pure_condition import sl_invariance_check
from redraw_core.pydantic_utils import format_rational
from redraw_core.read_write import dumps_json
from redraw_core.read_write import load_text_file
from redraw_core.redraw import degenerate_factors
from redraw_core.redraw import overconstrained_report
from redraw_core.redraw import redrawing_space
from redraw_core.safe_utils import EXIT_VANISHES
from redraw_core.safe_utils import safe_clt
from redraw_core.settings import SETTINGS

app = typer.Typer(help='Pure conditions and parallel redrawings of incidence geometries.',
                  add_completion=False, no_args_is_help=True)


@unique
class OutputFormat(str, Enum):
    """
    Payload rendering
    """
    JSON = 'json'
    TEXT = 'text'


GeometryFile = Annotated[Path, typer.Argument(help='Geometry json document.', exists=True, dir_okay=False)]
NormalsFile = Annotated[Optional[Path], typer.Option('--normals', help='Normals json document '
                                                     '(overrides normals stored in the geometry).',
                                                     exists=True, dir_okay=False)]
PinOption = Annotated[Optional[str], typer.Option('--pin', help='Point pinned at the origin (default: first).')]
SeedOption = Annotated[int, typer.Option('--seed', help='Seed of every randomized computation.')]
FormatOption = Annotated[OutputFormat, typer.Option('--format', help='Output format.')]


def _as_text(payload: Any, indent: int = 0) -> List[str]:
    """
    Indented key: value lines of a json compatible payload
    """
    pad = '  ' * indent
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f'{pad}{key}:')
                lines.extend(_as_text(value, indent + 1))
            else:
                lines.append(f'{pad}{key}: {_scalar_text(value)}')
        return lines
    if isinstance(payload, list):
        lines = []
        for item in payload:
            if isinstance(item, (dict, list)) and item:
                lines.append(f'{pad}-')
                lines.extend(_as_text(item, indent + 1))
            else:
                lines.append(f'{pad}- {_scalar_text(item)}')
        return lines
    return [f'{pad}{_scalar_text(payload)}']


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return 'null'
    if isinstance(value, (dict, list)):
        return '{}' if isinstance(value, dict) else '[]'
    return str(value)


def _emit(command: str, payload: Dict[str, Any], output: OutputFormat, seed: Optional[int] = None) -> None:
    """
    Print the payload of a command, tagged with the tool version and the seed when randomized
    """
    document = {'command': command, 'version': __version__}
    if seed is not None:
        document['seed'] = seed
    document.update(payload)
    typer.echo(dumps_json(document) if output == OutputFormat.JSON else '\n'.join(_as_text(document)))


def _normals(bundle: GeometryBundle, normals_file: Optional[Path]) -> NormalAssignment:
    """
    Normals from the separate file, else from the document, else derived from its coordinates
    """
    if normals_file is not None:
        return parse_normals(load_text_file(normals_file), bundle.geometry)
    if bundle.normals is not None:
        return bundle.normals
    if bundle.coordinates is not None:
        return normals_from_points(bundle.geometry, bundle.coordinates)[0]
    raise NormalError('no normals available: pass --normals, or store normals or coordinates in the document')


@app.command()
@safe_clt
def validate(file: GeometryFile, normals: NormalsFile = None, output: FormatOption = OutputFormat.JSON):
    """
    Check a geometry document (and its normals and coordinates).
    """
    bundle = load_document(file)
    g = bundle.geometry
    stored = parse_normals(load_text_file(normals), g) if normals is not None else bundle.normals
    if bundle.coordinates is not None:
        check_incident_points(g, bundle.coordinates, stored)
    _emit('validate', {'valid': True, 'd': g.d, 'points': len(g.points), 'hyperplanes': len(g.hyperplanes),
                       'incidences': len(g.incidences), 'normals': bundle.normals is not None or normals is not None,
                       'coordinates': bundle.coordinates is not None, 'fingerprint': g.fingerprint()}, output)


@app.command()
@safe_clt
def matroid(file: GeometryFile, seed: SeedOption = SETTINGS.cli.seed,
            method: Annotated[Optional[MatroidMethod], typer.Option('--method', help='Force an oracle.')] = None,
            output: FormatOption = OutputFormat.JSON):
    """
    Independence and basis status in the d-plane matroid.
    """
    g = load_document(file).geometry
    report = is_independent(g, seed=seed, method=method)
    payload = report.model_dump(mode='json')
    payload['corank'] = generic_corank(g, seed=seed)
    payload['proper_count_condition'] = proper_count_condition(g)
    _emit('matroid', payload, output, seed)


@app.command()
@safe_clt
def purecond(file: GeometryFile, pin: PinOption = None,
             bracket: Annotated[bool, typer.Option('--bracket', help='Also print the bracket form.')] = False,
             output: FormatOption = OutputFormat.JSON):
    """
    Canonical pure condition of a basis geometry.
    """
    g = load_document(file).geometry
    pc = pure_condition(g, pin)
    payload: Dict[str, Any] = {'pinned_point': pc.pinned_point, 'fingerprint': pc.fingerprint, 'degree': pc.degree,
                               'degree_check': degree_check(pc, g), 'terms': len(pc.polynomial),
                               'scalar': format_rational(pc.scalar), 'polynomial': pc.text()}
    if bracket:
        payload['bracket'] = format_bracket_polynomial(bracketize(pc.polynomial, pc.ring))
        payload['bracket_experimental'] = g.d != 2
    _emit('purecond', payload, output)


@app.command(name='eval')
@safe_clt
def eval_command(file: GeometryFile, normals: NormalsFile = None, pin: PinOption = None,
                 output: FormatOption = OutputFormat.JSON):
    """
    Value of the pure condition at given normals (exit code 10 when it vanishes).
    """
    bundle = load_document(file)
    value = evaluate(pure_condition(bundle.geometry, pin), _normals(bundle, normals))
    _emit('eval', {'value': format_rational(value), 'vanishes': value == 0}, output)
    if value == 0:
        raise typer.Exit(code=EXIT_VANISHES)


@app.command()
@safe_clt
def realize(file: GeometryFile, normals: NormalsFile = None, pin: PinOption = None,
            output: FormatOption = OutputFormat.JSON):
    """
    Parallel redrawings at given normals, pinned point at the origin.
    """
    bundle = load_document(file)
    report = redrawing_space(bundle.geometry, _normals(bundle, normals), pin)
    _emit('realize', report.model_dump(mode='json'), output)


@app.command()
@safe_clt
def invariance(file: GeometryFile, trials: Annotated[int, typer.Option('--trials', min=1)] = SETTINGS.checks.trials,
               seed: SeedOption = SETTINGS.cli.seed, output: FormatOption = OutputFormat.JSON):
    """
    Pinned point independence and unimodular invariance of the pure condition.
    """
    g = load_document(file).geometry
    pins = pin_invariance_check(g).model_dump(mode='json')
    unimodular = sl_invariance_check(g, trials=trials, seed=seed).model_dump(mode='json')
    _emit('invariance', {'pin_invariance': pins, 'unimodular_invariance': unimodular}, output, seed)


@app.command()
@safe_clt
def overconstrained(file: GeometryFile, normals: NormalsFile = None, pin: PinOption = None,
                    minors: Annotated[bool, typer.Option('--minors', help='Count nonzero maximal minors.')] = False,
                    trials: Annotated[int, typer.Option('--trials', min=1)] = SETTINGS.census.trials,
                    seed: SeedOption = SETTINGS.cli.seed, output: FormatOption = OutputFormat.JSON):
    """
    Rank analysis of a geometry with more incidences than a basis.
    """
    bundle = load_document(file)
    report = overconstrained_report(bundle.geometry, _normals(bundle, normals), pin, with_minors=minors,
                                    seed=seed, trials=trials)
    _emit('overconstrained', report.model_dump(mode='json'), output, seed)


@app.command()
@safe_clt
def bracket(file: GeometryFile, expression: Annotated[str, typer.Argument(help='Bracket expression.')],
            output: FormatOption = OutputFormat.JSON):
    """
    Parse, straighten and expand a bracket expression over the hyperplanes of a geometry.
    """
    g = load_document(file).geometry
    parsed = parse_bracket_polynomial(expression, g.hyperplanes, g.d)
    _emit('bracket', {'input': format_bracket_polynomial(parsed),
                      'straightened': format_bracket_polynomial(straighten(parsed)),
                      'expanded': format_polynomial(expand(parsed), normal_ring(g.hyperplanes, g.d))}, output)


@app.command()
@safe_clt
def factors(file: GeometryFile, normals: NormalsFile = None, pin: PinOption = None,
            output: FormatOption = OutputFormat.JSON):
    """
    Diagonal brackets of the planar block reduction, and those vanishing at the normals.
    """
    bundle = load_document(file)
    reduction = block_reduce(bundle.geometry, pin)
    vanishing = degenerate_factors(bundle.geometry, _normals(bundle, normals), pin)
    _emit('factors', {'pinned_point': reduction.pinned_point,
                      'diagonal_brackets': [b.text() for b in reduction.diagonal_brackets],
                      'residual_size': reduction.residual.nrows,
                      'vanishing': [factor.model_dump(mode='json') for factor in vanishing]}, output)


if __name__ == '__main__':
    app()
