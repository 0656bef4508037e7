import logging

import click

from app.config import Config
from app.models.certificate import CertificateKind, WitnessKind
from app.models.labeledGraph import GraphFamily
from app.models.searchOutcome import SearchStatus
from app.services.construction_service import ConstructionService
from app.services.graph_service import GraphService
from app.services.search_service import SearchService
from app.services.serialization_service import SerializationService
from app.services.survey_service import SurveyService
from app.services.vce_service import VceService
from app.utils.errors import DomainError, EmptyGraphError, InvalidPartitionError

# Código de salida de `construct` según el tipo de certificado.
CERTIFICATE_EXIT_CODES = {
    CertificateKind.EXISTS: 0,
    CertificateKind.NOT_VCE: 1,
    CertificateKind.UNKNOWN: 2,
}
SEARCH_EXIT_CODES = {
    SearchStatus.FOUND: 0,
    SearchStatus.NONE_EXISTS: 1,
    SearchStatus.INCONCLUSIVE: 2,
}
CHECK_INPUT_ERROR = 3

FAMILIES = [f.value for f in GraphFamily]

family_option = click.option(
    '--family', type=click.Choice(FAMILIES), default=GraphFamily.GAMMA.value, show_default=True,
    help='Familia de grafo derivada de Z_n.',
)
cap_option = click.option(
    '--cap', type=click.IntRange(min=1), default=Config.DEFAULT_VERTEX_CAP, show_default=True,
    help='Máximo de vértices para la búsqueda exhaustiva.',
)


def _sorted_labels(graph, members):
    return ' '.join(label.render() for label in sorted((graph.label_of(v) for v in members), key=lambda l: l.sort_key()))


def render_partition(graph, partition):
    return [f'R: {_sorted_labels(graph, partition.r)}', f'B: {_sorted_labels(graph, partition.b)}']


def render_certificate(certificate):
    """Texto de un certificado, con las etiquetas en lugar de los ids."""
    graph = certificate.graph
    family = graph.family.value if graph.family else 'graph'
    lines = [f'n={graph.modulus} family={family} vertices={graph.order}']
    if certificate.kind is CertificateKind.EXISTS:
        lines.append(f'Exists: {certificate.source.value}')
        lines += render_partition(graph, certificate.partition)
        lines.append(f'verdict: {certificate.report.partition_verdict.value}')
    elif certificate.witness is WitnessKind.ISOLATED_VERTEX:
        lines.append(f'NotVce: isolated vertex {certificate.witness_label.render()}')
    elif certificate.kind is CertificateKind.NOT_VCE:
        lines.append(f'NotVce: exhaustive search over {certificate.examined} bipartitions')
    else:
        lines.append(f'Unknown: {certificate.reason}')
    return '\n'.join(lines)


@click.group(name='vce')
@click.option('--verbose', is_flag=True, help='Log a nivel DEBUG.')
def cli(verbose):
    """Grafos de divisores de cero de Z_n y biparticiones muy costo efectivas."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )


@cli.command('build')
@click.argument('n', type=click.IntRange(min=2))
@family_option
@click.option('--format', 'fmt', type=click.Choice(['dot', 'json']), default='json', show_default=True)
def build_command(n, family, fmt):
    """Construir el grafo de la familia para Z_N y exportarlo en JSON o DOT."""
    graph = GraphService.build(n, family)
    if fmt == 'dot':
        click.echo(SerializationService.graph_to_dot(graph), nl=False)
    else:
        click.echo(SerializationService.graph_to_json(graph, n, family))


@cli.command('construct')
@click.argument('n', type=click.IntRange(min=2))
@family_option
@cap_option
@click.pass_context
def construct_command(ctx, n, family, cap):
    """Certificar el grafo: 0 = bipartición muy costo efectiva, 1 = no existe, 2 = desconocido."""
    try:
        certificate = ConstructionService.dispatch(n, family, cap)
    except EmptyGraphError as e:
        click.echo(f'Empty graph: {e}', err=True)
        ctx.exit(2)
    click.echo(render_certificate(certificate))
    ctx.exit(CERTIFICATE_EXIT_CODES[certificate.kind])


def _read_text(path, what):
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise DomainError(f'No se pudo leer el archivo de {what} {path}: {e.strerror}.') from e


@cli.command('check')
@click.argument('graph_file', type=click.Path(dir_okay=False))
@click.argument('partition_file', type=click.Path(dir_okay=False))
@click.pass_context
def check_command(ctx, graph_file, partition_file):
    """Verificar una partición JSON sobre un grafo JSON; 0 si es muy costo efectiva."""
    try:
        graph = SerializationService.graph_from_json(_read_text(graph_file, 'grafo'))
        partition = SerializationService.partition_from_json(graph, _read_text(partition_file, 'partición'))
    except InvalidPartitionError as e:
        click.echo(f'Partición inválida: {e}', err=True)
        ctx.exit(CHECK_INPUT_ERROR)
    except DomainError as e:
        click.echo(f'Error de lectura: {e}', err=True)
        ctx.exit(CHECK_INPUT_ERROR)

    report = VceService.check_bipartition(graph, partition)
    for t in report.tallies:
        label = graph.label_of(t.vertex).render()
        side = partition.side_of(t.vertex).value
        click.echo(f'{label} {side} inside={t.inside} outside={t.outside} {t.verdict.value}')
    click.echo(f'verdict: {report.partition_verdict.value}')
    if report.witnesses:
        click.echo(f'witnesses: {" ".join(graph.label_of(v).render() for v in report.witnesses)}')
    ctx.exit(0 if report.is_very_cost_effective else 1)


@cli.command('search')
@click.argument('n', type=click.IntRange(min=2))
@family_option
@click.option('--method', type=click.Choice(['brute', 'local']), default='brute', show_default=True)
@cap_option
@click.option('--seed', type=int, default=Config.LOCAL_SEARCH_SEED, show_default=True)
@click.option('--restarts', type=click.IntRange(min=1), default=Config.LOCAL_SEARCH_RESTARTS, show_default=True)
@click.option('--steps', type=click.IntRange(min=1), default=Config.LOCAL_SEARCH_STEPS, show_default=True)
@click.pass_context
def search_command(ctx, n, family, method, cap, seed, restarts, steps):
    """Buscar una bipartición muy costo efectiva: 0 = encontrada, 1 = no existe, 2 = sin conclusión."""
    graph = GraphService.build(n, family)
    try:
        if method == 'brute':
            outcome = SearchService.brute_force(graph, cap)
        else:
            outcome = SearchService.local_search(graph, restarts, steps, seed)
    except DomainError as e:
        click.echo(str(e), err=True)
        ctx.exit(2)

    click.echo(f'{outcome.status.value}: {outcome.partitions_examined} bipartitions examined in {outcome.elapsed:.3f}s')
    if outcome.partition is not None:
        click.echo('\n'.join(render_partition(graph, outcome.partition)))
    if outcome.reason:
        click.echo(outcome.reason)
    ctx.exit(SEARCH_EXIT_CODES[outcome.status])


@cli.command('survey')
@click.argument('n_min', type=click.IntRange(min=2))
@click.argument('n_max', type=click.IntRange(min=2))
@click.option('--family', 'families', type=click.Choice(FAMILIES), multiple=True, default=[GraphFamily.GAMMA.value])
@click.option('--csv-out', type=click.File('w', encoding='utf-8'), default='-', help='Archivo CSV de salida.')
@cap_option
def survey_command(n_min, n_max, families, csv_out, cap):
    """Resumir n_min..n_max como CSV: n,family,shape,vertices,verdict,source."""
    try:
        rows = SurveyService.survey(n_min, n_max, families, cap)
    except DomainError as e:
        raise click.UsageError(str(e)) from e
    SurveyService.write_csv(rows, csv_out)
