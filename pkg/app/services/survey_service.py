import csv
import logging

from app.config import Config
from app.models.certificate import CertificateKind, ConstructionId
from app.models.surveyRow import CSV_HEADER, SurveyRow
from app.services.construction_service import ConstructionService
from app.services.graph_service import GraphService
from app.services.ring_service import RingService
from app.utils.errors import DomainError

logger = logging.getLogger(__name__)


class SurveyService:
    """Resumen por rangos de n: una fila certificada por cada (n, familia)."""

    @staticmethod
    def row_for(n, family, vertex_cap=Config.DEFAULT_VERTEX_CAP):
        """
        Certificar (n, familia) y resumirlo en una fila.

        Returns:
            SurveyRow: La fila; Empty-graph solo si el grafo no tiene vértices.
        """
        # Normaliza la familia; lanza DomainError si no existe.
        family = GraphService.parse_family(family)
        shape = RingService.shape_of(n)
        graph = GraphService.build(n, family)
        if graph.order == 0:
            return SurveyRow(n, family.value, str(shape), 0, 'Empty-graph')

        # El veredicto sale del certificado de `dispatch`.

        certificate = ConstructionService.dispatch(n, family, vertex_cap, graph=graph)
        if certificate.kind is CertificateKind.EXISTS:
            if isinstance(certificate.source, ConstructionId):
                verdict = f'VCE-by-construction({certificate.source.short_tag})'
            else:
                verdict = 'VCE-by-search'
            source = certificate.source.value
        elif certificate.kind is CertificateKind.NOT_VCE:
            verdict = f'Not-VCE({certificate.witness.value})'
            # El vértice aislado como fuente; vacío si el testigo es la búsqueda.
            source = certificate.witness_label.render() if certificate.witness_label else ''
        else:
            verdict, source = 'Unknown', ''
        return SurveyRow(n, family.value, str(shape), graph.order, verdict, source)

    @staticmethod
    def survey(n_min, n_max, families, vertex_cap=Config.DEFAULT_VERTEX_CAP):
        """
        Recorrer n_min..n_max para cada familia.

        Returns:
            list[SurveyRow]: Ordenadas por n y luego por familia.
        """
        if not 2 <= n_min <= n_max:
            raise DomainError(f'Rango inválido: se necesita 2 <= n_min <= n_max, se recibió {n_min}..{n_max}.')
        # Sin repetidas y en orden de nombre.
        families = sorted({GraphService.parse_family(f) for f in families}, key=lambda f: f.value)
        rows = []
        for n in range(n_min, n_max + 1):
            for family in families:
                rows.append(SurveyService.row_for(n, family, vertex_cap))
            logger.debug('Resumen: n=%d completado', n)
        return sorted(rows, key=lambda row: (row.n, row.family))  # Orden estable: n y luego familia.

    @staticmethod
    def write_csv(rows, stream):
        """Escribir las filas como CSV con cabecera `n,family,shape,vertices,verdict,source`."""
        writer = csv.writer(stream, lineterminator='\n')  # Mismo fin de línea en todas las plataformas.
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv())
