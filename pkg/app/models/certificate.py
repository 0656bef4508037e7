from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.models.bipartition import Bipartition
from app.models.labeledGraph import LabeledGraph
from app.models.vceReport import VceReport


class ConstructionId(str, Enum):
    """Construcciones explícitas de biparticiones muy costo efectivas."""

    SQUAREFREE = 'Thm2_1_Squarefree'
    PQ = 'Cor2_2_PQ'
    P2Q = 'Thm2_3i_P2Q'
    P2Q2 = 'Thm2_3ii_P2Q2'
    LINE_PQ = 'Thm2_4_LinePQ'
    NIL_P2 = 'Thm3_3i_P2'
    NIL_P2Q2 = 'Thm3_3ii_P2Q2_Nil'
    NIL_P3 = 'Thm3_3iii_P3'
    NIL_P2Q = 'Thm3_3iv_P2Q_Nil'
    OMEGA_SQUAREFREE = 'Thm3_5_OmegaSquarefree'
    TOTAL_PQ = 'Thm4_2_TotalPQ'

    @property
    def short_tag(self):
        """Etiqueta corta para la tabla de resumen, p. ej. `Thm2_1`."""
        return '_'.join(self.value.split('_')[:2])


class SearchSource(str, Enum):
    BRUTE_FORCE = 'brute-force'
    LOCAL_SEARCH = 'local-search'
    BIPARTITE = 'bipartite-colouring'


class CertificateKind(str, Enum):
    EXISTS = 'Exists'
    NOT_VCE = 'NotVce'
    UNKNOWN = 'Unknown'


class WitnessKind(str, Enum):
    ISOLATED_VERTEX = 'isolated-vertex'
    EXHAUSTED_SEARCH = 'exhausted-search'


@dataclass(frozen=True)
class Certificate:
    """
    Objeto de prueba sobre un grafo concreto.

    Se crea siempre con los constructores de clase, que comprueban sus
    invariantes: una bipartición existente pasa el verificador y un vértice
    aislado tiene grado 0.

    Atributos:
        kind (CertificateKind): Exists, NotVce o Unknown.
        graph (LabeledGraph): El grafo certificado.
        partition (Bipartition | None): La bipartición (solo Exists).
        source (ConstructionId | SearchSource | None): De dónde sale la bipartición.
        report (VceReport | None): Informe del verificador para la bipartición.
        witness (WitnessKind | None): Tipo de testigo de inexistencia (solo NotVce).
        witness_vertex (int | None): El vértice aislado, si el testigo lo es.
        examined (int): Biparticiones examinadas por la búsqueda exhaustiva.
        reason (str): Motivo, para Unknown.
    """

    kind: CertificateKind
    graph: LabeledGraph
    partition: Optional[Bipartition] = None
    source: object = None
    report: Optional[VceReport] = None
    witness: Optional[WitnessKind] = None
    witness_vertex: Optional[int] = None
    examined: int = 0
    reason: str = ''

    @classmethod
    def exists(cls, graph, partition, source):
        from app.services.vce_service import VceService

        report = VceService.check_bipartition(graph, partition)
        if not report.is_very_cost_effective:
            raise ValueError(
                f'La bipartición de {source} no es muy costo efectiva; testigos: {list(report.witnesses)}.'
            )
        return cls(CertificateKind.EXISTS, graph, partition=partition, source=source, report=report)

    @classmethod
    def isolated_vertex(cls, graph, vertex):
        if graph.degree(vertex) != 0:
            raise ValueError(f'El vértice {graph.label_of(vertex)} no está aislado.')
        return cls(CertificateKind.NOT_VCE, graph, witness=WitnessKind.ISOLATED_VERTEX, witness_vertex=vertex)

    @classmethod
    def exhausted_search(cls, graph, examined):
        return cls(CertificateKind.NOT_VCE, graph, witness=WitnessKind.EXHAUSTED_SEARCH, examined=examined)

    @classmethod
    def unknown(cls, graph, reason):
        return cls(CertificateKind.UNKNOWN, graph, reason=reason)

    @property
    def witness_label(self):
        if self.witness_vertex is None:
            return None
        return self.graph.label_of(self.witness_vertex)
