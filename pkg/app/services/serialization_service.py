import json

from pydantic import ValidationError

from app.models.bipartition import Bipartition
from app.models.documents import GraphDocument, PartitionDocument
from app.models.labeledGraph import GraphFamily, Residue, TotalOriginal, label_from_json
from app.services.graph_service import GraphService
from app.utils.errors import DomainError, InvalidPartitionError


class SerializationService:
    """Formatos de intercambio: JSON para grafos y particiones, DOT solo de salida."""

    @staticmethod
    def graph_to_document(graph, n=None, family=None):
        family = GraphFamily(family or graph.family)
        return {
            'n': n if n is not None else graph.modulus,
            'family': family.value,
            'vertices': [label.to_json() for label in graph.labels],
            'edges': [[i, j] for i, j in graph.edges()],
        }

    @staticmethod
    def graph_to_json(graph, n=None, family=None):
        """
        Serializar un grafo como JSON: {"n", "family", "vertices", "edges"}.

        La salida es determinista byte a byte para una misma entrada.
        """
        return json.dumps(SerializationService.graph_to_document(graph, n, family))

    @staticmethod
    def _dot_name(label):
        # Los residuos van sin comillas; los pares "(a,b)" necesitan comillas en DOT.
        if isinstance(label, (Residue, TotalOriginal)):
            return label.render()
        return f'"{label.render()}"'

    @staticmethod
    def graph_to_dot(graph, name=None):
        """Serializar un grafo en el dialecto DOT no dirigido."""
        if name is None:
            family = graph.family.value if graph.family else 'graph'
            name = f'{family}_{graph.modulus}' if graph.modulus else family
        lines = [f'graph "{name}" {{']
        lines += [f'  {SerializationService._dot_name(label)};' for label in graph.labels]
        for i, j in graph.edges():
            left = SerializationService._dot_name(graph.label_of(i))
            right = SerializationService._dot_name(graph.label_of(j))
            lines.append(f'  {left} -- {right};')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    @staticmethod
    def graph_from_json(text):
        """
        Leer un grafo desde su documento JSON.

        Raises:
            DomainError: Si el texto no es JSON válido o no cumple el esquema.
        """
        try:
            document = GraphDocument.model_validate_json(text)  # Esquema estricto: sin campos extra.
        except ValidationError as e:
            raise DomainError(f'Documento de grafo inválido: {e.errors()[0]["msg"]}.') from e
        try:
            # La forma de cada etiqueta depende de la familia.
            labels = [label_from_json(value, document.family) for value in document.vertices]
            return GraphService.from_edges(labels, document.edges, modulus=document.n, family=document.family)
        except ValueError as e:
            raise DomainError(f'Documento de grafo inválido: {e}') from e

    @staticmethod
    def partition_from_json(graph, text):
        """
        Leer una bipartición {"R": [...], "B": [...]} sobre las etiquetas de `graph`.

        Cada vértice debe aparecer exactamente una vez y ningún lado puede estar vacío.

        Raises:
            DomainError: Si el JSON no cumple el esquema.
            InvalidPartitionError: Etiqueta desconocida, repetida o ausente, o lado vacío.
        """
        try:
            document = PartitionDocument.model_validate_json(text)
        except ValidationError as e:
            raise DomainError(f'Documento de partición inválido: {e.errors()[0]["msg"]}.') from e
        if graph.family is None:
            raise DomainError('El grafo no declara su familia; no se pueden interpretar las etiquetas.')

        # Traduce etiquetas a ids y detecta repetidas en ambos lados a la vez.
        seen = set()
        r_members = []
        for side, values in (('R', document.r), ('B', document.b)):
            for value in values:
                try:
                    v = graph.index_of(label_from_json(value, graph.family))
                except ValueError:
                    raise InvalidPartitionError(f'La etiqueta {value} del lado {side} no es un vértice del grafo.') from None
                if v in seen:
                    raise InvalidPartitionError(f'La etiqueta {graph.label_of(v)} aparece más de una vez.')
                seen.add(v)
                if side == 'R':
                    r_members.append(v)

        # Todo vértice del grafo tiene que estar en algún lado.
        missing = [graph.label_of(v).render() for v in range(graph.order) if v not in seen]
        if missing:
            raise InvalidPartitionError(f'Faltan vértices en la partición: {", ".join(missing)}.')
        if not document.r or not document.b:
            raise InvalidPartitionError('Ninguno de los lados de la bipartición puede estar vacío.')
        return Bipartition.from_members(graph.order, r_members)

    @staticmethod
    def partition_to_document(graph, partition):
        # Listas ordenadas por etiqueta, no por id.
        ordered = sorted(range(graph.order), key=lambda v: graph.label_of(v).sort_key())
        r_members = set(partition.r)
        return {
            'R': [graph.label_of(v).to_json() for v in ordered if v in r_members],
            'B': [graph.label_of(v).to_json() for v in ordered if v not in r_members],
        }

    @staticmethod
    def report_to_document(graph, report):
        return {
            'verdict': report.partition_verdict.value,
            'witnesses': [graph.label_of(v).to_json() for v in report.witnesses],
            'tallies': [
                {
                    'vertex': graph.label_of(t.vertex).to_json(),
                    'inside': t.inside,
                    'outside': t.outside,
                    'verdict': t.verdict.value,
                }
                for t in report.tallies
            ],
        }

    @staticmethod
    def certificate_to_document(certificate):
        graph = certificate.graph
        document = {
            'kind': certificate.kind.value,
            'n': graph.modulus,
            'family': graph.family.value if graph.family else None,
            'vertices': graph.order,
        }
        # Campos propios de cada tipo de certificado.
        if certificate.partition is not None:
            document['source'] = certificate.source.value
            document['partition'] = SerializationService.partition_to_document(graph, certificate.partition)
            document['verdict'] = certificate.report.partition_verdict.value
        if certificate.witness is not None:
            document['witness'] = certificate.witness.value
            if certificate.witness_label is not None:
                document['witness_vertex'] = certificate.witness_label.to_json()
            else:  # Testigo de búsqueda exhaustiva.
                document['partitions_examined'] = certificate.examined
        if certificate.reason:
            document['reason'] = certificate.reason
        return document

    @staticmethod
    def outcome_to_document(graph, outcome):
        document = {
            'status': outcome.status.value,
            'partitions_examined': outcome.partitions_examined,
            'elapsed': round(outcome.elapsed, 6),
        }
        if outcome.partition is not None:
            document['partition'] = SerializationService.partition_to_document(graph, outcome.partition)
        if outcome.reason:
            document['reason'] = outcome.reason
        return document
