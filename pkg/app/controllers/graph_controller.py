from flask import Response, request  # Respuesta en texto plano para DOT y lectura de parámetros.
from flask_restx import Namespace, Resource  # Herramientas de flask-restx para la API.

from app.middlewares.error_middleware import domain_errors_as_http  # Traduce los errores de dominio a respuestas HTTP.
from app.models.labeledGraph import GraphFamily
from app.services.graph_service import GraphService  # Construcción de los grafos.
from app.services.serialization_service import SerializationService  # Exportación a JSON y DOT.
from app.utils.errors import DomainError

# Espacio de nombres para construir y exportar grafos.
graph_ns = Namespace('Grafos', path='/graphs', description='Construcción y exportación de grafos derivados de Z_n')


@graph_ns.route('/<int:n>/<string:family>')  # Ruta con el módulo y la familia.
@graph_ns.param('n', 'El módulo n >= 2')
@graph_ns.param('family', 'gamma, nilradical, omega, line-of-gamma o total-of-gamma')
class GraphResource(Resource):
    @graph_ns.doc('build_graph', params={'format': 'json (por defecto) o dot'})  # Documenta la exportación.
    @domain_errors_as_http
    def get(self, n, family):
        """
        Construir un grafo
        ---
        Responses:
        - 200: El grafo en JSON, o en DOT como text/vnd.graphviz.
        - 400: Módulo, familia o formato inválidos.
        """
        # Valida el formato antes de construir nada.
        fmt = request.args.get('format', 'json')
        if fmt not in ('json', 'dot'):
            raise DomainError(f'Formato desconocido: {fmt}.')
        if n < 2:
            raise DomainError('El módulo debe ser >= 2.')

        graph = GraphService.build(n, family)  # Lanza DomainError si la familia no existe.
        if fmt == 'dot':
            return Response(SerializationService.graph_to_dot(graph), mimetype='text/vnd.graphviz')
        return SerializationService.graph_to_document(graph, n, GraphFamily(family)), 200  # Documento JSON.
