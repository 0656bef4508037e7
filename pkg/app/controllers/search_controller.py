from flask import request  # Para leer los parámetros de la consulta.
from flask_restx import Namespace, Resource  # Herramientas de flask-restx para la API.

from app.config import Config  # Límite de vértices y semilla por defecto.
from app.controllers.construction_controller import _int_arg  # Lectura de parámetros enteros.
from app.middlewares.error_middleware import domain_errors_as_http  # Traduce los errores de dominio a respuestas HTTP.
from app.services.graph_service import GraphService
from app.services.search_service import SearchService  # Búsqueda exhaustiva y local.
from app.services.serialization_service import SerializationService
from app.utils.errors import DomainError

# Espacio de nombres para la búsqueda directa, sin construcciones.
search_ns = Namespace('Búsqueda', path='/searches', description='Búsqueda exhaustiva o local de biparticiones')


@search_ns.route('/<int:n>/<string:family>')  # Ruta con el módulo y la familia.
@search_ns.param('n', 'El módulo n >= 2')
@search_ns.param('family', 'Familia del grafo')
class SearchResource(Resource):
    @search_ns.doc('search', params={
        'method': 'brute (por defecto) o local',
        'cap': 'Límite de vértices de la búsqueda exhaustiva',
        'seed': 'Semilla de la búsqueda local',
    })
    @domain_errors_as_http
    def get(self, n, family):
        """
        Buscar una bipartición muy costo efectiva
        ---
        Responses:
        - 200: Resultado Found, NoneExists o Inconclusive.
        - 400: Parámetros inválidos.
        """
        method = request.args.get('method', 'brute')  # Método de búsqueda elegido.
        graph = GraphService.build(n, family)
        if method == 'brute':
            # Exhaustiva: la única que puede responder NoneExists.
            outcome = SearchService.brute_force(graph, _int_arg('cap', Config.DEFAULT_VERTEX_CAP))
        elif method == 'local':
            outcome = SearchService.local_search(graph, rng_seed=_int_arg('seed', Config.LOCAL_SEARCH_SEED))
        else:
            raise DomainError(f'Método desconocido: {method}.')
        return SerializationService.outcome_to_document(graph, outcome), 200  # Respuesta exitosa.
