from flask import request  # Para leer los parámetros de la consulta.
from flask_restx import Namespace, Resource  # Herramientas de flask-restx para la API.

from app.config import Config  # Límite de vértices por defecto.
from app.middlewares.error_middleware import domain_errors_as_http  # Traduce los errores de dominio a respuestas HTTP.
from app.services.construction_service import ConstructionService  # Construcciones y despacho.
from app.services.serialization_service import SerializationService
from app.utils.errors import DomainError

# Espacio de nombres para certificar grafos con las construcciones o con la búsqueda.
construction_ns = Namespace(
    'Construcciones', path='/constructions', description='Certificados de bipartición muy costo efectiva'
)


def _int_arg(name, default):
    """Leer un parámetro entero de la consulta; DomainError si no lo es."""
    value = request.args.get(name, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        # Un parámetro ausente sin valor por defecto también cae aquí.
        raise DomainError(f'El parámetro {name} debe ser un entero.') from None


@construction_ns.route('/<int:n>/<string:family>')  # Ruta con el módulo y la familia.
@construction_ns.param('n', 'El módulo n >= 2')
@construction_ns.param('family', 'Familia del grafo')
class ConstructionResource(Resource):
    @construction_ns.doc('construct', params={'cap': 'Límite de vértices de la búsqueda exhaustiva'})
    @domain_errors_as_http
    def get(self, n, family):
        """
        Certificar (n, familia)
        ---
        Responses:
        - 200: Certificado Exists, NotVce o Unknown.
        - 400: Parámetros inválidos.
        - 422: El grafo no tiene vértices.
        """
        cap = _int_arg('cap', Config.DEFAULT_VERTEX_CAP)  # Límite de la búsqueda exhaustiva.
        # Elige la construcción o cae a la búsqueda si no hay ninguna aplicable.
        certificate = ConstructionService.dispatch(n, family, cap)
        return SerializationService.certificate_to_document(certificate), 200  # Respuesta exitosa.
