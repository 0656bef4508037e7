from flask import request  # Para leer los parámetros de la consulta.
from flask_restx import Namespace, Resource  # Herramientas de flask-restx para la API.

from app.config import Config  # Límite de vértices por defecto.
from app.controllers.construction_controller import _int_arg  # Lectura de parámetros enteros.
from app.middlewares.error_middleware import domain_errors_as_http  # Traduce los errores de dominio a respuestas HTTP.
from app.services.survey_service import SurveyService  # Resumen por rangos de n.
from app.utils.errors import DomainError

# Espacio de nombres para el resumen por rangos.
survey_ns = Namespace('Resumen', path='/surveys', description='Resumen por rangos de n')

# Máximo de valores de n por petición HTTP; la CLI no tiene límite.
MAX_SURVEY_SPAN = 200


@survey_ns.route('/')  # Ruta base del resumen.
class SurveyResource(Resource):
    @survey_ns.doc('survey', params={
        'n_min': 'Primer módulo',
        'n_max': 'Último módulo',
        'family': 'Familia (se puede repetir); gamma por defecto',
    })
    @domain_errors_as_http
    def get(self):
        """
        Resumir un rango de n
        ---
        Responses:
        - 200: Lista de filas ordenadas por n y familia.
        - 400: Rango o familia inválidos.
        """
        # Ambos extremos son obligatorios.
        n_min = _int_arg('n_min', None)
        n_max = _int_arg('n_max', None)
        if n_max - n_min > MAX_SURVEY_SPAN:
            raise DomainError(f'El rango no puede superar {MAX_SURVEY_SPAN} valores de n.')

        families = request.args.getlist('family') or ['gamma']  # Familias pedidas, gamma si no hay ninguna.
        rows = SurveyService.survey(n_min, n_max, families, Config.DEFAULT_VERTEX_CAP)
        return {'rows': [row.as_dict() for row in rows]}, 200  # Filas como diccionarios.
