import json

from flask import request  # Para leer el cuerpo JSON de la solicitud.
from flask_restx import Namespace, Resource, fields  # Herramientas de flask-restx para la API y Swagger.

from app.middlewares.error_middleware import domain_errors_as_http  # Traduce los errores de dominio a respuestas HTTP.
from app.services.serialization_service import SerializationService  # Lectura y escritura de documentos.
from app.services.vce_service import VceService  # El verificador de biparticiones.
from app.utils.errors import DomainError

# Espacio de nombres para la verificación de biparticiones.
check_ns = Namespace('Verificación', path='/checks', description='Verificar una bipartición sobre un grafo')

# Modelo de la petición para la documentación de Swagger.
# Ambos campos son los mismos documentos que lee la CLI desde archivo.
check_model = check_ns.model('Check', {
    'graph': fields.Raw(required=True, description='Documento del grafo: n, family, vertices, edges'),  # Requerido.
    'partition': fields.Raw(required=True, description='Documento de la partición: R y B con etiquetas'),  # Requerido.
})


@check_ns.route('/')  # Ruta base de la verificación.
class CheckResource(Resource):
    @check_ns.doc('check_partition')  # Documenta la operación de verificación.
    @check_ns.expect(check_model, validate=True)  # Espera un cuerpo válido según el modelo.
    @domain_errors_as_http
    def post(self):
        """
        Verificar una bipartición
        ---
        Responses:
        - 200: Informe con los conteos por vértice, el veredicto y los testigos.
        - 400: Grafo o partición inválidos.
        """
        # Obtiene el cuerpo JSON con el grafo y la partición.
        data = request.get_json()
        if not isinstance(data.get('graph'), dict) or not isinstance(data.get('partition'), dict):
            raise DomainError('graph y partition deben ser objetos JSON.')

        # Reconstruye el grafo y la partición con las mismas reglas que la CLI.
        graph = SerializationService.graph_from_json(json.dumps(data['graph']))
        partition = SerializationService.partition_from_json(graph, json.dumps(data['partition']))

        report = VceService.check_bipartition(graph, partition)  # Conteos y veredicto de cada vértice.
        return SerializationService.report_to_document(graph, report), 200  # Respuesta exitosa.
