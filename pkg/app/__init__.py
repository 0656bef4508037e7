import logging

from flask import Flask
from flask_restx import Api

from .config import Config


def create_app(config_class=Config):
    app = Flask(__name__)

    # Configuraciones de la aplicación
    app.config.from_object(config_class)
    logging.basicConfig(
        level=app.config['LOG_LEVEL'],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )

    # Configuramos la API Flask-RESTX
    api = Api(
        app,
        title="API de Biparticiones Muy Costo Efectivas",
        version="1.0",
        description='Grafos de divisores de cero de Z_n, sus grafos de líneas y totales, '
                    'y certificados de biparticiones muy costo efectivas',
    )

    # Importar y registrar los namespaces de los controladores
    from app.controllers.graph_controller import graph_ns
    from app.controllers.construction_controller import construction_ns
    from app.controllers.check_controller import check_ns
    from app.controllers.search_controller import search_ns
    from app.controllers.survey_controller import survey_ns

    api.add_namespace(graph_ns)
    api.add_namespace(construction_ns)
    api.add_namespace(check_ns)
    api.add_namespace(search_ns)
    api.add_namespace(survey_ns)

    # Los mismos comandos que `python -m app`, disponibles como `flask vce ...`
    from app.cli import cli
    app.cli.add_command(cli)

    return app
