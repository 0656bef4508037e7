import os
from dotenv import load_dotenv

# Cargar el archivo .env en las variables de entorno
load_dotenv()

class Config:
    """
    Clase Config con la configuración de la aplicación.

    Los valores de búsqueda son constantes: la CLI no depende de variables de
    entorno. Del archivo .env solo se lee el nivel de log del servidor HTTP.

    Atributos:
        DEFAULT_VERTEX_CAP (int): Máximo de vértices para la búsqueda exhaustiva (~3·10^7 biparticiones).
        BRUTE_FORCE_CHUNK (int): Máscaras evaluadas por bloque en la búsqueda exhaustiva.
        LOCAL_SEARCH_RESTARTS (int): Reinicios de la búsqueda local.
        LOCAL_SEARCH_STEPS (int): Pasos por reinicio de la búsqueda local.
        LOCAL_SEARCH_SEED (int): Semilla por defecto de la búsqueda local.
        LOG_LEVEL (str): Nivel de logging del servidor HTTP.
        RESTX_MASK_SWAGGER (bool): Desactiva el campo X-Fields en la documentación Swagger.
        ERROR_404_HELP (bool): Evita que flask-restx añada sugerencias a los 404.
    """

    DEFAULT_VERTEX_CAP = 26
    BRUTE_FORCE_CHUNK = 1 << 15

    LOCAL_SEARCH_RESTARTS = 20
    LOCAL_SEARCH_STEPS = 400
    LOCAL_SEARCH_SEED = 0

    # Nivel de log del servidor, tomado del archivo .env
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'WARNING'

    RESTX_MASK_SWAGGER = False
    ERROR_404_HELP = False


class TestingConfig(Config):
    __test__ = False
    TESTING = True
    LOG_LEVEL = 'DEBUG'
